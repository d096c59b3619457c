//! Hilbert–Samuel and socle series of graded quotients `M = S/J`, their
//! binomial-basis coefficients, and `H^0_m(M)`.

mod binomial;
mod series;

use std::sync::Arc;

pub use binomial::{binomial, fit_binomial, BinomialPolynomial, IntegerSeries, STABILIZATION_WINDOW};
pub use series::{
    h0m, hilbert_coeffs, hilbert_coeffs_with, hs_series, ir_series, irreducible_coeffs,
    irreducible_coeffs_with, series_fit, socle_dim, socle_dim_of, LocalCohomology, SeriesFit, DEFAULT_NMAX_CAP,
};

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::groebner::{krull_dim, Ideal, ReducedGB};

/// The cyclic module `S/J` for a proper homogeneous ideal `J`.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    ideal: Ideal,
    gb: Arc<ReducedGB>,
    dim: usize,
}

impl QuotientModule {
    pub fn new(j: &Ideal) -> Result<QuotientModule> {
        j.require_homogeneous("quotient module")?;
        let gb = j.gb()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let dim = krull_dim(j)?;
        Ok(QuotientModule { ideal: j.clone(), gb, dim })
    }

    /// The free module `S` itself.
    pub fn free(ring: &Arc<RingSpec>) -> QuotientModule {
        QuotientModule::new(&Ideal::zero(ring)).expect("zero ideal is proper and homogeneous")
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn gb(&self) -> &Arc<ReducedGB> {
        &self.gb
    }

    /// Krull dimension `s`.
    pub fn dim(&self) -> usize {
        self.dim
    }
}
