//! The dimension filtration `K_0 = J ⊆ K_1 ⊆ … ⊆ K_t = S` of a monomial
//! ideal, where `K_i / J` is the largest submodule of `S/J` of dimension
//! `d_i`.

use std::sync::Arc;

use super::decompose::primary_components;
use super::MonomialIdeal;
use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::groebner::Ideal;

#[derive(Clone, Debug)]
pub struct FiltrationChain {
    ring: Arc<RingSpec>,
    levels: Vec<MonomialIdeal>,
    dims: Vec<usize>,
}

impl FiltrationChain {
    /// Number of nonzero steps `t`.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `d_1 < … < d_t`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_i` for `1 ≤ i ≤ t`.
    pub fn dim(&self, i: usize) -> usize {
        self.dims[i - 1]
    }

    pub fn base(&self) -> Ideal {
        self.levels[0].to_ideal(&self.ring)
    }

    /// `K_i` for `0 ≤ i ≤ t`; `K_t` is the unit ideal.
    pub fn level(&self, i: usize) -> Ideal {
        self.levels[i].to_ideal(&self.ring)
    }

    pub fn monomial_level(&self, i: usize) -> &MonomialIdeal {
        &self.levels[i]
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }
}

/// Builds the chain from the primary decomposition: `K_i` is the
/// intersection of the primary components of dimension at least `d_{i+1}`.
pub fn dimension_filtration(j: &Ideal) -> Result<FiltrationChain> {
    let ring = j.ring();
    let mono = MonomialIdeal::from_ideal(j)
        .map_err(|_| Error::Unsupported("non-monomial filtration".into()))?;
    if mono.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let comps = primary_components(&mono);
    let mut dims: Vec<usize> = comps.iter().map(|c| c.prime.dim()).collect();
    dims.sort_unstable();
    dims.dedup();
    let width = ring.width();
    let mut levels = Vec::with_capacity(dims.len() + 1);
    for &d in &dims {
        let k = comps
            .iter()
            .filter(|c| c.prime.dim() >= d)
            .fold(MonomialIdeal::unit(width), |acc, c| acc.intersect(&c.ideal));
        levels.push(k);
    }
    levels.push(MonomialIdeal::unit(width));
    Ok(FiltrationChain { ring: ring.clone(), levels, dims })
}

/// `K_{t-1}`: the ideal whose quotient by `J` is the largest submodule of
/// lower dimension than `S/J`.
pub fn unmixed_component(j: &Ideal) -> Result<Ideal> {
    let chain = dimension_filtration(j)?;
    Ok(chain.level(chain.len() - 1))
}
