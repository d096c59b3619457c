//! Dimension and length computations from leading-term ideals.

use super::{Ideal, ReducedGB};
use crate::algebra::monomial::{monomials_of_degree, Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Krull dimension of `S/I`: the largest set of variables `U` such that no
/// leading monomial of the reduced basis lives in `k[U]`.
pub fn krull_dim(ideal: &Ideal) -> Result<usize> {
    krull_dim_gb(&*ideal.gb()?)
}

pub(crate) fn krull_dim_gb(gb: &ReducedGB) -> Result<usize> {
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = gb.ring().width();
    let supports: Vec<u32> = gb.leading_monomials().iter().map(Monomial::support_mask).collect();
    let mut best = 0;
    for u in 0u32..(1u32 << n) {
        let size = u.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !u != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// For homogeneous `I`: zero-dimensional iff primary to the irrelevant
/// maximal ideal.
pub fn is_m_primary(ideal: &Ideal) -> Result<bool> {
    ideal.require_homogeneous("is_m_primary")?;
    Ok(krull_dim(ideal)? == 0)
}

/// Monomials outside the leading-term ideal of a zero-dimensional basis.
pub fn standard_monomials(gb: &ReducedGB) -> Result<Vec<Monomial>> {
    let dim = krull_dim_gb(gb)?;
    if dim > 0 {
        return Err(Error::PositiveDimension(dim));
    }
    let n = gb.ring().width();
    let mut out = Vec::new();
    let mut cur = [0u16; MAX_VARS];
    enumerate_standard(gb, 0, n, &mut cur, &mut out);
    Ok(out)
}

fn enumerate_standard(gb: &ReducedGB, var: usize, n: usize, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
    loop {
        let m = Monomial::new(&cur[..n]);
        if gb.is_leading(&m) {
            break;
        }
        if var + 1 == n {
            out.push(m);
        } else {
            enumerate_standard(gb, var + 1, n, cur, out);
        }
        cur[var] += 1;
    }
    cur[var] = 0;
}

/// `dim_k S/I` for zero-dimensional `I`.
pub fn vdim_artinian(ideal: &Ideal) -> Result<u64> {
    let gb = ideal.gb()?;
    Ok(standard_monomials(&gb)?.len() as u64)
}

/// Number of standard monomials of each degree `0..=max_degree`: the Hilbert
/// function of `S/I` when `I` is homogeneous.
pub fn hilbert_function(gb: &ReducedGB, max_degree: u32) -> Vec<u64> {
    let n = gb.ring().width();
    (0..=max_degree)
        .map(|d| {
            monomials_of_degree(n, d)
                .iter()
                .filter(|m| !gb.is_leading(m))
                .count() as u64
        })
        .collect()
}
