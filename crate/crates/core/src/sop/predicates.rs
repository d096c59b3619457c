use serde::Serialize;

use super::ParameterSystem;
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::colon_poly;
use crate::invariants::QuotientModule;
use crate::monideal::{dimension_filtration, is_monomial_ideal, primary_decomposition, MonomialIdeal};

/// Result of the colon test `(J + q_i) : x_{i+1} x_j = (J + q_i) : x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSequenceCheck {
    pub holds: bool,
    /// First failing `(i, j)`, with `0 ≤ i < j ≤ s`.
    pub witness: Option<(usize, usize)>,
}

/// Accepts any sequence of elements, not only systems of parameters.
pub fn is_d_sequence(module: &QuotientModule, xs: &[Polynomial]) -> Result<DSequenceCheck> {
    let j_ideal = module.ideal();
    for i in 0..xs.len() {
        let base = j_ideal.with_generators(&xs[..i])?;
        for j in i + 1..=xs.len() {
            let xj = &xs[j - 1];
            let lhs = colon_poly(&base, &xs[i].mul(xj)?)?;
            let rhs = colon_poly(&base, xj)?;
            if !lhs.same_ideal(&rhs)? {
                return Ok(DSequenceCheck {
                    holds: false,
                    witness: Some((i, j)),
                });
            }
        }
    }
    Ok(DSequenceCheck { holds: true, witness: None })
}

/// Whether `x_j K_i ⊆ J` for every filtration level `K_i` and every
/// `j > d_i`. Needs a monomial `J`.
pub fn is_distinguished(module: &QuotientModule, sys: &ParameterSystem) -> Result<bool> {
    let chain = dimension_filtration(module.ideal())?;
    let j_ideal = module.ideal();
    for i in 1..chain.len() {
        let level = chain.level(i);
        for x in &sys.elements()[chain.dim(i)..] {
            for g in level.generators() {
                if !j_ideal.contains(&x.mul(g)?)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GVerdict {
    True,
    False,
    /// Nothing failed, but some conditions could not be decided.
    Partial,
}

/// The three ingredients of the g-system predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GReport {
    /// `None` when `J` is not monomial.
    pub distinguished: Option<bool>,
    /// Skipped when the system is not distinguished.
    pub d_sequence: Option<DSequenceCheck>,
    /// Pairs `(i, j)` whose condition on `C_i / q_j C_i` was decided.
    pub ass_checked: Vec<(usize, usize)>,
    pub ass_unchecked: Vec<(usize, usize)>,
    pub ass_failed: Option<(usize, usize)>,
    pub verdict: GVerdict,
}

/// Distinguished, d-sequence, and `Ass(C_i/q_j C_i) ⊆ Assh ∪ {m}` where
/// `C_i = K_i / K_{i-1}`. The last condition is decided only when `C_i` is
/// cyclic, `C_i ≅ S/(K_{i-1} : u)`, and `q_j` is monomial, so that the
/// quotient is a monomial one.
pub fn g_predicate(module: &QuotientModule, sys: &ParameterSystem) -> Result<GReport> {
    let s = sys.len();
    let mut report = GReport {
        distinguished: None,
        d_sequence: None,
        ass_checked: Vec::new(),
        ass_unchecked: Vec::new(),
        ass_failed: None,
        verdict: GVerdict::Partial,
    };
    let chain = match dimension_filtration(module.ideal()) {
        Ok(chain) => Some(chain),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    if chain.is_some() {
        let dist = is_distinguished(module, sys)?;
        report.distinguished = Some(dist);
        if !dist {
            report.verdict = GVerdict::False;
            return Ok(report);
        }
    }
    let dseq = is_d_sequence(module, sys.elements())?;
    let dseq_holds = dseq.holds;
    report.d_sequence = Some(dseq);
    if !dseq_holds {
        report.verdict = GVerdict::False;
        return Ok(report);
    }

    let t = chain.as_ref().map_or(1, |c| c.len());
    let mut prefixes: Vec<Option<MonomialIdeal>> = Vec::with_capacity(s);
    for j in 0..s {
        let q = sys.prefix(j);
        prefixes.push(if is_monomial_ideal(&q)? {
            Some(MonomialIdeal::from_ideal(&q)?)
        } else {
            None
        });
    }
    for i in 1..=t {
        let cyclic = chain.as_ref().and_then(|c| cyclic_annihilator(c.monomial_level(i - 1), c.monomial_level(i)));
        for (j, q) in prefixes.iter().enumerate() {
            let (Some(ann), Some(q)) = (&cyclic, q) else {
                report.ass_unchecked.push((i, j));
                continue;
            };
            report.ass_checked.push((i, j));
            if !ass_within_assh_and_max(&ann.sum(q), module)? && report.ass_failed.is_none() {
                report.ass_failed = Some((i, j));
            }
        }
    }
    report.verdict = if report.ass_failed.is_some() {
        GVerdict::False
    } else if report.distinguished == Some(true) && report.ass_unchecked.is_empty() {
        GVerdict::True
    } else {
        GVerdict::Partial
    };
    Ok(report)
}

/// `K_{i-1} : u` when `K_i = K_{i-1} + (u)` for a single monomial `u`.
fn cyclic_annihilator(lower: &MonomialIdeal, upper: &MonomialIdeal) -> Option<MonomialIdeal> {
    let mut fresh = upper.generators().iter().filter(|g| !lower.contains(g));
    let u = fresh.next()?;
    if fresh.next().is_some() {
        return None;
    }
    Some(lower.colon_monomial(u))
}

fn ass_within_assh_and_max(l: &MonomialIdeal, module: &QuotientModule) -> Result<bool> {
    if l.is_unit() {
        return Ok(true);
    }
    let comps = primary_decomposition(&l.to_ideal(module.ring()))?;
    let top = comps.iter().map(|c| c.prime.dim()).max().unwrap_or(0);
    Ok(comps.iter().all(|c| c.prime.dim() == top || c.prime.dim() == 0))
}
