use serde::Serialize;

use super::predicates::{g_predicate, GVerdict};
use super::{sample_distinguished_sop, sample_sop, ParameterSystem};
use crate::error::{Error, Result};
use crate::groebner::{colon, vdim_artinian, Ideal};
use crate::invariants::{
    h0m, hilbert_coeffs_with, series_fit, socle_dim, QuotientModule, DEFAULT_NMAX_CAP,
};
use crate::monideal::is_monomial_ideal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CmWitness {
    /// `H^0_m(M) ≠ 0`, so the depth is zero.
    LocalCohomology { length: u64 },
    /// A linear system with `ℓ(M/qM) > e_0(q; M)`.
    Multiplicity { sop: Vec<String>, length: u64, e0: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// Linear systems compared before the verdict.
    pub samples_checked: usize,
    pub witness: Option<CmWitness>,
}

/// Depth-zero test through `H^0_m`, then `ℓ(M/qM) = e_0(q; M)` on sampled
/// linear systems of parameters.
pub fn cm_test(module: &QuotientModule, samples: usize, seed: u64) -> Result<CmVerdict> {
    if module.dim() == 0 {
        return Err(Error::InvalidArgument("Cohen-Macaulay test needs positive dimension".into()));
    }
    let h = h0m(module)?;
    if h.length > 0 {
        return Ok(CmVerdict {
            cohen_macaulay: false,
            samples_checked: 0,
            witness: Some(CmWitness::LocalCohomology { length: h.length }),
        });
    }
    let systems = sample_sop(module, samples, seed, 1)?;
    for (k, sys) in systems.iter().enumerate() {
        let q = sys.ideal();
        let length = vdim_artinian(&module.ideal().sum(&q)?)?;
        let e0 = hilbert_coeffs_with(module, &q, DEFAULT_NMAX_CAP)?.coefficients()[0];
        if length as i64 != e0 {
            return Ok(CmVerdict {
                cohen_macaulay: false,
                samples_checked: k + 1,
                witness: Some(CmWitness::Multiplicity { sop: sys.strings(), length, e0 }),
            });
        }
    }
    Ok(CmVerdict {
        cohen_macaulay: true,
        samples_checked: systems.len(),
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReportOptions {
    pub samples: usize,
    pub seed: u64,
    pub degree: u32,
    pub nmax_cap: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            samples: 5,
            seed: 0,
            degree: 2,
            nmax_cap: DEFAULT_NMAX_CAP,
        }
    }
}

/// One inequality `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl CheckOutcome {
    fn new(name: &'static str, lhs: i64, rhs: i64) -> CheckOutcome {
        CheckOutcome { name, lhs, rhs, holds: lhs <= rhs }
    }
}

pub const CHECK_IR_F0: &str = "ir(q) <= f0(q)";
pub const CHECK_IR_GAP: &str = "ir(q) <= e1(q:m) - e1(q)";
pub const CHECK_GAP_F0: &str = "e1(q:m) - e1(q) <= f0(q)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    pub sop: Vec<String>,
    /// `ℓ(M/qM)`.
    pub length: u64,
    pub ir: u64,
    pub e: Option<Vec<i64>>,
    pub f: Option<Vec<i64>>,
    pub f0: Option<i64>,
    /// `e_1(q:m)`, absent when `q:m` is the unit ideal or `dim M < 2`.
    pub e1_colon: Option<i64>,
    pub e1_gap: Option<i64>,
    pub length_minus_e0: Option<i64>,
    pub g_predicate: GVerdict,
    pub checks: Vec<CheckOutcome>,
    pub notices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub dim: usize,
    pub options: ReportOptions,
    pub cm: CmVerdict,
    pub records: Vec<SampleRecord>,
    /// Largest sampled `ir(q)`: a lower bound for the supremum over all
    /// parameter ideals.
    pub max_ir: u64,
    pub checks_run: usize,
    pub violations: usize,
    pub skipped: usize,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        self.violations == 0
    }
}

fn sample_record(
    module: &QuotientModule,
    sys: &ParameterSystem,
    index: usize,
    cm: bool,
    cap: u64,
) -> Result<(SampleRecord, bool)> {
    let q = sys.ideal();
    let j_plus_q = module.ideal().sum(&q)?;
    let mut rec = SampleRecord {
        index,
        sop: sys.strings(),
        length: vdim_artinian(&j_plus_q)?,
        ir: socle_dim(module, &q)?,
        e: None,
        f: None,
        f0: None,
        e1_colon: None,
        e1_gap: None,
        length_minus_e0: None,
        g_predicate: g_predicate(module, sys)?.verdict,
        checks: Vec::new(),
        notices: Vec::new(),
    };
    let (e, f) = match series_fit(module, &q, cap) {
        Ok(fit) => (fit.e, fit.f.expect("sampled modules have positive dimension")),
        Err(Error::NotStabilized { nmax, .. }) => {
            rec.notices.push(format!("series of q not stabilized by n = {nmax}; sample skipped"));
            return Ok((rec, true));
        }
        Err(err) => return Err(err),
    };
    let f0 = f.coefficients()[0];
    rec.length_minus_e0 = Some(rec.length as i64 - e.coefficients()[0]);
    rec.f0 = Some(f0);
    rec.e = Some(e.coefficients().to_vec());
    rec.f = Some(f.coefficients().to_vec());

    if module.dim() >= 2 {
        let qm = colon(&j_plus_q, &Ideal::maximal(module.ring()))?;
        if qm.is_unit()? {
            rec.notices.push("q:m is the unit ideal; e1 gap not applicable".into());
        } else {
            match hilbert_coeffs_with(module, &qm, cap) {
                Ok(e_colon) => {
                    rec.e1_colon = Some(e_colon.coefficients()[1]);
                    rec.e1_gap = Some(e_colon.coefficients()[1] - e.coefficients()[1]);
                }
                Err(Error::NotStabilized { nmax, .. }) => {
                    rec.notices.push(format!("series of q:m not stabilized by n = {nmax}"));
                }
                Err(err) => return Err(err),
            }
        }
    }

    let ir = rec.ir as i64;
    if cm {
        rec.checks.push(CheckOutcome::new(CHECK_IR_F0, ir, f0));
        if let Some(gap) = rec.e1_gap {
            rec.checks.push(CheckOutcome::new(CHECK_IR_GAP, ir, gap));
        }
    } else {
        let inside_m2 = sys.degrees().iter().all(|&d| d >= 2);
        if inside_m2 && rec.g_predicate != GVerdict::False {
            if let Some(gap) = rec.e1_gap {
                rec.checks.push(CheckOutcome::new(CHECK_GAP_F0, gap, f0));
            }
        }
    }
    Ok((rec, false))
}

/// Samples parameter ideals of the requested degree and evaluates the
/// inequalities that apply: `ir ≤ f_0` and `ir ≤ e_1(q:m) − e_1(q)` on
/// Cohen–Macaulay modules, `e_1(q:m) − e_1(q) ≤ f_0` for systems inside
/// `m^2` that are not ruled out as g-systems otherwise. Monomial `J` gets
/// distinguished systems.
pub fn theorem_report(module: &QuotientModule, options: ReportOptions) -> Result<TheoremReport> {
    let cm = cm_test(module, options.samples.max(1), options.seed)?;
    let systems = if is_monomial_ideal(module.ideal())? {
        sample_distinguished_sop(module, options.samples, options.seed, options.degree)?
    } else {
        sample_sop(module, options.samples, options.seed, options.degree)?
    };
    let mut records = Vec::with_capacity(systems.len());
    let mut skipped = 0;
    for (index, sys) in systems.iter().enumerate() {
        let (rec, skip) = sample_record(module, sys, index, cm.cohen_macaulay, options.nmax_cap)?;
        skipped += skip as usize;
        records.push(rec);
    }
    let checks_run = records.iter().map(|r| r.checks.len()).sum();
    let violations = records.iter().flat_map(|r| &r.checks).filter(|c| !c.holds).count();
    Ok(TheoremReport {
        dim: module.dim(),
        options,
        cm,
        max_ir: records.iter().map(|r| r.ir).max().unwrap_or(0),
        records,
        checks_run,
        violations,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_generators, parse_ring};

    fn module(ring: &str, gens: &str) -> QuotientModule {
        let r = parse_ring(ring).unwrap();
        QuotientModule::new(&Ideal::new(&r, parse_generators(gens, &r).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn cm_verdicts() {
        let free = module("Q[x,y,z]", "0");
        let v = cm_test(&free, 3, 1).unwrap();
        assert!(v.cohen_macaulay);
        assert_eq!(v.samples_checked, 3);

        let embedded = module("F32003[x,y,z]", "x^3, x^2*y, x^2*z, z^2");
        let v = cm_test(&embedded, 3, 1).unwrap();
        assert_eq!(v.witness, Some(CmWitness::LocalCohomology { length: 1 }));

        let two_components = module("F32003[x1,x2,x3,y]", "x1*y, x2*y, x3*y");
        let v = cm_test(&two_components, 3, 1).unwrap();
        assert!(!v.cohen_macaulay);
        assert!(matches!(v.witness, Some(CmWitness::Multiplicity { length, e0, .. }) if length as i64 > e0));

        assert!(cm_test(&module("Q[x]", "x^2"), 1, 0).is_err());
    }

    #[test]
    fn gorenstein_plane() {
        let m = module("Q[x,y]", "0");
        let opts = ReportOptions { samples: 2, seed: 3, degree: 2, ..ReportOptions::default() };
        let report = theorem_report(&m, opts).unwrap();
        assert!(report.cm.cohen_macaulay);
        assert_eq!(report.max_ir, 1);
        assert!(report.all_hold());
        for rec in &report.records {
            assert_eq!(rec.ir, 1);
            assert_eq!(rec.length_minus_e0, Some(0));
            assert!(rec.checks.iter().any(|c| c.name == CHECK_IR_GAP));
        }
        let again = theorem_report(&m, opts).unwrap();
        assert_eq!(report, again);
    }
}
