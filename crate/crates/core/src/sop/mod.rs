//! Systems of parameters of graded quotients: sampling, verification, the
//! d-sequence, distinguished and g-system predicates, a Cohen–Macaulay test
//! and the inequality report tying the invariants together.

mod predicates;
mod report;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use predicates::{g_predicate, is_d_sequence, is_distinguished, DSequenceCheck, GReport, GVerdict};
pub use report::{
    cm_test, theorem_report, CheckOutcome, CmVerdict, CmWitness, ReportOptions, SampleRecord, TheoremReport,
};

use crate::algebra::monomial::monomials_of_degree;
use crate::algebra::{Field, Monomial, Polynomial, Term};
use crate::error::{Error, Result};
use crate::groebner::{krull_dim, Ideal};
use crate::invariants::QuotientModule;
use crate::monideal::{dimension_filtration, MonomialIdeal};

/// Candidate draws allowed per requested system before sampling gives up.
pub const RETRY_CAP: usize = 64;

/// Largest coefficient drawn over the rationals.
const RATIONAL_COEFF_MAX: i64 = 9;

/// Outcome of the dimension-drop test: `dims[i] = dim(J + (x_1..x_i))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SopCheck {
    pub dims: Vec<usize>,
    /// First `i` whose drop fails.
    pub failed_at: Option<usize>,
}

impl SopCheck {
    pub fn is_valid(&self) -> bool {
        self.failed_at.is_none()
    }
}

/// Homogeneous elements `x_1, …, x_s` with a verified drop table.
#[derive(Clone, Debug, Serialize)]
pub struct ParameterSystem {
    #[serde(serialize_with = "serialize_polys")]
    elements: Vec<Polynomial>,
    degrees: Vec<u32>,
    dims: Vec<usize>,
}

fn serialize_polys<S: serde::Serializer>(polys: &[Polynomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(polys.iter().map(ToString::to_string))
}

impl ParameterSystem {
    /// Verifies `xs` on `M`; fails unless every drop holds.
    pub fn new(module: &QuotientModule, xs: Vec<Polynomial>) -> Result<ParameterSystem> {
        let check = verify_sop(module, &xs)?;
        if let Some(i) = check.failed_at {
            return Err(Error::InvalidArgument(format!(
                "not a system of parameters: dimension does not drop at element {i}"
            )));
        }
        Ok(ParameterSystem {
            degrees: xs.iter().map(|x| x.degree().unwrap_or(0)).collect(),
            elements: xs,
            dims: check.dims,
        })
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `dim(J + (x_1..x_i))` for `i = 0..=s`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `q_i = (x_1, …, x_i)`.
    pub fn prefix(&self, i: usize) -> Ideal {
        let ring = self.elements[0].ring();
        Ideal::new(ring, self.elements[..i].to_vec()).expect("elements share a ring")
    }

    /// The parameter ideal `q = (x_1, …, x_s)`.
    pub fn ideal(&self) -> Ideal {
        self.prefix(self.len())
    }

    pub fn strings(&self) -> Vec<String> {
        self.elements.iter().map(ToString::to_string).collect()
    }
}

/// Checks `dim(J + (x_1..x_i)) = s − i` for `i = 1..s`.
pub fn verify_sop(module: &QuotientModule, xs: &[Polynomial]) -> Result<SopCheck> {
    let s = module.dim();
    if xs.len() != s {
        return Err(Error::InvalidArgument(format!(
            "expected {s} elements for a module of dimension {s}, got {}",
            xs.len()
        )));
    }
    for x in xs {
        if x.ring() != module.ring() {
            return Err(Error::RingMismatch);
        }
        if !x.is_homogeneous() || x.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidArgument(format!(
                "parameters must be homogeneous of positive degree: {x}"
            )));
        }
    }
    let mut dims = vec![s];
    let mut failed_at = None;
    let mut acc = module.ideal().clone();
    for (i, x) in xs.iter().enumerate() {
        acc = acc.with_generators(std::slice::from_ref(x))?;
        let d = krull_dim(&acc)?;
        if d + i + 1 != s && failed_at.is_none() {
            failed_at = Some(i + 1);
        }
        dims.push(d);
    }
    Ok(SopCheck { dims, failed_at })
}

struct Sampler {
    rng: ChaCha8Rng,
    field: Field,
}

impl Sampler {
    fn new(field: Field, seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
        }
    }

    fn coefficient(&mut self) -> i64 {
        let top = match self.field {
            Field::Prime(p) => (p as i64 - 1).min(1 << 16),
            Field::Rational => RATIONAL_COEFF_MAX,
        };
        self.rng.gen_range(1..=top)
    }

    fn term_form(&mut self, module: &QuotientModule, support: Vec<Monomial>) -> Polynomial {
        let field = self.field;
        let terms = support
            .into_iter()
            .map(|m| Term {
                monomial: m,
                coeff: field.from_i64(self.coefficient()),
            })
            .collect();
        Polynomial::from_terms(module.ring(), terms)
    }

    /// A random form supported on `monomials`. Over the rationals, forms of
    /// degree at least two are powers of linear forms in at most two
    /// variables when every monomial is allowed, and binomials otherwise;
    /// both keep the coefficients of the bases of their powers small.
    fn form(&mut self, module: &QuotientModule, monomials: &[Monomial], degree: u32) -> Polynomial {
        if self.field != Field::Rational || degree < 2 || monomials.len() <= 2 {
            return self.term_form(module, monomials.to_vec());
        }
        let width = module.ring().width();
        if monomials.len() == monomials_of_degree(width, degree).len() {
            let vars = sample(&mut self.rng, width, width.min(2)).iter().map(Monomial::var).collect();
            return self.term_form(module, vars).pow(degree);
        }
        let support = sample(&mut self.rng, monomials.len(), 2).iter().map(|i| monomials[i]).collect();
        self.term_form(module, support)
    }

    fn draw(
        &mut self,
        module: &QuotientModule,
        allowed: &[Vec<Monomial>],
        degree: u32,
        count: usize,
    ) -> Result<Vec<ParameterSystem>> {
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let mut found = None;
            for _ in 0..RETRY_CAP {
                let xs: Vec<Polynomial> = allowed.iter().map(|mons| self.form(module, mons, degree)).collect();
                if verify_sop(module, &xs)?.is_valid() {
                    found = Some(ParameterSystem::new(module, xs)?);
                    break;
                }
            }
            match found {
                Some(sys) => out.push(sys),
                None => {
                    return Err(Error::SamplingFailed(format!(
                        "no system of parameters of degree {degree} found in {RETRY_CAP} draws"
                    )))
                }
            }
        }
        Ok(out)
    }
}

fn check_sampling(module: &QuotientModule, degree: u32) -> Result<()> {
    if module.dim() == 0 {
        return Err(Error::InvalidArgument("module has dimension 0; nothing to sample".into()));
    }
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    Ok(())
}

/// `count` systems of random forms of the given degree, seeded by `seed`.
pub fn sample_sop(module: &QuotientModule, count: usize, seed: u64, degree: u32) -> Result<Vec<ParameterSystem>> {
    check_sampling(module, degree)?;
    let mons = monomials_of_degree(module.ring().width(), degree);
    let allowed = vec![mons; module.dim()];
    Sampler::new(module.ring().field(), seed).draw(module, &allowed, degree, count)
}

/// Like [`sample_sop`] for monomial `J`, except that `x_j` is drawn from
/// `∩ (J : K_i)` over the filtration levels with `d_i < j`, so every
/// system is distinguished.
pub fn sample_distinguished_sop(
    module: &QuotientModule,
    count: usize,
    seed: u64,
    degree: u32,
) -> Result<Vec<ParameterSystem>> {
    check_sampling(module, degree)?;
    let chain = dimension_filtration(module.ideal())?;
    let width = module.ring().width();
    let base = chain.monomial_level(0);
    let mut allowed = Vec::with_capacity(module.dim());
    for j in 1..=module.dim() {
        let mut a = MonomialIdeal::unit(width);
        for i in 1..chain.len() {
            if chain.dim(i) < j {
                a = a.intersect(&base.colon(chain.monomial_level(i)));
            }
        }
        let mons = a.monomials_of_degree(degree);
        if mons.is_empty() {
            return Err(Error::SamplingFailed(format!(
                "no forms of degree {degree} annihilate the lower-dimensional part for element {j}"
            )));
        }
        allowed.push(mons);
    }
    Sampler::new(module.ring().field(), seed).draw(module, &allowed, degree, count)
}
