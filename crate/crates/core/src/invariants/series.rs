//! Length and socle series along the powers `I^{n+1}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::binomial::{fit_binomial, BinomialPolynomial, IntegerSeries};
use super::QuotientModule;
use crate::algebra::linalg::{echelon, rank};
use crate::algebra::{FieldElement, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_function, krull_dim, saturate, standard_monomials, Ideal, ReducedGB};

/// Largest `nmax` tried by the adaptive coefficient functions.
pub const DEFAULT_NMAX_CAP: u64 = 64;
const INITIAL_NMAX: u64 = 8;

/// Validates `M` and `I` and returns the basis of `J + I`, which must be
/// zero-dimensional.
fn artinian_sum(module: &QuotientModule, ideal: &Ideal) -> Result<Arc<ReducedGB>> {
    if module.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    ideal.require_homogeneous("invariant computation")?;
    let sum = module.ideal().sum(ideal)?;
    let gb = sum.gb()?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let dim = krull_dim(&sum)?;
    if dim > 0 {
        return Err(Error::PositiveDimension(dim));
    }
    Ok(gb)
}

/// `(ℓ(S/L), dim_k Soc(S/L))` for a zero-dimensional homogeneous `L`. The
/// socle is graded, so it is the kernel of multiplication by the variables
/// taken one degree at a time.
fn length_and_socle(gb: &ReducedGB, want_socle: bool) -> Result<(u64, u64)> {
    if !gb.basis().iter().all(Polynomial::is_homogeneous) {
        return Err(Error::NonHomogeneous("socle computation needs a homogeneous ideal".into()));
    }
    let standard = standard_monomials(gb)?;
    let length = standard.len() as u64;
    if !want_socle {
        return Ok((length, 0));
    }
    let one = gb.ring().field().one();
    let n = gb.ring().width();
    let mut by_degree: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for m in standard {
        by_degree.entry(m.degree()).or_default().push(m);
    }
    let mut socle = 0u64;
    for (&t, basis) in &by_degree {
        let Some(upper) = by_degree.get(&(t + 1)) else {
            socle += basis.len() as u64;
            continue;
        };
        let mut reducer = MonomialReducer {
            gb,
            index: upper.iter().enumerate().map(|(i, m)| (*m, i)).collect(),
            memo: HashMap::new(),
        };
        let stride = upper.len();
        let mut rows = Vec::with_capacity(basis.len());
        for b in basis {
            let mut row = Vec::new();
            for i in 0..n {
                let m = b.mul(&Monomial::var(i));
                match reducer.index.get(&m) {
                    Some(&k) => row.push((i * stride + k, one.clone())),
                    None => {
                        let nf = reducer.normal_form(m);
                        row.extend(nf.iter().map(|(k, c)| (i * stride + k, c.clone())));
                    }
                }
            }
            rows.push(row);
        }
        socle += (basis.len() - rank(rows)) as u64;
    }
    Ok((length, socle))
}

/// Normal forms of monomials of one degree as coordinate vectors over the
/// standard monomials of that degree. A monomial `u·lm(g)` reduces to
/// `-u·tail(g)/lc(g)`, whose monomials are smaller, so results are memoized
/// and reused.
struct MonomialReducer<'a> {
    gb: &'a ReducedGB,
    index: HashMap<Monomial, usize>,
    memo: HashMap<Monomial, Vec<(usize, FieldElement)>>,
}

impl MonomialReducer<'_> {
    fn normal_form(&mut self, m: Monomial) -> Vec<(usize, FieldElement)> {
        if let Some(&k) = self.index.get(&m) {
            return vec![(k, self.gb.ring().field().one())];
        }
        if let Some(v) = self.memo.get(&m) {
            return v.clone();
        }
        let gb = self.gb;
        let (g, u) = gb
            .leading_monomials()
            .iter()
            .zip(gb.basis())
            .find_map(|(lm, g)| lm.quotient_of(&m).map(|u| (g, (*lm, u))))
            .expect("a nonstandard monomial has a dividing leading monomial");
        let (lm, u) = u;
        let lc_inv = g.coefficient(&lm).expect("leading term present").inv();
        let mut acc: HashMap<usize, FieldElement> = HashMap::new();
        for term in g.terms().iter().filter(|t| t.monomial != lm) {
            let scale = term.coeff.mul(&lc_inv).neg();
            for (k, c) in self.normal_form(u.mul(&term.monomial)) {
                let add = c.mul(&scale);
                match acc.get_mut(&k) {
                    Some(e) => *e = e.add(&add),
                    None => {
                        acc.insert(k, add);
                    }
                }
            }
        }
        let mut v: Vec<(usize, FieldElement)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|(k, _)| *k);
        self.memo.insert(m, v.clone());
        v
    }
}

/// `dim_k Soc(S/L)` from a reduced basis of a zero-dimensional homogeneous
/// ideal `L`.
pub fn socle_dim_of(gb: &ReducedGB) -> Result<u64> {
    Ok(length_and_socle(gb, true)?.1)
}

/// `ℓ(((J+I) : m) / (J+I))`, the index of reducibility of `I` on `M`.
pub fn socle_dim(module: &QuotientModule, ideal: &Ideal) -> Result<u64> {
    socle_dim_of(&*artinian_sum(module, ideal)?)
}

/// Generators of `I^{n+1}` modulo `J` for successive `n`.
struct PowerTower<'a> {
    module: &'a QuotientModule,
    base: Vec<Polynomial>,
    power: Vec<Polynomial>,
    next: u64,
}

impl<'a> PowerTower<'a> {
    fn new(module: &'a QuotientModule, ideal: &Ideal) -> Result<PowerTower<'a>> {
        artinian_sum(module, ideal)?;
        let mut tower = PowerTower {
            module,
            base: Vec::new(),
            power: Vec::new(),
            next: 0,
        };
        tower.base = tower.reduce(ideal.generators())?;
        Ok(tower)
    }

    fn reduce(&self, polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let gb = self.module.gb();
        let reduced = polys
            .iter()
            .map(|p| gb.normal_form(p))
            .collect::<Result<Vec<_>>>()?;
        let nonzero: Vec<Polynomial> = reduced.into_iter().filter(|p| !p.is_zero()).collect();
        Ok(echelon(&nonzero, gb.order()))
    }

    /// Basis of `J + I^{n+1}` for the next `n`.
    fn step(&mut self) -> Result<Arc<ReducedGB>> {
        if self.next == 0 {
            self.power = self.base.clone();
        } else {
            let mut products = Vec::with_capacity(self.power.len() * self.base.len());
            for p in &self.power {
                for b in &self.base {
                    products.push(p.mul(b)?);
                }
            }
            self.power = self.reduce(&products)?;
        }
        self.next += 1;
        let mut gens = self.module.gb().basis().to_vec();
        gens.extend(self.power.iter().cloned());
        Ideal::new(self.module.ring(), gens)?.gb()
    }
}

struct SeriesState<'a> {
    tower: PowerTower<'a>,
    lengths: Vec<u64>,
    socles: Vec<u64>,
    want_socle: bool,
}

impl<'a> SeriesState<'a> {
    fn new(module: &'a QuotientModule, ideal: &Ideal, want_socle: bool) -> Result<SeriesState<'a>> {
        Ok(SeriesState {
            tower: PowerTower::new(module, ideal)?,
            lengths: Vec::new(),
            socles: Vec::new(),
            want_socle,
        })
    }

    fn extend_to(&mut self, nmax: u64) -> Result<()> {
        while (self.lengths.len() as u64) <= nmax {
            let gb = self.tower.step()?;
            let (length, socle) = length_and_socle(&gb, self.want_socle)?;
            self.lengths.push(length);
            if self.want_socle {
                self.socles.push(socle);
            }
        }
        Ok(())
    }
}

/// `h(n) = ℓ(M / I^{n+1} M)` for `n = 0..=nmax`.
pub fn hs_series(module: &QuotientModule, ideal: &Ideal, nmax: u64) -> Result<IntegerSeries> {
    let mut state = SeriesState::new(module, ideal, false)?;
    state.extend_to(nmax)?;
    Ok(IntegerSeries::new(0, state.lengths))
}

/// `ir_M(I^{n+1})` for `n = 0..=nmax`.
pub fn ir_series(module: &QuotientModule, ideal: &Ideal, nmax: u64) -> Result<IntegerSeries> {
    let mut state = SeriesState::new(module, ideal, true)?;
    state.extend_to(nmax)?;
    Ok(IntegerSeries::new(0, state.socles))
}

fn adaptive_fit(
    module: &QuotientModule,
    ideal: &Ideal,
    cap: u64,
    socle: bool,
    degree: usize,
) -> Result<BinomialPolynomial> {
    let mut state = SeriesState::new(module, ideal, socle)?;
    let mut nmax = INITIAL_NMAX.min(cap);
    loop {
        state.extend_to(nmax)?;
        let values = if socle { &state.socles } else { &state.lengths };
        match fit_binomial(&IntegerSeries::new(0, values.clone()), degree) {
            Err(Error::NotStabilized { .. }) if nmax < cap => nmax = (nmax * 2).min(cap),
            other => return other,
        }
    }
}

/// Hilbert coefficients `e_0, …, e_s` of `I` on `M`, doubling `nmax` from 8
/// up to [`DEFAULT_NMAX_CAP`] until the series stabilizes.
pub fn hilbert_coeffs(module: &QuotientModule, ideal: &Ideal) -> Result<BinomialPolynomial> {
    hilbert_coeffs_with(module, ideal, DEFAULT_NMAX_CAP)
}

pub fn hilbert_coeffs_with(module: &QuotientModule, ideal: &Ideal, cap: u64) -> Result<BinomialPolynomial> {
    adaptive_fit(module, ideal, cap, false, module.dim())
}

/// Irreducible coefficients `f_0, …, f_{s-1}` of `I` on `M`.
pub fn irreducible_coeffs(module: &QuotientModule, ideal: &Ideal) -> Result<BinomialPolynomial> {
    irreducible_coeffs_with(module, ideal, DEFAULT_NMAX_CAP)
}

pub fn irreducible_coeffs_with(module: &QuotientModule, ideal: &Ideal, cap: u64) -> Result<BinomialPolynomial> {
    if module.dim() == 0 {
        return Err(Error::InvalidArgument(
            "irreducible coefficients need a module of positive dimension".into(),
        ));
    }
    adaptive_fit(module, ideal, cap, true, module.dim() - 1)
}

/// Both series of `I` on `M` together with their fits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesFit {
    /// `ℓ(M/I^{n+1}M)`.
    pub hilbert: IntegerSeries,
    /// `ir_M(I^{n+1})`.
    pub socle: IntegerSeries,
    pub e: BinomialPolynomial,
    /// Absent for modules of dimension 0.
    pub f: Option<BinomialPolynomial>,
}

/// Computes both series in one pass over the powers of `I`, sharing every
/// basis computation, and doubles `nmax` until both fits stabilize.
pub fn series_fit(module: &QuotientModule, ideal: &Ideal, cap: u64) -> Result<SeriesFit> {
    let s = module.dim();
    let mut state = SeriesState::new(module, ideal, true)?;
    let mut nmax = INITIAL_NMAX.min(cap);
    loop {
        state.extend_to(nmax)?;
        let hilbert = IntegerSeries::new(0, state.lengths.clone());
        let socle = IntegerSeries::new(0, state.socles.clone());
        let e = fit_binomial(&hilbert, s);
        let f = if s == 0 { Ok(None) } else { fit_binomial(&socle, s - 1).map(Some) };
        match (e, f) {
            (Ok(e), Ok(f)) => return Ok(SeriesFit { hilbert, socle, e, f }),
            (Err(Error::NotStabilized { .. }), _) | (_, Err(Error::NotStabilized { .. })) if nmax < cap => {
                nmax = (nmax * 2).min(cap)
            }
            (Err(err), _) | (_, Err(err)) => return Err(err),
        }
    }
}

/// `H^0_m(M) = K/J` with `K = J : m^∞`.
#[derive(Clone, Debug, Serialize)]
pub struct LocalCohomology {
    #[serde(serialize_with = "serialize_ideal")]
    pub saturation: Ideal,
    pub length: u64,
    /// Least `N` with `J : m^N = K`.
    pub exponent: usize,
}

fn serialize_ideal<S: serde::Serializer>(ideal: &Ideal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ideal.generators().iter().map(ToString::to_string))
}

/// Saturates `J` by the maximal ideal and measures `K/J` degree by degree;
/// `K m^N ⊆ J` bounds the degrees where `K/J` can be nonzero.
pub fn h0m(module: &QuotientModule) -> Result<LocalCohomology> {
    let ring = module.ring();
    let (saturation, exponent) = saturate(module.ideal(), &Ideal::maximal(ring))?;
    if exponent == 0 {
        return Ok(LocalCohomology { saturation, length: 0, exponent });
    }
    let kgb = saturation.gb()?;
    let top = kgb.basis().iter().filter_map(Polynomial::degree).max().unwrap_or(0) + exponent as u32;
    let hj = hilbert_function(module.gb(), top);
    let hk = hilbert_function(&kgb, top);
    let length = hj.iter().zip(&hk).map(|(a, b)| a - b).sum();
    Ok(LocalCohomology { saturation, length, exponent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, parse_ring, RingSpec};
    use crate::invariants::binomial;

    fn ideal(ring: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|g| parse_poly(g, ring).unwrap()).collect()).unwrap()
    }

    fn choose(n: u64, k: u64) -> u64 {
        binomial(n, k).unwrap() as u64
    }

    #[test]
    fn series_of_polynomial_rings() {
        let r1 = parse_ring("Q[x]").unwrap();
        let m1 = QuotientModule::free(&r1);
        let x = ideal(&r1, &["x"]);
        assert_eq!(hs_series(&m1, &x, 6).unwrap().values(), [1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(ir_series(&m1, &x, 6).unwrap().values(), [1; 7]);

        let r2 = parse_ring("Q[x,y]").unwrap();
        let m2 = QuotientModule::free(&r2);
        let max = Ideal::maximal(&r2);
        let expected: Vec<u64> = (0..7).map(|n| choose(n + 2, 2)).collect();
        assert_eq!(hs_series(&m2, &max, 6).unwrap().values(), expected);
        // the socle of k[x,y]/m^{n+1} is its top degree
        let expected: Vec<u64> = (0..7).map(|n| n + 1).collect();
        assert_eq!(ir_series(&m2, &max, 6).unwrap().values(), expected);
    }

    #[test]
    fn socle_dimensions() {
        let r = parse_ring("Q[x,y]").unwrap();
        let m = QuotientModule::free(&r);
        assert_eq!(socle_dim(&m, &Ideal::maximal(&r)).unwrap(), 1);
        assert_eq!(socle_dim(&m, &ideal(&r, &["x^2", "x*y", "y^3"])).unwrap(), 2);
        assert_eq!(socle_dim(&m, &ideal(&r, &["x^2", "y^2"])).unwrap(), 1);
        assert_eq!(socle_dim(&m, &ideal(&r, &["x"])), Err(Error::PositiveDimension(1)));
        assert!(matches!(socle_dim(&m, &ideal(&r, &["x+1", "y"])), Err(Error::NonHomogeneous(_))));
    }

    #[test]
    fn coefficients_of_regular_rings() {
        let r = parse_ring("Q[x,y]").unwrap();
        let m = QuotientModule::free(&r);
        let e = hilbert_coeffs(&m, &Ideal::maximal(&r)).unwrap();
        assert_eq!(e.coefficients(), [1, 0, 0]);
        let e = hilbert_coeffs(&m, &ideal(&r, &["x^2", "y"])).unwrap();
        assert_eq!(&e.coefficients()[..2], [2, 0]);
        let f = irreducible_coeffs(&m, &Ideal::maximal(&r)).unwrap();
        assert_eq!(f.coefficients(), [1, 0]);
        let q = ideal(&r, &["x^2", "y^2"]);
        let fit = series_fit(&m, &q, DEFAULT_NMAX_CAP).unwrap();
        assert_eq!(fit.e, hilbert_coeffs(&m, &q).unwrap());
        assert_eq!(fit.f.unwrap(), irreducible_coeffs(&m, &q).unwrap());
        assert_eq!(fit.hilbert.get(0), Some(4));
        assert_eq!(fit.socle.values()[..3], [1, 2, 3]);
    }

    #[test]
    fn local_cohomology() {
        let r = parse_ring("Q[x,y]").unwrap();
        let h = h0m(&QuotientModule::free(&r)).unwrap();
        assert!(h.saturation.is_zero());
        assert_eq!(h.length, 0);

        let r3 = parse_ring("Q[x,y,z]").unwrap();
        let m = QuotientModule::new(&ideal(&r3, &["x^3", "x^2*y", "x^2*z", "z^2"])).unwrap();
        let h = h0m(&m).unwrap();
        assert!(h.saturation.same_ideal(&ideal(&r3, &["x^2", "z^2"])).unwrap());
        // K/J is spanned by the class of x^2
        assert_eq!(h.length, 1);

        let artinian = QuotientModule::new(&ideal(&r, &["x^2", "y^3"])).unwrap();
        assert_eq!(h0m(&artinian).unwrap().length, 6);
    }

    #[test]
    fn module_validation() {
        let r = parse_ring("Q[x,y]").unwrap();
        assert_eq!(QuotientModule::new(&Ideal::unit(&r)).unwrap_err(), Error::UnitIdeal);
        assert!(matches!(QuotientModule::new(&ideal(&r, &["x-1"])), Err(Error::NonHomogeneous(_))));
        assert_eq!(QuotientModule::new(&ideal(&r, &["x*y"])).unwrap().dim(), 1);
    }
}
