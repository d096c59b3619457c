//! Ideals, reduced Gröbner bases and the ideal-theoretic operations built on
//! them.

mod buchberger;
mod dim;
mod ops;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

pub use buchberger::BuchbergerConfig;
pub use dim::{hilbert_function, is_m_primary, krull_dim, standard_monomials, vdim_artinian};
pub use ops::{colon, colon_poly, eliminate, intersect, saturate};

use crate::algebra::{parse_ideal_spec, FieldElement, IdealSpec, Monomial, MonomialOrder, Polynomial, RingSpec, Term};
use crate::error::{Error, Result};

pub(crate) use buchberger::Basis;

/// An ideal given by generators. Zero generators are dropped.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<RingSpec>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<RingSpec>, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// Parses a generator list or an intersection `(f, g) & (h)`.
    pub fn parse(text: &str, ring: &Arc<RingSpec>) -> Result<Ideal> {
        match parse_ideal_spec(text, ring)? {
            IdealSpec::Generators(gens) => Ideal::new(ring, gens),
            IdealSpec::Intersection(parts) => {
                let mut acc = Ideal::unit(ring);
                for part in parts {
                    acc = intersect(&acc, &Ideal::new(ring, part)?)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<RingSpec>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<RingSpec>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: (0..ring.width()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub(crate) fn require_homogeneous(&self, what: &str) -> Result<()> {
        match self.generators.iter().find(|g| !g.is_homogeneous()) {
            None => Ok(()),
            Some(g) => Err(Error::NonHomogeneous(format!("{what}: {g}"))),
        }
    }

    /// Reduced Gröbner basis under the ring's default order.
    pub fn gb(&self) -> Result<Arc<ReducedGB>> {
        self.gb_in(self.ring.order())
    }

    pub fn gb_in(&self, order: MonomialOrder) -> Result<Arc<ReducedGB>> {
        buchberger_cached(self, order, &BuchbergerConfig::default())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.gb()?;
        for g in &other.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (identical reduced bases).
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.gb()?.basis == other.gb()?.basis)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// The ideal generated by the reduced basis (canonical generators).
    pub fn canonical(&self) -> Result<Ideal> {
        Ok(self.gb()?.to_ideal())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted ascending by
/// leading monomial. Unique for a given ideal and order.
#[derive(Clone)]
pub struct ReducedGB {
    ring: Arc<RingSpec>,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    lms: Vec<Monomial>,
    engine: Basis,
}

impl ReducedGB {
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn is_unit(&self) -> bool {
        self.lms.len() == 1 && self.lms[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            generators: self.basis.clone(),
        }
    }

    /// The unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let terms = f.sorted_by(self.order).into_terms();
        let rem = self.engine.reduce(terms, None);
        Ok(Polynomial::from_sorted_terms(&self.ring, self.order, rem))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `m` lies in the leading-term ideal.
    pub fn is_leading(&self, m: &Monomial) -> bool {
        self.lms.iter().any(|lm| lm.divides(m))
    }
}

impl fmt::Debug for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedGB[{}]{:?}", self.order, self.basis)
    }
}

impl PartialEq for ReducedGB {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.basis == other.basis
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<ReducedGB> {
    buchberger_with(ideal, order, &BuchbergerConfig::default())
}

/// [`buchberger`] with explicit limits; bypasses the cache.
pub fn buchberger_with(ideal: &Ideal, order: MonomialOrder, config: &BuchbergerConfig) -> Result<ReducedGB> {
    let gens: Vec<Vec<Term>> = ideal
        .generators
        .iter()
        .map(|g| g.sorted_by(order).into_terms())
        .collect();
    let basis = buchberger::groebner_basis(gens, order, config)?;
    let lms = basis.iter().map(|p| p[0].monomial).collect();
    Ok(ReducedGB {
        ring: ideal.ring.clone(),
        order,
        basis: basis
            .iter()
            .map(|p| Polynomial::from_sorted_terms(&ideal.ring, order, p.clone()))
            .collect(),
        lms,
        engine: Basis::from_reduced(order, basis),
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct CacheKey {
    ring: RingSpec,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

const CACHE_CAPACITY: usize = 4096;

static GB_CACHE: LazyLock<RwLock<HashMap<CacheKey, Arc<ReducedGB>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn cmp_coeff(a: &FieldElement, b: &FieldElement) -> Ordering {
    match (a, b) {
        (FieldElement::Modular { value: x, .. }, FieldElement::Modular { value: y, .. }) => x.cmp(y),
        (FieldElement::Rational(x), FieldElement::Rational(y)) => x.cmp(y),
        _ => Ordering::Equal,
    }
}

/// Generators made monic, sorted and deduplicated, so that permuting or
/// rescaling the input hits the same cache entry.
fn cache_key(ideal: &Ideal, order: MonomialOrder) -> CacheKey {
    let mut gens: Vec<Polynomial> = ideal
        .generators
        .iter()
        .map(|g| g.sorted_by(order).monic(order))
        .collect();
    gens.sort_by(|a, b| {
        let (ta, tb) = (a.terms(), b.terms());
        for (x, y) in ta.iter().zip(tb.iter()) {
            let o = order
                .cmp(&x.monomial, &y.monomial)
                .then_with(|| cmp_coeff(&x.coeff, &y.coeff));
            if o != Ordering::Equal {
                return o;
            }
        }
        ta.len().cmp(&tb.len())
    });
    gens.dedup();
    CacheKey {
        ring: (*ideal.ring).clone(),
        order,
        generators: gens,
    }
}

fn buchberger_cached(ideal: &Ideal, order: MonomialOrder, config: &BuchbergerConfig) -> Result<Arc<ReducedGB>> {
    let key = cache_key(ideal, order);
    if let Some(hit) = GB_CACHE.read().expect("gb cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let canonical = Ideal {
        ring: ideal.ring.clone(),
        generators: key.generators.clone(),
    };
    let gb = Arc::new(buchberger_with(&canonical, order, config)?);
    let mut cache = GB_CACHE.write().expect("gb cache poisoned");
    if cache.len() >= CACHE_CAPACITY {
        cache.clear();
    }
    cache.insert(key, gb.clone());
    Ok(gb)
}
