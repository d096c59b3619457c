//! Monomial ideals: irreducible and primary decomposition, associated
//! primes, and the dimension filtration.

mod decompose;
mod filtration;

use std::fmt;
use std::sync::Arc;

pub use decompose::{
    associated_primes, irreducible_decomposition, primary_decomposition, IrreducibleComponent,
    PrimaryComponent, VariablePrime,
};
pub use filtration::{dimension_filtration, unmixed_component, FiltrationChain};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// True iff the ideal is generated by monomials, i.e. its reduced basis
/// consists of monomials.
pub fn is_monomial_ideal(ideal: &Ideal) -> Result<bool> {
    Ok(ideal.gb()?.basis().iter().all(Polynomial::is_monomial))
}

/// A monomial ideal held by its minimal generators, sorted descending in
/// grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    width: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(width: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        gens.sort_by(|a, b| MonomialOrder::Grevlex.cmp(a, b));
        gens.dedup();
        // after sorting, a divisor of g can only appear before g
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.reverse();
        MonomialIdeal { width, gens: minimal }
    }

    /// Fails with `Unsupported` unless `ideal` is a monomial ideal.
    pub fn from_ideal(ideal: &Ideal) -> Result<MonomialIdeal> {
        let gb = ideal.gb()?;
        if !gb.basis().iter().all(Polynomial::is_monomial) {
            return Err(Error::Unsupported("non-monomial ideal".into()));
        }
        Ok(MonomialIdeal::new(ideal.ring().width(), gb.leading_monomials().iter().copied()))
    }

    pub fn unit(width: usize) -> MonomialIdeal {
        MonomialIdeal { width, gens: vec![Monomial::ONE] }
    }

    pub fn zero(width: usize) -> MonomialIdeal {
        MonomialIdeal { width, gens: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.last().is_some_and(Monomial::is_one)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.width, self.gens.iter().chain(&other.gens).copied())
    }

    pub fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.width, self.gens.iter().copied().chain(std::iter::once(m)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::new(self.width, lcms)
    }

    /// `I : (u)`.
    pub fn colon_monomial(&self, u: &Monomial) -> MonomialIdeal {
        let quotients = self.gens.iter().map(|g| g.gcd(u).quotient_of(g).expect("gcd divides"));
        MonomialIdeal::new(self.width, quotients)
    }

    /// `I : J`; the unit ideal when `J = (0)`.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.width);
        for u in &other.gens {
            acc = acc.intersect(&self.colon_monomial(u));
        }
        acc
    }

    /// Generated by pure powers of variables.
    pub fn is_irreducible(&self) -> bool {
        self.gens.iter().all(|g| g.support_mask().count_ones() <= 1)
    }

    /// Krull dimension of `S/I` by maximal independent sets; `None` for the
    /// unit ideal.
    pub fn dim(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let supports: Vec<u32> = self.gens.iter().map(Monomial::support_mask).collect();
        let best = (0u32..1 << self.width)
            .filter(|u| supports.iter().all(|&s| s & !u != 0))
            .map(|u| u.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Some(best)
    }

    /// Degree-`d` monomials in the ideal.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        crate::algebra::monomial::monomials_of_degree(self.width, d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    pub fn to_ideal(&self, ring: &Arc<RingSpec>) -> Ideal {
        let one = ring.field().one();
        let gens = self
            .gens
            .iter()
            .map(|m| Polynomial::term(ring, *m, one.clone()))
            .collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialIdealDisplay { ideal: self, names }
    }
}

struct MonomialIdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for MonomialIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.ideal.is_zero() {
            write!(f, "0")?;
        }
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(self.names))?;
        }
        write!(f, ")")
    }
}
