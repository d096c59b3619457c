//! Irreducible and primary decomposition of monomial ideals by recursive
//! splitting of mixed generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::MonomialIdeal;
use crate::algebra::{Monomial, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// An ideal `(x_a^{e_a} : a ∈ A)` generated by pure variable powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    powers: Vec<(usize, u16)>,
    width: usize,
}

impl IrreducibleComponent {
    fn from_monomial_ideal(ideal: &MonomialIdeal) -> IrreducibleComponent {
        let mut powers: Vec<(usize, u16)> = ideal
            .generators()
            .iter()
            .map(|g| {
                let v = g.support()[0];
                (v, g.exp(v))
            })
            .collect();
        powers.sort_unstable();
        IrreducibleComponent { powers, width: ideal.width() }
    }

    /// `(variable index, exponent)` pairs sorted by variable.
    pub fn powers(&self) -> &[(usize, u16)] {
        &self.powers
    }

    /// The radical, generated by the variables that occur.
    pub fn prime(&self) -> VariablePrime {
        VariablePrime {
            vars: self.powers.iter().map(|&(v, _)| v).collect(),
            width: self.width,
        }
    }

    pub fn to_monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.width, self.powers.iter().map(|&(v, e)| Monomial::var_pow(v, e)))
    }

    pub fn to_ideal(&self, ring: &Arc<RingSpec>) -> Ideal {
        self.to_monomial_ideal().to_ideal(ring)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PowersDisplay { powers: &self.powers, names }
    }
}

struct PowersDisplay<'a> {
    powers: &'a [(usize, u16)],
    names: &'a [String],
}

impl fmt::Display for PowersDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.powers.is_empty() {
            write!(f, "0")?;
        }
        for (i, &(v, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match e {
                1 => write!(f, "{}", self.names[v])?,
                _ => write!(f, "{}^{e}", self.names[v])?,
            }
        }
        write!(f, ")")
    }
}

/// A prime generated by a set of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariablePrime {
    vars: Vec<usize>,
    width: usize,
}

impl VariablePrime {
    pub fn variables(&self) -> &[usize] {
        &self.vars
    }

    /// `dim S/P`.
    pub fn dim(&self) -> usize {
        self.width - self.vars.len()
    }

    pub fn to_ideal(&self, ring: &Arc<RingSpec>) -> Ideal {
        MonomialIdeal::new(self.width, self.vars.iter().map(|&v| Monomial::var(v))).to_ideal(ring)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        let powers: Vec<(usize, u16)> = self.vars.iter().map(|&v| (v, 1)).collect();
        OwnedPowersDisplay { powers, names }
    }
}

struct OwnedPowersDisplay<'a> {
    powers: Vec<(usize, u16)>,
    names: &'a [String],
}

impl fmt::Display for OwnedPowersDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PowersDisplay { powers: &self.powers, names: self.names }.fmt(f)
    }
}

/// A primary component together with its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub ideal: MonomialIdeal,
    pub prime: VariablePrime,
}

fn proper_monomial(ideal: &Ideal) -> Result<MonomialIdeal> {
    let mono = MonomialIdeal::from_ideal(ideal)?;
    if mono.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(mono)
}

/// Splits `I = (I + x_i^a) ∩ (I + u/x_i^a)` along a generator `u` with mixed
/// support until every ideal is generated by pure powers.
fn split(ideal: MonomialIdeal, memo: &mut HashMap<MonomialIdeal, Vec<MonomialIdeal>>) -> Vec<MonomialIdeal> {
    if ideal.is_unit() {
        return Vec::new();
    }
    if let Some(done) = memo.get(&ideal) {
        return done.clone();
    }
    let mixed = ideal
        .generators()
        .iter()
        .find(|g| g.support_mask().count_ones() >= 2)
        .copied();
    let out = match mixed {
        None => vec![ideal.clone()],
        Some(u) => {
            let v = u.support()[0];
            let power = Monomial::var_pow(v, u.exp(v));
            let rest = power.quotient_of(&u).expect("power divides");
            let mut parts = split(ideal.with_generator(power), memo);
            parts.extend(split(ideal.with_generator(rest), memo));
            parts
        }
    };
    memo.insert(ideal, out.clone());
    out
}

pub(crate) fn irreducible_components(ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let mut parts = split(ideal.clone(), &mut HashMap::new());
    parts.sort_by_cached_key(|c| {
        c.generators()
            .iter()
            .map(|g| g.exponents(c.width()).to_vec())
            .collect::<Vec<_>>()
    });
    parts.dedup();
    let keep: Vec<bool> = parts
        .iter()
        .enumerate()
        .map(|(i, c)| !parts.iter().enumerate().any(|(j, d)| i != j && c.contains_ideal(d)))
        .collect();
    parts
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// The unique irredundant decomposition into irreducible monomial ideals.
pub fn irreducible_decomposition(ideal: &Ideal) -> Result<Vec<IrreducibleComponent>> {
    let mono = proper_monomial(ideal)?;
    let mut comps: Vec<IrreducibleComponent> = irreducible_components(&mono)
        .iter()
        .map(IrreducibleComponent::from_monomial_ideal)
        .collect();
    comps.sort_by(|a, b| a.powers.cmp(&b.powers));
    Ok(comps)
}

pub(crate) fn primary_components(ideal: &MonomialIdeal) -> Vec<PrimaryComponent> {
    let mut groups: BTreeMap<VariablePrime, MonomialIdeal> = BTreeMap::new();
    for c in irreducible_components(ideal) {
        let comp = IrreducibleComponent::from_monomial_ideal(&c);
        let prime = comp.prime();
        let merged = match groups.remove(&prime) {
            Some(prev) => prev.intersect(&c),
            None => c,
        };
        groups.insert(prime, merged);
    }
    groups
        .into_iter()
        .map(|(prime, ideal)| PrimaryComponent { ideal, prime })
        .collect()
}

/// Irredundant primary decomposition, one component per associated prime,
/// sorted by prime.
pub fn primary_decomposition(ideal: &Ideal) -> Result<Vec<PrimaryComponent>> {
    Ok(primary_components(&proper_monomial(ideal)?))
}

/// `Ass(S/I)`, sorted.
pub fn associated_primes(ideal: &Ideal) -> Result<Vec<VariablePrime>> {
    Ok(primary_decomposition(ideal)?.into_iter().map(|c| c.prime).collect())
}
