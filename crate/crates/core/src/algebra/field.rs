//! Exact coefficient fields: the rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds a prime field, rejecting composite moduli and moduli that do
    /// not fit in 32 bits.
    pub fn prime(p: u64) -> Result<Field> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(Box::new(BigRational::from_integer(n.into()))),
            Field::Prime(p) => FieldElement::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(Box::new(BigRational::from_integer(n.clone()))),
            Field::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldElement::Modular {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "denominator {den} vanishes in the coefficient field"
            )));
        }
        Ok(self.from_bigint(num).mul(&d.inv()))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Deterministic trial division; moduli are at most 32 bits.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a coefficient field, always in canonical form: rationals
/// in lowest terms with positive denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Box<BigRational>),
    Modular { value: u32, modulus: u32 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    #[inline]
    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Modular { value: a, modulus }, FieldElement::Modular { value: b, .. }) => {
                let s = *a as u64 + *b as u64;
                let p = *modulus as u64;
                FieldElement::Modular {
                    value: if s >= p { (s - p) as u32 } else { s as u32 },
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(Box::new(a.as_ref() + b.as_ref()))
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    #[inline]
    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            FieldElement::Rational(a) => FieldElement::Rational(Box::new(-a.as_ref())),
        }
    }

    #[inline]
    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    #[inline]
    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Modular { value: a, modulus }, FieldElement::Modular { value: b, .. }) => {
                FieldElement::Modular {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(Box::new(a.as_ref() * b.as_ref()))
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
            FieldElement::Rational(a) => FieldElement::Rational(Box::new(a.recip())),
        }
    }

    /// Sign used when printing: residues above `p/2` print as negatives.
    pub(crate) fn is_negative_display(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_negative(),
            FieldElement::Modular { value, modulus } => *value > modulus / 2,
        }
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            FieldElement::Modular { value, modulus } => {
                if *value > modulus / 2 {
                    write!(f, "-{}", modulus - value)
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_detection() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(2).is_ok());
        assert_eq!(Field::prime(32001), Err(Error::NotPrime(32001)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn modular_inverse_round_trips() {
        let f = Field::Prime(32003);
        for n in [1i64, 2, 3, 17, 32002, 12345] {
            let a = f.from_i64(n);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn rationals_stay_canonical() {
        let q = Field::Rational;
        let a = q.from_ratio(&6.into(), &(-4).into()).unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert!(a.add(&q.from_ratio(&3.into(), &2.into()).unwrap()).is_zero());
    }

    #[test]
    fn characteristic_two() {
        let f = Field::Prime(2);
        assert!(f.one().add(&f.one()).is_zero());
    }

    #[test]
    fn denominator_divisible_by_p_is_rejected() {
        let f = Field::Prime(3);
        assert!(f.from_ratio(&1.into(), &6.into()).is_err());
    }
}
