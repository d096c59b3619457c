//! Sparse multivariate polynomials with eagerly canonicalized terms.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::FieldElement;
use super::monomial::{Monomial, MonomialOrder};
use super::ring::RingSpec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: FieldElement,
}

/// A polynomial. Terms are stored strictly descending in `order` with no
/// zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            order: ring.order(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<RingSpec>, c: FieldElement) -> Polynomial {
        Polynomial::term(ring, Monomial::ONE, c)
    }

    pub fn var(ring: &Arc<RingSpec>, i: usize) -> Polynomial {
        assert!(i < ring.width(), "variable index out of range");
        Polynomial::term(ring, Monomial::var(i), ring.field().one())
    }

    pub fn term(ring: &Arc<RingSpec>, m: Monomial, c: FieldElement) -> Polynomial {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { monomial: m, coeff: c }]
        };
        Polynomial {
            ring: ring.clone(),
            order: ring.order(),
            terms,
        }
    }

    /// Canonicalizes an arbitrary term list (duplicates summed, zeros
    /// dropped) in the ring's default order.
    pub fn from_terms(ring: &Arc<RingSpec>, terms: Vec<Term>) -> Polynomial {
        Polynomial::from_terms_in(ring, ring.order(), terms)
    }

    pub(crate) fn from_terms_in(ring: &Arc<RingSpec>, order: MonomialOrder, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_unstable_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t)
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            order,
            terms: out,
        }
    }

    /// Wraps terms already sorted descending in `order` with nonzero,
    /// distinct monomials.
    pub(crate) fn from_sorted_terms(ring: &Arc<RingSpec>, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// The order the terms are stored in.
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// A single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|t| t.monomial.degree() == d)
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.iter().find(|t| t.monomial == *m).map(|t| &t.coeff)
    }

    /// The same polynomial with terms stored in `order`.
    pub fn sorted_by(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Monomial, FieldElement)> {
        let t = if order == self.order {
            self.terms.first()
        } else {
            self.terms
                .iter()
                .max_by(|a, b| order.cmp(&a.monomial, &b.monomial))
        }
        .ok_or(Error::ZeroPolynomial)?;
        Ok((t.monomial, t.coeff.clone()))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).ok().map(|(m, _)| m)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = other.sorted_by(self.order);
        let mut out = Vec::with_capacity(self.len() + other.len());
        merge_scaled(&self.terms, &other.terms, &Monomial::ONE, &self.ring.field().one(), self.order, &mut out);
        Ok(Polynomial::from_sorted_terms(&self.ring, self.order, out))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = other.sorted_by(self.order);
        let mut out = Vec::with_capacity(self.len() + other.len());
        merge_scaled(
            &self.terms,
            &other.terms,
            &Monomial::ONE,
            &self.ring.field().one().neg(),
            self.order,
            &mut out,
        );
        Ok(Polynomial::from_sorted_terms(&self.ring, self.order, out))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.ring.field().one().neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial {
                ring: self.ring.clone(),
                order: self.order,
                terms: Vec::new(),
            };
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial,
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).sorted_by(self.order);
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.mul(m),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                prods.push(Term {
                    monomial: a.monomial.mul(&b.monomial),
                    coeff: a.coeff.mul(&b.coeff),
                });
            }
        }
        Ok(Polynomial::from_terms_in(&self.ring, self.order, prods))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring).sorted_by(self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Scales so that the leading coefficient in `order` is one.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Exact quotient `self / g`; fails if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        let order = self.order;
        let g = g.sorted_by(order);
        let (glm, glc) = g.leading_term(order)?;
        let ginv = glc.inv();
        let mut rest = self.terms.clone();
        let mut quotient = Vec::new();
        let mut buf = Vec::new();
        while let Some(t) = rest.first() {
            let q = glm.quotient_of(&t.monomial).ok_or_else(|| {
                Error::InvalidArgument("polynomial division is not exact".into())
            })?;
            let c = t.coeff.mul(&ginv);
            buf.clear();
            merge_scaled(&rest, &g.terms, &q, &c.neg(), order, &mut buf);
            std::mem::swap(&mut rest, &mut buf);
            quotient.push(Term { monomial: q, coeff: c });
        }
        Ok(Polynomial::from_sorted_terms(&self.ring, order, quotient))
    }

    /// Re-embeds into `target`, sending variable `i` to `map[i]`.
    pub fn map_vars(&self, target: &Arc<RingSpec>, map: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                monomial: t.monomial.permute(map),
                coeff: t.coeff.clone(),
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// The degree-`d` homogeneous component.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|t| t.monomial.degree() == d)
                .cloned()
                .collect(),
        }
    }
}

/// `out = a + c * m * b` for descending-sorted term slices.
pub(crate) fn merge_scaled(
    a: &[Term],
    b: &[Term],
    m: &Monomial,
    c: &FieldElement,
    order: MonomialOrder,
    out: &mut Vec<Term>,
) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].monomial.mul(m);
        match order.cmp(&a[i].monomial, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    monomial: bm,
                    coeff: b[j].coeff.mul(c),
                });
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].coeff.add(&b[j].coeff.mul(c));
                if !s.is_zero() {
                    out.push(Term { monomial: bm, coeff: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(Term {
            monomial: t.monomial.mul(m),
            coeff: t.coeff.mul(c),
        });
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.sorted_by(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Order-insensitive so that it agrees with `eq` across storage orders.
        let mut acc = 0u64;
        for t in &self.terms {
            let mut h = std::collections::hash_map::DefaultHasher::new();
            t.hash(&mut h);
            acc = acc.wrapping_add(h.finish());
        }
        self.ring.hash(state);
        acc.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.vars();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative_display();
            let abs = if neg { t.coeff.neg() } else { t.coeff.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial.display(names))?;
            } else {
                write!(f, "{abs}*{}", t.monomial.display(names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::parse::parse_poly;

    fn ring(field: Field, vars: &[&str], order: MonomialOrder) -> Arc<RingSpec> {
        RingSpec::with_vars(field, vars, order).unwrap()
    }

    #[test]
    fn addition_examples() {
        let r = ring(Field::Rational, &["x", "y"], MonomialOrder::Grevlex);
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("x+y").add(&Polynomial::zero(&r)).unwrap(), p("x+y"));
        assert_eq!(p("x+y").add(&p("x-y")).unwrap(), p("2*x"));
        let r2 = ring(Field::Prime(2), &["x"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r2, 0);
        assert!(x.add(&x).unwrap().is_zero());
    }

    #[test]
    fn multiplication_examples() {
        let r = ring(Field::Rational, &["x", "y", "z"], MonomialOrder::Grevlex);
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("x+y").mul(&Polynomial::one(&r)).unwrap(), p("x+y"));
        assert_eq!(p("x+y").mul(&p("x-y")).unwrap(), p("x^2-y^2"));
        assert_eq!(p("x^2").mul(&p("x+y+z")).unwrap(), p("x^3+x^2*y+x^2*z"));
    }

    #[test]
    fn leading_terms() {
        let r = ring(Field::Rational, &["x", "y", "z"], MonomialOrder::Grevlex);
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(
            p("x^2*y + z").leading_monomial(MonomialOrder::Grevlex),
            Some(Monomial::new(&[2, 1, 0]))
        );
        assert_eq!(p("x + y^2").leading_monomial(MonomialOrder::Lex), Some(Monomial::var(0)));
        assert_eq!(
            p("x + y^2").leading_monomial(MonomialOrder::Grevlex),
            Some(Monomial::var_pow(1, 2))
        );
        assert_eq!(Polynomial::zero(&r).leading_term(MonomialOrder::Grevlex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring(Field::Rational, &["x"], MonomialOrder::Grevlex);
        let r2 = ring(Field::Rational, &["y"], MonomialOrder::Grevlex);
        let a = Polynomial::var(&r1, 0);
        let b = Polynomial::var(&r2, 0);
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
        assert_eq!(a.mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = ring(Field::Rational, &["x", "y"], MonomialOrder::Grevlex);
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("x^2-y^2").exact_div(&p("x-y")).unwrap(), p("x+y"));
        assert!(p("x^2+1").exact_div(&p("x-y")).is_err());
    }

    #[test]
    fn equality_ignores_storage_order() {
        let r = ring(Field::Rational, &["x", "y"], MonomialOrder::Grevlex);
        let f = parse_poly("x + y^2 + 3", &r).unwrap();
        assert_eq!(f.sorted_by(MonomialOrder::Lex), f);
    }
}
