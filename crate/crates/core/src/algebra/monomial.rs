//! Monomials as fixed-width exponent vectors, and monomial orders.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of ring variables (auxiliary elimination
/// variables included).
pub const MAX_VARS: usize = 16;

/// A monomial `x^e`. Positions beyond the ring width are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        degree: 0,
    };

    /// Panics if `exps` is wider than [`MAX_VARS`].
    pub fn new(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial {
            exps: e,
            degree: exps.iter().map(|&x| x as u32).sum(),
        }
    }

    pub fn var(i: usize) -> Monomial {
        Monomial::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, width: usize) -> &[u16] {
        &self.exps[..width]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bit `i` is set iff `x_i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn support(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.exps[i] > 0).collect()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            degree += exps[i] as u32;
        }
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            degree += exps[i] as u32;
        }
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }

    /// Moves exponent `i` to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, &j) in perm.iter().enumerate() {
            exps[j] = self.exps[i];
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    fn block_degree(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().map(|&e| e as u32).sum()
    }

    /// Degree-reverse-lexicographic comparison restricted to `lo..hi`.
    #[inline]
    fn grevlex_block(&self, other: &Monomial, lo: usize, hi: usize) -> Ordering {
        let (da, db) = if lo == 0 && hi == MAX_VARS {
            (self.degree, other.degree)
        } else {
            (self.block_degree(lo, hi), other.block_degree(lo, hi))
        };
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (lo..hi).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Renders with the given variable names, `1` for the unit monomial.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..width])
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, name) in self.names.iter().enumerate() {
            let e = self.m.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order: the first `k` variables (grevlex among themselves)
    /// dominate the rest (grevlex among themselves).
    Elimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.grevlex_block(b, 0, MAX_VARS),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(k) => a
                .grevlex_block(b, 0, k)
                .then_with(|| a.grevlex_block(b, k, MAX_VARS)),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

/// All monomials of total degree `d` in the first `width` variables, sorted
/// descending in grevlex.
pub fn monomials_of_degree(width: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, width: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if i + 1 == width {
            cur[i] = left as u16;
            out.push(Monomial::new(&cur[..width]));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, width, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if width == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, width, d, &mut [0; MAX_VARS], &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 y > z^2 x? both degree 3: x^2y vs xz^2: last var z: 0 < 2 so x^2y bigger
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn elimination_blocks() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 0), vec![Monomial::ONE]);
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..6, 4).prop_map(|v| Monomial::new(&v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (0usize..=4).prop_map(MonomialOrder::Elimination),
        ]
    }

    proptest! {
        #[test]
        fn one_is_minimal(a in arb_monomial(), o in arb_order()) {
            prop_assert_ne!(o.cmp(&Monomial::ONE, &a), Ordering::Greater);
        }

        #[test]
        fn orders_are_multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial(), o in arb_order()) {
            let lhs = o.cmp(&a, &b);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), lhs);
        }

        #[test]
        fn orders_are_total(a in arb_monomial(), b in arb_monomial(), o in arb_order()) {
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        }
    }
}
