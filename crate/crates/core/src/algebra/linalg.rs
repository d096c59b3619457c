//! Sparse Gaussian elimination over a coefficient field.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;

use super::field::FieldElement;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{merge_scaled, Polynomial, Term};

/// The Mersenne prime `2^61 - 1`.
const CHECK_PRIME: u64 = (1 << 61) - 1;

/// Rank of a family of sparse vectors given as `(column, value)` pairs.
/// Over the rationals, full row rank is first tried modulo a large prime:
/// a rank modulo `p` never exceeds the rank over `Q`, so full rank there is
/// conclusive and avoids coefficient growth.
pub(crate) fn rank(rows: Vec<Vec<(usize, FieldElement)>>) -> usize {
    let rational = rows.iter().flatten().any(|(_, c)| matches!(c, FieldElement::Rational(_)));
    if rational && rank_mod_prime(&rows, CHECK_PRIME) == Some(rows.len()) {
        return rows.len();
    }
    exact_rank(rows)
}

fn residue(c: &FieldElement, p: u64) -> Option<u64> {
    let FieldElement::Rational(r) = c else {
        return None;
    };
    let p_big = BigInt::from(p);
    let reduce = |n: &BigInt| -> u64 { u64::try_from(n.mod_floor(&p_big)).expect("residue below p") };
    let den = reduce(r.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(reduce(r.numer()), inv_mod(den, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Rank of rational rows reduced modulo `p`, or `None` when a denominator
/// vanishes there.
fn rank_mod_prime(rows: &[Vec<(usize, FieldElement)>], p: u64) -> Option<usize> {
    let mut pivots: HashMap<usize, BTreeMap<usize, u64>> = HashMap::new();
    for row in rows {
        let mut cur = BTreeMap::new();
        for (col, c) in row {
            let v = residue(c, p)?;
            if v != 0 {
                cur.insert(*col, v);
            }
        }
        while let Some((&col, &lead)) = cur.last_key_value() {
            match pivots.get(&col) {
                Some(pivot) => {
                    for (k, v) in pivot {
                        let e = cur.entry(*k).or_insert(0);
                        *e = (*e + p - mul_mod(*v, lead, p)) % p;
                        if *e == 0 {
                            cur.remove(k);
                        }
                    }
                }
                None => {
                    let inv = inv_mod(lead, p);
                    for v in cur.values_mut() {
                        *v = mul_mod(*v, inv, p);
                    }
                    pivots.insert(col, cur);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

fn exact_rank(rows: Vec<Vec<(usize, FieldElement)>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, FieldElement>> = BTreeMap::new();
    for row in rows {
        let mut row: BTreeMap<usize, FieldElement> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        while let Some((&col, lead)) = row.last_key_value() {
            match pivots.get(&col) {
                Some(pivot) => {
                    let factor = lead.clone();
                    for (k, v) in pivot {
                        let e = row.entry(*k).or_insert_with(|| v.field().zero());
                        *e = e.sub(&v.mul(&factor));
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    let inv = lead.inv();
                    for v in row.values_mut() {
                        *v = v.mul(&inv);
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// A basis of the span of `polys`, each element monic with a distinct
/// leading monomial.
pub(crate) fn echelon(polys: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let mut pivots: HashMap<Monomial, Vec<Term>> = HashMap::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut buf = Vec::new();
    for p in polys {
        let mut cur = p.sorted_by(order).into_terms();
        while let Some(head) = cur.first() {
            match pivots.get(&head.monomial) {
                Some(pivot) => {
                    let c = head.coeff.neg();
                    merge_scaled(&cur[1..], &pivot[1..], &Monomial::ONE, &c, order, &mut buf);
                    std::mem::swap(&mut cur, &mut buf);
                }
                None => {
                    let inv = head.coeff.inv();
                    for t in cur.iter_mut() {
                        t.coeff = t.coeff.mul(&inv);
                    }
                    leads.push(cur[0].monomial);
                    pivots.insert(cur[0].monomial, cur);
                    break;
                }
            }
        }
    }
    leads
        .into_iter()
        .map(|m| Polynomial::from_sorted_terms(&ring, order, pivots.remove(&m).expect("pivot")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, parse_ring, Field};

    #[test]
    fn rank_of_small_matrices() {
        let f = Field::Rational;
        let e = |n| f.from_i64(n);
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![vec![(0, e(1)), (1, e(2))], vec![(0, e(2)), (1, e(4))]]), 1);
        assert_eq!(rank(vec![vec![(0, e(1))], vec![(1, e(1))], vec![(0, e(1)), (1, e(-1))]]), 2);
        assert_eq!(rank(vec![vec![(3, e(0))]]), 0);
    }

    #[test]
    fn modular_shortcut_agrees_with_exact_rank() {
        let f = Field::Rational;
        let r = |a, b| f.from_ratio(&BigInt::from(a), &BigInt::from(b)).unwrap();
        let full = vec![vec![(0, r(1, 3)), (1, r(2, 5))], vec![(1, r(-7, 2))]];
        assert_eq!(rank_mod_prime(&full, CHECK_PRIME), Some(2));
        assert_eq!(rank(full.clone()), exact_rank(full));
        let deficient = vec![vec![(0, r(1, 3)), (1, r(2, 3))], vec![(0, r(1, 2)), (1, r(1, 1))]];
        assert_eq!(rank(deficient), 1);
        // a denominator divisible by p rules the shortcut out
        let big = BigInt::from(CHECK_PRIME);
        let vanishing = vec![vec![(0, f.from_ratio(&BigInt::from(1), &big).unwrap())]];
        assert_eq!(rank_mod_prime(&vanishing, CHECK_PRIME), None);
        assert_eq!(rank(vanishing), 1);
    }

    #[test]
    fn echelon_spans() {
        let r = parse_ring("Q[x,y]").unwrap();
        let ps: Vec<Polynomial> = ["x^2+x*y", "x*y", "x^2", "2*x^2+2*x*y"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        let basis = echelon(&ps, MonomialOrder::Grevlex);
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(|b| b.terms()[0].coeff.is_one()));
    }
}
