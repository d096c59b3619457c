//! Random instances and independent linear-algebra oracles shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use chern::algebra::monomial::monomials_of_degree;
use chern::algebra::{Field, FieldElement, Monomial, MonomialOrder, Polynomial, RingSpec, Term};
use chern::groebner::{intersect, Ideal};
use chern::monideal::IrreducibleComponent;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(field: Field, vars: usize) -> Arc<RingSpec> {
    let names: Vec<String> = (0..vars).map(|i| ["x", "y", "z", "w"][i].to_string()).collect();
    RingSpec::new(field, names, MonomialOrder::Grevlex).unwrap()
}

/// A form of degree `t` with about half of its coefficients nonzero.
pub fn random_form(r: &mut ChaCha8Rng, ring: &Arc<RingSpec>, t: u32) -> Polynomial {
    let field = ring.field();
    let mut terms = Vec::new();
    for m in monomials_of_degree(ring.width(), t) {
        if r.gen_bool(0.5) {
            terms.push(Term {
                monomial: m,
                coeff: field.from_i64(r.gen_range(-20..=20)),
            });
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// `gens` random generators, homogeneous of degree 1..=3 or sparse
/// inhomogeneous of degree at most 2.
pub fn random_ideal(
    r: &mut ChaCha8Rng,
    field: Field,
    vars: usize,
    gens: usize,
    homogeneous: bool,
) -> (Arc<RingSpec>, Ideal) {
    let ring = ring(field, vars);
    let mut out = Vec::new();
    while out.len() < gens {
        let g = if homogeneous {
            let d = r.gen_range(1..=3);
            random_form(r, &ring, d)
        } else {
            let mut g = Polynomial::zero(&ring);
            for _ in 0..r.gen_range(2..=3) {
                let d = r.gen_range(0..=2);
                let mons = monomials_of_degree(vars, d);
                let m = mons[r.gen_range(0..mons.len())];
                let c = field.from_i64(r.gen_range(1..=9));
                g = g.add(&Polynomial::term(&ring, m, c)).unwrap();
            }
            g
        };
        if !g.is_zero() {
            out.push(g);
        }
    }
    let ideal = Ideal::new(&ring, out).unwrap();
    (ring, ideal)
}

/// Random monomial ideal over the rationals with generators of degree at
/// most `max_deg`; `m_primary` adds a pure power of every variable.
pub fn random_monomial_ideal(
    r: &mut ChaCha8Rng,
    vars: usize,
    max_deg: u32,
    m_primary: bool,
) -> (Arc<RingSpec>, Ideal) {
    let ring = ring(Field::Rational, vars);
    let one = Field::Rational.one();
    let mut mons = Vec::new();
    if m_primary {
        for i in 0..vars {
            mons.push(Monomial::var_pow(i, r.gen_range(1..=max_deg) as u16));
        }
    }
    for _ in 0..r.gen_range(1..=4) {
        let d = r.gen_range(1..=max_deg);
        let all = monomials_of_degree(vars, d);
        mons.push(all[r.gen_range(0..all.len())]);
    }
    let gens = mons.into_iter().map(|m| Polynomial::term(&ring, m, one.clone())).collect();
    let ideal = Ideal::new(&ring, gens).unwrap();
    (ring, ideal)
}

fn residue(c: &FieldElement) -> u64 {
    match c {
        FieldElement::Modular { value, .. } => *value as u64,
        FieldElement::Rational(_) => panic!("oracle works over prime fields"),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Rank of a dense matrix over `F_p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c], p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + p - f * pv % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn prime(ring: &RingSpec) -> u64 {
    match ring.field() {
        Field::Prime(p) => p as u64,
        Field::Rational => panic!("oracle works over prime fields"),
    }
}

/// Rows `m·g` spanning the degree-`t` piece of a homogeneous ideal.
fn graded_piece(ideal: &Ideal, t: u32) -> (Vec<Vec<u64>>, HashMap<Monomial, usize>) {
    let ring = ideal.ring();
    let p = prime(ring);
    let basis = monomials_of_degree(ring.width(), t);
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let dg = g.degree().unwrap();
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(ring.width(), t - dg) {
            let mut row = vec![0u64; basis.len()];
            for term in g.terms() {
                row[index[&term.monomial.mul(&m)]] = residue(&term.coeff) % p;
            }
            rows.push(row);
        }
    }
    (rows, index)
}

/// Membership of a homogeneous `f` in a homogeneous ideal by comparing
/// ranks of the degree-`deg f` piece with and without `f`.
pub fn in_span_oracle(ideal: &Ideal, f: &Polynomial) -> bool {
    let p = prime(ideal.ring());
    let t = f.degree().unwrap();
    let (rows, index) = graded_piece(ideal, t);
    let mut row = vec![0u64; index.len()];
    for term in f.terms() {
        row[index[&term.monomial]] = residue(&term.coeff);
    }
    let before = rank_mod_p(rows.clone(), p);
    let mut with = rows;
    with.push(row);
    rank_mod_p(with, p) == before
}

/// `dim_k (S/I)_t` for `t` up to the first degree where it vanishes, or
/// `None` if it never vanishes up to `max_degree`.
pub fn hilbert_function_oracle(ideal: &Ideal, max_degree: u32) -> Option<Vec<u64>> {
    let p = prime(ideal.ring());
    let mut hf = Vec::new();
    for t in 0..=max_degree {
        let (rows, index) = graded_piece(ideal, t);
        let h = (index.len() - rank_mod_p(rows, p)) as u64;
        if h == 0 {
            return Some(hf);
        }
        hf.push(h);
    }
    None
}

/// Each component contains `ideal`, and their intersection is `ideal`.
pub fn check_decomposition(ideal: &Ideal, comps: &[IrreducibleComponent]) -> Vec<String> {
    let ring = ideal.ring();
    let mut failures = Vec::new();
    let mut acc = Ideal::unit(ring);
    for c in comps {
        let ci = c.to_ideal(ring);
        if !ci.contains_ideal(ideal).unwrap() {
            failures.push(format!("component {ci} does not contain {ideal}"));
        }
        acc = intersect(&acc, &ci).unwrap();
    }
    if !acc.same_ideal(ideal).unwrap() {
        failures.push(format!("components of {ideal} intersect to {acc}"));
    }
    failures
}
