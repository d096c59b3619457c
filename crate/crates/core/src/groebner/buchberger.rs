//! Buchberger's algorithm over raw term vectors.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree first) and
//! pruned with the Gebauer–Möller installation of Buchberger's coprime and
//! chain criteria.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::{merge_scaled, Term};
use crate::error::{Error, Result};

/// Tunables for [`groebner_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Maximum number of S-polynomials reduced before giving up.
    pub max_pairs: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { max_pairs: 1_000_000 }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
    order: MonomialOrder,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair {}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

/// Monic polynomials with cached leading data.
#[derive(Clone)]
pub(crate) struct Basis {
    order: MonomialOrder,
    polys: Vec<Vec<Term>>,
    lms: Vec<Monomial>,
    masks: Vec<u32>,
    active: Vec<usize>,
}

impl Basis {
    pub(crate) fn new(order: MonomialOrder) -> Basis {
        Basis {
            order,
            polys: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
        }
    }

    /// Wraps an already reduced, monic basis.
    pub(crate) fn from_reduced(order: MonomialOrder, polys: Vec<Vec<Term>>) -> Basis {
        let mut b = Basis::new(order);
        for p in polys {
            let lm = p[0].monomial;
            b.lms.push(lm);
            b.masks.push(lm.support_mask());
            b.active.push(b.polys.len());
            b.polys.push(p);
        }
        b
    }

    fn push(&mut self, p: Vec<Term>) -> usize {
        let lm = p[0].monomial;
        self.lms.push(lm);
        self.masks.push(lm.support_mask());
        self.polys.push(p);
        self.polys.len() - 1
    }

    #[inline]
    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = m.support_mask();
        self.active.iter().copied().find(|&k| {
            Some(k) != skip && self.masks[k] & !mask == 0 && self.lms[k].divides(m)
        })
    }

    /// Full reduction of `p`; the result has no term divisible by an active
    /// leading monomial (other than `skip`'s).
    pub(crate) fn reduce(&self, p: Vec<Term>, skip: Option<usize>) -> Vec<Term> {
        let mut cur = p;
        let mut buf = Vec::new();
        let mut rem = Vec::new();
        let mut start = 0;
        while start < cur.len() {
            let m = cur[start].monomial;
            match self.find_reducer(&m, skip) {
                Some(k) => {
                    let g = &self.polys[k];
                    if g.len() == 1 {
                        start += 1;
                        continue;
                    }
                    let q = self.lms[k].quotient_of(&m).expect("reducer divides");
                    let c = cur[start].coeff.neg();
                    merge_scaled(&cur[start + 1..], &g[1..], &q, &c, self.order, &mut buf);
                    std::mem::swap(&mut cur, &mut buf);
                    start = 0;
                }
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }
}

fn make_monic(mut p: Vec<Term>) -> Vec<Term> {
    let lc = &p[0].coeff;
    if !lc.is_one() {
        let inv = lc.inv();
        for t in p.iter_mut() {
            t.coeff = t.coeff.mul(&inv);
        }
    }
    p
}

fn s_polynomial(f: &[Term], g: &[Term], lcm: &Monomial, order: MonomialOrder) -> Vec<Term> {
    let qf = f[0].monomial.quotient_of(lcm).expect("lcm");
    let qg = g[0].monomial.quotient_of(lcm).expect("lcm");
    let a: Vec<Term> = f[1..]
        .iter()
        .map(|t| Term {
            monomial: t.monomial.mul(&qf),
            coeff: t.coeff.clone(),
        })
        .collect();
    let minus_one = f[0].coeff.neg();
    let mut out = Vec::with_capacity(a.len() + g.len());
    merge_scaled(&a, &g[1..], &qg, &minus_one, order, &mut out);
    out
}

struct State {
    order: MonomialOrder,
    basis: Basis,
    pairs: BinaryHeap<Reverse<Pair>>,
}

impl State {
    fn pair(&self, i: usize, j: usize, lcm: Monomial) -> Pair {
        Pair {
            degree: lcm.degree(),
            lcm,
            i,
            j,
            order: self.order,
        }
    }

    /// Gebauer–Möller update after inserting basis element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.basis.lms[h];
        let candidates: Vec<(usize, Monomial)> = self
            .basis
            .active
            .iter()
            .map(|&g| (g, self.basis.lms[g].lcm(&lm_h)))
            .collect();

        // Chain criterion among the new pairs; equal lcms keep one survivor.
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, &(g, lcm)) in candidates.iter().enumerate() {
            let coprime = self.basis.lms[g].is_coprime(&lm_h);
            let dominated = candidates[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, other)| other.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm));
            }
        }
        let fresh: Vec<(usize, Monomial)> = kept
            .into_iter()
            .filter(|&(g, _)| !self.basis.lms[g].is_coprime(&lm_h))
            .collect();

        // Chain criterion on the old pairs.
        let lms = &self.basis.lms;
        self.pairs.retain(|Reverse(p)| {
            !(lm_h.divides(&p.lcm)
                && lms[p.i].lcm(&lm_h) != p.lcm
                && lms[p.j].lcm(&lm_h) != p.lcm)
        });

        for (g, lcm) in fresh {
            let p = self.pair(g, h, lcm);
            self.pairs.push(Reverse(p));
        }

        let basis = &mut self.basis;
        let lms = &basis.lms;
        basis.active.retain(|&g| !lm_h.divides(&lms[g]));
        basis.active.push(h);
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`
/// (each sorted descending in `order`). The result is monic and sorted
/// ascending by leading monomial.
pub(crate) fn groebner_basis(
    gens: Vec<Vec<Term>>,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<Vec<Vec<Term>>> {
    let mut gens: Vec<Vec<Term>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| {
        a[0].monomial
            .degree()
            .cmp(&b[0].monomial.degree())
            .then_with(|| order.cmp(&a[0].monomial, &b[0].monomial))
    });
    let mut state = State {
        order,
        basis: Basis::new(order),
        pairs: BinaryHeap::new(),
    };

    for g in gens {
        let r = state.basis.reduce(g, None);
        if r.is_empty() {
            continue;
        }
        if r[0].monomial.is_one() {
            return Ok(vec![make_monic(r)]);
        }
        let h = state.basis.push(make_monic(r));
        state.update(h);
    }

    let mut processed = 0usize;
    while let Some(Reverse(pair)) = state.pairs.pop() {
        processed += 1;
        if processed > config.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "more than {} S-pairs reduced",
                config.max_pairs
            )));
        }
        let s = s_polynomial(
            &state.basis.polys[pair.i],
            &state.basis.polys[pair.j],
            &pair.lcm,
            order,
        );
        let r = state.basis.reduce(s, None);
        if r.is_empty() {
            continue;
        }
        if r[0].monomial.is_one() {
            return Ok(vec![make_monic(r)]);
        }
        let h = state.basis.push(make_monic(r));
        state.update(h);
    }

    // Inter-reduce the minimal basis.
    let active = state.basis.active.clone();
    let mut reduced: Vec<Vec<Term>> = active
        .iter()
        .map(|&k| {
            let p = state.basis.polys[k].clone();
            let head = p[0].clone();
            let mut tail = state.basis.reduce(p[1..].to_vec(), Some(k));
            tail.insert(0, head);
            tail
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(&a[0].monomial, &b[0].monomial));
    Ok(reduced)
}
