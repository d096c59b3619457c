//! Intersection, colon, saturation and elimination via elimination orders.

use std::sync::Arc;

use super::Ideal;
use crate::algebra::{Monomial, MonomialOrder, Polynomial, RingSpec, Term};
use crate::error::{Error, Result};

/// Generators of `I ∩ k[keep]`, computed in a block order that ranks the
/// eliminated variables first.
pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.width();
    if keep.is_empty() {
        return Err(Error::InvalidArgument("eliminate needs at least one variable to keep".into()));
    }
    if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
    }
    let drop: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    // perm[v] = position of v in the reordered ring: dropped variables first.
    let mut perm = vec![0; n];
    for (pos, &v) in drop.iter().chain(keep.iter().filter(|v| !drop.contains(v))).enumerate() {
        perm[v] = pos;
    }
    let mut inverse = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let order = MonomialOrder::Elimination(drop.len());
    let work = ring.permuted(&perm, order);
    let moved = Ideal::new(
        &work,
        ideal.generators().iter().map(|g| g.map_vars(&work, &perm)).collect(),
    )?;
    let gb = moved.gb_in(order)?;
    let dropped_mask: u32 = (0..drop.len()).map(|i| 1u32 << i).sum();
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.monomial.support_mask() & dropped_mask == 0))
        .map(|g| g.map_vars(ring, &inverse))
        .collect();
    Ideal::new(ring, kept)
}

/// `I1 ∩ I2` as `(t*I1 + (1-t)*I2) ∩ S`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    if ring != b.ring() {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if a.is_unit()? {
        return Ok(b.clone());
    }
    if b.is_unit()? {
        return Ok(a.clone());
    }
    let (big, shift) = lift_with_aux(ring)?;
    let t = Polynomial::var(&big, 0);
    let one_minus_t = Polynomial::one(&big).sub(&t)?;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(t.mul(&f.map_vars(&big, &shift))?);
    }
    for g in b.generators() {
        gens.push(one_minus_t.mul(&g.map_vars(&big, &shift))?);
    }
    let gb = Ideal::new(&big, gens)?.gb_in(MonomialOrder::Elimination(1))?;
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.monomial.exp(0) == 0))
        .map(|g| unshift(g, ring))
        .collect();
    Ideal::new(ring, kept)
}

fn lift_with_aux(ring: &Arc<RingSpec>) -> Result<(Arc<RingSpec>, Vec<usize>)> {
    let big = ring.with_leading_vars(1, MonomialOrder::Elimination(1))?;
    let shift: Vec<usize> = (1..=ring.width()).collect();
    Ok((big, shift))
}

fn unshift(g: &Polynomial, ring: &Arc<RingSpec>) -> Polynomial {
    // Variable i+1 of the big ring goes back to variable i; the auxiliary
    // variable does not occur.
    let terms = g
        .terms()
        .iter()
        .map(|t| {
            let exps: Vec<u16> = (1..=ring.width()).map(|i| t.monomial.exp(i)).collect();
            Term {
                monomial: Monomial::new(&exps),
                coeff: t.coeff.clone(),
            }
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `I : (f)`, as `(I ∩ (f)) / f`.
pub fn colon_poly(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = ideal.ring();
    if f.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.contains(f)? {
        return Ok(Ideal::unit(ring));
    }
    let meet = intersect(ideal, &Ideal::new(ring, vec![f.clone()])?)?;
    let gens = meet
        .generators()
        .iter()
        .map(|g| g.exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)?.canonical()
}

/// `I : J`, intersecting the colons by each generator of `J`.
pub fn colon(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    if ideal.ring() != by.ring() {
        return Err(Error::RingMismatch);
    }
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let c = colon_poly(ideal, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c)?.canonical()?,
        });
    }
    Ok(acc.expect("nonzero ideal has a generator"))
}

/// `I : J^∞` by iterated colons, with the least `N` such that
/// `I : J^N = I : J^(N+1)`.
pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<(Ideal, usize)> {
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut current = ideal.canonical()?;
    let mut exponent = 0;
    loop {
        let next = colon(&current, by)?;
        if next.same_ideal(&current)? {
            return Ok((current, exponent));
        }
        current = next;
        exponent += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, parse_ring};

    fn ideal(ring: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|g| parse_poly(g, ring).unwrap()).collect()).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.same_ideal(b).unwrap()
    }

    #[test]
    fn intersections() {
        let r = parse_ring("Q[x,y]").unwrap();
        assert!(same(&intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap(), &ideal(&r, &["x*y"])));
        let i = ideal(&r, &["x^2", "x*y+y^2"]);
        assert!(same(&intersect(&i, &i).unwrap(), &i));

        let r4 = parse_ring("F32003[x1,x2,x3,y]").unwrap();
        let meet = intersect(&ideal(&r4, &["x1", "x2", "x3"]), &ideal(&r4, &["y"])).unwrap();
        let expected = ideal(&r4, &["x1*y", "x2*y", "x3*y"]);
        assert!(meet.contains_ideal(&expected).unwrap());
        assert!(expected.contains_ideal(&meet).unwrap());
    }

    #[test]
    fn colons() {
        let r = parse_ring("Q[x,y]").unwrap();
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(same(&colon(&i, &Ideal::unit(&r)).unwrap(), &i));
        let c = colon(&i, &ideal(&r, &["x"])).unwrap();
        assert!(same(&c, &ideal(&r, &["x", "y"])));
        assert_eq!(colon(&i, &Ideal::zero(&r)).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn colon_by_maximal_ideal_is_maximal() {
        // (x,y) : (x,y,z) in k[x,y,z]: f*z in (x,y) forces f in (x,y).
        let r = parse_ring("Q[x,y,z]").unwrap();
        let q = ideal(&r, &["x", "y"]);
        let c = colon(&q, &Ideal::maximal(&r)).unwrap();
        assert!(same(&c, &q));
        // soundness: (q:m)*m ⊆ q and q ⊆ q:m
        assert!(q.contains_ideal(&c.product(&Ideal::maximal(&r)).unwrap()).unwrap());
        assert!(c.contains_ideal(&q).unwrap());
    }

    #[test]
    fn saturations() {
        let r = parse_ring("Q[x]").unwrap();
        let (s, _) = saturate(&ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap();
        assert!(s.is_unit().unwrap());

        let r3 = parse_ring("Q[x,y,z]").unwrap();
        let j = ideal(&r3, &["x^3", "x^2*y", "x^2*z", "z^2"]);
        let (s, n) = saturate(&j, &Ideal::maximal(&r3)).unwrap();
        assert!(same(&s, &ideal(&r3, &["x^2", "z^2"])));
        assert_eq!(n, 1);

        let (s, n) = saturate(&j, &Ideal::unit(&r3)).unwrap();
        assert!(same(&s, &j));
        assert_eq!(n, 0);
    }

    #[test]
    fn eliminations() {
        let r = parse_ring("Q[x,y]").unwrap();
        assert!(eliminate(&ideal(&r, &["x-y"]), &[1]).unwrap().is_zero());

        let r3 = parse_ring("Q[x,y,z]").unwrap();
        let e = eliminate(&ideal(&r3, &["x-y^2", "y-z"]), &[0, 2]).unwrap();
        // Substituting y = z: x - z^2 vanishes on the parametrization.
        assert!(same(&e, &ideal(&r3, &["x-z^2"])));

        let i = ideal(&r3, &["x*y-z", "y^2"]);
        assert!(same(&eliminate(&i, &[0, 1, 2]).unwrap(), &i));
        assert!(eliminate(&i, &[]).is_err());
    }
}
