//! Two families of non-Cohen–Macaulay test rings.

use std::sync::Arc;

use crate::algebra::{parse_generators, Field, MonomialOrder, Polynomial, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::{intersect, Ideal};

/// `k[x1..xd, y]` with `J = (x1, …, xd) ∩ (y)`: a `d`-dimensional space
/// meeting a line in a point. Depth 1, dimension `d`.
pub fn space_and_line(d: usize, field: Field) -> Result<(Arc<RingSpec>, Ideal)> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    let mut vars: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    vars.push("y".into());
    let ring = RingSpec::new(field, vars, MonomialOrder::Grevlex)?;
    let xs = Ideal::new(&ring, (0..d).map(|i| Polynomial::var(&ring, i)).collect())?;
    let y = Ideal::new(&ring, vec![Polynomial::var(&ring, d)])?;
    let j = intersect(&xs, &y)?;
    Ok((ring, j))
}

/// `k[x, y, z]` with `J = x^a (x, y, z) + (z^b)`: a line with an embedded
/// point. Dimension 1, depth 0.
pub fn line_with_embedded_point(a: u32, b: u32, field: Field) -> Result<(Arc<RingSpec>, Ideal)> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("exponents must be positive".into()));
    }
    let ring = RingSpec::with_vars(field, &["x", "y", "z"], MonomialOrder::Grevlex)?;
    let gens = parse_generators(&format!("x^{}, x^{a}*y, x^{a}*z, z^{b}", a + 1), &ring)?;
    let j = Ideal::new(&ring, gens)?;
    Ok((ring, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::krull_dim;

    #[test]
    fn generators_and_dimensions() {
        let (r, j) = space_and_line(3, Field::Prime(32003)).unwrap();
        let expected = Ideal::new(&r, parse_generators("x1*y, x2*y, x3*y", &r).unwrap()).unwrap();
        assert!(j.same_ideal(&expected).unwrap());
        assert_eq!(krull_dim(&j).unwrap(), 3);

        let (r, j) = line_with_embedded_point(2, 3, Field::Rational).unwrap();
        let expected = Ideal::new(&r, parse_generators("x^3, x^2*y, x^2*z, z^3", &r).unwrap()).unwrap();
        assert!(j.same_ideal(&expected).unwrap());
        assert_eq!(krull_dim(&j).unwrap(), 1);

        assert!(space_and_line(0, Field::Rational).is_err());
        assert!(line_with_embedded_point(0, 2, Field::Rational).is_err());
    }
}
