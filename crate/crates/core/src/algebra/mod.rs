//! Coefficient fields, monomials, polynomials and their text syntax.

pub mod field;
pub(crate) mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use field::{Field, FieldElement};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_generators, parse_ideal_spec, parse_poly, parse_ring, IdealSpec};
pub use poly::{Polynomial, Term};
pub use ring::RingSpec;
