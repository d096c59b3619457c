//! Text syntax for rings, polynomials and ideals.
//!
//! ```text
//! ring  := ("Q" | "F" prime) "[" ident ("," ident)* "]" [ "grevlex" | "lex" ]
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := ("-" | "+") unary | power
//! power := atom ("^" integer)?
//! atom  := integer ("/" integer)? | ident | "(" expr ")"
//! ```
//!
//! `/` is only accepted between two integer literals, forming a rational
//! constant. Ideals are comma-separated generator lists; the intersection
//! form `(f, g) & (h)` is also accepted.

use std::sync::Arc;

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::MonomialOrder;
use super::poly::Polynomial;
use super::ring::RingSpec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Amp,
}

fn err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if !c.is_ascii() {
            return Err(err(i, "non-ASCII character"));
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'&' => Tok::Amp,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => return Err(err(i, format!("unexpected character `{}`", c as char))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: Option<&'a Arc<RingSpec>>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ring: Option<&'a Arc<RingSpec>>) -> Result<Parser<'a>> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.len(),
            ring,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let at = self.offset();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            _ => Err(err(at, format!("expected {what}"))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn ring(&self) -> &'a Arc<RingSpec> {
        self.ring.expect("polynomial parsing needs a ring")
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = acc.mul(&self.unary()?)?;
        }
        if let Some(Tok::Slash) = self.peek() {
            return Err(err(self.offset(), "division is not supported"));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(at, "exponent too large"))?;
                    if e > u16::MAX as u32 {
                        return Err(err(at, "exponent too large"));
                    }
                    return Ok(base.pow(e));
                }
                _ => return Err(err(at, "malformed exponent: expected a nonnegative integer")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let ring = self.ring();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(err(dat, "zero denominator"));
                            }
                            let c = ring.field().from_ratio(&n, &d).map_err(|e| err(dat, e.to_string()))?;
                            Ok(Polynomial::constant(ring, c))
                        }
                        _ => Err(err(dat, "division is not supported")),
                    }
                } else {
                    Ok(Polynomial::constant(ring, ring.field().from_bigint(&n)))
                }
            }
            Some(Tok::Ident(name)) => match ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(ring, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let p = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(p)
            }
            _ => Err(err(at, "expected a number, variable or `(`")),
        }
    }
}

/// Parses a ring such as `Q[x,y,z] grevlex` or `F32003[x,y]`.
pub fn parse_ring(text: &str) -> Result<Arc<RingSpec>> {
    let mut p = Parser::new(text, None)?;
    let at = p.offset();
    let field = match p.bump() {
        Some(Tok::Ident(head)) if head == "Q" => Field::Rational,
        Some(Tok::Ident(head)) if head == "F" => {
            let pat = p.offset();
            match p.bump() {
                Some(Tok::Int(n)) => {
                    let n: u64 = n.try_into().map_err(|_| err(pat, "prime too large"))?;
                    Field::prime(n)?
                }
                _ => return Err(err(pat, "expected a prime after `F`")),
            }
        }
        Some(Tok::Ident(head)) if head.starts_with('F') && head[1..].chars().all(|c| c.is_ascii_digit()) && head.len() > 1 => {
            // `F32003` tokenizes as a single identifier.
            let n: u64 = head[1..].parse().map_err(|_| err(at + 1, "prime too large"))?;
            Field::prime(n)?
        }
        _ => return Err(err(at, "expected `Q` or `F<prime>`")),
    };
    p.expect(Tok::LBracket, "`[`")?;
    let mut vars = Vec::new();
    loop {
        let vat = p.offset();
        match p.bump() {
            Some(Tok::Ident(v)) => vars.push(v),
            _ => return Err(err(vat, "expected a variable name")),
        }
        let sat = p.offset();
        match p.bump() {
            Some(Tok::Comma) => continue,
            Some(Tok::RBracket) => break,
            _ => return Err(err(sat, "expected `,` or `]`")),
        }
    }
    let oat = p.offset();
    let order = match p.bump() {
        None => MonomialOrder::Grevlex,
        Some(Tok::Ident(o)) if o == "grevlex" => MonomialOrder::Grevlex,
        Some(Tok::Ident(o)) if o == "lex" => MonomialOrder::Lex,
        _ => return Err(err(oat, "expected `grevlex` or `lex`")),
    };
    if !p.at_end() {
        return Err(err(p.offset(), "trailing input"));
    }
    RingSpec::new(field, vars, order)
}

/// Parses a polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    let mut p = Parser::new(text, Some(ring))?;
    if p.at_end() {
        return Err(err(0, "empty polynomial"));
    }
    let f = p.expr()?;
    if !p.at_end() {
        return Err(err(p.offset(), "trailing input"));
    }
    Ok(f)
}

/// Parses a comma-separated generator list.
pub fn parse_generators(text: &str, ring: &Arc<RingSpec>) -> Result<Vec<Polynomial>> {
    let mut p = Parser::new(text, Some(ring))?;
    generator_list(&mut p, None)
}

fn generator_list(p: &mut Parser<'_>, close: Option<Tok>) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    if p.at_end() || (close.is_some() && p.peek() == close.as_ref()) {
        return Ok(gens);
    }
    loop {
        gens.push(p.expr()?);
        match p.peek() {
            Some(Tok::Comma) => {
                p.bump();
            }
            None if close.is_none() => return Ok(gens),
            Some(t) if Some(t) == close.as_ref() => return Ok(gens),
            _ => return Err(err(p.offset(), "expected `,`")),
        }
    }
}

/// An ideal given textually: either a generator list or an intersection of
/// parenthesized generator lists.
#[derive(Clone, Debug)]
pub enum IdealSpec {
    Generators(Vec<Polynomial>),
    Intersection(Vec<Vec<Polynomial>>),
}

pub fn parse_ideal_spec(text: &str, ring: &Arc<RingSpec>) -> Result<IdealSpec> {
    let mut p = Parser::new(text, Some(ring))?;
    if !p.toks.iter().any(|(_, t)| *t == Tok::Amp) {
        return Ok(IdealSpec::Generators(generator_list(&mut p, None)?));
    }
    let mut parts = Vec::new();
    loop {
        p.expect(Tok::LParen, "`(` opening an intersection operand")?;
        parts.push(generator_list(&mut p, Some(Tok::RParen))?);
        p.expect(Tok::RParen, "`)`")?;
        match p.bump() {
            Some(Tok::Amp) => continue,
            None => break,
            _ => return Err(err(p.offset(), "expected `&`")),
        }
    }
    Ok(IdealSpec::Intersection(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::Monomial;
    use proptest::prelude::*;

    #[test]
    fn ring_examples() {
        let r = parse_ring("Q[x,y,z] grevlex").unwrap();
        assert_eq!(r.field(), Field::Rational);
        assert_eq!(r.vars(), ["x", "y", "z"]);
        assert_eq!(r.order(), MonomialOrder::Grevlex);

        let r = parse_ring("F32003[x1,x2,x3,y]").unwrap();
        assert_eq!(r.field(), Field::Prime(32003));
        assert_eq!(r.width(), 4);
        assert_eq!(r.order(), MonomialOrder::Grevlex);

        assert_eq!(parse_ring("Q[x,x]"), Err(Error::DuplicateVariable("x".into())));
        assert_eq!(parse_ring("F4[x]"), Err(Error::NotPrime(4)));
        assert_eq!(parse_ring("Q[x] lex").unwrap().order(), MonomialOrder::Lex);
        assert!(matches!(parse_ring("Q[x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ring("R[x]"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn poly_examples() {
        let r = parse_ring("Q[x,y,z]").unwrap();
        let f = parse_poly("x^2*y - 3/2*z", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.coefficient(&Monomial::new(&[2, 1, 0])).unwrap().is_one());
        assert_eq!(
            f.coefficient(&Monomial::var(2)).unwrap(),
            &Field::Rational.from_ratio(&(-3).into(), &2.into()).unwrap()
        );
        assert!(parse_poly("x - x", &r).unwrap().is_zero());
        let sq = parse_poly("(x+y)^2", &r).unwrap();
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient(&Monomial::new(&[1, 1, 0])).unwrap(), &Field::Rational.from_i64(2));
    }

    #[test]
    fn poly_errors() {
        let r = parse_ring("Q[x,y]").unwrap();
        assert_eq!(parse_poly("x + w", &r), Err(Error::UnknownVariable("w".into())));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x^-1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/2", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_poly("1/x", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x é", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let r = parse_ring("Q[x]").unwrap();
        assert_eq!(parse_poly("-x^2", &r).unwrap(), parse_poly("-(x^2)", &r).unwrap());
        assert_eq!(parse_poly("2*-x", &r).unwrap(), parse_poly("-2*x", &r).unwrap());
    }

    #[test]
    fn ideal_specs() {
        let r = parse_ring("Q[x1,x2,x3,y]").unwrap();
        match parse_ideal_spec("(x1,x2,x3) & (y)", &r).unwrap() {
            IdealSpec::Intersection(parts) => {
                assert_eq!(parts.len(), 2);
                assert_eq!(parts[0].len(), 3);
            }
            other => panic!("{other:?}"),
        }
        match parse_ideal_spec("x1*y, x2*y", &r).unwrap() {
            IdealSpec::Generators(g) => assert_eq!(g.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    fn arb_poly_text() -> impl Strategy<Value = String> {
        let term = (-5i32..=5, 0u8..3, 0u8..3, 0u8..3)
            .prop_map(|(c, a, b, d)| format!("{c}*x^{a}*y^{b}*z^{d}"));
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            if ts.is_empty() {
                "0".to_string()
            } else {
                ts.join(" + ")
            }
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(text in arb_poly_text(), prime in proptest::bool::ANY) {
            let ring = if prime { parse_ring("F7[x,y,z]").unwrap() } else { parse_ring("Q[x,y,z]").unwrap() };
            let f = parse_poly(&text, &ring).unwrap();
            let printed = f.to_string();
            let g = parse_poly(&printed, &ring).unwrap();
            prop_assert_eq!(&f, &g);
            prop_assert_eq!(printed, g.to_string());
        }
    }
}
