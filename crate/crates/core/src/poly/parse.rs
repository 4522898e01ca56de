//! Text grammar for forms.
//!
//! ```text
//! form   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer ('/' integer)? | var ('^' integer)?
//! var    := 'x' digits | 'y' digits
//! ```
//!
//! Whitespace is ignored between tokens. `x` variables belong to `T`, `y`
//! variables to `S`; mixing them, or using the other ring's letter, is an
//! error.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Form, Monomial, Ring};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

struct ParsedTerm {
    coefficient: BigRational,
    /// `(variable index, exponent, offset in the input)`.
    powers: Vec<(usize, u32, usize)>,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    letter: char,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn form(&mut self) -> Result<Vec<ParsedTerm>> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(err(self.pos, "empty polynomial"));
        }
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let mut term = self.term()?;
            if negative {
                term.coefficient = -term.coefficient;
            }
            terms.push(term);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return Err(err(self.pos, format!("unexpected `{c}`, expected `+`, `-` or `*`"))),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<ParsedTerm> {
        let mut term = ParsedTerm { coefficient: BigRational::one(), powers: Vec::new() };
        loop {
            self.factor(&mut term)?;
            if !self.eat('*') {
                return Ok(term);
            }
        }
    }

    fn factor(&mut self, term: &mut ParsedTerm) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = parse_int(self.digits().unwrap());
                let den = if self.eat('/') {
                    self.skip_ws();
                    let at = self.pos;
                    let d = parse_int(self.digits().ok_or_else(|| err(at, "expected a denominator"))?);
                    if d.is_zero() {
                        return Err(err(at, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                term.coefficient *= BigRational::new(num, den);
                Ok(())
            }
            Some(c) if c == 'x' || c == 'y' => {
                if c != self.letter {
                    return Err(err(start, format!("variable `{c}` does not belong to this ring (expected `{}`)", self.letter)));
                }
                self.pos += 1;
                let index = self
                    .digits()
                    .ok_or_else(|| err(self.pos, "expected a variable index"))?
                    .parse::<usize>()
                    .map_err(|_| err(start, "variable index too large"))?;
                let exp = if self.eat('^') {
                    self.skip_ws();
                    let at = self.pos;
                    self.digits()
                        .ok_or_else(|| err(at, "expected an exponent"))?
                        .parse::<u32>()
                        .map_err(|_| err(at, "exponent too large"))?
                } else {
                    1
                };
                term.powers.push((index, exp, start));
                Ok(())
            }
            Some(c) => Err(err(start, format!("unexpected `{c}`"))),
            None => Err(err(start, "unexpected end of input")),
        }
    }
}

fn parse_int(digits: &str) -> BigInt {
    BigInt::from_str(digits).expect("ascii digits")
}

fn parse_terms(text: &str, ring: Ring) -> Result<Vec<ParsedTerm>> {
    Parser { text, pos: 0, letter: ring.variable_letter() }.form()
}

/// Parses `text` as a form in `nvars` variables over `field`.
pub fn parse_form(text: &str, nvars: usize, field: FieldSpec, ring: Ring) -> Result<Form> {
    let parsed = parse_terms(text, ring)?;
    let mut terms = Vec::with_capacity(parsed.len());
    for t in parsed {
        let mut exps = alloc::vec![0u32; nvars];
        for (index, e, _) in &t.powers {
            let slot = exps.get_mut(*index).ok_or(Error::VariableOutOfRange { index: *index, nvars })?;
            *slot = slot.checked_add(*e).ok_or(Error::Overflow("exponent"))?;
        }
        terms.push((Monomial::new(exps), field.from_rational(&t.coefficient)?));
    }
    Form::from_terms(nvars, field, ring, terms)
}

/// Largest variable index mentioned in `text`, or `None` for a constant.
pub fn max_variable_index(text: &str, ring: Ring) -> Result<Option<usize>> {
    let parsed = parse_terms(text, ring)?;
    Ok(parsed.iter().flat_map(|t| t.powers.iter().map(|p| p.0)).max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;
    use alloc::string::ToString;
    use alloc::vec;

    const QQ: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn parses_monomial() {
        let f = parse_form("x0*x1^2*x2^3", 3, QQ, Ring::Primal).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coefficient(&Monomial::new(vec![1, 2, 3])), QQ.one());
    }

    #[test]
    fn parses_signs_and_fractions() {
        let f = parse_form("x0^2 - x1^2", 2, QQ, Ring::Primal).unwrap();
        assert_eq!(f.coefficient(&Monomial::new(vec![2, 0])), QQ.one());
        assert_eq!(f.coefficient(&Monomial::new(vec![0, 2])), QQ.from_i64(-1));
        let g = parse_form(" - 3/6 * x0 *x1 + 2 x0^1", 2, QQ, Ring::Primal);
        assert!(g.is_err(), "implicit multiplication is not part of the grammar");
        let g = parse_form(" - 3/6 * x0 *x1 + 2*x0^1*x1", 2, QQ, Ring::Primal).unwrap();
        assert_eq!(g.to_string(), "3/2*x0*x1");
    }

    #[test]
    fn repeated_variables_multiply() {
        let f = parse_form("x0*x0^2*2*3", 1, QQ, Ring::Primal).unwrap();
        assert_eq!(f.to_string(), "6*x0^3");
    }

    #[test]
    fn prime_field_coefficients() {
        let f7 = FieldSpec::PrimeField(7);
        let f = parse_form("1/2*x0 - x1", 2, f7, Ring::Primal).unwrap();
        assert_eq!(f.to_string(), "4*x0 + 6*x1");
        assert_eq!(parse_form("1/7*x0", 1, f7, Ring::Primal), Err(Error::DivisionByZero));
        assert!(parse_form("7*x0", 1, f7, Ring::Primal).unwrap().is_zero());
    }

    #[test]
    fn inhomogeneous_flagged() {
        let f = parse_form("x0 + x1^2", 2, QQ, Ring::Primal).unwrap();
        assert_eq!(f.degree(), None);
        assert_eq!(f.homogeneity(), super::super::Homogeneity::Inhomogeneous);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_form("x0 + x3", 2, QQ, Ring::Primal),
            Err(Error::VariableOutOfRange { index: 3, nvars: 2 })
        );
        assert!(matches!(parse_form("x0 + ", 2, QQ, Ring::Primal), Err(Error::Parse { position: 5, .. })));
        assert!(matches!(parse_form("x0 ? x1", 2, QQ, Ring::Primal), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_form("y0", 2, QQ, Ring::Primal), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_form("", 2, QQ, Ring::Primal), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("x", 2, QQ, Ring::Primal), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse_form("x0^", 2, QQ, Ring::Primal), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_form("1/0*x0", 2, QQ, Ring::Primal), Err(Error::Parse { .. })));
    }

    #[test]
    fn dual_ring_and_constants() {
        let g = parse_form("y0^2 - 1/3*y1*y2", 3, QQ, Ring::Dual).unwrap();
        assert_eq!(g.to_string(), "y0^2 - 1/3*y1*y2");
        assert_eq!(parse_form("0", 2, QQ, Ring::Primal).unwrap().to_string(), "0");
        assert_eq!(parse_form("-5", 2, QQ, Ring::Primal).unwrap().to_string(), "-5");
        let one = parse_form("1", 2, QQ, Ring::Primal).unwrap();
        assert_eq!(one.coefficient(&Monomial::one(2)), Scalar::Rational(BigRational::one()));
    }

    #[test]
    fn infers_variable_count() {
        assert_eq!(max_variable_index("x0*x2", Ring::Primal).unwrap(), Some(2));
        assert_eq!(max_variable_index("3", Ring::Primal).unwrap(), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn form(field: FieldSpec) -> impl Strategy<Value = Form> {
            let term = (prop::collection::vec(0u32..4, 3), -20i64..20, 1i64..5);
            prop::collection::vec(term, 0..6).prop_map(move |terms| {
                let terms = terms.into_iter().map(|(e, n, d)| {
                    let c = field.from_rational(&BigRational::new(n.into(), d.into())).unwrap();
                    (Monomial::new(e), c)
                });
                Form::from_terms(3, field, Ring::Primal, terms).unwrap()
            })
        }

        proptest! {
            #[test]
            fn print_parse_round_trip_q(f in form(QQ)) {
                let text = f.to_string();
                prop_assert_eq!(parse_form(&text, 3, QQ, Ring::Primal).unwrap(), f);
            }

            #[test]
            fn print_parse_round_trip_gf(f in form(FieldSpec::PrimeField(101))) {
                let text = f.to_string();
                prop_assert_eq!(parse_form(&text, 3, FieldSpec::PrimeField(101), Ring::Primal).unwrap(), f);
            }
        }
    }
}
