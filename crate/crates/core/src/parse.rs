//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! polynomial := sign? term (('+' | '-') term)*
//! term       := coefficient ('*' factor)* | factor ('*' factor)*
//! coefficient:= INT ('/' INT)?
//! factor     := 'x' INT ('^' INT)?
//! ```
//!
//! Whitespace between tokens is ignored. Variables are `x1 ... xn`; `x0`
//! is rejected. Like terms are combined, so `x1 - x1` parses to the zero
//! polynomial (callers that need a nonzero input check
//! [`Polynomial::is_zero`]).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Polynomial};

pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::EmptyAmbient);
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
    };
    p.polynomial()
}

/// Parses a single monomial with coefficient 1, e.g. `x1^2*x3`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let f = parse_polynomial(text, n)?;
    f.as_monomial()
        .cloned()
        .ok_or_else(|| Error::NotAMonomial(text.trim().to_string()))
}

/// Parses a comma-separated list of monomials, optionally wrapped in
/// parentheses: `(x1^2, x1*x2)`.
pub fn parse_monomial_ideal(text: &str, n: usize) -> Result<MonomialIdeal> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() || inner.trim() == "0" {
        return MonomialIdeal::zero(n);
    }
    let gens = inner
        .split(',')
        .map(|part| parse_monomial(part, n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(n, gens)
}

/// Parses `a1,a2,...,ak` into positive integers.
pub fn parse_weight_entries(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u32>()
                .map_err(|_| Error::WeightShape(format!("`{part}` is not a non-negative integer")))
        })
        .collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n)?;
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c)?;
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(other) => {
                    return self.error(format!(
                        "expected `+`, `-` or end of input, found `{}`",
                        other as char
                    ))
                }
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut exps = vec![0u32; self.n];
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coefficient()?;
                if !self.eat(b'*') {
                    return Ok((Monomial::new(exps)?, c));
                }
                c
            }
            Some(b'x') => BigRational::one(),
            Some(other) => {
                return self.error(format!("expected a term, found `{}`", other as char))
            }
            None => return self.error("expected a term, found end of input"),
        };
        loop {
            let (var, e) = self.factor()?;
            exps[var - 1] = exps[var - 1].checked_add(e).ok_or_else(|| Error::Parse {
                position: self.pos,
                message: "exponent overflow".to_string(),
            })?;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::new(exps)?, coefficient))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let start = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                self.pos = start;
                return self.error("zero denominator");
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        if !self.eat(b'x') {
            return match self.peek() {
                Some(c) => self.error(format!("expected a variable `xI`, found `{}`", c as char)),
                None => self.error("expected a variable `xI`, found end of input"),
            };
        }
        // the index must follow `x` directly
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return self.error("expected a variable index after `x`");
        }
        let index = self.small_integer()? as usize;
        if index == 0 || index > self.n {
            return Err(Error::VariableOutOfRange { index, n: self.n });
        }
        let e = if self.eat(b'^') {
            let start = self.pos;
            let e = self.small_integer()?;
            if e == 0 {
                self.pos = start;
                return self.error("exponents must be at least 1");
            }
            e
        } else {
            1
        };
        Ok((index, e))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        Ok(self.digits()?.parse().expect("ascii digits"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let s = self.digits()?;
        match s.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.error("integer too large")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn example_monomial() {
        let f = parse_polynomial("x1^5*x2^4*x3", 3).unwrap();
        assert_eq!(f.as_monomial().unwrap().exponents(), &[5, 4, 1]);
    }

    #[test]
    fn zero_signals() {
        assert!(parse_polynomial("0", 2).unwrap().is_zero());
        assert!(parse_polynomial("x1 - x1", 2).unwrap().is_zero());
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_polynomial("3/2*x1 - x2^2", 2).unwrap();
        assert_eq!(f.len(), 2);
        let x1 = Monomial::new(vec![1, 0]).unwrap();
        let x2sq = Monomial::new(vec![0, 2]).unwrap();
        assert_eq!(f.coefficient(&x1), q(3, 2));
        assert_eq!(f.coefficient(&x2sq), q(-1, 1));
    }

    #[test]
    fn combines_like_terms() {
        let f = parse_polynomial("x1*x2 + 2*x2*x1 - 1/3", 2).unwrap();
        assert_eq!(f.to_string(), "-1/3 + 3*x1*x2");
    }

    #[test]
    fn index_errors() {
        assert_eq!(
            parse_polynomial("x0", 2),
            Err(Error::VariableOutOfRange { index: 0, n: 2 })
        );
        assert_eq!(
            parse_polynomial("x1 + x3", 2),
            Err(Error::VariableOutOfRange { index: 3, n: 2 })
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x1 + * x2", 2) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x1^0", 1),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0*x1", 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_polynomial("", 1), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_polynomial("x 1", 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("x1 x2", 2),
            Err(Error::Parse { position: 3, .. })
        ));
    }

    #[test]
    fn ideal_lists() {
        let i = parse_monomial_ideal("(x1^2, x1*x2, x1^3)", 2).unwrap();
        assert_eq!(i.to_string(), "(x1^2, x1*x2)");
        assert!(parse_monomial_ideal("()", 2).unwrap().is_zero());
        assert!(matches!(
            parse_monomial_ideal("x1 + x2", 2),
            Err(Error::NotAMonomial(_))
        ));
    }

    fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
        let term = (proptest::collection::vec(0u32..5, n), -20i64..20, 1i64..6);
        proptest::collection::vec(term, 0..6).prop_map(move |terms| {
            Polynomial::from_terms(
                n,
                terms
                    .into_iter()
                    .map(|(e, a, b)| (Monomial::new(e).unwrap(), q(a, b))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(f in (1usize..=6).prop_flat_map(polynomial)) {
            let text = f.to_string();
            prop_assert_eq!(parse_polynomial(&text, f.ambient_dim()).unwrap(), f);
        }
    }
}
