//! Text grammar for polynomials: `x1^2*x2 - 3/2*x3`.

use num_bigint::BigInt;

use crate::arith::FieldSpec;
use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::polynomial::Polynomial;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }
}

/// Largest variable index mentioned in `s`, for inferring the ring size.
pub fn max_variable_index(s: &str) -> usize {
    let b = s.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = s[start..j].parse::<usize>() {
                best = best.max(v);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

/// Parses a polynomial in `nvars` variables over `field`.
pub fn parse_polynomial(s: &str, field: FieldSpec, nvars: usize) -> Result<Polynomial> {
    let mut lx = Lexer {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut out = Polynomial::zero(field, nvars);
    let mut first = true;
    loop {
        let negative = if lx.eat(b'-') {
            true
        } else if lx.eat(b'+') || first {
            false
        } else if lx.peek().is_none() {
            break;
        } else {
            return lx.err("expected '+' or '-'");
        };
        first = false;
        let mut coeff = field.one();
        let mut mono = Monomial::one(nvars);
        loop {
            match lx.peek() {
                Some(b'x') => {
                    lx.pos += 1;
                    let at = lx.pos;
                    let idx: usize = lx.digits()?.parse().map_err(|_| Error::Parse {
                        pos: at,
                        msg: "bad variable index".into(),
                    })?;
                    if idx == 0 || idx > nvars {
                        return Err(Error::IndexOutOfRange { index: idx, nvars });
                    }
                    let mut e: u16 = 1;
                    if lx.eat(b'^') {
                        let at = lx.pos;
                        e = lx.digits()?.parse().map_err(|_| Error::Parse {
                            pos: at,
                            msg: "bad exponent".into(),
                        })?;
                    }
                    let cur = mono.exponent(idx - 1);
                    mono.set_exponent(idx - 1, cur + e);
                }
                Some(c) if c.is_ascii_digit() => {
                    let num: BigInt = lx.digits()?.parse().expect("digits");
                    let den: BigInt = if lx.eat(b'/') {
                        lx.digits()?.parse().expect("digits")
                    } else {
                        BigInt::from(1)
                    };
                    let c = field.from_ratio(&num, &den).map_err(|e| Error::Parse {
                        pos: lx.pos,
                        msg: e.to_string(),
                    })?;
                    coeff = &coeff * &c;
                }
                _ => return lx.err("expected a coefficient or a variable"),
            }
            if !lx.eat(b'*') {
                break;
            }
        }
        if negative {
            coeff = -&coeff;
        }
        out.add_term(mono, coeff);
    }
    if first {
        return lx.err("empty polynomial");
    }
    Ok(out)
}

/// Parses a comma- or newline-separated list of polynomials.
pub fn parse_polynomial_list(s: &str, field: FieldSpec, nvars: usize) -> Result<Vec<Polynomial>> {
    s.split([',', '\n', ';'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_polynomial(t, field, nvars))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn roundtrip_example() {
        let f = parse_polynomial("x1^2*x2 - 3/2*x3", Q, 3).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x1^2*x2 - 3/2*x3");
    }

    #[test]
    fn extensions() {
        let f = parse_polynomial("-x1 + 2 + x1*x1", Q, 1).unwrap();
        assert_eq!(f.to_string(), "x1^2 - x1 + 2");
        assert_eq!(parse_polynomial("0", Q, 2).unwrap().to_string(), "0");
        let f2 = FieldSpec::prime(3).unwrap();
        assert_eq!(parse_polynomial("-x1", f2, 1).unwrap().to_string(), "2*x1");
        assert_eq!(parse_polynomial("1/2*x1", f2, 1).unwrap().to_string(), "2*x1");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_polynomial("x4", Q, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_polynomial("x1 +", Q, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("", Q, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x1 x2", Q, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("1/0", Q, 3), Err(Error::Parse { .. })));
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(parse_polynomial("1/2", f2, 1).is_err());
    }

    #[test]
    fn list_and_max_index() {
        let v = parse_polynomial_list("x1 - x2, x2*x3", Q, 3).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(max_variable_index("x1 - x12^2 + x3"), 12);
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(
            terms in prop::collection::vec((prop::collection::vec(0u16..=3, 3), -9i64..=9, 1i64..=4), 0..6),
            pi in 0usize..3,
        ) {
            let field = [Q, FieldSpec::PrimeField(2), FieldSpec::PrimeField(5)][pi];
            let mut f = Polynomial::zero(field, 3);
            for (e, n, d) in terms {
                if let Ok(c) = field.from_ratio(&BigInt::from(n), &BigInt::from(d)) {
                    f.add_term(Monomial::from_exponents(e), c);
                }
            }
            let back = parse_polynomial(&f.to_string(), field, 3).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
