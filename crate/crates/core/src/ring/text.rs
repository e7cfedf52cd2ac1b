//! Text grammar for polynomials.
//!
//! Variables are `x1..xn` and `y1..ym`, coefficients are integers or `a/b`
//! fractions, `^` raises to a power and `*` is an optional product sign:
//! `y2*x2 - y1*x3`, `3/4x1^2y2 + 2`.

use super::monomial::BiMonomial;
use super::poly::BiPoly;
use super::RingSignature;
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Var { is_x: bool, index: usize },
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            col: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Tok> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        match c {
            b'^' => {
                self.pos += 1;
                Ok(Tok::Caret)
            }
            b'*' => {
                self.pos += 1;
                Ok(Tok::Star)
            }
            b'/' => {
                self.pos += 1;
                Ok(Tok::Slash)
            }
            b'+' => {
                self.pos += 1;
                Ok(Tok::Plus)
            }
            b'-' => {
                self.pos += 1;
                Ok(Tok::Minus)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                text.parse::<i64>()
                    .map(Tok::Int)
                    .map_err(|_| self.err("integer literal out of range"))
            }
            b'x' | b'y' => {
                let is_x = c == b'x';
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.err("variable needs an index, e.g. x1"));
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let index: usize = text
                    .parse()
                    .map_err(|_| self.err("variable index out of range"))?;
                Ok(Tok::Var { is_x, index })
            }
            other => Err(self.err(format!("unexpected character '{}'", other as char))),
        }
    }

    fn peek(&mut self) -> Result<Tok> {
        let save = self.pos;
        let t = self.next()?;
        self.pos = save;
        Ok(t)
    }
}

/// Parse one polynomial in the given ring.
pub fn parse_poly(ring: &RingSignature, src: &str) -> Result<BiPoly> {
    let mut lx = Lexer::new(src);
    let mut terms: Vec<(crate::ring::Scalar, BiMonomial)> = Vec::new();
    let mut sign = 1i64;
    let mut tok = lx.next()?;
    if tok == Tok::End {
        return Err(lx.err("empty polynomial"));
    }
    loop {
        match tok {
            Tok::Plus => {
                sign = 1;
                tok = lx.next()?;
                continue;
            }
            Tok::Minus => {
                sign = -sign;
                tok = lx.next()?;
                continue;
            }
            _ => {}
        }
        // one term: a run of factors
        let mut coeff = ring.field.from_i64(sign);
        let mut mono = ring.one_monomial();
        let mut saw_factor = false;
        loop {
            match tok {
                Tok::Int(k) => {
                    let mut c = ring.field.from_i64(k);
                    if lx.peek()? == Tok::Slash {
                        lx.next()?;
                        match lx.next()? {
                            Tok::Int(d) => {
                                c = ring.field.from_ratio(k, d).map_err(|_| {
                                    lx.err("bad fraction")
                                })?;
                            }
                            _ => return Err(lx.err("expected denominator after '/'")),
                        }
                    }
                    coeff = coeff.mul(&c);
                    saw_factor = true;
                }
                Tok::Var { is_x, index } => {
                    let limit = if is_x { ring.n } else { ring.m };
                    if index == 0 || index > limit {
                        return Err(lx.err(format!(
                            "variable {}{} outside the ring {}",
                            if is_x { "x" } else { "y" },
                            index,
                            ring
                        )));
                    }
                    let mut exp: u32 = 1;
                    if lx.peek()? == Tok::Caret {
                        lx.next()?;
                        match lx.next()? {
                            Tok::Int(e) if e >= 0 => exp = e as u32,
                            _ => return Err(lx.err("expected nonnegative exponent after '^'")),
                        }
                    }
                    if is_x {
                        mono.u[index - 1] += exp;
                    } else {
                        mono.v[index - 1] += exp;
                    }
                    saw_factor = true;
                }
                Tok::Star => {
                    // optional separator
                }
                _ => break,
            }
            tok = lx.next()?;
        }
        if !saw_factor {
            return Err(lx.err("expected a term"));
        }
        terms.push((coeff, mono));
        sign = 1;
        match tok {
            Tok::End => break,
            Tok::Plus | Tok::Minus => continue,
            _ => return Err(lx.err("expected '+', '-' or end of input")),
        }
    }
    Ok(BiPoly::from_terms(ring, terms))
}

pub fn parse_polys(ring: &RingSignature, srcs: &[String]) -> Result<Vec<BiPoly>> {
    srcs.iter()
        .enumerate()
        .map(|(k, s)| {
            parse_poly(ring, s).map_err(|e| match e {
                Error::Parse { col, msg, .. } => Error::Parse {
                    line: k + 1,
                    col,
                    msg,
                },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;

    fn ring(n: usize, m: usize) -> RingSignature {
        RingSignature::new(n, m, FieldSpec::Q).unwrap()
    }

    #[test]
    fn parses_the_grammar_example() {
        let r = ring(3, 3);
        let p = parse_poly(&r, "y2*x2 - y1*x3").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.bidegree().unwrap(), (1, 1));
    }

    #[test]
    fn round_trips_through_display() {
        let r = ring(2, 3);
        for src in [
            "x1^2*y2 - 3/4*x2*y1^2 + 7",
            "-x1 + x2",
            "1/2*y3^4",
            "x1*x2*y1*y2*y3",
        ] {
            let p = parse_poly(&r, src).unwrap();
            let q = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, q, "{src}");
        }
    }

    #[test]
    fn juxtaposition_multiplies() {
        let r = ring(2, 1);
        let a = parse_poly(&r, "2x1^2y1").unwrap();
        let b = parse_poly(&r, "2*x1^2*y1").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reports_positions() {
        let r = ring(2, 1);
        match parse_poly(&r, "x1 + x9") {
            Err(Error::Parse { col, .. }) => assert!(col >= 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly(&r, "").is_err());
        assert!(parse_poly(&r, "x1 ^ -2").is_err());
    }
}
