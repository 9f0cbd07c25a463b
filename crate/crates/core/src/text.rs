//! Parser for the text grammar used on the command line and in data files.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'] power)*        juxtaposition multiplies
//! power  := atom ['^' integer]
//! atom   := integer | z<i> | t<i> | Q[..] | P[..] | '(' expr ')'
//! ```
//!
//! Basis atoms take a comma separated strict partition, e.g. `Q[2,1]`; `Q[]` is 1.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::gamma::{Flavor, GammaElement};
use crate::partition::StrictPartition;
use crate::poly::{Var, ZPoly};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Basis(Flavor, StrictPartition),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |from: usize| {
        let mut j = from;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::Open,
            b')' => Tok::Close,
            b'0'..=b'9' => {
                let j = digits(i);
                let n = src[i..j].parse().map_err(|_| err(i, "bad integer"))?;
                i = j;
                out.push((start, Tok::Num(n)));
                continue;
            }
            b'Q' | b'P' => {
                let flavor = if c == b'Q' { Flavor::Q } else { Flavor::P };
                if bytes.get(i + 1) != Some(&b'[') {
                    return Err(err(i + 1, "expected '[' after basis letter"));
                }
                let close = src[i..]
                    .find(']')
                    .map(|k| i + k)
                    .ok_or_else(|| err(i, "unclosed '['"))?;
                let body = &src[i + 2..close];
                let parts: Vec<u32> = if body.trim().is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|p| p.trim().parse::<u32>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| err(i + 2, format!("bad partition '{body}'")))?
                };
                let lambda = StrictPartition::new(parts).map_err(|e| err(i + 2, e.to_string()))?;
                i = close + 1;
                out.push((start, Tok::Basis(flavor, lambda)));
                continue;
            }
            b'z' | b't' | b'x' | b'y' => {
                let j = digits(i + 1);
                let v =
                    Var::parse(&src[i..j]).ok_or_else(|| err(i, "expected an indexed variable"))?;
                i = j;
                out.push((start, Tok::Var(v)));
                continue;
            }
            _ => {
                return Err(err(
                    i,
                    format!(
                        "unexpected character '{}'",
                        src[i..].chars().next().unwrap()
                    ),
                ))
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    flavor: Flavor,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<GammaElement> {
        let mut acc = GammaElement::zero(self.flavor);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<GammaElement> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Basis(..) | Tok::Open) => {}
                _ => return Ok(acc),
            }
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
    }

    fn power(&mut self) -> Result<GammaElement> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.here();
        let Some(Tok::Num(e)) = self.peek().cloned() else {
            return Err(err(at, "expected an integer exponent"));
        };
        self.pos += 1;
        let e: u32 = e.try_into().map_err(|_| err(at, "exponent too large"))?;
        let mut acc = GammaElement::one(self.flavor);
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<GammaElement> {
        let at = self.here();
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| err(at, "unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(GammaElement::scalar(self.flavor, ZPoly::constant(n))),
            Tok::Var(v) => Ok(GammaElement::scalar(self.flavor, ZPoly::var(v))),
            Tok::Basis(f, lambda) => {
                if f != self.flavor {
                    return Err(err(at, "Q and P basis elements cannot be mixed"));
                }
                Ok(GammaElement::basis(f, lambda))
            }
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(err(self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Minus => Err(err(
                at,
                "unexpected '-'; wrap negative factors in parentheses",
            )),
            _ => Err(err(at, "expected a number, variable, basis element or '('")),
        }
    }
}

/// Parses an element of the Q or P ring. The flavor is taken from the basis
/// atoms present, else `default`.
pub fn parse_gamma(src: &str, default: Flavor) -> Result<GammaElement> {
    let toks = lex(src)?;
    let flavor = toks
        .iter()
        .find_map(|(_, t)| {
            if let Tok::Basis(f, _) = t {
                Some(*f)
            } else {
                None
            }
        })
        .unwrap_or(default);
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        flavor,
    };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(value)
}

/// Parses a polynomial in `z`, `t`, `x`, `y` with no basis atoms.
pub fn parse_poly(src: &str) -> Result<ZPoly> {
    let g = parse_gamma(src, Flavor::Q)?;
    if g.terms().iter().any(|(l, _)| l.len() > 0) {
        return Err(err(0, "basis elements are not allowed here"));
    }
    Ok(g.scalar_part())
}

impl std::str::FromStr for ZPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<ZPoly> {
        parse_poly(s)
    }
}
