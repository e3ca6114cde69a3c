//! Plain-text polynomials and ideal files.
//!
//! An ideal file looks like
//!
//! ```text
//! ring: a6, a4, a2, a0, am2, am4, am6
//! weights: 6, 4, 2, 0, -2, -4, -6
//! gens:
//! a6*am2 - 4*a4*a0 + 3*a2^2
//! ```
//!
//! `#` starts a comment line, `weights:` is optional, coefficients are
//! written `p/q`, `^` raises to a nonnegative integer power and `*` is
//! mandatory between factors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, RingContext};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, line: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Num(digits.parse().expect("ascii digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::parse(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a RingContext,
    line: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, msg)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n)) => {
                    let k: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(k));
                }
                _ => return Err(self.err("expected integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Num(n)) => {
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) if !d.is_zero() => Ok(Polynomial::constant(self.ctx, Rational::new(n, d))),
                        _ => Err(self.err("expected nonzero integer denominator")),
                    }
                } else {
                    Ok(Polynomial::constant(self.ctx, Rational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => match self.ctx.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.ctx, i)),
                None => Err(self.err(format!("unknown variable `{name}`"))),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.err("missing `)`")),
                }
            }
            Some(Token::Minus) => Ok(-self.atom()?),
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial_at(ctx: &RingContext, s: &str, line: usize) -> Result<Polynomial> {
    let toks = tokenize(s, line)?;
    if toks.is_empty() {
        return Err(Error::parse(line, "empty polynomial"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ctx,
        line,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err(format!("trailing input after position {}", p.pos)));
    }
    Ok(out)
}

impl Polynomial {
    pub fn parse(ctx: &RingContext, s: &str) -> Result<Polynomial> {
        parse_polynomial_at(ctx, s, 1)
    }
}

/// A ring together with a list of generators, as read from an ideal file.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealText {
    pub ring: RingContext,
    pub gens: Vec<Polynomial>,
}

impl IdealText {
    pub fn parse(text: &str) -> Result<IdealText> {
        let mut names: Option<Vec<String>> = None;
        let mut weights: Option<Vec<i64>> = None;
        let mut ring: Option<RingContext> = None;
        let mut in_gens = false;
        let mut gens = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if in_gens {
                let ctx = ring.as_ref().expect("ring set before gens");
                for piece in line.split(';') {
                    let piece = piece.trim().trim_end_matches(',');
                    if !piece.is_empty() {
                        gens.push(parse_polynomial_at(ctx, piece, line_no)?);
                    }
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("ring:") {
                names = Some(
                    rest.split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect(),
                );
            } else if let Some(rest) = line.strip_prefix("weights:") {
                let ws: std::result::Result<Vec<i64>, _> = rest.split(',').map(|s| s.trim().parse::<i64>()).collect();
                weights = Some(ws.map_err(|e| Error::parse(line_no, format!("bad weight: {e}")))?);
            } else if let Some(rest) = line.strip_prefix("gens:") {
                let names = names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line_no, "`gens:` before `ring:`"))?;
                let ctx = match &weights {
                    Some(w) => RingContext::with_weights(names, w),
                    None => RingContext::new(names),
                }
                .map_err(|e| Error::parse(line_no, e.to_string()))?;
                ring = Some(ctx);
                in_gens = true;
                let rest = rest.trim();
                if !rest.is_empty() {
                    for piece in rest.split(';') {
                        let piece = piece.trim().trim_end_matches(',');
                        if !piece.is_empty() {
                            gens.push(parse_polynomial_at(ring.as_ref().unwrap(), piece, line_no)?);
                        }
                    }
                }
            } else {
                return Err(Error::parse(line_no, format!("unrecognised line `{line}`")));
            }
        }
        let ring = match ring {
            Some(r) => r,
            None => {
                let names = names.ok_or_else(|| Error::parse(0, "missing `ring:` header"))?;
                match weights {
                    Some(w) => RingContext::with_weights(&names, &w)?,
                    None => RingContext::new(&names)?,
                }
            }
        };
        Ok(IdealText { ring, gens })
    }

    /// Serialises back to the file format, one generator per line.
    pub fn render(&self) -> String {
        render_ideal(&self.ring, &self.gens)
    }
}

pub fn render_ideal(ring: &RingContext, gens: &[Polynomial]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", ring.names().join(", "));
    if let Some(w) = ring.weights() {
        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "weights: {}", ws.join(", "));
    }
    out.push_str("gens:\n");
    for g in gens {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// Parses a comma-free list of generator strings in `ctx`.
pub fn parse_generators(ctx: &RingContext, gens: &[&str]) -> Result<Vec<Polynomial>> {
    gens.iter()
        .enumerate()
        .map(|(i, s)| parse_polynomial_at(ctx, s, i + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn orbit() -> RingContext {
        RingContext::with_weights(
            &["a6", "a4", "a2", "a0", "am2", "am4", "am6"],
            &[6, 4, 2, 0, -2, -4, -6],
        )
        .unwrap()
    }

    #[test]
    fn parses_quadric_with_scaled_square() {
        let r = orbit();
        let p = Polynomial::parse(&r, "a6*am2 - 4*a4*a0 + 3*a2^2").unwrap();
        assert_eq!(p.num_terms(), 3);
        let sq = Polynomial::parse(&r, "a2^2").unwrap();
        let three = Polynomial::parse(&r, "3").unwrap();
        assert!(p
            .terms()
            .any(|(m, c)| Some(m) == sq.leading_monomial(&MonomialOrder::GrevLex)
                && *c == *three.terms().next().unwrap().1));
    }

    #[test]
    fn rational_coefficients_and_parens() {
        let r = orbit();
        let p = Polynomial::parse(&r, "27/16*a4 - (a2 - 1/2)*2").unwrap();
        assert_eq!(p.to_string(), "27/16*a4 - 2*a2 + 1");
    }

    #[test]
    fn rejects_implicit_multiplication_and_unknowns() {
        let r = orbit();
        assert!(Polynomial::parse(&r, "3a2").is_err());
        assert!(Polynomial::parse(&r, "a2 a4").is_err());
        assert!(Polynomial::parse(&r, "x").is_err());
        assert!(Polynomial::parse(&r, "1/0").is_err());
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "# X5\nring: a6, a4, a2, a0, am2, am4, am6\nweights: 6, 4, 2, 0, -2, -4, -6\ngens:\na6*am2 - 4*a4*a0 + 3*a2^2\n\na2*am6 - 4*a0*am4 + 3*am2^2\n";
        let parsed = IdealText::parse(text).unwrap();
        assert_eq!(parsed.gens.len(), 2);
        assert_eq!(parsed.ring, orbit());
        let again = IdealText::parse(&parsed.render()).unwrap();
        assert_eq!(again, parsed);
    }

    #[test]
    fn ideal_file_errors_carry_line_numbers() {
        let text = "ring: x, y\ngens:\nx + \n";
        match IdealText::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
