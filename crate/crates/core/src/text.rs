//! Text grammar shared by every front end.
//!
//! `w` stands for `sqrt(d)` and `x` for the indeterminate. Expressions are
//! built from decimal integers, `w`, `x`, parentheses, `+ - * /` and `^` with
//! a nonnegative integer exponent; division is only by nonzero constants.
//! Examples: `5+2*w`, `(1-w)/2`, `2*x^2+2*x+3`, `(1+w)+2*x`.
//! Ideals are written `<g1; g2; ...>`.

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideals::FracIdeal;
use crate::kelem::KElem;
use crate::kpoly::KPoly;
use crate::qint::{QuadInt, RingCfg};
use crate::rpoly::RPoly;

const MAX_EXPONENT: u32 = 64;

pub(crate) fn format_coords(a: i64, b: i64) -> String {
    format_big_coords(&BigInt::from(a), &BigInt::from(b))
}

pub(crate) fn format_big_coords(a: &BigInt, b: &BigInt) -> String {
    let wpart = |b: &BigInt| -> String {
        if b == &BigInt::from(1) {
            "w".to_string()
        } else if b == &BigInt::from(-1) {
            "-w".to_string()
        } else {
            format!("{b}*w")
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (_, true) => a.to_string(),
        (true, false) => wpart(b),
        (false, false) => {
            let tail = wpart(&b.abs());
            let sign = if b.is_negative() { '-' } else { '+' };
            format!("{a}{sign}{tail}")
        }
    }
}

/// A `+` or `-` outside parentheses, ignoring a leading sign.
fn has_top_level_sum(c: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in c.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Joins coefficient strings (lowest degree first) into polynomial syntax,
/// highest degree first.
pub(crate) fn format_poly_terms(coeffs: &[String]) -> String {
    let nonzero: Vec<(usize, &String)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .collect();
    if nonzero.is_empty() {
        return "0".to_string();
    }
    let multi = nonzero.len() > 1;
    let mut out = String::new();
    for (i, c) in nonzero.into_iter().rev() {
        let term = if i == 0 {
            if multi && has_top_level_sum(c) {
                format!("({c})")
            } else {
                c.clone()
            }
        } else {
            let mono = if i == 1 {
                "x".to_string()
            } else {
                format!("x^{i}")
            };
            match c.as_str() {
                "1" => mono,
                "-1" => format!("-{mono}"),
                c if has_top_level_sum(c) => format!("({c})*{mono}"),
                c => format!("{c}*{mono}"),
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    W,
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("ascii digits")));
            }
            'w' => out.push(Tok::W),
            'x' => out.push(Tok::X),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} at offset {i} in {s:?}"
                )))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    d: i64,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<KPoly> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<KPoly> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Star => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let den = self.unary()?;
                    if !den.is_constant() || den.is_zero() {
                        return Err(self.err("division by a zero or nonconstant expression"));
                    }
                    let inv = den.leading().inv().expect("nonzero constant");
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<KPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<KPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => {
                    let n = n.clone();
                    self.pos += 1;
                    u32::try_from(n)
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or_else(|| self.err("exponent out of range"))?
                }
                _ => return Err(self.err("expected an integer exponent")),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<KPoly> {
        let d = self.d;
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => {
                let q = num::BigRational::from_integer(n);
                Ok(KPoly::constant(KElem::rational(q, d)))
            }
            Tok::W => Ok(KPoly::constant(KElem::sqrt_d(d))),
            Tok::X => Ok(KPoly::x(d)),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("unexpected token"))
            }
        }
    }
}

/// Parses a polynomial over `K`.
pub fn parse_kpoly(s: &str, d: i64) -> Result<KPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        d,
        src: s,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a constant of `K`, e.g. `(1-w)/2`.
pub fn parse_kelem(s: &str, d: i64) -> Result<KElem> {
    let p = parse_kpoly(s, d)?;
    if !p.is_constant() {
        return Err(Error::Parse(format!("{s:?} is not a constant")));
    }
    Ok(p.coeff(0))
}

/// Parses an element of `R = Z[w]`.
pub fn parse_quad(s: &str, d: i64) -> Result<QuadInt> {
    let k = parse_kelem(s, d)?;
    k.to_quad()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not an element of Z[w]")))
}

/// Parses a polynomial with coefficients in `R`.
pub fn parse_rpoly(s: &str, d: i64) -> Result<RPoly> {
    let p = parse_kpoly(s, d)?;
    RPoly::from_kpoly(&p)
        .ok_or_else(|| Error::Parse(format!("{s:?} has coefficients outside Z[w]")))
}

/// Parses `<g1; g2; ...>` into a fractional ideal.
pub fn parse_ideal(s: &str, cfg: &RingCfg) -> Result<FracIdeal> {
    let t = s.trim();
    let inner = t
        .strip_prefix('<')
        .and_then(|r| r.strip_suffix('>'))
        .ok_or_else(|| Error::Parse(format!("ideal {s:?} must look like <g1; g2; ...>")))?;
    let gens = inner
        .split(';')
        .map(|g| parse_kelem(g, cfg.d()))
        .collect::<Result<Vec<_>>>()?;
    FracIdeal::from_gens(cfg, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kelem::rat_frac;

    #[test]
    fn elements() {
        assert_eq!(parse_quad("5+2*w", -14).unwrap(), QuadInt::new(5, 2, -14));
        assert_eq!(parse_quad("5-2*w", -14).unwrap(), QuadInt::new(5, -2, -14));
        assert_eq!(parse_quad("-w", -5).unwrap(), QuadInt::new(0, -1, -5));
        assert_eq!(parse_quad("w*w", -5).unwrap(), QuadInt::new(-5, 0, -5));
        assert!(matches!(parse_quad("(1+w)/2", -5), Err(Error::Parse(_))));
        let k = parse_kelem("(1-w)/2", -5).unwrap();
        assert_eq!(k, KElem::new(rat_frac(1, 2), rat_frac(-1, 2), -5));
    }

    #[test]
    fn polynomials() {
        let p = parse_kpoly("2*x^2+2*x+3", -5).unwrap();
        assert_eq!(p, KPoly::from_ints(&[3, 2, 2], -5));
        let p = parse_kpoly("(1+w)+2*x", -5).unwrap();
        assert_eq!(p.coeff(0), KElem::new(rat_frac(1, 1), rat_frac(1, 1), -5));
        assert_eq!(parse_kpoly("81*x", -14).unwrap().to_string(), "81*x");
        assert_eq!(
            parse_kpoly("1-x^2/4", -5).unwrap().to_string(),
            "-1/4*x^2+1"
        );
    }

    #[test]
    fn coefficient_grouping() {
        let p = parse_kpoly("x-(1-w)/2", -5).unwrap();
        assert_eq!(p.to_string(), "x+(-1+w)/2");
        assert_eq!(
            parse_kpoly("(5+2*w)*x+5-2*w", -14).unwrap().to_string(),
            "(5+2*w)*x+(5-2*w)"
        );
        assert_eq!(
            parse_kpoly("(1-w)/12*x", -5).unwrap().to_string(),
            "(1-w)/12*x"
        );
        assert_eq!(parse_kpoly("x^2-w*x", -5).unwrap().to_string(), "x^2-w*x");
    }

    #[test]
    fn errors() {
        assert!(parse_kpoly("", -5).is_err());
        assert!(parse_kpoly("2**x", -5).is_err());
        assert!(parse_kpoly("1/x", -5).is_err());
        assert!(parse_kpoly("1/0", -5).is_err());
        assert!(parse_kpoly("x^", -5).is_err());
        assert!(parse_kpoly("(x", -5).is_err());
        assert!(parse_kpoly("y", -5).is_err());
    }

    #[test]
    fn display_roundtrip_samples() {
        for s in ["w*x^3-(1-w)/2*x+7", "x^2+x+1", "-x", "(2+3*w)/5", "2*w*x-w"] {
            let p = parse_kpoly(s, -14).unwrap();
            assert_eq!(parse_kpoly(&p.to_string(), -14).unwrap(), p, "{s}");
        }
    }

    #[test]
    fn ideals() {
        let cfg = RingCfg::new(-5).unwrap();
        let i = parse_ideal("<2; 1+w>", &cfg).unwrap();
        assert_eq!(i.to_string(), "<2; 1+w>");
        assert!(parse_ideal("2; 1+w", &cfg).is_err());
    }
}
