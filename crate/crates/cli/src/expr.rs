//! Polynomial expressions: `x^2+y^2-1`, `1/2*x - 3*y^2`, `2*r*x*y` with `r`
//! standing for `√k` of the ambient field.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | 'r' | var ['^' nat]
//! ```
//!
//! The printer in the library only emits `coeff ['*' 'r'] ['*' monom]`
//! terms, a subset of this grammar.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use ratdist::arith::{Rat, SqfInt, QF};
use ratdist::poly::{BPoly, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn fail<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(char),
    Plus,
    Minus,
    Star,
    Caret,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = text[start..i].parse().expect("digits");
                let mut denom = BigInt::one();
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let ds = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ds == i {
                        return fail(slash + 1, "expected a denominator");
                    }
                    denom = text[ds..i].parse().expect("digits");
                    if denom.is_zero() {
                        return fail(ds, "zero denominator");
                    }
                }
                out.push((start, Tok::Num(Rat::new(numer, denom))));
            }
            c if c.is_ascii_alphabetic() => {
                out.push((i, Tok::Ident(c)));
                i += 1;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return fail(i, format!("unexpected character {ch:?}"));
            }
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// Parses over `ℚ(√k)`; `vars` names the two variables (`x` and `y`).
pub fn parse_poly_vars(text: &str, k: SqfInt, vars: [char; 2]) -> Result<BPoly<QF>, ParseError> {
    let toks = tokenize(text)?;
    let mut pos = 0;
    let mut out = BPoly::zero(k);
    let mut first = true;
    loop {
        let (off, tok) = &toks[pos];
        let negative = match tok {
            Tok::Plus => {
                pos += 1;
                false
            }
            Tok::Minus => {
                pos += 1;
                true
            }
            Tok::End if first => return fail(*off, "empty expression"),
            _ if first => false,
            _ => return fail(*off, "expected '+' or '-'"),
        };
        first = false;
        let mut coeff = QF::one(k);
        let (mut ex, mut ey) = (0u32, 0u32);
        loop {
            let (off, tok) = &toks[pos];
            match tok {
                Tok::Num(q) => {
                    coeff = coeff * &QF::from_rat(k, q.clone());
                    pos += 1;
                }
                Tok::Ident('r') => {
                    coeff = coeff * &QF::sqrt_k(k);
                    pos += 1;
                }
                Tok::Ident(v) if vars.contains(v) => {
                    pos += 1;
                    let mut e = 1u32;
                    if toks[pos].1 == Tok::Caret {
                        pos += 1;
                        match &toks[pos] {
                            (_, Tok::Num(n)) if n.is_integer() => {
                                e = n.to_integer().try_into().map_err(|_| ParseError {
                                    offset: toks[pos].0,
                                    message: "exponent too large".into(),
                                })?;
                                pos += 1;
                            }
                            (o, _) => return fail(*o, "expected a natural-number exponent"),
                        }
                    }
                    if *v == vars[0] {
                        ex += e;
                    } else {
                        ey += e;
                    }
                }
                Tok::Ident(v) => return fail(*off, format!("unknown variable '{v}'")),
                _ => return fail(*off, "expected a number, 'r' or a variable"),
            }
            if toks[pos].1 == Tok::Star {
                pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        out = &out + &BPoly::monomial(coeff, ex, ey);
        if toks[pos].1 == Tok::End {
            return Ok(out);
        }
    }
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_poly(text: &str, k: SqfInt) -> Result<BPoly<QF>, ParseError> {
    parse_poly_vars(text, k, ['x', 'y'])
}

/// Parses a univariate polynomial in `var`.
pub fn parse_upoly(text: &str, k: SqfInt, var: char) -> Result<UPoly<QF>, ParseError> {
    let other = if var == 'y' { 'x' } else { 'y' };
    let p = parse_poly_vars(text, k, [var, other])?;
    if p.degree_y().is_some_and(|d| d > 0) {
        return fail(0, format!("only the variable '{var}' may appear"));
    }
    let d = p.degree_x().unwrap_or(0) as usize;
    let coeffs = (0..=d).map(|i| p.coeff(i as u32, 0)).collect();
    Ok(UPoly::new(k, coeffs))
}

/// Parses a field element such as `3/2`, `-r` or `1+2*r`.
pub fn parse_qf(text: &str, k: SqfInt) -> Result<QF, ParseError> {
    let p = parse_poly(text, k)?;
    match p.total_degree() {
        None => Ok(QF::zero(k)),
        Some(0) => Ok(p.coeff(0, 0)),
        Some(_) => fail(0, "expected a constant"),
    }
}
