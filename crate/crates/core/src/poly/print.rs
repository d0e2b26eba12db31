//! Text rendering of polynomials in the input grammar
//! (`coeff ['*' 'r'] ['*' monom]`, terms joined by `+`/`-`).

use std::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rat, Field, Rat, GQF, QF};

/// Coefficients that can be written in the grammar. `parts` splits an element
/// into `a + b·r` with `r = √k`; fields outside the grammar return `None` and
/// are printed as a parenthesized value instead.
pub trait Coeff: Field {
    fn parts(&self) -> Option<(Rat, Rat)>;
}

impl Coeff for Rat {
    fn parts(&self) -> Option<(Rat, Rat)> {
        Some((self.clone(), Rat::zero()))
    }
}

impl Coeff for QF {
    fn parts(&self) -> Option<(Rat, Rat)> {
        Some((self.a().clone(), self.b().clone()))
    }
}

impl Coeff for GQF {
    fn parts(&self) -> Option<(Rat, Rat)> {
        if self.is_real() {
            self.re.parts()
        } else {
            None
        }
    }
}

fn monomial_text(vars: &[(&str, u32)]) -> String {
    vars.iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// One signed term `q[*r][*m]`.
fn term_text(q: &Rat, with_r: bool, mono: &str) -> String {
    let mut factors: Vec<String> = Vec::new();
    let unit = q.abs().is_one();
    if !unit || (!with_r && mono.is_empty()) {
        factors.push(fmt_rat(&q.abs()));
    }
    if with_r {
        factors.push("r".into());
    }
    if !mono.is_empty() {
        factors.push(mono.to_string());
    }
    let body = factors.join("*");
    if q.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// Writes `terms` (already in output order) joined with signs; writes `0`
/// when there are none.
pub fn write_terms<'a, F, I>(out: &mut String, terms: I) -> fmt::Result
where
    F: Coeff,
    I: IntoIterator<Item = (F, Vec<(&'a str, u32)>)>,
{
    let mut pieces: Vec<String> = Vec::new();
    for (c, vars) in terms {
        let mono = monomial_text(&vars);
        match c.parts() {
            Some((a, b)) => {
                if !a.is_zero() {
                    pieces.push(term_text(&a, false, &mono));
                }
                if !b.is_zero() {
                    pieces.push(term_text(&b, true, &mono));
                }
            }
            None if mono.is_empty() => pieces.push(format!("({c})")),
            None => pieces.push(format!("({c})*{mono}")),
        }
    }
    if pieces.is_empty() {
        return out.write_str("0");
    }
    for (i, p) in pieces.iter().enumerate() {
        if i > 0 && !p.starts_with('-') {
            out.write_char('+')?;
        }
        out.write_str(p)?;
    }
    Ok(())
}
