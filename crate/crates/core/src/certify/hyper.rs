//! Hyperelliptic models `z² = rhs(t)` and the Riemann–Hurwitz bound.

use crate::arith::QF;
use crate::error::{invalid, Error, Result};
use crate::poly::{poly_gcd, UPoly};

/// `z² = rhs(t)`. The genus is recorded only when `rhs` is squarefree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperModel {
    pub rhs: UPoly<QF>,
    pub squarefree: bool,
    pub genus: Option<u32>,
}

impl HyperModel {
    /// Checks squarefreeness and records the genus `⌊(deg − 1)/2⌋`.
    pub fn new(rhs: UPoly<QF>) -> Result<Self> {
        let genus = hyperelliptic_genus(&rhs)?;
        Ok(HyperModel { rhs, squarefree: true, genus: Some(genus) })
    }
}

/// `⌊(deg − 1)/2⌋` for a squarefree right-hand side.
pub fn hyperelliptic_genus(rhs: &UPoly<QF>) -> Result<u32> {
    let deg = rhs.degree().ok_or_else(|| invalid("zero right-hand side"))?;
    if deg == 0 {
        return Err(invalid("constant right-hand side"));
    }
    let g = poly_gcd(rhs, &rhs.derivative())?;
    if !g.is_constant() {
        return Err(Error::MultipleRoot { gcd: g.to_string() });
    }
    Ok(((deg - 1) / 2) as u32)
}

/// Lower bound from `2g₂ − 2 ≥ deg π · (2g₁ − 2) + Σ(e_P − 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RamificationReport {
    pub g1_lower: u32,
    pub deg_pi: u32,
    pub ram_count: u32,
    pub g2_lower: u32,
}

/// The least genus `g₂ ≥ 0` compatible with the inequality; any cover with
/// that much ramification has at least this genus.
pub fn rh_lower_bound(g1_lower: u32, deg_pi: u32, ram_count: u32) -> Result<RamificationReport> {
    if deg_pi < 2 {
        return Err(invalid("a cover needs degree at least 2"));
    }
    let rhs = deg_pi as i64 * (2 * g1_lower as i64 - 2) + ram_count as i64;
    // 2g₂ − 2 ≥ rhs  ⇔  g₂ ≥ (rhs + 2)/2
    let g2 = (rhs + 2 + 1).div_euclid(2).max(0) as u32;
    Ok(RamificationReport { g1_lower, deg_pi, ram_count, g2_lower: g2 })
}

impl RamificationReport {
    /// Recomputes the bound from the stored inputs.
    pub fn recheck(&self) -> bool {
        rh_lower_bound(self.g1_lower, self.deg_pi, self.ram_count).is_ok_and(|r| r == *self)
    }
}

/// Product of factors with the first offending pair named on failure.
pub fn squarefree_product(factors: &[(String, UPoly<QF>)]) -> Result<UPoly<QF>> {
    for (name, f) in factors {
        let g = poly_gcd(f, &f.derivative())?;
        if !g.is_constant() {
            return Err(Error::CommonRoot { first: name.clone(), second: name.clone() });
        }
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if !poly_gcd(&factors[i].1, &factors[j].1)?.is_constant() {
                return Err(Error::CommonRoot { first: factors[i].0.clone(), second: factors[j].0.clone() });
            }
        }
    }
    let k = *factors.first().ok_or_else(|| invalid("empty product"))?.1.ctx();
    Ok(factors.iter().fold(UPoly::one(k), |acc, (_, f)| &acc * f))
}
