//! Ramification of the cone cover `z² = x² + y²` over a curve through the
//! origin, read off from the isotropic slices `f(x, ±ix)`.

use crate::arith::{Field, GQF, QF};
use crate::curveops::slopes::isotropic_slices;
use crate::curveops::Curve;
use crate::error::{invalid, Error, Result};
use crate::poly::{simple_root_count, BPoly, UPoly};

/// The two slices and how many nonzero simple roots each contributes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeSlices {
    /// `f(x, ix)`.
    pub plus: UPoly<GQF>,
    /// `f(x, −ix)`.
    pub minus: UPoly<GQF>,
    pub plus_count: usize,
    pub minus_count: usize,
}

impl ConeSlices {
    pub fn total(&self) -> usize {
        self.plus_count + self.minus_count
    }
}

/// Simple roots other than 0.
fn nonzero_simple_roots(p: &UPoly<GQF>) -> Result<usize> {
    let v = p.x_adic_valuation();
    simple_root_count(&p.shift_down(v))
}

/// Both isotropic slices of `f` (which must vanish at the origin) with their
/// nonzero simple-root counts.
pub fn cone_slices(f: &BPoly<QF>) -> Result<ConeSlices> {
    if !f.coeff(0, 0).is_zero_elem() {
        return Err(invalid("the cone apex must lie on the curve"));
    }
    let (plus, minus) = isotropic_slices(f);
    if plus.is_zero() || minus.is_zero() {
        return Err(Error::IsotropicComponent);
    }
    let plus_count = nonzero_simple_roots(&plus)?;
    let minus_count = nonzero_simple_roots(&minus)?;
    Ok(ConeSlices { plus, minus, plus_count, minus_count })
}

/// Number of points `(x₀, ±ix₀)`, `x₀ ≠ 0`, where `x₀` is a simple root of
/// the slice: each is a transversal intersection with an isotropic line and
/// contributes one to the ramification of the cone cover.
pub fn cone_ramification_count(c: &Curve) -> Result<usize> {
    Ok(cone_slices(c.f())?.total())
}

/// Simple nonzero roots of `p` other than `excluded`.
///
/// Used for the places over the circular points after an inversion: a root
/// shared with the isotropic lines through the second apex makes the
/// distance product vanish to even order there, so it is not counted.
pub fn simple_roots_excluding(p: &UPoly<GQF>, excluded: &GQF) -> Result<usize> {
    let v = p.x_adic_valuation();
    let q = p.shift_down(v);
    let n = simple_root_count(&q)?;
    if excluded.is_zero() || !q.eval(excluded).is_zero() {
        return Ok(n);
    }
    // The excluded root counts only if it was simple.
    let simple = !q.derivative().eval(excluded).is_zero();
    Ok(if simple { n - 1 } else { n })
}
