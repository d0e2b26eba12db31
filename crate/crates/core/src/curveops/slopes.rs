//! Lines through the origin: slices `f(x, a·x)`, the polynomial of bad slopes,
//! and rotations taking a point of the set onto the positive `x`-axis.

use crate::arith::{rational_sqrt, Field, Rat, SqfInt, GQF, QF};
use crate::curveops::Curve;
use crate::error::{invalid, Error, Result};
use crate::geom::{dist2, NPt};
use crate::poly::{sylvester_resultant, BPoly, UPoly};

/// Whether the origin is a smooth point of `C` (nonzero linear part).
pub fn origin_nonsingular(c: &Curve) -> Result<bool> {
    if !c.is_zero_at_origin() {
        return Err(invalid(format!("the origin is not on {c}")));
    }
    Ok(!c.f().homogeneous_part(1).is_zero())
}

/// A rotation about the origin, `(X, Y) ↦ (cX − sY, sX + cY)`, with
/// `c² + s² = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rotation {
    pub cos: QF,
    pub sin: QF,
}

impl Rotation {
    pub fn identity(k: SqfInt) -> Self {
        Rotation { cos: QF::one(k), sin: QF::zero(k) }
    }

    /// Image of a point under the rotation.
    pub fn apply(&self, x: &QF, y: &QF) -> (QF, QF) {
        (
            self.cos.clone() * x - &(self.sin.clone() * y),
            self.sin.clone() * x + &(self.cos.clone() * y),
        )
    }

    /// Image of a point under the inverse rotation.
    pub fn apply_inverse(&self, x: &QF, y: &QF) -> (QF, QF) {
        (
            self.cos.clone() * x + &(self.sin.clone() * y),
            self.cos.clone() * y - &(self.sin.clone() * x),
        )
    }

    /// The curve `g` with `g(X, Y) = f(rotation(X, Y))`; `g` vanishes at
    /// `P` exactly when `f` vanishes at the rotated `P`.
    pub fn pull_back(&self, f: &BPoly<QF>) -> Result<BPoly<QF>> {
        let k = *f.ctx();
        let x = BPoly::x(k);
        let y = BPoly::y(k);
        let xe = &x.scale(&self.cos) - &y.scale(&self.sin);
        let ye = &x.scale(&self.sin) + &y.scale(&self.cos);
        f.substitute(&xe, &ye)
    }
}

/// Rotates `C` about the origin so that `p` lands on `(|p|, 0)`.
///
/// Returns the rotated curve and the rotation `R` with `R(|p|, 0) = p`; the
/// rotated curve is `f ∘ R`.
pub fn rotate_to_axis(c: &Curve, p: &NPt) -> Result<(Curve, Rotation)> {
    let k = c.k();
    let d2 = dist2(p, &NPt::origin(), k);
    if d2 == Rat::from_integer(0.into()) {
        return Err(invalid("cannot rotate the origin onto the axis"));
    }
    let rho = rational_sqrt(&d2)?.ok_or_else(|| invalid(format!("|p|² = {d2} is not a rational square")))?;
    let rot = Rotation {
        cos: QF::from_rat(k, &p.r1 / &rho),
        sin: QF::new(k, Rat::from_integer(0.into()), &p.r2 / &rho),
    };
    Ok((Curve::new(rot.pull_back(c.f())?)?, rot))
}

/// Coefficients of `f(x, a·x)` as polynomials in `a`: `cₙ(a) = Σ_{i+j=n} f_ij aʲ`.
fn slice_coeffs<F: Field>(f: &BPoly<F>) -> Vec<UPoly<F>> {
    let ctx = f.ctx().clone();
    let d = f.total_degree().unwrap_or(0) as usize;
    let mut rows: Vec<Vec<F>> = vec![Vec::new(); d + 1];
    for ((i, j), c) in f.terms() {
        let row = &mut rows[(i + j) as usize];
        if row.len() <= *j as usize {
            row.resize(*j as usize + 1, F::zero_in(&ctx));
        }
        row[*j as usize] = c.clone();
    }
    rows.into_iter().map(|r| UPoly::new(ctx.clone(), r)).collect()
}

/// `p_a(x) = f(x, a·x)`.
pub fn line_slice(c: &Curve, a: &QF) -> UPoly<QF> {
    slice_at(c.f(), a)
}

/// `f(x, a·x)` for any coefficient field.
pub fn slice_at<F: Field>(f: &BPoly<F>, a: &F) -> UPoly<F> {
    let ctx = f.ctx().clone();
    UPoly::new(ctx, slice_coeffs(f).iter().map(|c| c.eval(a)).collect())
}

/// The isotropic slices `f(x, ix)` and `f(x, −ix)` over `ℚ(√k)(i)`.
pub fn isotropic_slices(f: &BPoly<QF>) -> (UPoly<GQF>, UPoly<GQF>) {
    let k = *f.ctx();
    let g = f.map(k, |c| GQF::from_real(c.clone()));
    let i = GQF::i(k);
    (slice_at(&g, &i), slice_at(&g, &(-i.clone())))
}

/// The leading coefficient of `p_a` as a polynomial in `a`; its roots are
/// the slopes where the slice drops degree (asymptotic directions).
pub fn slice_leading_coefficient(c: &Curve) -> UPoly<QF> {
    slice_coeffs(c.f()).pop().expect("nonzero curve")
}

/// `Disc_x(p_a)` as a polynomial in `a`: every slope where `p_a` has a
/// multiple root is among its roots. Slopes where `p_a` drops degree are
/// given separately by [`slice_leading_coefficient`].
pub fn bad_slope_discriminant(c: &Curve) -> Result<UPoly<QF>> {
    let d = c.degree() as usize;
    if d < 2 {
        return Err(invalid("bad slopes need a curve of degree at least 2"));
    }
    let k = c.k();
    // A polynomial in x alone (content in y) means vertical lines x = const;
    // every slope meets them the same way and the slice family degenerates.
    let rows = c.f().coeffs_in_y();
    let mut content: Option<UPoly<QF>> = None;
    for r in rows.iter().filter(|r| !r.is_zero()) {
        content = Some(match content {
            None => r.monic(),
            Some(g) => crate::poly::poly_gcd(&g, r)?,
        });
    }
    if content.is_some_and(|g| !g.is_constant()) {
        return Err(Error::DegenerateCurve(format!("{c} contains vertical line components")));
    }
    let coeffs = slice_coeffs(c.f());
    let deriv: Vec<UPoly<QF>> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, cn)| cn.scale(&QF::from_rat(k, Rat::from_integer(n.into()))))
        .collect();
    let res = sylvester_resultant(&coeffs, &deriv);
    let lc = coeffs.last().expect("degree d").clone();
    let disc = res.exact_divide(&lc)?;
    let disc = if (d * (d - 1) / 2) % 2 == 1 { -&disc } else { disc };
    if disc.is_zero() {
        return Err(Error::DegenerateCurve(format!(
            "the slope discriminant of {c} vanishes identically"
        )));
    }
    Ok(disc)
}
