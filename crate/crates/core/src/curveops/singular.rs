//! Singular points: exact location over the curve's field for low degree,
//! and proofs of smoothness over `ℂ` (affine part and line at infinity).

use crate::arith::{Field, Rat, QF};
use crate::curveops::solve::{common_zeros, eliminant};
use crate::curveops::Curve;
use crate::error::{Error, Result};
use crate::poly::{poly_gcd, BPoly, UPoly};

/// Every singular point of `C` with coordinates in the curve's field.
///
/// Irreducible curves of degree ≤ 3 have at most one singular point, which
/// is then fixed by conjugation and therefore lies over the base field.
pub fn find_singular_points(c: &Curve) -> Result<Vec<(QF, QF)>> {
    if c.degree() > 3 {
        return Err(Error::UnsupportedDegree { degree: c.degree() as usize, max: 3 });
    }
    let f = c.f();
    match common_zeros(&[f.clone(), f.partial_x(), f.partial_y()])? {
        Some(mut pts) => {
            pts.sort_by_key(|p| (p.0.to_string(), p.1.to_string()));
            Ok(pts)
        }
        None => Err(Error::DegenerateCurve(format!("{c} has a repeated component"))),
    }
}

/// True when the affine part provably has no singular point over `ℂ`: for
/// some shear `x ← x + λy` the gcd of the eliminants of `f, f_x, f_y` is a
/// nonzero constant.
fn affine_smooth(f: &BPoly<QF>) -> Result<bool> {
    let k = *f.ctx();
    for lam in [0i64, 1, -1, 2, 3, -2, 5] {
        let l = QF::from_rat(k, Rat::from_integer(lam.into()));
        let x = &BPoly::x(k) + &BPoly::y(k).scale(&l);
        let g = f.substitute(&x, &BPoly::y(k))?;
        let polys: Vec<BPoly<QF>> = [g.clone(), g.partial_x(), g.partial_y()]
            .into_iter()
            .filter(|p| !p.is_zero())
            .collect();
        if polys.iter().any(|p| p.total_degree() == Some(0)) {
            return Ok(true);
        }
        if let Some(h) = eliminant(&polys)? {
            if h.is_constant() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A binary form `g(x, y)` restricted to `y = 1`.
fn dehomogenize_y(g: &BPoly<QF>) -> UPoly<QF> {
    let k = *g.ctx();
    let d = g.total_degree().unwrap_or(0);
    let mut cs = vec![QF::zero(k); d as usize + 1];
    for ((i, _), c) in g.terms() {
        cs[*i as usize] = c.clone();
    }
    UPoly::new(k, cs)
}

/// True when no point at infinity of the projective closure is singular.
///
/// At `Z = 0` the partials of the homogenization are `∂ₓf_d`, `∂ᵧf_d` and
/// `f_{d−1}`; a singular point at infinity is a common zero of these three
/// binary forms.
fn smooth_at_infinity(c: &Curve) -> Result<bool> {
    let f = c.f();
    let d = c.degree();
    let top = f.homogeneous_part(d);
    let forms = [top.partial_x(), top.partial_y(), f.homogeneous_part(d - 1)];
    // [1 : 0 : 0]: every form has a zero x^deg coefficient.
    let at_x_axis = forms.iter().all(|g| {
        let deg = g.total_degree().unwrap_or(0);
        g.coeff(deg, 0).is_zero_elem() || g.is_zero()
    });
    if at_x_axis {
        return Ok(false);
    }
    // [x : 1 : 0]
    let mut acc: Option<UPoly<QF>> = None;
    for g in forms.iter().filter(|g| !g.is_zero()) {
        let u = dehomogenize_y(g);
        if u.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => u.monic(),
            Some(a) => poly_gcd(&a, &u)?,
        });
    }
    Ok(acc.is_some_and(|g| g.is_constant()))
}

/// Proves that the projective closure of `C` is smooth over `ℂ`. `false`
/// means "not proven" (for low degree it almost always means singular).
///
/// A smooth plane curve is irreducible: two components would meet, and
/// their intersection would be singular.
pub fn is_projectively_nonsingular(c: &Curve) -> Result<bool> {
    Ok(affine_smooth(c.f())? && smooth_at_infinity(c)?)
}

/// The Hessian determinant of the homogenization, restricted to `Z = 1`.
pub fn hessian(c: &Curve) -> BPoly<QF> {
    let f = c.f();
    let k = c.k();
    let d = c.degree();
    let n = |v: u32| BPoly::constant(QF::from_rat(k, Rat::from_integer(v.into())));
    let x = BPoly::x(k);
    let y = BPoly::y(k);
    let fx = f.partial_x();
    let fy = f.partial_y();
    let fxx = fx.partial_x();
    let fxy = fx.partial_y();
    let fyy = fy.partial_y();
    let fz = &(&(&n(d) * f) - &(&x * &fx)) - &(&y * &fy);
    let fxz = &(&(&n(d - 1) * &fx) - &(&x * &fxx)) - &(&y * &fxy);
    let fyz = &(&(&n(d - 1) * &fy) - &(&x * &fxy)) - &(&y * &fyy);
    let fzz = &(&(&n(d - 1) * &fz) - &(&x * &fxz)) - &(&y * &fyz);
    let m = [[&fxx, &fxy, &fxz], [&fxy, &fyy, &fyz], [&fxz, &fyz, &fzz]];
    let minor = |a: &BPoly<QF>, b: &BPoly<QF>, c: &BPoly<QF>, e: &BPoly<QF>| &(a * b) - &(c * e);
    let t0 = m[0][0] * &minor(m[1][1], m[2][2], m[1][2], m[2][1]);
    let t1 = m[0][1] * &minor(m[1][0], m[2][2], m[1][2], m[2][0]);
    let t2 = m[0][2] * &minor(m[1][0], m[2][1], m[1][1], m[2][0]);
    &(&t0 - &t1) + &t2
}

/// A plane cubic splits into three lines (over `ℂ`) exactly when its
/// Hessian vanishes identically (concurrent lines) or is proportional to
/// the cubic itself (a triangle).
pub fn cubic_is_union_of_lines(c: &Curve) -> bool {
    if c.degree() != 3 {
        return false;
    }
    let h = hessian(c);
    h.is_zero() || (h.total_degree() == Some(3) && h.normalize_leading() == c.f().normalize_leading())
}

/// The symmetric 3×3 determinant of a conic; zero means two lines (or a
/// double line).
pub fn conic_determinant(c: &Curve) -> QF {
    let f = c.f();
    let k = c.k();
    let half = QF::from_rat(k, Rat::new(1.into(), 2.into()));
    let a = f.coeff(2, 0);
    let b = f.coeff(1, 1) * &half;
    let cc = f.coeff(0, 2);
    let d = f.coeff(1, 0) * &half;
    let e = f.coeff(0, 1) * &half;
    let g = f.coeff(0, 0);
    a.clone() * &(cc.clone() * &g - &(e.clone() * &e)) - &(b.clone() * &(b.clone() * &g - &(e.clone() * &d)))
        + &(d.clone() * &(b.clone() * &e - &(cc.clone() * &d)))
}

pub fn conic_is_degenerate(c: &Curve) -> bool {
    c.degree() == 2 && conic_determinant(c).is_zero()
}
