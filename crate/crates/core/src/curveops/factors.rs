//! Line and circle components of curves of degree at most 4.
//!
//! A line `ℓ` divides `f` exactly when `f` vanishes identically along a
//! parametrization of `ℓ`, and the direction of `ℓ` is a linear factor of the
//! top form of `f`; both conditions are polynomial in the unknown offset, so
//! candidates come from a gcd and a root search. A circle factor forces
//! `x² + y²` to divide the top form; the remaining unknowns follow from
//! comparing homogeneous parts.

use std::fmt;

use crate::arith::{Field, RealField, Rat, SqfInt, QF};
use crate::curveops::solve::qf_roots;
use crate::curveops::Curve;
use crate::error::{Error, Result};
use crate::poly::{poly_gcd, BPoly, UPoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorKind {
    Line,
    Circle,
    /// `x² + y² + αx + βy + γ` with zero or negative squared radius.
    DegenerateCircle,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Line => "line",
            FactorKind::Circle => "circle",
            FactorKind::DegenerateCircle => "degenerate-circle",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub kind: FactorKind,
    /// Normalized so its leading coefficient is 1.
    pub poly: BPoly<QF>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorReport {
    pub factors: Vec<Factor>,
    /// `f` divided by every factor found.
    pub cofactor: BPoly<QF>,
}

impl FactorReport {
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

fn r2(k: SqfInt) -> BPoly<QF> {
    &BPoly::x(k).pow(2) + &BPoly::y(k).pow(2)
}

fn qf(k: SqfInt, n: i64) -> QF {
    QF::from_rat(k, Rat::from_integer(n.into()))
}

/// Roots in the field of the gcd of the nonzero polynomials.
fn common_roots(polys: &[UPoly<QF>]) -> Result<Vec<QF>> {
    let mut g: Option<UPoly<QF>> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        g = Some(match g {
            None => p.monic(),
            Some(a) => poly_gcd(&a, p)?,
        });
    }
    match g {
        Some(g) if !g.is_constant() => qf_roots(&g),
        _ => Ok(Vec::new()),
    }
}

/// A line over the curve's field dividing `g`, if any.
fn find_line_factor(g: &BPoly<QF>) -> Result<Option<BPoly<QF>>> {
    let k = *g.ctx();
    let Some(d) = g.total_degree() else {
        return Ok(None);
    };
    if d == 0 {
        return Ok(None);
    }
    let top = g.homogeneous_part(d);
    let x = BPoly::x(k);
    let y = BPoly::y(k);
    // Horizontal lines y = c: g(s, c) ≡ 0 in s.
    if top.coeff(d, 0).is_zero() {
        let h = g.swap_xy();
        if let Some(c) = common_roots(&h.coeffs_in_y())?.into_iter().next() {
            return Ok(Some(&y - &BPoly::constant(c)));
        }
    }
    // Lines x − m·y = c with x − m·y dividing the top form.
    let mut top_x = vec![QF::zero(k); d as usize + 1];
    for ((i, _), c) in top.terms() {
        top_x[*i as usize] = c.clone();
    }
    let top_x = UPoly::new(k, top_x);
    if top_x.is_constant() {
        return Ok(None);
    }
    for m in qf_roots(&top_x)? {
        let h = g.substitute(&(&x + &y.scale(&m)), &y)?;
        if let Some(c) = common_roots(&h.coeffs_in_y())?.into_iter().next() {
            let line = &(&x - &y.scale(&m)) - &BPoly::constant(c);
            return Ok(Some(line));
        }
    }
    Ok(None)
}

/// Unique solution of `A v = rhs`, if the system is consistent and
/// determined.
fn solve_unique(mut a: Vec<Vec<QF>>, rhs: Vec<QF>) -> Option<Vec<QF>> {
    let n = a.first()?.len();
    for (row, b) in a.iter_mut().zip(rhs) {
        row.push(b);
    }
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let p = (r..a.len()).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        let inv = a[r][c].inv().ok()?;
        for v in a[r].iter_mut() {
            *v = v.clone() * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let v = a[i][j].clone() - &(f.clone() * &a[r][j]);
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some((0..n).map(|i| a[i][n].clone()).collect())
}

/// A square root in the field, if one exists.
fn qf_sqrt(v: &QF) -> Result<Option<QF>> {
    let k = v.k();
    if v.is_zero() {
        return Ok(Some(QF::zero(k)));
    }
    let p = UPoly::new(k, vec![-v.clone(), QF::zero(k), QF::one(k)]);
    Ok(qf_roots(&p)?.into_iter().max_by_key(|z| z.signum()))
}

fn circle_kind(q: &BPoly<QF>) -> FactorKind {
    let k = *q.ctx();
    let a = q.coeff(1, 0);
    let b = q.coeff(0, 1);
    let g = q.coeff(0, 0);
    // Normalized so the x² and y² coefficients are 1.
    let radius2 = (a.square() + &b.square()) * &QF::from_rat(k, Rat::new(1.into(), 4.into())) - &g;
    if radius2.signum_real() > 0 {
        FactorKind::Circle
    } else {
        FactorKind::DegenerateCircle
    }
}

/// Whether `q` (degree 2) has the shape `c(x² + y²) + (linear)`.
fn is_circle_form(q: &BPoly<QF>) -> bool {
    q.total_degree() == Some(2) && {
        let top = q.homogeneous_part(2);
        top.coeff(1, 1).is_zero() && top.coeff(2, 0) == top.coeff(0, 2)
    }
}

/// A circle dividing the quartic `g` (which has no line factor), if any.
fn find_circle_factor_quartic(g: &BPoly<QF>) -> Result<Option<BPoly<QF>>> {
    let k = *g.ctx();
    let r = r2(k);
    let Ok(h2) = g.homogeneous_part(4).exact_divide(&r) else {
        return Ok(None);
    };
    let x = BPoly::x(k);
    let y = BPoly::y(k);
    let g3 = g.homogeneous_part(3);
    let g2 = g.homogeneous_part(2);
    let try_circle = |alpha: &QF, beta: &QF, gamma: &QF| -> Option<BPoly<QF>> {
        let q = &(&(&r + &x.scale(alpha)) + &y.scale(beta)) + &BPoly::constant(gamma.clone());
        g.exact_divide(&q).ok().map(|_| q)
    };
    if !is_circle_form(&h2) {
        // g₃ = r·H₁ + (αx + βy)·H₂ is a determined linear system because r
        // and H₂ are coprime over the reals.
        let (p, qq, s) = (h2.coeff(2, 0), h2.coeff(1, 1), h2.coeff(0, 2));
        let z = QF::zero(k);
        let o = QF::one(k);
        let a = vec![
            vec![o.clone(), z.clone(), p.clone(), z.clone()],
            vec![z.clone(), o.clone(), qq.clone(), p.clone()],
            vec![o.clone(), z.clone(), s.clone(), qq.clone()],
            vec![z.clone(), o.clone(), z.clone(), s.clone()],
        ];
        let rhs = vec![g3.coeff(3, 0), g3.coeff(2, 1), g3.coeff(1, 2), g3.coeff(0, 3)];
        let Some(v) = solve_unique(a, rhs) else {
            return Ok(None);
        };
        let (h1x, h1y, alpha, beta) = (&v[0], &v[1], &v[2], &v[3]);
        // g₂ = H₀·r + (αx + βy)(h₁ₓx + h₁ᵧy) + γ·H₂
        let a = vec![vec![o.clone(), p.clone()], vec![z.clone(), qq.clone()], vec![o.clone(), s.clone()]];
        let rhs = vec![
            g2.coeff(2, 0) - &(alpha.clone() * h1x),
            g2.coeff(1, 1) - &(alpha.clone() * h1y) - &(beta.clone() * h1x),
            g2.coeff(0, 2) - &(beta.clone() * h1y),
        ];
        let Some(w) = solve_unique(a, rhs) else {
            return Ok(None);
        };
        return Ok(try_circle(alpha, beta, &w[1]));
    }
    // g = c·Q·Q' with two circles: write g/c = M² − D² where M = (Q + Q')/2
    // is known up to its constant G and D = (Q' − Q)/2 is linear.
    let c = h2.coeff(2, 0);
    let gn = g.scale(&c.inv()?);
    let Ok(lin) = gn.homogeneous_part(3).exact_divide(&r) else {
        return Ok(None);
    };
    let half = QF::from_rat(k, Rat::new(1.into(), 2.into()));
    let m0 = &r + &lin.scale(&half);
    let e0 = &gn - &(&m0 * &m0);
    let q2 = e0.homogeneous_part(2);
    let (a, b, cc) = (q2.coeff(2, 0), q2.coeff(1, 1), q2.coeff(0, 2));
    // (A − G)x² + Bxy + (C − G)y² must be minus a square:
    // 4G² − 4(A + C)G − (B² − 4AC) = 0.
    let poly_g = UPoly::new(
        k,
        vec![
            -(b.square() - &(qf(k, 4) * &a * &cc)),
            -(qf(k, 4) * &(a.clone() + &cc)),
            qf(k, 4),
        ],
    );
    let roots = if poly_g.is_zero() { Vec::new() } else { qf_roots(&poly_g)? };
    for gg in roots {
        let m = &m0 + &BPoly::constant(gg.clone() * &half);
        let e = &gn - &(&m * &m);
        // e = −D²
        let Some(dx) = qf_sqrt(&-e.coeff(2, 0))? else { continue };
        let Some(dy0) = qf_sqrt(&-e.coeff(0, 2))? else { continue };
        for dy in [dy0.clone(), -dy0.clone()] {
            let d0 = if !dx.is_zero() {
                e.coeff(1, 0) * &(qf(k, -2) * &dx).inv()?
            } else if !dy.is_zero() {
                e.coeff(0, 1) * &(qf(k, -2) * &dy).inv()?
            } else {
                match qf_sqrt(&-e.coeff(0, 0))? {
                    Some(v) => v,
                    None => continue,
                }
            };
            let dpoly = &(&x.scale(&dx) + &y.scale(&dy)) + &BPoly::constant(d0);
            let q = &m - &dpoly;
            if is_circle_form(&q) && g.exact_divide(&q).is_ok() {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// Line factors and circle factors of `C` (degree ≤ 4) over its field.
pub fn line_circle_factor(c: &Curve) -> Result<FactorReport> {
    if c.degree() > 4 {
        return Err(Error::UnsupportedDegree { degree: c.degree() as usize, max: 4 });
    }
    let mut rest = c.f().clone();
    let mut factors = Vec::new();
    while let Some(line) = find_line_factor(&rest)? {
        rest = rest.exact_divide(&line)?;
        factors.push(Factor { kind: FactorKind::Line, poly: line.normalize_leading() });
    }
    loop {
        let circle = match rest.total_degree() {
            Some(2) if is_circle_form(&rest) => Some(rest.clone()),
            Some(4) => find_circle_factor_quartic(&rest)?,
            _ => None,
        };
        let Some(q) = circle else { break };
        let q = q.normalize_leading();
        rest = rest.exact_divide(&q)?;
        factors.push(Factor { kind: circle_kind(&q), poly: q });
    }
    Ok(FactorReport { factors, cofactor: rest })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn bp(terms: &[(i64, u32, u32)]) -> BPoly<QF> {
        let t: Vec<_> = terms.iter().map(|&(c, i, j)| (rat(c), i, j)).collect();
        BPoly::from_rat_terms((), &t).map(SqfInt::ONE, |c: &Rat| QF::from_rat(SqfInt::ONE, c.clone()))
    }

    fn kinds(r: &FactorReport) -> Vec<(FactorKind, String)> {
        let mut v: Vec<_> = r.factors.iter().map(|f| (f.kind, f.poly.to_string())).collect();
        v.sort_by(|a, b| a.1.cmp(&b.1));
        v
    }

    #[test]
    fn circle_times_line() {
        let f = &bp(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]) * &bp(&[(1, 0, 1), (-1, 1, 0)]);
        let r = line_circle_factor(&Curve::new(f).unwrap()).unwrap();
        assert_eq!(
            kinds(&r),
            vec![(FactorKind::Line, "-x+y".into()), (FactorKind::Circle, "x^2+y^2-1".into())]
        );
        assert_eq!(r.cofactor.total_degree(), Some(0));
    }

    #[test]
    fn no_factors_on_elliptic_curve() {
        let r = line_circle_factor(&Curve::new(bp(&[(1, 0, 2), (-1, 3, 0), (1, 1, 0)])).unwrap()).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn degenerate_circle() {
        let f = &bp(&[(1, 2, 0), (1, 0, 2)]) * &bp(&[(1, 0, 0), (-1, 1, 0)]);
        let r = line_circle_factor(&Curve::new(f).unwrap()).unwrap();
        assert_eq!(
            kinds(&r),
            vec![(FactorKind::Line, "x-1".into()), (FactorKind::DegenerateCircle, "x^2+y^2".into())]
        );
    }

    #[test]
    fn quartic_circle_cases() {
        // circle times a non-circle irreducible conic (ellipse x² + 2y² − 3)
        let circle = bp(&[(1, 2, 0), (1, 0, 2), (-2, 1, 0), (4, 0, 1), (-3, 0, 0)]);
        let ellipse = bp(&[(1, 2, 0), (2, 0, 2), (-3, 0, 0)]);
        let r = line_circle_factor(&Curve::new(&circle * &ellipse).unwrap()).unwrap();
        assert_eq!(r.factors.len(), 1);
        assert_eq!(r.factors[0].poly, circle);
        // two circles
        let other = bp(&[(1, 2, 0), (1, 0, 2), (3, 1, 0), (-1, 0, 0)]);
        let r = line_circle_factor(&Curve::new(&circle * &other.scale(&QF::from_rat(SqfInt::ONE, rat(5)))).unwrap())
            .unwrap();
        let mut got: Vec<_> = r.factors.iter().map(|f| f.poly.clone()).collect();
        got.sort_by_key(|p| p.to_string());
        let mut want = vec![circle.clone(), other.clone()];
        want.sort_by_key(|p| p.to_string());
        assert_eq!(got, want);
        // a doubled circle
        let r = line_circle_factor(&Curve::new(&circle * &circle).unwrap()).unwrap();
        assert_eq!(r.factors.len(), 2);
        // a smooth quartic has nothing
        let r = line_circle_factor(&Curve::new(bp(&[(1, 4, 0), (1, 0, 4), (-1, 0, 0)])).unwrap()).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn lines_over_the_extension() {
        let k2 = SqfInt::new(2).unwrap();
        // x² − 2y² = (x − √2 y)(x + √2 y)
        let f = BPoly::from_rat_terms(k2, &[(rat(1), 2, 0), (rat(-2), 0, 2)]);
        let r = line_circle_factor(&Curve::new(f).unwrap()).unwrap();
        assert_eq!(r.factors.len(), 2);
        assert!(r.factors.iter().all(|f| f.kind == FactorKind::Line));
    }
}
