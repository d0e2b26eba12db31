//! Sets with all but a few points on a line or circle.
//!
//! Three points off a line give a genus-2 curve: every further point `(x, 0)`
//! on the line has rational distances to all three, so
//! `y² = Π ((x − aᵢ)² + k·bᵢ²)` has a rational point. A circle through a
//! point of the set is turned into a line by inversion about that point.

use num_traits::{Signed, Zero};

use crate::arith::{Rat, SqfInt};
use crate::certify::HyperModel;
use crate::curveops::Curve;
use crate::error::{invalid, Error, Result};
use crate::geom::{collinear, invert_set, verify_rational_set, NPt, NormalizedSet};
use crate::poly::UPoly;

/// `y² = (x² + k)((x − a₁)² + k b₁²)((x − a₂)² + k b₂²)`, after the
/// similarity `x ↦ (x − u₀)/v₀` that puts the first point at `(0, √k)`.
///
/// The three quadratics have no real roots (`bᵢ ≠ 0`), so they are
/// irreducible over the reals and coprime unless equal; equality would force
/// `aᵢ = aⱼ` and `bᵢ² = bⱼ²`, which for points on the same side is a
/// duplicate point.
pub fn build_line_obstruction(off_points: &[NPt; 3], k: SqfInt) -> Result<HyperModel> {
    for (i, p) in off_points.iter().enumerate() {
        if p.r2.is_zero() {
            return Err(Error::InvalidConfiguration(format!("point {i} ({p}) lies on the axis")));
        }
        if p.r2.is_negative() {
            return Err(Error::InvalidConfiguration(format!(
                "point {i} ({p}) is below the axis; all three must lie on the same side"
            )));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if off_points[i] == off_points[j] {
                return Err(Error::InvalidConfiguration(format!("points {i} and {j} coincide")));
            }
        }
    }
    let p0 = &off_points[0];
    let kk = Rat::from_integer(k.get().into());
    let factor = |p: &NPt| {
        let a = (&p.r1 - &p0.r1) / &p0.r2;
        let b = &p.r2 / &p0.r2;
        // (x − a)² + k b²
        UPoly::from_rats(k, &[&a * &a + &kk * &b * &b, Rat::from_integer((-2).into()) * &a, Rat::from_integer(1.into())])
    };
    let rhs = off_points.iter().fold(UPoly::one(k), |acc, p| &acc * &factor(p));
    HyperModel::new(rhs).map_err(|e| Error::InternalInconsistency(format!("obstruction not squarefree: {e}")))
}

/// Where a point of a reduced set came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ImageRole {
    /// Image of a point on the circle (lies on the image line).
    OnCurve,
    /// Image of a point off the circle.
    OffCurve,
    /// The inversion center itself, appended last.
    Center,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Provenance {
    pub source: usize,
    pub role: ImageRole,
}

fn is_circle(c: &Curve) -> bool {
    let f = c.f();
    c.degree() == 2 && f.coeff(1, 1).is_zero() && f.coeff(2, 0) == f.coeff(0, 2)
}

/// Inverts about a set point on the circle (radius 1), turning the circle
/// into a line; the center is appended so distances to it (`1/|p − c|`)
/// stay part of the set.
pub fn reduce_circle_to_line(
    s: &NormalizedSet,
    circle: &Curve,
    on_circle_center: usize,
) -> Result<(NormalizedSet, Vec<Provenance>)> {
    circle.check_field(s.k)?;
    if !is_circle(circle) {
        return Err(invalid(format!("{circle} is not a circle")));
    }
    let center = s
        .points
        .get(on_circle_center)
        .ok_or_else(|| invalid(format!("center index {on_circle_center} out of range")))?
        .clone();
    if !circle.contains(&center) {
        return Err(invalid(format!("center {center} is not on {circle}")));
    }
    let img = invert_set(s, on_circle_center, &Rat::from_integer(1.into()))?;
    let mut prov = Vec::with_capacity(s.len());
    for i in (0..s.len()).filter(|&i| i != on_circle_center) {
        let role = if circle.contains(&s.points[i]) { ImageRole::OnCurve } else { ImageRole::OffCurve };
        prov.push(Provenance { source: i, role });
    }
    prov.push(Provenance { source: on_circle_center, role: ImageRole::Center });
    let mut points = img.points;
    points.push(center);
    let out = NormalizedSet::new(s.k, points).verify();
    let on: Vec<&NPt> = prov
        .iter()
        .zip(&out.points)
        .filter(|(p, _)| p.role == ImageRole::OnCurve)
        .map(|(_, q)| q)
        .collect();
    for w in on.windows(3) {
        if !collinear(w[0], w[1], w[2]) {
            return Err(Error::InternalInconsistency("circle images are not collinear".into()));
        }
    }
    if let Some((i, j)) = verify_rational_set(&out).witness() {
        return Err(Error::InternalInconsistency(format!("image points {i}, {j} at irrational distance")));
    }
    Ok((out, prov))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn pts(v: &[(i64, i64)]) -> [NPt; 3] {
        [0, 1, 2].map(|i| NPt::new(rat(v[i].0), rat(v[i].1)))
    }

    #[test]
    fn obstruction_examples() {
        let m = build_line_obstruction(&pts(&[(0, 1), (1, 1), (2, 1)]), SqfInt::ONE).unwrap();
        assert_eq!(m.rhs.degree(), Some(6));
        assert_eq!(m.genus, Some(2));
        assert!(matches!(
            build_line_obstruction(&pts(&[(0, 1), (0, 1), (1, 1)]), SqfInt::ONE),
            Err(Error::InvalidConfiguration(_))
        ));
        assert_eq!(build_line_obstruction(&pts(&[(0, 1), (1, 2), (1, 3)]), SqfInt::ONE).unwrap().genus, Some(2));
        assert!(build_line_obstruction(&pts(&[(0, 1), (0, -1), (1, 1)]), SqfInt::ONE).is_err());
        assert!(build_line_obstruction(&pts(&[(0, 1), (3, 0), (1, 1)]), SqfInt::ONE).is_err());
    }

    #[test]
    fn reduction_example() {
        let k = SqfInt::ONE;
        let circle = Curve::from_rational(
            &crate::poly::BPoly::from_rat_terms((), &[(rat(1), 2, 0), (rat(1), 0, 2), (rat(-1), 0, 0)]),
            k,
        )
        .unwrap();
        let s = NormalizedSet::new(
            k,
            vec![
                NPt::new(rat(1), rat(0)),
                NPt::new(rat(-1), rat(0)),
                NPt::new(ratio(-7, 25), ratio(24, 25)),
                NPt::new(ratio(-7, 25), ratio(-24, 25)),
                NPt::new(rat(0), rat(0)),
            ],
        );
        let (img, prov) = reduce_circle_to_line(&s, &circle, 0).unwrap();
        assert_eq!(img.len(), 5);
        assert_eq!(prov.last().unwrap().role, ImageRole::Center);
        assert_eq!(prov.iter().filter(|p| p.role == ImageRole::OnCurve).count(), 3);
        assert!(reduce_circle_to_line(&s, &circle, 4).is_err());
    }
}
