use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::arith::{fmt_rat, Rat, SqfInt};
use crate::error::{invalid, Error, Result};
use crate::geom::{concyclic, invert_set, verify_rational_set, Concyclicity, NPt, NormalizedSet};

fn check_rational(s: NormalizedSet, what: &str) -> Result<NormalizedSet> {
    if let Some((i, j)) = verify_rational_set(&s).witness() {
        return Err(Error::InternalInconsistency(format!("{what}: points {i}, {j} at irrational distance")));
    }
    Ok(NormalizedSet { verified: true, ..s })
}

/// `w_t = z_t²` with `z_t = ((1 − t²)/(1 + t²), 2t/(1 + t²))`.
///
/// Squaring doubles the angle, and `|z_s² − z_t²| = |z_s − z_t|·|z_s + z_t|`
/// is a product of two chords whose lengths `2|sin|`, `2|cos|` of the half
/// angle difference are rational.
pub fn unit_circle_rational_set(params: &[Rat]) -> Result<NormalizedSet> {
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(params.len());
    for t in params {
        if !seen.insert(t.clone()) {
            return Err(Error::DuplicatePoint(format!("parameter {} repeated", fmt_rat(t))));
        }
        let den = Rat::one() + t * t;
        let x = (Rat::one() - t * t) / &den;
        let y = (t + t) / &den;
        // (x + iy)²
        let w = NPt::new(&x * &x - &y * &y, Rat::from_integer(2.into()) * &x * &y);
        if points.contains(&w) {
            return Err(Error::DuplicatePoint(format!(
                "parameter {} gives the same point {w} as an earlier one",
                fmt_rat(t)
            )));
        }
        points.push(w);
    }
    check_rational(NormalizedSet::new(SqfInt::ONE, points), "circle construction")
}

/// The points `(q, 0)`.
pub fn line_rational_set(values: &[Rat]) -> Result<NormalizedSet> {
    let mut seen = HashSet::new();
    for q in values {
        if !seen.insert(q.clone()) {
            return Err(Error::DuplicatePoint(format!("value {} repeated", fmt_rat(q))));
        }
    }
    let points = values.iter().map(|q| NPt::new(q.clone(), Rat::zero())).collect();
    Ok(NormalizedSet { k: SqfInt::ONE, points, verified: true })
}

/// Inverts about an off-axis point of the set: the axis points land on a
/// common circle through the center, the other points off it.
pub fn transfer_line_to_circle(s: &NormalizedSet, center: usize, radius: &Rat) -> Result<NormalizedSet> {
    let c = s.points.get(center).ok_or_else(|| invalid(format!("center index {center} out of range")))?;
    if c.r2.is_zero() {
        return Err(invalid(format!("center {c} lies on the axis; the image would be a line")));
    }
    let img = invert_set(s, center, radius)?;
    let on_axis: Vec<bool> =
        (0..s.len()).filter(|&i| i != center).map(|i| s.points[i].r2.is_zero()).collect();
    let circle: Vec<&NPt> = img.points.iter().zip(&on_axis).filter(|(_, &a)| a).map(|(p, _)| p).collect();
    if circle.len() >= 3 {
        let (a, b, c3) = (circle[0], circle[1], circle[2]);
        for p in &circle[3..] {
            if concyclic(a, b, c3, p, s.k) != Concyclicity::Concyclic {
                return Err(Error::InternalInconsistency(format!("image {p} of an axis point is off the circle")));
            }
        }
        for (p, _) in img.points.iter().zip(&on_axis).filter(|(_, &a)| !a) {
            if concyclic(a, b, c3, p, s.k) != Concyclicity::NotConcyclic {
                return Err(Error::InternalInconsistency(format!("image {p} of an off-axis point is on the circle")));
            }
        }
    }
    check_rational(img, "inversion image")
}
