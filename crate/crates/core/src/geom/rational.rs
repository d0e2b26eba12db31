//! Rationality of distances: verification, normalization to `(r₁, r₂√k)`
//! form, and inversion about a point of the set.

use num_traits::{Signed, Zero};

use crate::arith::{is_rational_square, rational_sqrt, Rat, SqfInt, QF};
use crate::error::{invalid, Error, Result};
use crate::geom::point::{dist2, NPt, NormalizedSet, Pt, Similarity};

/// Outcome of a yes/no check that carries a witness on failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Every pairwise squared distance must be the square of a rational. The
/// witness is the first failing pair in index order.
pub fn verify_rational_set(s: &NormalizedSet) -> Verdict<(usize, usize)> {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if !is_rational_square(&s.dist2(i, j)) {
                return Verdict::Fails((i, j));
            }
        }
    }
    Verdict::Holds
}

/// Maps anchors to `(0,0)` and `(1,0)` with `z ↦ (z − p₀)/(p₁ − p₀)` and
/// checks that the image has the `(r₁, r₂√k)` form with one squarefree `k`.
///
/// The anchors come first in the output, then the remaining points in input
/// order. Failure of the form (or of rational distances) means the input was
/// not a rational set.
pub fn normalize_set(raw: &[Pt], anchor0: usize, anchor1: usize) -> Result<(NormalizedSet, Similarity)> {
    let n = raw.len();
    if anchor0 >= n || anchor1 >= n {
        return Err(invalid(format!("anchor index out of range for {n} points")));
    }
    if anchor0 == anchor1 {
        return Err(invalid("anchors must be distinct"));
    }
    let m = raw[0].k();
    if let Some(p) = raw.iter().find(|p| p.k() != m) {
        return Err(Error::FieldMismatch { left: m.get(), right: p.k().get() });
    }
    let p0 = raw[anchor0].to_complex();
    let p1 = raw[anchor1].to_complex();
    let delta = p1.clone() - &p0;
    if delta.is_zero() {
        return Err(invalid("anchors are the same point"));
    }
    let anchor_d2 = delta.norm();
    match anchor_d2.as_rational() {
        Some(q) if is_rational_square(q) => {}
        _ => {
            return Err(Error::NotARationalSet(format!(
                "distance between anchors has square {anchor_d2}, not a rational square"
            )))
        }
    }
    let sim = Similarity::new(p0, delta.invert()?)?;

    let order: Vec<usize> = [anchor0, anchor1]
        .into_iter()
        .chain((0..n).filter(|&i| i != anchor0 && i != anchor1))
        .collect();
    let images: Vec<Pt> = order.iter().map(|&i| sim.apply(&raw[i])).collect();

    let not_form = |i: usize, why: &str| {
        Error::NotARationalSet(format!("point {} maps to {}: {why}", order[i], images[i]))
    };
    // k discovery: the first image with a nonzero second coordinate.
    let mut k: Option<SqfInt> = None;
    let mut points = Vec::with_capacity(n);
    for (i, img) in images.iter().enumerate() {
        let r1 = img.x.as_rational().ok_or_else(|| not_form(i, "first coordinate irrational"))?.clone();
        let (a, b) = (img.y.a(), img.y.b());
        if !a.is_zero() && !b.is_zero() {
            return Err(not_form(i, "second coordinate is not a multiple of a single root"));
        }
        if a.is_zero() && b.is_zero() {
            points.push(NPt::new(r1, Rat::zero()));
            continue;
        }
        // y = a needs no root; y = b√m needs √m, and m is already squarefree.
        let ki = if b.is_zero() { SqfInt::ONE } else { m };
        let kk = *k.get_or_insert(ki);
        if kk != ki {
            return Err(not_form(i, &format!("needs sqrt {ki} but the set uses sqrt {kk}")));
        }
        // y = r₂·√kk with kk ∈ {1, m}.
        let r2 = if b.is_zero() { a.clone() } else { b.clone() };
        points.push(NPt::new(r1, r2));
    }
    let s = NormalizedSet::new(k.unwrap_or(SqfInt::ONE), points);
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s.points[i] == s.points[j] {
                return Err(Error::DuplicatePoint(format!("input points {} and {}", order[i], order[j])));
            }
        }
    }
    let s = s.verify();
    if let Verdict::Fails((i, j)) = verify_rational_set(&s) {
        return Err(Error::NotARationalSet(format!(
            "distance between input points {} and {} is irrational",
            order[i], order[j]
        )));
    }
    Ok((s, sim))
}

/// Inversion `p ↦ c + r²(p − c)/|p − c|²` about the point `center` of the set.
/// The center is dropped; the remaining points keep their order.
pub fn invert_set(s: &NormalizedSet, center: usize, radius: &Rat) -> Result<NormalizedSet> {
    if !radius.is_positive() {
        return Err(invalid("inversion radius must be positive"));
    }
    let c = s
        .points
        .get(center)
        .ok_or_else(|| invalid(format!("center index {center} out of range for {} points", s.len())))?;
    let r2 = radius * radius;
    let mut out = Vec::with_capacity(s.len().saturating_sub(1));
    for (i, p) in s.points.iter().enumerate() {
        if i == center {
            continue;
        }
        let d = dist2(p, c, s.k);
        if d.is_zero() {
            return Err(Error::DuplicatePoint(format!("point {i} coincides with the center")));
        }
        let f = &r2 / d;
        out.push(NPt::new(&c.r1 + &f * (&p.r1 - &c.r1), &c.r2 + &f * (&p.r2 - &c.r2)));
    }
    Ok(NormalizedSet::new(s.k, out).verify())
}

/// `|p − q|` for points of a set known to be rational.
pub fn rational_distance(p: &NPt, q: &NPt, k: SqfInt) -> Option<Rat> {
    rational_sqrt(&dist2(p, q, k)).ok().flatten()
}

/// The field element `r₂√k` for a normalized point.
pub fn y_coordinate(p: &NPt, k: SqfInt) -> QF {
    QF::new(k, Rat::zero(), p.r2.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio, GQF};

    fn npts(v: &[(Rat, Rat)]) -> Vec<NPt> {
        v.iter().map(|(a, b)| NPt::new(a.clone(), b.clone())).collect()
    }

    #[test]
    fn verify_examples() {
        let k3 = SqfInt::new(3).unwrap();
        let eq = NormalizedSet::new(k3, npts(&[(rat(0), rat(0)), (rat(1), rat(0)), (ratio(1, 2), ratio(1, 2))]));
        assert!(verify_rational_set(&eq).holds());
        let sq = NormalizedSet::new(SqfInt::ONE, npts(&[(rat(0), rat(0)), (rat(1), rat(0)), (rat(1), rat(1))]));
        assert_eq!(verify_rational_set(&sq), Verdict::Fails((0, 2)));
        let one = NormalizedSet::new(SqfInt::ONE, npts(&[(rat(5), rat(7))]));
        assert!(verify_rational_set(&one).holds());
    }

    #[test]
    fn normalize_equilateral() {
        let k3 = SqfInt::new(3).unwrap();
        let q = |a: i64, b: i64| QF::new(k3, rat(a), rat(b));
        let raw = vec![
            Pt::new(q(0, 0), q(0, 0)).unwrap(),
            Pt::new(q(2, 0), q(0, 0)).unwrap(),
            Pt::new(q(1, 0), q(0, 1)).unwrap(),
        ];
        let (s, _) = normalize_set(&raw, 0, 1).unwrap();
        assert_eq!(s.k, k3);
        assert_eq!(s.points, npts(&[(rat(0), rat(0)), (rat(1), rat(0)), (ratio(1, 2), ratio(1, 2))]));
        assert!(s.verified);
    }

    #[test]
    fn normalize_identity_and_errors() {
        let k1 = SqfInt::ONE;
        let raw = vec![
            Pt::new(QF::zero(k1), QF::zero(k1)).unwrap(),
            Pt::new(QF::one(k1), QF::zero(k1)).unwrap(),
        ];
        let (s, sim) = normalize_set(&raw, 0, 1).unwrap();
        assert_eq!(s.k, k1);
        assert_eq!(s.points, npts(&[(rat(0), rat(0)), (rat(1), rat(0))]));
        assert_eq!(sim.multiplier, GQF::from_real(QF::one(k1)));
        assert!(normalize_set(&raw, 1, 1).is_err());
        // (0,0), (1,0), (1,1): √2 distance
        let mut bad = raw.clone();
        bad.push(Pt::new(QF::one(k1), QF::one(k1)).unwrap());
        assert!(matches!(normalize_set(&bad, 0, 1), Err(Error::NotARationalSet(_))));
    }

    #[test]
    fn invert_examples() {
        let s = NormalizedSet::new(SqfInt::ONE, npts(&[(rat(0), rat(0)), (rat(1), rat(0)), (rat(3), rat(0))]));
        let t = invert_set(&s, 0, &rat(1)).unwrap();
        assert_eq!(t.points, npts(&[(rat(1), rat(0)), (ratio(1, 3), rat(0))]));
        assert_eq!(t.dist2(0, 1), ratio(4, 9));
        assert!(t.verified);

        let circ = NormalizedSet::new(
            SqfInt::ONE,
            npts(&[(rat(0), rat(0)), (rat(1), rat(0)), (ratio(3, 5), ratio(4, 5)), (rat(0), rat(-1))]),
        );
        let img = invert_set(&circ, 0, &rat(1)).unwrap();
        assert_eq!(img.points, circ.points[1..].to_vec());

        assert!(invert_set(&s, 0, &rat(0)).is_err());
        assert!(invert_set(&s, 9, &rat(1)).is_err());
    }
}
