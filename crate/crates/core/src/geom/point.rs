use std::fmt;

use num_traits::Zero;

use crate::arith::{fmt_rat, Field, Rat, SqfInt, GQF, QF};
use crate::error::{Error, Result};

/// A raw point with both coordinates in the same `ℚ(√k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pt {
    pub x: QF,
    pub y: QF,
}

impl Pt {
    pub fn new(x: QF, y: QF) -> Result<Self> {
        if x.k() != y.k() {
            return Err(Error::FieldMismatch { left: x.k().get(), right: y.k().get() });
        }
        Ok(Pt { x, y })
    }

    pub fn k(&self) -> SqfInt {
        self.x.k()
    }

    /// The complex number `x + iy`.
    pub fn to_complex(&self) -> GQF {
        GQF { re: self.x.clone(), im: self.y.clone() }
    }

    pub fn from_complex(z: GQF) -> Self {
        Pt { x: z.re, y: z.im }
    }

    pub fn from_npt(p: &NPt, k: SqfInt) -> Self {
        Pt { x: QF::from_rat(k, p.r1.clone()), y: QF::new(k, Rat::zero(), p.r2.clone()) }
    }
}

impl fmt::Display for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point `(r₁, r₂√k)` of a normalized set, stored as the two rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NPt {
    pub r1: Rat,
    pub r2: Rat,
}

impl NPt {
    pub fn new(r1: Rat, r2: Rat) -> Self {
        NPt { r1, r2 }
    }

    pub fn origin() -> Self {
        NPt { r1: Rat::zero(), r2: Rat::zero() }
    }

    /// Coordinates as elements of `ℚ(√k)`.
    pub fn coords(&self, k: SqfInt) -> (QF, QF) {
        let p = Pt::from_npt(self, k);
        (p.x, p.y)
    }
}

impl fmt::Display for NPt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rat(&self.r1), fmt_rat(&self.r2))
    }
}

/// Squared distance `(Δr₁)² + k(Δr₂)²` between normalized points.
pub fn dist2(p: &NPt, q: &NPt, k: SqfInt) -> Rat {
    let d1 = &p.r1 - &q.r1;
    let d2 = &p.r2 - &q.r2;
    &d1 * &d1 + Rat::from_integer(k.get().into()) * &d2 * &d2
}

/// A set in normal form: points `(r₁, r₂√k)` over one squarefree `k`.
///
/// `verified` is only ever set by code that has checked every pairwise
/// distance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedSet {
    pub k: SqfInt,
    pub points: Vec<NPt>,
    pub verified: bool,
}

impl NormalizedSet {
    pub fn new(k: SqfInt, points: Vec<NPt>) -> Self {
        NormalizedSet { k, points, verified: false }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dist2(&self, i: usize, j: usize) -> Rat {
        dist2(&self.points[i], &self.points[j], self.k)
    }

    /// Runs [`verify_rational_set`](crate::geom::verify_rational_set) and
    /// records the outcome.
    pub fn verify(mut self) -> Self {
        self.verified = crate::geom::verify_rational_set(&self).holds();
        self
    }

    /// Sorted copy of the points, for multiset comparison.
    pub fn sorted_points(&self) -> Vec<NPt> {
        let mut v = self.points.clone();
        v.sort();
        v
    }
}

/// `z ↦ multiplier · (z − translation)` in the complex model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Similarity {
    pub translation: GQF,
    pub multiplier: GQF,
}

impl Similarity {
    pub fn new(translation: GQF, multiplier: GQF) -> Result<Self> {
        if multiplier.is_zero() {
            return Err(Error::invalid("similarity with zero multiplier"));
        }
        GQF::check_same(&translation.k(), &multiplier.k())?;
        Ok(Similarity { translation, multiplier })
    }

    pub fn apply(&self, p: &Pt) -> Pt {
        let z = p.to_complex();
        Pt::from_complex(self.multiplier.clone() * &(z - &self.translation))
    }

    /// The inverse map `w ↦ w / multiplier + translation`, expressed in the
    /// same form.
    pub fn inverse(&self) -> Self {
        let inv = self.multiplier.invert().expect("nonzero multiplier");
        // w/m + t = inv · (w − (−m t))
        let t = -(self.multiplier.clone() * &self.translation);
        Similarity { translation: t, multiplier: inv }
    }

    /// `|multiplier|²`.
    pub fn scale2(&self) -> QF {
        self.multiplier.norm()
    }
}
