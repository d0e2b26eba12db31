use std::fmt;

use crate::arith::{Field, Rat, SqfInt, QF};
use crate::error::{invalid, Error, Result};
use crate::geom::NPt;
use crate::poly::BPoly;

/// A plane curve `f(x, y) = 0` with `f` over `ℚ(√k)`, nonzero and
/// nonconstant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Curve {
    f: BPoly<QF>,
    degree: u32,
}

impl Curve {
    pub fn new(f: BPoly<QF>) -> Result<Self> {
        match f.total_degree() {
            None => Err(invalid("the zero polynomial does not define a curve")),
            Some(0) => Err(invalid("a nonzero constant does not define a curve")),
            Some(degree) => Ok(Curve { f, degree }),
        }
    }

    /// Lifts a rational polynomial into `ℚ(√k)`.
    pub fn from_rational(f: &BPoly<Rat>, k: SqfInt) -> Result<Self> {
        Curve::new(f.map(k, |c| QF::from_rat(k, c.clone())))
    }

    pub fn f(&self) -> &BPoly<QF> {
        &self.f
    }

    pub fn into_poly(self) -> BPoly<QF> {
        self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn k(&self) -> SqfInt {
        *self.f.ctx()
    }

    pub fn eval(&self, x: &QF, y: &QF) -> QF {
        self.f.eval(x, y)
    }

    /// `f(r₁, r₂√k)`; the point must live over the curve's field.
    pub fn eval_npt(&self, p: &NPt) -> QF {
        let (x, y) = p.coords(self.k());
        self.f.eval(&x, &y)
    }

    pub fn contains(&self, p: &NPt) -> bool {
        self.eval_npt(p).is_zero()
    }

    pub fn check_field(&self, k: SqfInt) -> Result<()> {
        if self.k() == k {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.k().get(), right: k.get() })
        }
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.f.terms().all(|(_, c)| c.is_rational())
    }

    /// Same polynomial up to a nonzero scalar.
    pub fn same_up_to_scale(&self, other: &Curve) -> bool {
        self.f.normalize_leading() == other.f.normalize_leading()
    }

    pub fn is_zero_at_origin(&self) -> bool {
        self.f.coeff(0, 0).is_zero_elem()
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.f.fmt(f)
    }
}
