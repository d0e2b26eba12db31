use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Exact coefficient field used by the polynomial engine.
///
/// Elements of `ℚ(√k)` only know their field at runtime, so constructors take
/// a context value (`()` for `ℚ`, the radicand for the quadratic fields).
/// Binary operators panic on mismatched contexts; polynomial code checks
/// contexts once at its boundary via [`Field::check_same`].
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rat(ctx: &Self::Ctx, q: &Rat) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn inv(&self) -> Result<Self>;

    /// Radicand of the context, used in error messages (`1` for `ℚ`).
    fn radicand(ctx: &Self::Ctx) -> u64;

    fn is_one_elem(&self) -> bool {
        *self == Self::one_in(&self.ctx())
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    fn check_same(a: &Self::Ctx, b: &Self::Ctx) -> Result<()> {
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: Self::radicand(a),
                right: Self::radicand(b),
            })
        }
    }
}

/// Fields with a distinguished real embedding (`√k > 0`).
pub trait RealField: Field {
    /// Sign of the element under the real embedding: -1, 0 or 1.
    fn signum_real(&self) -> i8;
}

impl Field for Rat {
    type Ctx = ();

    fn ctx(&self) -> Self::Ctx {}

    fn zero_in(_: &()) -> Self {
        Rat::zero()
    }

    fn one_in(_: &()) -> Self {
        Rat::one()
    }

    fn from_rat(_: &(), q: &Rat) -> Self {
        q.clone()
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn radicand(_: &()) -> u64 {
        1
    }
}

impl RealField for Rat {
    fn signum_real(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}
