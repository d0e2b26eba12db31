//! `ℚ(√k)(i)`: the quadratic field extended by `i`, needed to slice curves
//! along the isotropic lines `x ± iy = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::qf::QF;
use super::rat::Rat;
use super::sqf::SqfInt;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GQF {
    pub re: QF,
    pub im: QF,
}

impl GQF {
    pub fn new(re: QF, im: QF) -> Result<Self> {
        if re.k() != im.k() {
            return Err(Error::FieldMismatch { left: re.k().get(), right: im.k().get() });
        }
        Ok(GQF { re, im })
    }

    pub fn from_real(re: QF) -> Self {
        let im = QF::zero(re.k());
        GQF { re, im }
    }

    pub fn i(k: SqfInt) -> Self {
        GQF { re: QF::zero(k), im: QF::one(k) }
    }

    pub fn k(&self) -> SqfInt {
        self.re.k()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GQF { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re^2 + im^2`, an element of `ℚ(√k)`.
    pub fn norm(&self) -> QF {
        self.re.square() + self.im.square()
    }

    pub fn invert(&self) -> Result<Self> {
        let n = self.norm().invert()?;
        let c = self.conj();
        Ok(GQF { re: c.re * &n, im: c.im * &n })
    }
}

impl Add for GQF {
    type Output = GQF;
    fn add(self, o: GQF) -> GQF {
        self + &o
    }
}

impl<'a> Add<&'a GQF> for GQF {
    type Output = GQF;
    fn add(self, o: &'a GQF) -> GQF {
        GQF { re: self.re + &o.re, im: self.im + &o.im }
    }
}

impl Sub for GQF {
    type Output = GQF;
    fn sub(self, o: GQF) -> GQF {
        self - &o
    }
}

impl<'a> Sub<&'a GQF> for GQF {
    type Output = GQF;
    fn sub(self, o: &'a GQF) -> GQF {
        GQF { re: self.re - &o.re, im: self.im - &o.im }
    }
}

impl Mul for GQF {
    type Output = GQF;
    fn mul(self, o: GQF) -> GQF {
        self * &o
    }
}

impl<'a> Mul<&'a GQF> for GQF {
    type Output = GQF;
    fn mul(self, o: &'a GQF) -> GQF {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re * &o.im + self.im * &o.re;
        GQF { re, im }
    }
}

impl Neg for GQF {
    type Output = GQF;
    fn neg(self) -> GQF {
        GQF { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GQF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})*i", self.im)
        } else {
            write!(f, "({})+({})*i", self.re, self.im)
        }
    }
}

impl Field for GQF {
    type Ctx = SqfInt;

    fn ctx(&self) -> SqfInt {
        self.k()
    }

    fn zero_in(k: &SqfInt) -> Self {
        GQF::from_real(QF::zero(*k))
    }

    fn one_in(k: &SqfInt) -> Self {
        GQF::from_real(QF::one(*k))
    }

    fn from_rat(k: &SqfInt, q: &Rat) -> Self {
        GQF::from_real(QF::from_rat(*k, q.clone()))
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        self.invert()
    }

    fn radicand(k: &SqfInt) -> u64 {
        k.get()
    }
}
