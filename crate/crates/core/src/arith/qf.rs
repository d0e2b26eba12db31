//! The real quadratic field `ℚ(√k)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::field::{Field, RealField};
use super::rat::{fmt_rat, rat, Rat};
use super::sqf::SqfInt;
use crate::error::{Error, Result};

/// `a + b√k` with `k` squarefree. For `k = 1` the element is stored with
/// `b = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QF {
    k: SqfInt,
    a: Rat,
    b: Rat,
}

impl QF {
    pub fn new(k: SqfInt, a: Rat, b: Rat) -> Self {
        if k.is_one() {
            QF { k, a: a + b, b: Rat::zero() }
        } else {
            QF { k, a, b }
        }
    }

    pub fn from_rat(k: SqfInt, a: Rat) -> Self {
        QF { k, a, b: Rat::zero() }
    }

    pub fn zero(k: SqfInt) -> Self {
        Self::from_rat(k, Rat::zero())
    }

    pub fn one(k: SqfInt) -> Self {
        Self::from_rat(k, Rat::one())
    }

    /// `√k` itself (which is `1` when `k = 1`).
    pub fn sqrt_k(k: SqfInt) -> Self {
        Self::new(k, Rat::zero(), Rat::one())
    }

    pub fn k(&self) -> SqfInt {
        self.k
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the element lies in `ℚ`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        QF { k: self.k, a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a^2 - k b^2`.
    pub fn norm(&self) -> Rat {
        let k = rat(self.k.get() as i64);
        &self.a * &self.a - k * &self.b * &self.b
    }

    /// Lifts a value into `ℚ(√k)`. Only the same field or `ℚ` (k = 1) embed.
    pub fn embed(&self, k: SqfInt) -> Result<Self> {
        if self.k == k {
            Ok(self.clone())
        } else if self.k.is_one() {
            Ok(QF::from_rat(k, self.a.clone()))
        } else {
            Err(Error::FieldMismatch { left: self.k.get(), right: k.get() })
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(self.clone() + o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(self.clone() * o)
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.k == o.k {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.k.get(), right: o.k.get() })
        }
    }

    /// Multiplicative inverse as conjugate over norm.
    pub fn invert(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(QF { k: self.k, a: c.a / &n, b: c.b / n })
    }

    /// Sign under the embedding with `√k > 0`.
    pub fn signum(&self) -> i8 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        // Opposite signs: compare a^2 with k b^2.
        let a2 = &self.a * &self.a;
        let kb2 = rat(self.k.get() as i64) * &self.b * &self.b;
        if a2 > kb2 {
            sa
        } else {
            sb
        }
    }
}

fn sign(q: &Rat) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn assert_same(x: SqfInt, y: SqfInt) {
    assert!(
        x == y,
        "mixed-field arithmetic: Q(sqrt {x}) with Q(sqrt {y}); embed explicitly"
    );
}

impl Add for QF {
    type Output = QF;
    fn add(self, o: QF) -> QF {
        self + &o
    }
}

impl<'a> Add<&'a QF> for QF {
    type Output = QF;
    fn add(self, o: &'a QF) -> QF {
        assert_same(self.k, o.k);
        QF { k: self.k, a: self.a + &o.a, b: self.b + &o.b }
    }
}

impl Sub for QF {
    type Output = QF;
    fn sub(self, o: QF) -> QF {
        self - &o
    }
}

impl<'a> Sub<&'a QF> for QF {
    type Output = QF;
    fn sub(self, o: &'a QF) -> QF {
        assert_same(self.k, o.k);
        QF { k: self.k, a: self.a - &o.a, b: self.b - &o.b }
    }
}

impl Mul for QF {
    type Output = QF;
    fn mul(self, o: QF) -> QF {
        self * &o
    }
}

impl<'a> Mul<&'a QF> for QF {
    type Output = QF;
    fn mul(self, o: &'a QF) -> QF {
        assert_same(self.k, o.k);
        if self.b.is_zero() && o.b.is_zero() {
            return QF { k: self.k, a: self.a * &o.a, b: Rat::zero() };
        }
        let k = rat(self.k.get() as i64);
        let a = &self.a * &o.a + k * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        QF { k: self.k, a, b }
    }
}

impl Neg for QF {
    type Output = QF;
    fn neg(self) -> QF {
        QF { k: self.k, a: -self.a, b: -self.b }
    }
}

impl fmt::Display for QF {
    /// Prints in the polynomial grammar: `a`, `b*r` or `a+b*r`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b_part = |b: &Rat| {
            if b.is_one() {
                "r".to_string()
            } else if *b == -Rat::one() {
                "-r".to_string()
            } else {
                format!("{}*r", fmt_rat(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.a)),
            (true, false) => write!(f, "{}", b_part(&self.b)),
            (false, false) => {
                let sep = if self.b.is_negative() { "" } else { "+" };
                write!(f, "{}{}{}", fmt_rat(&self.a), sep, b_part(&self.b))
            }
        }
    }
}

impl Field for QF {
    type Ctx = SqfInt;

    fn ctx(&self) -> SqfInt {
        self.k
    }

    fn zero_in(k: &SqfInt) -> Self {
        QF::zero(*k)
    }

    fn one_in(k: &SqfInt) -> Self {
        QF::one(*k)
    }

    fn from_rat(k: &SqfInt, q: &Rat) -> Self {
        QF::from_rat(*k, q.clone())
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

impl RealField for QF {
    fn signum_real(&self) -> i8 {
        self.signum()
    }
}

/// `x^{-1}` in `ℚ(√k)`.
pub fn qf_invert(x: &QF) -> Result<QF> {
    x.invert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::ratio;

    fn k(n: u64) -> SqfInt {
        SqfInt::new(n).unwrap()
    }

    #[test]
    fn invert_examples() {
        let x = QF::new(k(2), rat(1), rat(1));
        let y = qf_invert(&x).unwrap();
        assert_eq!(y, QF::new(k(2), rat(-1), rat(1)));
        assert_eq!(x * &y, QF::one(k(2)));

        assert_eq!(qf_invert(&QF::from_rat(k(3), rat(3))).unwrap(), QF::from_rat(k(3), ratio(1, 3)));
        assert_eq!(qf_invert(&QF::zero(k(5))), Err(Error::DivisionByZero));
    }

    #[test]
    fn k_one_is_normalized() {
        let x = QF::new(SqfInt::ONE, rat(2), rat(3));
        assert_eq!(x.a(), &rat(5));
        assert!(x.b().is_zero());
        assert_eq!(QF::sqrt_k(SqfInt::ONE), QF::one(SqfInt::ONE));
    }

    #[test]
    fn mixed_fields_are_errors() {
        let x = QF::one(k(2));
        let y = QF::one(k(3));
        assert!(x.checked_add(&y).is_err());
        assert!(x.checked_mul(&y).is_err());
        let q = QF::from_rat(SqfInt::ONE, ratio(1, 2));
        assert_eq!(q.embed(k(3)).unwrap(), QF::from_rat(k(3), ratio(1, 2)));
        assert!(x.embed(k(3)).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_operator_panics() {
        let _ = QF::one(k(2)) + QF::one(k(3));
    }

    #[test]
    fn signs() {
        // 3 - 2√2 > 0, 1 - √2 < 0, -3 + 2√2 < 0.
        assert_eq!(QF::new(k(2), rat(3), rat(-2)).signum(), 1);
        assert_eq!(QF::new(k(2), rat(1), rat(-1)).signum(), -1);
        assert_eq!(QF::new(k(2), rat(-3), rat(2)).signum(), -1);
        assert_eq!(QF::new(k(2), rat(0), rat(2)).signum(), 1);
        assert_eq!(QF::zero(k(2)).signum(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(QF::new(k(3), ratio(1, 2), rat(-1)).to_string(), "1/2-r");
        assert_eq!(QF::new(k(3), rat(0), ratio(2, 3)).to_string(), "2/3*r");
        assert_eq!(QF::new(k(3), rat(4), rat(0)).to_string(), "4");
    }
}
