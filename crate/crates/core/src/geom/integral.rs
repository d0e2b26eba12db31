//! Fraction-free linear algebra over `ℤ[√k]`, used where curve fitting runs
//! in a tight loop: clearing denominators once and eliminating with exact
//! divisions avoids the gcd in every rational operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::SqfInt;
use crate::geom::point::NPt;

/// `a + b√k`; for `k = 1`, `b` stays zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Zk {
    a: BigInt,
    b: BigInt,
}

impl Zk {
    fn int(a: BigInt) -> Self {
        Zk { a, b: BigInt::zero() }
    }

    fn zero() -> Self {
        Zk::int(BigInt::zero())
    }

    fn one() -> Self {
        Zk::int(BigInt::one())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, o: &Zk) -> Zk {
        Zk { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    fn sub(&self, o: &Zk) -> Zk {
        Zk { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    fn neg(&self) -> Zk {
        Zk { a: -&self.a, b: -&self.b }
    }

    fn mul(&self, o: &Zk, k: SqfInt) -> Zk {
        if self.b.is_zero() && o.b.is_zero() {
            return Zk::int(&self.a * &o.a);
        }
        Zk {
            a: &self.a * &o.a + &self.b * &o.b * BigInt::from(k.get()),
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    /// `self / d`, known in advance to lie in `ℤ[√k]`.
    fn div_exact(&self, d: &Zk, k: SqfInt) -> Zk {
        let (num, den) = if d.b.is_zero() {
            (self.clone(), d.a.clone())
        } else {
            let conj = Zk { a: d.a.clone(), b: -&d.b };
            (self.mul(&conj, k), &d.a * &d.a - &d.b * &d.b * BigInt::from(k.get()))
        };
        let (qa, ra) = num.a.div_rem(&den);
        let (qb, rb) = num.b.div_rem(&den);
        debug_assert!(ra.is_zero() && rb.is_zero(), "inexact division");
        Zk { a: qa, b: qb }
    }
}

/// Homogeneous coordinates `(X : Y : Z)` of `(r₁, r₂√k)`, all in `ℤ[√k]`.
fn homogeneous(p: &NPt, k: SqfInt) -> [Zk; 3] {
    let (a, b) = (p.r1.numer(), p.r1.denom());
    let (c, d) = (p.r2.numer(), p.r2.denom());
    let y = if k.is_one() { Zk::int(c * b) } else { Zk { a: BigInt::zero(), b: c * b } };
    [Zk::int(a * d), y, Zk::int(b * d)]
}

/// Degree-`d` homogenizations of `monos` at `p`: a nonzero multiple of the
/// affine monomial row, so it has the same kernel and the same zero tests.
pub(crate) fn integral_row(p: &NPt, k: SqfInt, d: u32, monos: &[(u32, u32)]) -> Vec<Zk> {
    let [x, y, z] = homogeneous(p, k);
    let pow = |v: &Zk, e: u32| (0..e).fold(Zk::one(), |acc, _| acc.mul(v, k));
    monos
        .iter()
        .map(|&(i, j)| pow(&x, i).mul(&pow(&y, j), k).mul(&pow(&z, d - i - j), k))
        .collect()
}

/// The kernel vector of a matrix with one more column than rows, or `None`
/// when the rank is deficient (kernel dimension above one). Montante's
/// fraction-free Gauss–Jordan elimination: every entry stays a minor, so
/// each division by the previous pivot is exact.
pub(crate) fn integral_kernel(mut m: Vec<Vec<Zk>>, k: SqfInt) -> Option<Vec<Zk>> {
    let rows = m.len();
    let cols = rows + 1;
    let mut prev = Zk::one();
    let mut pivots = Vec::with_capacity(rows);
    let mut free = Vec::new();
    for c in 0..cols {
        let row = pivots.len();
        let Some(p) = (row..rows).find(|&r| !m[r][c].is_zero()) else {
            free.push(c);
            continue;
        };
        m.swap(row, p);
        let piv = m[row][c].clone();
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = m[r][c].clone();
            for cc in 0..cols {
                let v = piv.mul(&m[r][cc], k).sub(&factor.mul(&m[row][cc], k));
                m[r][cc] = v.div_exact(&prev, k);
            }
        }
        prev = piv;
        pivots.push(c);
    }
    if free.len() != 1 {
        return None;
    }
    let f = free[0];
    let mut v = vec![Zk::zero(); cols];
    v[f] = prev;
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = m[r][f].neg();
    }
    Some(v)
}

/// Whether the curve with coefficient vector `v` passes through the point
/// with row `row`.
pub(crate) fn vanishes(v: &[Zk], row: &[Zk], k: SqfInt) -> bool {
    v.iter().zip(row).fold(Zk::zero(), |acc, (c, x)| acc.add(&c.mul(x, k))).is_zero()
}
