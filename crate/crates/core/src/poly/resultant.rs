//! Resultants and discriminants.
//!
//! Convention (pinned by tests): `Res(f, g) = lc(f)^deg g · ∏ g(αᵢ)` over the
//! roots `αᵢ` of `f`, which is the determinant of the Sylvester matrix with
//! the rows of `f` on top.

use crate::arith::{Field, Rat, GQF, QF};
use crate::error::{invalid, Result};
use crate::poly::UPoly;

/// Resultant over a field by the Euclidean recurrence
/// `Res(f, g) = (-1)^(mn) · lc(g)^(m - l) · Res(g, f mod g)` with
/// `m = deg f`, `n = deg g`, `l = deg(f mod g)`.
pub fn resultant<F: Field>(f: &UPoly<F>, g: &UPoly<F>) -> Result<F> {
    f.check_same(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(invalid("resultant with the zero polynomial"));
    }
    let ctx = f.ctx().clone();
    let mut acc = F::one_in(&ctx);
    let mut a = f.clone();
    let mut b = g.clone();
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(acc * &b.lc().pow(m as u32));
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(F::zero_in(&ctx));
        }
        let l = r.degree().unwrap();
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc = acc * &b.lc().pow((m - l) as u32);
        a = b;
        b = r;
    }
}

/// `(-1)^(d(d-1)/2) · Res(f, f') / lc(f)`.
pub fn discriminant<F: Field>(f: &UPoly<F>) -> Result<F> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(invalid("discriminant of a constant polynomial")),
    };
    let res = resultant(f, &f.derivative())?;
    let q = res.div(&f.lc())?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Integral domain operations needed by fraction-free elimination.
pub trait Domain: Clone + PartialEq {
    fn d_zero(&self) -> Self;
    fn d_one(&self) -> Self;
    fn d_is_zero(&self) -> bool;
    fn d_mul(&self, o: &Self) -> Self;
    fn d_sub(&self, o: &Self) -> Self;
    fn d_neg(&self) -> Self;
    /// Exact division; the caller guarantees divisibility.
    fn d_div_exact(&self, o: &Self) -> Self;
}

macro_rules! field_domain {
    ($t:ty) => {
        impl Domain for $t {
            fn d_zero(&self) -> Self {
                <$t as Field>::zero_in(&self.ctx())
            }
            fn d_one(&self) -> Self {
                <$t as Field>::one_in(&self.ctx())
            }
            fn d_is_zero(&self) -> bool {
                self.is_zero_elem()
            }
            fn d_mul(&self, o: &Self) -> Self {
                self.clone() * o
            }
            fn d_sub(&self, o: &Self) -> Self {
                self.clone() - o
            }
            fn d_neg(&self) -> Self {
                -self.clone()
            }
            fn d_div_exact(&self, o: &Self) -> Self {
                Field::div(self, o).expect("exact division by zero")
            }
        }
    };
}

field_domain!(Rat);
field_domain!(QF);
field_domain!(GQF);

impl<F: Field> Domain for UPoly<F> {
    fn d_zero(&self) -> Self {
        UPoly::zero(self.ctx().clone())
    }
    fn d_one(&self) -> Self {
        UPoly::one(self.ctx().clone())
    }
    fn d_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn d_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn d_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn d_neg(&self) -> Self {
        -self
    }
    fn d_div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o).expect("exact division by zero");
        assert!(r.is_zero(), "inexact division in fraction-free elimination");
        q
    }
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact,
/// so this works over polynomial rings as well as fields.
pub fn bareiss_det<R: Domain>(mut m: Vec<Vec<R>>, sample: &R) -> R {
    let n = m.len();
    if n == 0 {
        return sample.d_one();
    }
    let mut sign_flip = false;
    let mut prev = sample.d_one();
    for k in 0..n - 1 {
        if m[k][k].d_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].d_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return sample.d_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].d_mul(&m[k][k]).d_sub(&m[i][k].d_mul(&m[k][j]));
                m[i][j] = num.d_div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.d_neg()
    } else {
        det
    }
}

/// Sylvester matrix of coefficient lists (low degree first, nonzero leading
/// entries), `f` rows on top.
pub fn sylvester_matrix<R: Domain>(f: &[R], g: &[R]) -> Vec<Vec<R>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let zero = f[0].d_zero();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant as the Sylvester determinant. Independent of the Euclidean
/// recurrence and usable over polynomial rings.
pub fn sylvester_resultant<R: Domain>(f: &[R], g: &[R]) -> R {
    if f.len() == 1 && g.len() == 1 {
        return f[0].d_one();
    }
    let m = sylvester_matrix(f, g);
    bareiss_det(m, &f[0])
}
