//! Rational roots of polynomials over `ℚ`.
//!
//! Rather than enumerating divisors of the constant term and the leading
//! coefficient (which needs integer factorization), roots are isolated with a
//! Sturm sequence. For a primitive integer polynomial with leading
//! coefficient `A`, every rational root `p/q` has `q | A`, so it lies on the
//! lattice `ℤ/A`. Once an isolating interval is narrower than `1/A` it holds
//! at most one lattice point, which is then tested exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Field, Rat};
use crate::error::{invalid, Result};
use crate::poly::{squarefree_part, UPoly};

fn sign(q: &Rat) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

struct Sturm {
    seq: Vec<UPoly<Rat>>,
}

impl Sturm {
    fn new(g: &UPoly<Rat>) -> Result<Self> {
        let mut seq = vec![g.clone(), g.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1])?;
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        Ok(Sturm { seq })
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.seq {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

/// Clears denominators and content, returning an integer polynomial with the
/// same roots and a positive leading coefficient.
fn primitive_integer(f: &UPoly<Rat>) -> Vec<BigInt> {
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let s = if ints.last().is_some_and(|c| c.is_negative()) { -content } else { content };
    ints.into_iter().map(|c| c / &s).collect()
}

/// Exactly the distinct rational roots of `f`, in increasing order.
pub fn rational_roots(f: &UPoly<Rat>) -> Result<Vec<Rat>> {
    if f.is_zero() {
        return Err(invalid("rational roots of the zero polynomial"));
    }
    let mut roots = Vec::new();
    let v = f.x_adic_valuation();
    if v > 0 {
        roots.push(Rat::zero());
    }
    let f = f.shift_down(v);
    if f.degree() == Some(0) {
        return Ok(roots);
    }
    let g = squarefree_part(&f)?;
    let ints = primitive_integer(&g);
    let a = Rat::from_integer(ints.last().unwrap().clone());
    let g = UPoly::new((), ints.iter().map(|c| Rat::from_integer(c.clone())).collect());

    // Cauchy bound: every root satisfies |x| < 1 + max |aᵢ / aₙ|.
    let bound = Rat::one()
        + ints.iter().map(|c| Rat::from_integer(c.abs()) / &a).max().unwrap_or_else(Rat::zero);
    let sturm = Sturm::new(&g)?;
    let lo = -bound.clone();
    let hi = bound;
    let count = sturm.variations(&lo) - sturm.variations(&hi);
    let width_limit = a.recip();
    let splits: Vec<Rat> = (0..=g.degree().unwrap() as i64)
        .map(|i| Rat::new(BigInt::from(i + 1), BigInt::from(2 * i + 3)))
        .chain(std::iter::once(Rat::new(1.into(), 2.into())))
        .collect();

    let mut stack = vec![(lo, hi, count)];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if &hi - &lo < width_limit {
            // Lattice points m/A in (lo, hi]: at most one.
            let m = (&lo * &a).floor() + Rat::one();
            let cand = m / &a;
            if cand <= hi && g.eval(&cand).is_zero_elem() {
                roots.push(cand);
            }
            continue;
        }
        let width = &hi - &lo;
        let mid = splits
            .iter()
            .rev()
            .map(|s| &lo + &width * s)
            .find(|m| !g.eval(m).is_zero_elem())
            .expect("more split candidates than roots");
        let vm = sturm.variations(&mid);
        let left = sturm.variations(&lo) - vm;
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}
