//! Exact collinearity / concyclicity predicates and the general-position
//! check ("no 3 on a line, no 4 on a circle").
//!
//! For points `(r₁, r₂√k)` the orientation determinant and the concyclicity
//! determinant both factor as `√k` times a rational determinant, so the tests
//! run entirely in `ℚ`.

use num_traits::Zero;

use crate::arith::{Rat, SqfInt};
use crate::geom::point::{NPt, NormalizedSet};
use crate::geom::rational::Verdict;

/// Orientation of `p, q, r` with the `√k` factor removed.
fn orient(p: &NPt, q: &NPt, r: &NPt) -> Rat {
    (&q.r1 - &p.r1) * (&r.r2 - &p.r2) - (&q.r2 - &p.r2) * (&r.r1 - &p.r1)
}

pub fn collinear(p: &NPt, q: &NPt, r: &NPt) -> bool {
    orient(p, q, r).is_zero()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Concyclicity {
    Concyclic,
    NotConcyclic,
    /// All four points on one line: not a circle, reported separately.
    Collinear,
}

fn det3(m: [[Rat; 3]; 3]) -> Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// The determinant with rows `(x² + y², x, y, 1)`, divided by `√k`.
fn circle_det(pts: [&NPt; 4], k: SqfInt) -> Rat {
    let kk = Rat::from_integer(k.get().into());
    // Subtract the last row to reduce to 3×3.
    let s = pts[3];
    let s_sq = &s.r1 * &s.r1 + &kk * &s.r2 * &s.r2;
    let row = |p: &NPt| {
        let sq = &p.r1 * &p.r1 + &kk * &p.r2 * &p.r2;
        [sq - &s_sq, &p.r1 - &s.r1, &p.r2 - &s.r2]
    };
    det3([row(pts[0]), row(pts[1]), row(pts[2])])
}

pub fn concyclic(p: &NPt, q: &NPt, r: &NPt, s: &NPt, k: SqfInt) -> Concyclicity {
    if !circle_det([p, q, r, s], k).is_zero() {
        return Concyclicity::NotConcyclic;
    }
    // A vanishing determinant means a circle or a line through all four; with
    // three of them collinear only the line remains.
    if collinear(p, q, r) || collinear(p, q, s) {
        Concyclicity::Collinear
    } else {
        Concyclicity::Concyclic
    }
}

/// No collinear triple and no concyclic quadruple. The witness lists the
/// offending indices (three or four).
pub fn verify_general_position(s: &NormalizedSet) -> Verdict<Vec<usize>> {
    let p = &s.points;
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                if collinear(&p[i], &p[j], &p[l]) {
                    return Verdict::Fails(vec![i, j, l]);
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                for m in l + 1..n {
                    if concyclic(&p[i], &p[j], &p[l], &p[m], s.k) == Concyclicity::Concyclic {
                        return Verdict::Fails(vec![i, j, l, m]);
                    }
                }
            }
        }
    }
    Verdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn pt(a: i64, b: i64) -> NPt {
        NPt::new(rat(a), rat(b))
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pt(0, 0), &pt(1, 0), &pt(2, 0)));
        assert!(!collinear(&pt(0, 0), &pt(1, 0), &pt(0, 1)));
    }

    #[test]
    fn concyclic_examples() {
        let k = SqfInt::ONE;
        assert_eq!(concyclic(&pt(1, 0), &pt(0, 1), &pt(-1, 0), &pt(0, -1), k), Concyclicity::Concyclic);
        let five = [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1), pt(2, 3)];
        // Every quadruple containing (2,3) misses the circle through the
        // unit square's corners.
        for skip in 0..4 {
            let q: Vec<&NPt> = (0..4).filter(|&i| i != skip).map(|i| &five[i]).collect();
            assert_eq!(concyclic(q[0], q[1], q[2], &five[4], k), Concyclicity::NotConcyclic);
        }
        assert_eq!(concyclic(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(5, 0), k), Concyclicity::Collinear);
    }

    #[test]
    fn concyclic_with_radical() {
        // Unit circle points (1,0), (1/2, (1/2)√3), (-1/2, (1/2)√3), (-1,0).
        let k3 = SqfInt::new(3).unwrap();
        let h = ratio(1, 2);
        let pts = [
            NPt::new(rat(1), rat(0)),
            NPt::new(h.clone(), h.clone()),
            NPt::new(-h.clone(), h.clone()),
            NPt::new(rat(-1), rat(0)),
        ];
        assert_eq!(concyclic(&pts[0], &pts[1], &pts[2], &pts[3], k3), Concyclicity::Concyclic);
        let off = NPt::new(rat(0), rat(1)); // (0, √3)
        assert_eq!(concyclic(&pts[0], &pts[1], &pts[2], &off, k3), Concyclicity::NotConcyclic);
    }

    #[test]
    fn general_position_examples() {
        let k = SqfInt::ONE;
        let tri = NormalizedSet::new(k, vec![pt(0, 0), pt(1, 0), pt(0, 1)]);
        assert!(verify_general_position(&tri).holds());
        let circ = NormalizedSet::new(k, vec![pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)]);
        assert_eq!(verify_general_position(&circ), Verdict::Fails(vec![0, 1, 2, 3]));
        assert!(verify_general_position(&NormalizedSet::new(k, vec![])).holds());
    }
}
