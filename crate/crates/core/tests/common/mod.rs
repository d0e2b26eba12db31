//! Shared builders for the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;

use ratdist::arith::{rat, ratio, Rat, SqfInt};
use ratdist::curveops::Curve;
use ratdist::poly::BPoly;

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |q| *q != rat(0))
}

pub fn positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..10, 1i64..6).prop_map(|(n, d)| ratio(n, d))
}

/// Distinct rationals, at least `min` and fewer than `max` of them.
pub fn distinct_rats(min: usize, max: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::btree_set(small_rat(), min..max).prop_map(|s| s.into_iter().collect())
}

/// A curve over ℚ from `(coefficient, i, j)` triples.
pub fn curve(terms: &[(i64, u32, u32)]) -> Curve {
    let t: Vec<_> = terms.iter().map(|&(c, i, j)| (rat(c), i, j)).collect();
    Curve::from_rational(&BPoly::from_rat_terms((), &t), SqfInt::ONE).unwrap()
}

/// Random polynomials of degree at most `max_deg` through the origin with a
/// nonzero linear part.
pub fn curve_through_origin(max_deg: u32) -> impl Strategy<Value = Curve> {
    let higher = prop::collection::vec((small_rat(), 0u32..=max_deg, 0u32..=max_deg), 0..6);
    (small_rat(), small_rat(), higher)
        .prop_filter("nonzero linear part", |(a, b, _)| *a != rat(0) || *b != rat(0))
        .prop_map(move |(a, b, higher)| {
            let mut terms = vec![(a, 1, 0), (b, 0, 1)];
            terms.extend(higher.into_iter().filter(|(_, i, j)| i + j >= 2 && i + j <= max_deg));
            Curve::from_rational(&BPoly::from_rat_terms((), &terms), SqfInt::ONE).unwrap()
        })
}

/// Exhaustive oracle for rational sets (`k = 1`) and degrees up to 2: no
/// three points on a line and no six on a conic. Each test is the vanishing
/// of a determinant of homogeneous monomials, evaluated exactly as an
/// integer: it is computed modulo three primes whose product exceeds the
/// Hadamard bound, so "zero modulo all three" means zero.
pub fn is_curve_general(s: &ratdist::geom::NormalizedSet, max_d: u32) -> bool {
    use itertools::Itertools;
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};
    assert_eq!(s.k, SqfInt::ONE, "the oracle handles rational coordinates");
    assert!(max_d <= 2, "the oracle handles lines and conics");
    const PRIMES: [u64; 3] = [(1 << 60) - 93, (1 << 61) - 1, (1 << 62) - 57];
    // (a/b, c/d) ~ (ad : cb : bd)
    let homog: Vec<[BigInt; 3]> = s
        .points
        .iter()
        .map(|p| {
            let (a, b) = (p.r1.numer(), p.r1.denom());
            let (c, d) = (p.r2.numer(), p.r2.denom());
            [a * d, c * b, b * d]
        })
        .collect();
    let rows = |d: u32| -> Vec<Vec<BigInt>> {
        homog
            .iter()
            .map(|[x, y, z]| match d {
                1 => vec![x.clone(), y.clone(), z.clone()],
                _ => vec![x * x, x * y, y * y, x * z, y * z, z * z],
            })
            .collect()
    };
    let log_prime_product: f64 = PRIMES.iter().map(|&p| (p as f64).ln()).sum();
    for d in 1..=max_d {
        let size = ratdist::geom::points_for_degree(d) + 1;
        if size > s.len() {
            break;
        }
        let full = rows(d);
        let norm_logs: Vec<f64> = full
            .iter()
            .map(|r| {
                let sq: BigInt = r.iter().map(|v| v * v).sum();
                sq.to_f64().expect("finite").ln() / 2.0
            })
            .collect();
        let residues: Vec<Vec<Vec<u64>>> = PRIMES
            .iter()
            .map(|&p| {
                let pb = BigInt::from(p);
                full.iter()
                    .map(|r| {
                        r.iter()
                            .map(|v| {
                                let m = v % &pb;
                                let m = if m.is_negative() { m + &pb } else { m };
                                m.to_u64().expect("reduced")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        for sub in (0..s.len()).combinations(size) {
            let bound: f64 = sub.iter().map(|&i| norm_logs[i]).sum();
            assert!(bound + 1.0 < log_prime_product, "coordinates too large for the oracle");
            let vanishes = PRIMES.iter().zip(&residues).all(|(&p, res)| {
                let m: Vec<Vec<u64>> = sub.iter().map(|&i| res[i].clone()).collect();
                det_mod(m, p) == 0
            });
            if vanishes {
                return false;
            }
        }
    }
    true
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let n = m.len();
    let mut det = 1;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if r != c {
            m.swap(r, c);
            det = (p - det) % p;
        }
        det = mul(det, m[c][c]);
        let inv = pow(m[c][c], p - 2);
        for r in c + 1..n {
            let f = mul(m[r][c], inv);
            for cc in c..n {
                let sub = mul(f, m[c][cc]);
                m[r][cc] = (m[r][cc] + p - sub) % p;
            }
        }
    }
    det
}

/// Brute-force integral-set oracle: every `n`-subset of the box `[0, B]²`
/// with integer distances (and, if asked, no three collinear and no four
/// concyclic), grouped by congruence. Each class is represented by the
/// lexicographically least of its members translated to touch both axes.
pub mod oracle {
    use itertools::Itertools;
    use std::collections::BTreeMap;

    pub type P = (i64, i64);

    pub fn d2(p: P, q: P) -> i64 {
        (p.0 - q.0).pow(2) + (p.1 - q.1).pow(2)
    }

    pub fn integer_sqrt(n: i64) -> Option<i64> {
        (0..=n).take_while(|r| r * r <= n).find(|r| r * r == n)
    }

    pub fn is_integral(pts: &[P]) -> bool {
        pts.iter().tuple_combinations().all(|(&p, &q)| integer_sqrt(d2(p, q)).is_some())
    }

    /// No three collinear and no four on a circle, with exact rational
    /// circumcenters instead of determinants.
    pub fn in_general_position(pts: &[P]) -> bool {
        let cross = |a: P, b: P, c: P| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        if pts.iter().tuple_combinations().any(|(&a, &b, &c)| cross(a, b, c) == 0) {
            return false;
        }
        // Circumcenter of a, b, c as (ux/den, uy/den); d is concyclic iff
        // |d − u|² = |a − u|².
        for (&a, &b, &c) in pts.iter().tuple_combinations() {
            let den = 2 * cross(a, b, c) as i128;
            let n = |p: P| (p.0 * p.0 + p.1 * p.1) as i128;
            let (ax, ay, bx, by, cx, cy) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128, c.0 as i128, c.1 as i128);
            let ux = n(a) * (by - cy) + n(b) * (cy - ay) + n(c) * (ay - by);
            let uy = n(a) * (cx - bx) + n(b) * (ax - cx) + n(c) * (bx - ax);
            let dist = |p: P| (p.0 as i128 * den - ux).pow(2) + (p.1 as i128 * den - uy).pow(2);
            for &d in pts {
                if d != a && d != b && d != c && dist(d) == dist(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Sorted squared-distance matrix rows, minimized over relabellings.
    pub fn congruence_class(pts: &[P]) -> Vec<i64> {
        let n = pts.len();
        (0..n)
            .permutations(n)
            .map(|perm| {
                (0..n).tuple_combinations().map(|(i, j)| d2(pts[perm[i]], pts[perm[j]])).collect::<Vec<_>>()
            })
            .min()
            .unwrap()
    }

    pub fn translate_to_axes(pts: &[P]) -> Vec<P> {
        let mx = pts.iter().map(|p| p.0).min().unwrap();
        let my = pts.iter().map(|p| p.1).min().unwrap();
        let mut out: Vec<P> = pts.iter().map(|&(x, y)| (x - mx, y - my)).collect();
        out.sort();
        out
    }

    /// All admissible subsets, in the order given by `order` (a permutation
    /// of the box's points), folded into classes.
    pub fn classes(n: usize, bound: i64, general_position: bool, order: &[P]) -> BTreeMap<Vec<i64>, Vec<P>> {
        let mut out: BTreeMap<Vec<i64>, Vec<P>> = BTreeMap::new();
        for sub in order.iter().copied().combinations(n) {
            if !is_integral(&sub) || (general_position && !in_general_position(&sub)) {
                continue;
            }
            let rep = translate_to_axes(&sub);
            assert!(rep.iter().all(|&(x, y)| x <= bound && y <= bound));
            out.entry(congruence_class(&sub))
                .and_modify(|r| {
                    if rep < *r {
                        *r = rep.clone();
                    }
                })
                .or_insert(rep);
        }
        out
    }

    pub fn box_points(bound: i64) -> Vec<P> {
        (0..=bound).cartesian_product(0..=bound).collect()
    }

    /// Representatives with their sorted distances, sorted.
    pub fn search(n: usize, bound: i64, general_position: bool, order: &[P]) -> Vec<(Vec<P>, Vec<i64>)> {
        let mut out: Vec<(Vec<P>, Vec<i64>)> = classes(n, bound, general_position, order)
            .into_values()
            .map(|rep| {
                let mut ds: Vec<i64> =
                    rep.iter().tuple_combinations().map(|(&p, &q)| integer_sqrt(d2(p, q)).unwrap()).collect();
                ds.sort();
                (rep, ds)
            })
            .collect();
        out.sort();
        out
    }
}
