//! Exhaustive search for integral point sets in a lattice box.
//!
//! Translations are quotiented out before enumeration: every set is moved so
//! that its smallest `x` and smallest `y` are both 0, and points are chosen
//! in increasing lexicographic order, so the first point has `x = 0`.
//! Rotations and reflections are quotiented out afterwards: two sets are
//! congruent exactly when some relabelling makes their squared-distance
//! matrices equal, so the lexicographically least flattened matrix over all
//! relabellings is a complete invariant.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_integer::Roots;

use crate::arith::{Rat, SqfInt};
use crate::error::{invalid, Error, Result};
use crate::geom::{NPt, NormalizedSet};

/// Refuse searches estimated above this many primitive steps.
pub const SEARCH_LIMIT: u128 = 1_000_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchConfig {
    pub n_points: usize,
    /// Coordinates range over `0..=bound`.
    pub bound: i64,
    /// Reject collinear triples and concyclic quadruples.
    pub general_position: bool,
}

impl SearchConfig {
    fn check(&self) -> Result<()> {
        if self.n_points < 3 {
            return Err(invalid("an integral-set search needs at least 3 points"));
        }
        if self.bound <= 0 {
            return Err(invalid("the coordinate bound must be positive"));
        }
        Ok(())
    }
}

/// One congruence class: a representative and its sorted distances.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IntegralSet {
    pub points: Vec<(i64, i64)>,
    pub distances: Vec<i64>,
}

impl IntegralSet {
    pub fn to_normalized(&self) -> NormalizedSet {
        let points = self
            .points
            .iter()
            .map(|&(x, y)| NPt::new(Rat::from_integer(x.into()), Rat::from_integer(y.into())))
            .collect();
        NormalizedSet { k: SqfInt::ONE, points, verified: true }
    }
}

/// `(B + 1)·V^{n−1}/(n−1)!·n²` with `V = (B + 1)²`: first points on the
/// `x = 0` column, the rest anywhere, with `n²` checks per set.
pub fn search_estimate(cfg: &SearchConfig) -> u128 {
    let side = cfg.bound.max(0) as u128 + 1;
    let v = side * side;
    let mut est = side;
    for i in 1..cfg.n_points as u128 {
        est = est.saturating_mul(v) / i;
    }
    est.saturating_mul((cfg.n_points * cfg.n_points) as u128)
}

fn d2(p: (i64, i64), q: (i64, i64)) -> i64 {
    (p.0 - q.0).pow(2) + (p.1 - q.1).pow(2)
}

fn exact_sqrt(n: i64) -> Option<i64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn collinear(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> bool {
    (q.0 - p.0) * (r.1 - p.1) == (q.1 - p.1) * (r.0 - p.0)
}

/// Concyclic or collinear: the determinant with rows `(x²+y², x, y, 1)`.
fn cocircular(p: [(i64, i64); 4]) -> bool {
    let s = p[3];
    let row = |a: (i64, i64)| {
        [(d2(a, (0, 0)) - d2(s, (0, 0))) as i128, (a.0 - s.0) as i128, (a.1 - s.1) as i128]
    };
    let m = [row(p[0]), row(p[1]), row(p[2])];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    det == 0
}

/// Least flattened squared-distance matrix over all relabellings.
fn congruence_key(pts: &[(i64, i64)]) -> Vec<i64> {
    let n = pts.len();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut row = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    row.push(d2(pts[perm[i]], pts[perm[j]]));
                }
            }
            row
        })
        .min()
        .unwrap_or_default()
}

struct Search {
    cfg: SearchConfig,
    lattice: Vec<(i64, i64)>,
    chosen: Vec<(i64, i64)>,
    classes: BTreeMap<Vec<i64>, Vec<(i64, i64)>>,
}

impl Search {
    fn admissible(&self, p: (i64, i64)) -> bool {
        let c = &self.chosen;
        if c.iter().any(|&q| exact_sqrt(d2(p, q)).is_none()) {
            return false;
        }
        if !self.cfg.general_position {
            return true;
        }
        for (i, j) in (0..c.len()).tuple_combinations() {
            if collinear(c[i], c[j], p) {
                return false;
            }
        }
        for (i, j, l) in (0..c.len()).tuple_combinations() {
            if cocircular([c[i], c[j], c[l], p]) {
                return false;
            }
        }
        true
    }

    fn record(&mut self) {
        if self.chosen.iter().all(|p| p.1 != 0) {
            return;
        }
        let key = congruence_key(&self.chosen);
        let pts = self.chosen.clone();
        self.classes
            .entry(key)
            .and_modify(|rep| {
                if pts < *rep {
                    *rep = pts.clone();
                }
            })
            .or_insert(pts);
    }

    fn extend(&mut self, from: usize) {
        if self.chosen.len() == self.cfg.n_points {
            self.record();
            return;
        }
        for idx in from..self.lattice.len() {
            let p = self.lattice[idx];
            if self.chosen.is_empty() && p.0 != 0 {
                break;
            }
            if self.admissible(p) {
                self.chosen.push(p);
                self.extend(idx + 1);
                self.chosen.pop();
            }
        }
    }
}

/// All congruence classes of `n`-point integral sets (optionally in general
/// position) with a lattice representative in `[0, B]²`, ordered by
/// representative.
pub fn integral_search(cfg: &SearchConfig) -> Result<Vec<IntegralSet>> {
    cfg.check()?;
    let estimate = search_estimate(cfg);
    if estimate > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge { estimate, limit: SEARCH_LIMIT });
    }
    let b = cfg.bound;
    let lattice: Vec<(i64, i64)> = (0..=b).cartesian_product(0..=b).collect();
    let mut search = Search { cfg: *cfg, lattice, chosen: Vec::new(), classes: BTreeMap::new() };
    search.extend(0);
    let mut out: Vec<IntegralSet> = search
        .classes
        .into_values()
        .map(|points| {
            let mut distances: Vec<i64> = points
                .iter()
                .tuple_combinations()
                .map(|(&p, &q)| exact_sqrt(d2(p, q)).expect("checked integral"))
                .collect();
            distances.sort_unstable();
            IntegralSet { points, distances }
        })
        .collect();
    out.sort();
    Ok(out)
}
