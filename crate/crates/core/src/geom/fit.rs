//! Curves through `d(d+3)/2` points and the greedy curve-general-position
//! extraction.

use std::collections::BTreeSet;

use crate::arith::{Field, SqfInt, QF};
use crate::curveops::Curve;
use crate::error::{invalid, Error, Result};
use crate::geom::integral::{integral_kernel, integral_row, vanishes, Zk};
use crate::geom::point::{NPt, NormalizedSet};
use crate::geom::position::verify_general_position;
use crate::geom::rational::Verdict;
use crate::poly::BPoly;

/// Number of points that determine a curve of degree `d`.
pub fn points_for_degree(d: u32) -> usize {
    (d * (d + 3) / 2) as usize
}

/// Monomials of degree at most `d`: total degree descending, then power of
/// `y` descending. The first nonzero coefficient in this order is the one
/// normalized to 1.
pub fn monomial_order(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for t in (0..=d).rev() {
        for j in (0..=t).rev() {
            out.push((t - j, j));
        }
    }
    out
}

/// Kernel of a matrix over a field, as a list of basis vectors.
fn kernel<F: Field>(mut m: Vec<Vec<F>>, cols: usize, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero_elem()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = x.clone() * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero_elem() {
                let factor = m[r][c].clone();
                for cc in 0..cols {
                    let v = m[r][cc].clone() - &(factor.clone() * &m[row][cc]);
                    m[r][cc] = v;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero_in(ctx); cols];
            v[f] = F::one_in(ctx);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// The monomials of `monos` evaluated at `p`.
fn monomial_row(p: &NPt, k: SqfInt, monos: &[(u32, u32)]) -> Vec<QF> {
    let (x, y) = p.coords(k);
    monos.iter().map(|&(i, j)| x.pow(i) * &y.pow(j)).collect()
}

/// Basis of the degree-`≤ d` polynomials vanishing at all points, each
/// canonicalized so its first nonzero coefficient (in [`monomial_order`]) is
/// 1. Generic input gives exactly one curve; more means the points do not
/// determine a unique curve.
pub fn fit_curve(points: &[NPt], k: SqfInt, d: u32) -> Result<Vec<Curve>> {
    if d == 0 {
        return Err(invalid("curve degree must be positive"));
    }
    let need = points_for_degree(d);
    if points.len() != need {
        return Err(invalid(format!(
            "degree {d} needs exactly {need} points, got {}",
            points.len()
        )));
    }
    let monos = monomial_order(d);
    let rows = points.iter().map(|p| monomial_row(p, k, &monos)).collect();
    kernel(rows, monos.len(), &k)
        .into_iter()
        .map(|v| {
            let lead = v.iter().find(|c| !c.is_zero_elem()).expect("kernel vector").inv()?;
            let terms = monos.iter().zip(v).map(|(&m, c)| (m, c * &lead));
            Curve::new(BPoly::from_terms(k, terms))
        })
        .collect()
}

/// Indices of the points lying on `c`.
pub fn points_on_curve(s: &NormalizedSet, c: &Curve) -> Result<Vec<usize>> {
    c.check_field(s.k)?;
    Ok((0..s.len()).filter(|&i| c.contains(&s.points[i])).collect())
}

/// Visits every `size`-subset of `0..n` that contains `must`, in
/// lexicographic order.
fn subsets_containing(n: usize, size: usize, must: usize, mut f: impl FnMut(&[usize])) {
    let others: Vec<usize> = (0..n).filter(|&i| i != must).collect();
    if size == 0 || size - 1 > others.len() {
        return;
    }
    let r = size - 1;
    let mut idx: Vec<usize> = (0..r).collect();
    let mut buf = Vec::with_capacity(size);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| others[i]));
        buf.push(must);
        f(&buf);
        // advance
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + others.len() - r {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The greedy procedure behind curve-general position, on a finite set.
///
/// Points are taken in input order. A point joins the output unless it was
/// excluded; after each addition, every curve of degree `d ≤ max_d` through
/// `d(d+3)/2` output points (including the new one) excludes all of the
/// set's points that lie on it. When the chosen points do not determine a
/// unique curve (kernel dimension above one), any further point would lie on
/// some curve of the pencil, so all remaining points are excluded.
pub fn extract_curve_general(s: &NormalizedSet, max_d: u32) -> Result<NormalizedSet> {
    if max_d == 0 {
        return Err(invalid("maximum degree must be positive"));
    }
    if let Verdict::Fails(w) = verify_general_position(s) {
        return Err(Error::GeneralPositionViolated { witness: w });
    }
    // Each point's integral monomial row per degree; a curve's coefficient
    // vector dotted with a row is (a multiple of) its value at that point.
    let rows: Vec<Vec<Vec<Zk>>> = (1..=max_d)
        .map(|d| {
            let monos = monomial_order(d);
            s.points.iter().map(|p| integral_row(p, s.k, d, &monos)).collect()
        })
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut excluded: BTreeSet<usize> = BTreeSet::new();
    let mut closed = false;
    for i in 0..s.len() {
        if closed || excluded.contains(&i) {
            continue;
        }
        chosen.push(i);
        let n = chosen.len();
        for d in 1..=max_d {
            let need = points_for_degree(d);
            if need > n {
                break;
            }
            let drows = &rows[d as usize - 1];
            subsets_containing(n, need, n - 1, |sub| {
                if closed {
                    return;
                }
                let m = sub.iter().map(|&j| drows[chosen[j]].clone()).collect();
                let Some(curve) = integral_kernel(m, s.k) else {
                    closed = true;
                    return;
                };
                // Only later points can still be chosen; an earlier chosen
                // point on this curve would have excluded the newest one.
                for j in i + 1..s.len() {
                    if !excluded.contains(&j) && vanishes(&curve, &drows[j], s.k) {
                        excluded.insert(j);
                    }
                }
            });
        }
    }
    let points = chosen.iter().map(|&i| s.points[i].clone()).collect();
    Ok(NormalizedSet { k: s.k, points, verified: s.verified })
}
