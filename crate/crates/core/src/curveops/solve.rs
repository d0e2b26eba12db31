//! Exact zero-dimensional solving: roots in the coefficient field of a
//! univariate polynomial, and common zeros of a few bivariate polynomials by
//! resultant elimination.

use crate::arith::{Field, Rat, QF};
use crate::error::Result;
use crate::poly::{poly_gcd, rational_roots, sylvester_resultant, BPoly, UPoly};

/// Fields whose own elements can be found as roots.
pub trait RootField: Field {
    /// Distinct roots of `p` lying in the field itself (not the closure).
    fn field_roots(p: &UPoly<Self>) -> Result<Vec<Self>>;
}

impl RootField for Rat {
    fn field_roots(p: &UPoly<Rat>) -> Result<Vec<Rat>> {
        rational_roots(p)
    }
}

impl RootField for QF {
    fn field_roots(p: &UPoly<QF>) -> Result<Vec<QF>> {
        qf_roots(p)
    }
}

/// Roots in `ℚ(√k)` of a polynomial over `ℚ(√k)`.
///
/// Writing the unknown as `a + b√k` splits `p(a + b√k) = P₀(a,b) + √k·P₁(a,b)`
/// into two rational polynomials whose common rational zeros are the roots.
/// For `k > 1` the two halves never share a factor: `P₀ ± √k P₁` factor into
/// the linear forms `a + b√k − αᵢ` and `a − b√k − ᾱᵢ`, which are pairwise
/// non-proportional.
pub fn qf_roots(p: &UPoly<QF>) -> Result<Vec<QF>> {
    let k = *p.ctx();
    if p.is_zero() {
        return Err(crate::error::invalid("roots of the zero polynomial"));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    if k.is_one() {
        let q = p.map((), |c| c.a().clone());
        return Ok(rational_roots(&q)?.into_iter().map(|r| QF::from_rat(k, r)).collect());
    }
    let pb = BPoly::from_upoly_x(p);
    let a = BPoly::x(k);
    let b = BPoly::y(k);
    let arg = &a + &b.scale(&QF::sqrt_k(k));
    let g = pb.substitute(&arg, &b)?;
    let p0 = g.map((), |c| c.a().clone());
    let p1 = g.map((), |c| c.b().clone());
    let zeros = common_zeros(&[p0, p1])?.unwrap_or_default();
    let mut out: Vec<QF> = zeros.into_iter().map(|(a, b)| QF::new(k, a, b)).collect();
    out.retain(|z| p.eval(z).is_zero());
    Ok(out)
}

/// `f(x0, y)` as a polynomial in `y`.
pub fn specialize_x<F: Field>(f: &BPoly<F>, x0: &F) -> UPoly<F> {
    let ctx = f.ctx().clone();
    let n = f.degree_y().map_or(0, |d| d as usize + 1);
    let mut cs = vec![F::zero_in(&ctx); n];
    for ((i, j), c) in f.terms() {
        let v = cs[*j as usize].clone() + &(c.clone() * &x0.pow(*i));
        cs[*j as usize] = v;
    }
    UPoly::new(ctx, cs)
}

/// A nonzero polynomial in `x` vanishing at the `x`-coordinate of every
/// common zero, or `None` when every available eliminant vanishes
/// identically.
pub(crate) fn eliminant<F: Field>(polys: &[BPoly<F>]) -> Result<Option<UPoly<F>>> {
    let mut acc: Option<UPoly<F>> = None;
    let push = |e: UPoly<F>, acc: &mut Option<UPoly<F>>| -> Result<()> {
        if e.is_zero() {
            return Ok(());
        }
        *acc = Some(match acc.take() {
            None => e.monic(),
            Some(a) => poly_gcd(&a, &e)?,
        });
        Ok(())
    };
    for p in polys {
        if p.degree_y() == Some(0) {
            push(p.to_upoly_x()?, &mut acc)?;
        }
    }
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let (a, b) = (&polys[i], &polys[j]);
            if a.degree_y().unwrap_or(0) == 0 || b.degree_y().unwrap_or(0) == 0 {
                continue;
            }
            let r = sylvester_resultant(&a.coeffs_in_y(), &b.coeffs_in_y());
            push(r, &mut acc)?;
        }
    }
    Ok(acc)
}

fn common_zeros_direct<F: RootField>(polys: &[BPoly<F>]) -> Result<Option<Vec<(F, F)>>> {
    let Some(h) = eliminant(polys)? else {
        return Ok(None);
    };
    let mut out = Vec::new();
    if h.is_constant() {
        return Ok(Some(out));
    }
    for x0 in F::field_roots(&h)? {
        let mut g: Option<UPoly<F>> = None;
        for p in polys {
            let s = specialize_x(p, &x0);
            if s.is_zero() {
                continue;
            }
            g = Some(match g {
                None => s.monic(),
                Some(a) => poly_gcd(&a, &s)?,
            });
        }
        let Some(g) = g else {
            // The whole vertical line x = x0 is common.
            return Ok(None);
        };
        if g.is_constant() {
            continue;
        }
        for y0 in F::field_roots(&g)? {
            out.push((x0.clone(), y0));
        }
    }
    Ok(Some(out))
}

/// Every common zero in `F²` of the given polynomials, or `None` when the
/// common zero set is infinite (the polynomials share a curve component).
///
/// Polynomials that are identically zero impose no condition and are
/// ignored. When every pairwise resultant vanishes the system is sheared
/// `x ← x + λy` for a few small `λ` before giving up.
pub fn common_zeros<F: RootField>(polys: &[BPoly<F>]) -> Result<Option<Vec<(F, F)>>> {
    let polys: Vec<BPoly<F>> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let Some(first) = polys.first() else {
        return Ok(None);
    };
    let ctx = first.ctx().clone();
    if polys.iter().any(|p| p.total_degree() == Some(0)) {
        return Ok(Some(Vec::new()));
    }
    if let Some(z) = common_zeros_direct(&polys)? {
        return Ok(Some(z));
    }
    for lam in 1..=4i64 {
        let l = F::from_rat(&ctx, &Rat::from_integer(lam.into()));
        let x = &BPoly::x(ctx.clone()) + &BPoly::y(ctx.clone()).scale(&l);
        let y = BPoly::y(ctx.clone());
        let sheared: Vec<BPoly<F>> = polys.iter().map(|p| p.substitute(&x, &y)).collect::<Result<_>>()?;
        if let Some(z) = common_zeros_direct(&sheared)? {
            // (x', y') solves the sheared system iff (x' + λy', y') solves the original.
            return Ok(Some(z.into_iter().map(|(a, b)| (a + &(l.clone() * &b), b)).collect()));
        }
    }
    Ok(None)
}
