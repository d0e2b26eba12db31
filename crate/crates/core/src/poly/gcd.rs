//! Greatest common divisors and squarefree structure of univariate
//! polynomials.

use crate::arith::Field;
use crate::error::{invalid, Result};
use crate::poly::UPoly;

/// `lc(b)^(deg a - deg b + 1) · a  mod  b`, computed without inverting
/// anything.
fn pseudo_rem<F: Field>(a: &UPoly<F>, b: &UPoly<F>) -> UPoly<F> {
    let db = b.degree().expect("pseudo-remainder by zero");
    let lcb = b.lc();
    let mut r = a.clone();
    let mut e = (a.degree().map_or(0, |da| da + 1)).saturating_sub(db) as u32;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let s = UPoly::monomial(r.lc(), dr - db);
        r = &r.scale(&lcb) - &(&s * b);
        e = e.saturating_sub(1);
    }
    r.scale(&lcb.pow(e))
}

/// Monic gcd via the subresultant remainder sequence (Collins), which keeps
/// intermediate coefficients from growing the way plain Euclid does over
/// `ℚ(√k)`. `gcd(f, 0) = monic(f)`, `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(f: &UPoly<F>, g: &UPoly<F>) -> Result<UPoly<F>> {
    f.check_same(g)?;
    if g.is_zero() {
        return Ok(f.monic());
    }
    if f.is_zero() {
        return Ok(g.monic());
    }
    let (mut a, mut b) = if f.degree() >= g.degree() {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    let ctx = f.ctx().clone();
    let mut gg = F::one_in(&ctx);
    let mut h = F::one_in(&ctx);
    loop {
        let d = (a.degree().unwrap() - b.degree().unwrap()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return Ok(b.monic());
        }
        if r.degree() == Some(0) {
            return Ok(UPoly::one(ctx));
        }
        a = b;
        let denom = gg.clone() * &h.pow(d);
        b = r.scale(&denom.inv()?);
        gg = a.lc();
        // h <- g^d / h^(d-1)
        h = if d == 0 {
            h
        } else {
            gg.pow(d).div(&h.pow(d - 1))?
        };
    }
}

/// Product of the distinct irreducible factors, monic: `f / gcd(f, f')`.
pub fn squarefree_part<F: Field>(f: &UPoly<F>) -> Result<UPoly<F>> {
    if f.is_zero() {
        return Err(invalid("squarefree part of the zero polynomial"));
    }
    let g = poly_gcd(f, &f.derivative())?;
    let (q, _) = f.div_rem(&g)?;
    Ok(q.monic())
}

pub fn is_squarefree<F: Field>(f: &UPoly<F>) -> Result<bool> {
    if f.is_zero() {
        return Err(invalid("squarefree test on the zero polynomial"));
    }
    Ok(poly_gcd(f, &f.derivative())?.is_constant())
}

/// Yun's decomposition: `f = lc · a₁ a₂² a₃³ ⋯` with the `aᵢ` squarefree and
/// pairwise coprime. Entry `i` of the result is `a_{i+1}`.
pub fn squarefree_decomposition<F: Field>(f: &UPoly<F>) -> Result<Vec<UPoly<F>>> {
    if f.is_zero() {
        return Err(invalid("squarefree decomposition of the zero polynomial"));
    }
    let mut out = Vec::new();
    let fp = f.derivative();
    let a0 = poly_gcd(f, &fp)?;
    let mut b = f.div_rem(&a0)?.0;
    let c = fp.div_rem(&a0)?.0;
    let mut d = &c - &b.derivative();
    while !b.is_constant() {
        let a = poly_gcd(&b, &d)?;
        let nb = b.div_rem(&a)?.0;
        let c = d.div_rem(&a)?.0;
        d = &c - &nb.derivative();
        out.push(a);
        b = nb;
    }
    while out.last().is_some_and(|a| a.is_constant()) {
        out.pop();
    }
    Ok(out)
}

/// Number of distinct roots of multiplicity exactly one (over the algebraic
/// closure).
pub fn simple_root_count<F: Field>(f: &UPoly<F>) -> Result<usize> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts.first().and_then(|a| a.degree()).unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rat};

    fn p(cs: &[i64]) -> UPoly<Rat> {
        UPoly::new((), cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[1, 0, 1]), &p(&[0, 1, 1])).unwrap(), p(&[1]));
        let f = p(&[4, 0, -2, 6]);
        assert_eq!(poly_gcd(&f, &f).unwrap(), f.monic());
        assert_eq!(poly_gcd(&f, &p(&[])).unwrap(), f.monic());
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2) -> (x-1)(x+2)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(squarefree_part(&f).unwrap(), &p(&[-1, 1]) * &p(&[2, 1]));
        assert_eq!(squarefree_part(&p(&[1, 0, 1])).unwrap(), p(&[1, 0, 1]));
        let t = p(&[1, 0, 1]);
        assert_eq!(squarefree_part(&(&t * &t)).unwrap(), t);
        assert!(squarefree_part(&p(&[])).is_err());
    }

    #[test]
    fn yun_multiplicities() {
        // x (x-1)^2 (x+1)^3
        let x = p(&[0, 1]);
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        let f = &(&x * &a.pow(2)) * &b.pow(3);
        let parts = squarefree_decomposition(&f.scale(&rat(5))).unwrap();
        assert_eq!(parts, vec![x, a, b]);
        assert_eq!(simple_root_count(&f).unwrap(), 1);
        assert_eq!(simple_root_count(&p(&[3])).unwrap(), 0);
    }
}
