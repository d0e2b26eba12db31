//! The image of a curve under the inversion `(x, y) ↦ (x, y)/(x² + y²)`.

use crate::arith::QF;
use crate::curveops::Curve;
use crate::error::Result;
use crate::poly::BPoly;

/// `x² + y²` over the curve's field.
pub fn isotropic_norm(k: crate::arith::SqfInt) -> BPoly<QF> {
    &BPoly::x(k).pow(2) + &BPoly::y(k).pow(2)
}

/// `(x² + y²)^κ · f(x/(x² + y²), y/(x² + y²))` with the least `κ` making it a
/// polynomial.
///
/// Writing `f = Σ f_j` by homogeneous degree and `v_j` for the power of
/// `x² + y²` dividing `f_j`, the substituted part `f_j` becomes
/// `(f_j / r^{v_j}) / r^{j − v_j}`, so `κ = max_j (j − v_j)`. The image's
/// parts have pairwise distinct degrees `2κ − j`, and the part with
/// `j − v_j = κ` is not divisible by `r`; hence no power of `r` can be
/// cleared from the result.
pub fn invert_curve(c: &Curve) -> Result<(Curve, u32)> {
    let f = c.f();
    let k = c.k();
    let r = isotropic_norm(k);
    let parts: Vec<(u32, BPoly<QF>, u32)> = (0..=c.degree())
        .map(|j| (j, f.homogeneous_part(j)))
        .filter(|(_, p)| !p.is_zero())
        .map(|(j, p)| {
            let v = p.divisor_power(&r) as u32;
            (j, p, v)
        })
        .collect();
    let kappa = parts.iter().map(|&(j, _, v)| j - v).max().expect("nonzero curve");
    let mut out = BPoly::zero(k);
    for (j, p, v) in parts {
        let mut reduced = p;
        for _ in 0..v {
            reduced = reduced.exact_divide(&r)?;
        }
        out = &out + &(&reduced * &r.pow(kappa + v - j));
    }
    Ok((Curve::new(out)?, kappa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, SqfInt};

    fn curve(terms: &[(i64, u32, u32)]) -> Curve {
        let t: Vec<_> = terms.iter().map(|&(c, i, j)| (rat(c), i, j)).collect();
        Curve::from_rational(&BPoly::from_rat_terms((), &t), SqfInt::ONE).unwrap()
    }

    #[test]
    fn inversion_examples() {
        let (line, kappa) = invert_curve(&curve(&[(1, 2, 0), (1, 0, 2), (-2, 1, 0)])).unwrap();
        assert_eq!((line.to_string().as_str(), kappa), ("-2*x+1", 1));
        let (cubic, kappa) = invert_curve(&curve(&[(1, 0, 1), (-1, 2, 0)])).unwrap();
        assert_eq!((cubic.to_string().as_str(), kappa), ("x^2*y+y^3-x^2", 2));
        let (quintic, kappa) = invert_curve(&curve(&[(1, 1, 0), (1, 3, 0)])).unwrap();
        assert_eq!(kappa, 3);
        assert_eq!(quintic.degree(), 5);
        assert_eq!(quintic, curve(&[(1, 5, 0), (2, 3, 2), (1, 1, 4), (1, 3, 0)]));
    }

    #[test]
    fn double_inversion_returns_the_curve() {
        let c = curve(&[(1, 0, 1), (-1, 2, 0), (3, 1, 1)]);
        let (once, _) = invert_curve(&c).unwrap();
        let (twice, _) = invert_curve(&once).unwrap();
        assert!(twice.same_up_to_scale(&c));
    }
}
