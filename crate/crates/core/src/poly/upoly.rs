use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Field, Rat};
use crate::error::{Error, Result};
use crate::poly::print::{write_terms, Coeff};

/// Dense univariate polynomial, coefficients indexed by exponent.
///
/// Trailing zeros are never stored, so the zero polynomial has an empty
/// coefficient list and [`UPoly::degree`] returns `None`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(ctx: F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        UPoly { ctx, coeffs }
    }

    pub fn zero(ctx: F::Ctx) -> Self {
        UPoly { ctx, coeffs: Vec::new() }
    }

    pub fn one(ctx: F::Ctx) -> Self {
        let one = F::one_in(&ctx);
        UPoly { ctx, coeffs: vec![one] }
    }

    pub fn constant(c: F) -> Self {
        UPoly::new(c.ctx(), vec![c])
    }

    /// The variable itself.
    pub fn x(ctx: F::Ctx) -> Self {
        Self::monomial(F::one_in(&ctx), 1)
    }

    pub fn monomial(c: F, n: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero_in(&ctx); n];
        coeffs.push(c);
        UPoly::new(ctx, coeffs)
    }

    /// Builds from rationals, low degree first.
    pub fn from_rats(ctx: F::Ctx, cs: &[Rat]) -> Self {
        let coeffs = cs.iter().map(|q| F::from_rat(&ctx, q)).collect();
        UPoly::new(ctx, coeffs)
    }

    /// Monic linear factor `x - root`.
    pub fn linear_root(root: F) -> Self {
        let ctx = root.ctx();
        UPoly::new(ctx.clone(), vec![-root, F::one_in(&ctx)])
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero_in(&self.ctx))
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| F::zero_in(&self.ctx))
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        F::check_same(&self.ctx, &other.ctx)
    }

    pub fn scale(&self, c: &F) -> Self {
        UPoly::new(self.ctx.clone(), self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Ok(inv) => self.scale(&inv),
            Err(_) => self.clone(),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero_in(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * &F::from_rat(&self.ctx, &Rat::from_integer(i.into())))
            .collect();
        UPoly::new(self.ctx.clone(), coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UPoly::one(self.ctx.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = UPoly::zero(self.ctx.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of `x` as a factor (the index of the first nonzero
    /// coefficient). Zero polynomial returns 0.
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero_elem()).unwrap_or(0)
    }

    /// Divides out `x^n`; the caller guarantees `n <= x_adic_valuation`.
    pub fn shift_down(&self, n: usize) -> Self {
        UPoly::new(self.ctx.clone(), self.coeffs.iter().skip(n).cloned().collect())
    }

    pub fn map<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(ctx, self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division `self = q * g + r` with `deg r < deg g`.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_same(g)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = g.lc().inv()?;
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= dg {
            return Ok((UPoly::zero(self.ctx.clone()), self.clone()));
        }
        let mut q = vec![F::zero_in(&self.ctx); n - dg];
        for i in (dg..n).rev() {
            let c = r[i].clone() * &lc_inv;
            if c.is_zero_elem() {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = r[i - dg + j].clone() - &(c.clone() * gj);
                r[i - dg + j] = t;
            }
            q[i - dg] = c;
        }
        r.truncate(dg);
        Ok((UPoly::new(self.ctx.clone(), q), UPoly::new(self.ctx.clone(), r)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.div_rem(g)?.1)
    }

    /// Quotient of an exact division; a nonzero remainder is an error that
    /// carries the remainder.
    pub fn exact_divide(&self, g: &Self) -> Result<Self>
    where
        F: Coeff,
    {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::RemainderNonzero { remainder: r.to_string() })
        }
    }

    pub fn divides(&self, f: &Self) -> Result<bool> {
        Ok(f.div_rem(self)?.1.is_zero())
    }
}

/// `f / g`, required to be exact.
pub fn exact_divide<F: Field + Coeff>(f: &UPoly<F>, g: &UPoly<F>) -> Result<UPoly<F>> {
    f.exact_divide(g)
}

fn assert_same<F: Field>(a: &F::Ctx, b: &F::Ctx) {
    assert!(a == b, "mixed-field polynomial arithmetic");
}

impl<F: Field> Add for &UPoly<F> {
    type Output = UPoly<F>;
    fn add(self, o: &UPoly<F>) -> UPoly<F> {
        assert_same::<F>(&self.ctx, &o.ctx);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect();
        UPoly::new(self.ctx.clone(), coeffs)
    }
}

impl<F: Field> Sub for &UPoly<F> {
    type Output = UPoly<F>;
    fn sub(self, o: &UPoly<F>) -> UPoly<F> {
        assert_same::<F>(&self.ctx, &o.ctx);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect();
        UPoly::new(self.ctx.clone(), coeffs)
    }
}

impl<F: Field> Mul for &UPoly<F> {
    type Output = UPoly<F>;
    fn mul(self, o: &UPoly<F>) -> UPoly<F> {
        assert_same::<F>(&self.ctx, &o.ctx);
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.ctx.clone());
        }
        let mut out = vec![F::zero_in(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + &(a.clone() * b);
                out[i + j] = t;
            }
        }
        UPoly::new(self.ctx.clone(), out)
    }
}

impl<F: Field> Neg for &UPoly<F> {
    type Output = UPoly<F>;
    fn neg(self) -> UPoly<F> {
        UPoly::new(self.ctx.clone(), self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field + Coeff> UPoly<F> {
    /// Text form in the polynomial grammar, using `var` as the variable name.
    pub fn display_var(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero_elem())
            .map(|(i, c)| (c.clone(), vec![(var, i as u32)]));
        let mut s = String::new();
        write_terms(&mut s, terms).expect("writing to a String");
        s
    }
}

impl<F: Field + Coeff> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(cs: &[i64]) -> UPoly<Rat> {
        UPoly::new((), cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trailing_zeros_dropped() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn exact_divide_examples() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(p(&[-1, 0, 1]).exact_divide(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        let f = p(&[3, 1, 4, 1, 5]);
        assert_eq!(f.exact_divide(&p(&[1])).unwrap(), f);
        let err = p(&[1, 0, 1]).exact_divide(&p(&[-1, 1])).unwrap_err();
        assert_eq!(err, Error::RemainderNonzero { remainder: "2".into() });
        assert_eq!(f.exact_divide(&p(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn expand_then_divide_degree_six() {
        // Oracle: build the product, then divide one factor back out.
        let t2p1 = p(&[1, 0, 1]);
        let tm2 = p(&[-2, 1]);
        let q = p(&[17, 2, 26]);
        let prod = &(&(&t2p1 * &tm2) * &tm2) * &q;
        assert_eq!(prod.degree(), Some(6));
        let div = &(&tm2 * &tm2) * &t2p1;
        assert_eq!(prod.exact_divide(&div).unwrap(), q);
    }

    #[test]
    fn eval_compose_derivative() {
        let f = p(&[1, -3, 0, 2]); // 2x^3 - 3x + 1
        assert_eq!(f.eval(&ratio(1, 2)), ratio(1, 4) - ratio(3, 2) + rat(1));
        assert_eq!(f.derivative(), p(&[-3, 0, 6]));
        let g = p(&[1, 1]);
        let h = f.compose(&g);
        for x in -3..4 {
            assert_eq!(h.eval(&rat(x)), f.eval(&rat(x + 1)));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2-1");
        assert_eq!(p(&[0, -1, 2]).display_var("t"), "2*t^2-t");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
