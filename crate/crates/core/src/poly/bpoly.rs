use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Field, Rat};
use crate::error::{invalid, Error, Result};
use crate::poly::print::{write_terms, Coeff};
use crate::poly::UPoly;

/// Sparse bivariate polynomial: exponent pair `(i, j)` for `x^i y^j` mapped
/// to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BPoly<F: Field> {
    ctx: F::Ctx,
    terms: BTreeMap<(u32, u32), F>,
}

/// Graded order used for leading terms in division: total degree first, then
/// the power of `y`.
fn graded_key(&(i, j): &(u32, u32)) -> (u32, u32) {
    (i + j, j)
}

impl<F: Field> BPoly<F> {
    pub fn zero(ctx: F::Ctx) -> Self {
        BPoly { ctx, terms: BTreeMap::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one(ctx: F::Ctx) -> Self {
        Self::constant(F::one_in(&ctx))
    }

    pub fn monomial(c: F, i: u32, j: u32) -> Self {
        let mut p = BPoly::zero(c.ctx());
        p.add_term(i, j, c);
        p
    }

    pub fn x(ctx: F::Ctx) -> Self {
        Self::monomial(F::one_in(&ctx), 1, 0)
    }

    pub fn y(ctx: F::Ctx) -> Self {
        Self::monomial(F::one_in(&ctx), 0, 1)
    }

    pub fn from_terms(ctx: F::Ctx, terms: impl IntoIterator<Item = ((u32, u32), F)>) -> Self {
        let mut p = BPoly::zero(ctx);
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Builds from `(rational coefficient, i, j)` triples.
    pub fn from_rat_terms(ctx: F::Ctx, terms: &[(Rat, u32, u32)]) -> Self {
        let t: Vec<_> = terms.iter().map(|(c, i, j)| ((*i, *j), F::from_rat(&ctx, c))).collect();
        Self::from_terms(ctx, t)
    }

    /// Embeds a univariate polynomial as a polynomial in `x`.
    pub fn from_upoly_x(p: &UPoly<F>) -> Self {
        let t = p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone()));
        Self::from_terms(p.ctx().clone(), t)
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: F) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.remove(&(i, j)) {
            Some(old) => {
                let s = old + &c;
                if !s.is_zero_elem() {
                    self.terms.insert((i, j), s);
                }
            }
            None => {
                self.terms.insert((i, j), c);
            }
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| F::zero_in(&self.ctx))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        F::check_same(&self.ctx, &other.ctx)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.ctx.clone(), self.terms.iter().map(|(k, v)| (*k, v.clone() * c)))
    }

    /// Divides by the coefficient that comes first in the graded order from
    /// the top (highest total degree, then highest power of `y`), making it 1.
    pub fn normalize_leading(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn leading_term(&self) -> Option<((u32, u32), F)> {
        self.terms
            .iter()
            .max_by_key(|(k, _)| graded_key(k))
            .map(|(k, c)| (*k, c.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BPoly::one(self.ctx.clone());
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

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero_in(&self.ctx);
        for ((i, j), c) in &self.terms {
            acc = acc + &(c.clone() * &x.pow(*i) * &y.pow(*j));
        }
        acc
    }

    /// `f(x_expr, y_expr)`.
    pub fn substitute(&self, x_expr: &BPoly<F>, y_expr: &BPoly<F>) -> Result<BPoly<F>> {
        self.check_same(x_expr)?;
        self.check_same(y_expr)?;
        let dx = self.degree_x().unwrap_or(0);
        let dy = self.degree_y().unwrap_or(0);
        let mut xp = vec![BPoly::one(self.ctx.clone())];
        for _ in 0..dx {
            let next = &xp[xp.len() - 1] * x_expr;
            xp.push(next);
        }
        let mut yp = vec![BPoly::one(self.ctx.clone())];
        for _ in 0..dy {
            let next = &yp[yp.len() - 1] * y_expr;
            yp.push(next);
        }
        let mut out = BPoly::zero(self.ctx.clone());
        for ((i, j), c) in &self.terms {
            let t = (&xp[*i as usize] * &yp[*j as usize]).scale(c);
            out = &out + &t;
        }
        Ok(out)
    }

    /// `f(x_expr(t), y_expr(t))` for univariate expressions.
    pub fn substitute_univariate(&self, x_expr: &UPoly<F>, y_expr: &UPoly<F>) -> Result<UPoly<F>> {
        let s = self.substitute(&BPoly::from_upoly_x(x_expr), &BPoly::from_upoly_x(y_expr))?;
        s.to_upoly_x()
    }

    /// `f(x + dx, y + dy)`.
    pub fn translate(&self, dx: &F, dy: &F) -> Self {
        let x = &BPoly::x(self.ctx.clone()) + &BPoly::constant(dx.clone());
        let y = &BPoly::y(self.ctx.clone()) + &BPoly::constant(dy.clone());
        self.substitute(&x, &y).expect("same field")
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.ctx.clone(),
            self.terms.iter().filter(|((i, j), _)| i + j == d).map(|(k, c)| (*k, c.clone())),
        )
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|(i, j)| i + j);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.ctx.clone(),
            self.terms.iter().filter(|((i, _), _)| *i > 0).map(|((i, j), c)| {
                ((i - 1, *j), c.clone() * &F::from_rat(&self.ctx, &Rat::from_integer((*i).into())))
            }),
        )
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(
            self.ctx.clone(),
            self.terms.iter().filter(|((_, j), _)| *j > 0).map(|((i, j), c)| {
                ((*i, j - 1), c.clone() * &F::from_rat(&self.ctx, &Rat::from_integer((*j).into())))
            }),
        )
    }

    /// Converts a polynomial free of `y` to a univariate polynomial in `x`.
    pub fn to_upoly_x(&self) -> Result<UPoly<F>> {
        if self.terms.keys().any(|(_, j)| *j > 0) {
            return Err(invalid("polynomial depends on y"));
        }
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut cs = vec![F::zero_in(&self.ctx); n];
        for ((i, _), c) in &self.terms {
            cs[*i as usize] = c.clone();
        }
        Ok(UPoly::new(self.ctx.clone(), cs))
    }

    /// Coefficients as a polynomial in `y` whose coefficients are polynomials
    /// in `x`, low degree first.
    pub fn coeffs_in_y(&self) -> Vec<UPoly<F>> {
        let n = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<F>> = vec![Vec::new(); n];
        for ((i, j), c) in &self.terms {
            let row = &mut rows[*j as usize];
            if row.len() <= *i as usize {
                row.resize(*i as usize + 1, F::zero_in(&self.ctx));
            }
            row[*i as usize] = c.clone();
        }
        rows.into_iter().map(|r| UPoly::new(self.ctx.clone(), r)).collect()
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self::from_terms(self.ctx.clone(), self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())))
    }

    pub fn map<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> BPoly<G> {
        BPoly::from_terms(ctx, self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Exact multivariate division; errors when `g` does not divide `self`.
    pub fn exact_divide(&self, g: &Self) -> Result<Self>
    where
        F: Coeff,
    {
        self.check_same(g)?;
        let ((gi, gj), gc) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let gc_inv = gc.inv()?;
        let mut r = self.clone();
        let mut q = BPoly::zero(self.ctx.clone());
        while let Some(((ri, rj), rc)) = r.leading_term() {
            if ri < gi || rj < gj {
                return Err(Error::RemainderNonzero { remainder: r.to_string() });
            }
            let t = BPoly::monomial(rc * &gc_inv, ri - gi, rj - gj);
            r = &r - &(&t * g);
            q = &q + &t;
        }
        Ok(q)
    }

    /// Largest `e` with `g^e | self` (for nonzero, nonconstant `g`).
    pub fn divisor_power(&self, g: &Self) -> usize
    where
        F: Coeff,
    {
        if self.is_zero() {
            return 0;
        }
        let mut e = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_divide(g) {
            e += 1;
            cur = q;
        }
        e
    }
}

fn assert_same<F: Field>(a: &F::Ctx, b: &F::Ctx) {
    assert!(a == b, "mixed-field polynomial arithmetic");
}

impl<F: Field> Add for &BPoly<F> {
    type Output = BPoly<F>;
    fn add(self, o: &BPoly<F>) -> BPoly<F> {
        assert_same::<F>(&self.ctx, &o.ctx);
        let mut out = self.clone();
        for ((i, j), c) in &o.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &BPoly<F> {
    type Output = BPoly<F>;
    fn sub(self, o: &BPoly<F>) -> BPoly<F> {
        self + &(-o)
    }
}

impl<F: Field> Neg for &BPoly<F> {
    type Output = BPoly<F>;
    fn neg(self) -> BPoly<F> {
        BPoly::from_terms(self.ctx.clone(), self.terms.iter().map(|(k, c)| (*k, -c.clone())))
    }
}

impl<F: Field> Mul for &BPoly<F> {
    type Output = BPoly<F>;
    fn mul(self, o: &BPoly<F>) -> BPoly<F> {
        assert_same::<F>(&self.ctx, &o.ctx);
        let mut out = BPoly::zero(self.ctx.clone());
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &o.terms {
                out.add_term(i + k, j + l, a.clone() * b);
            }
        }
        out
    }
}

impl<F: Field + Coeff> fmt::Display for BPoly<F> {
    /// Grammar form, terms by descending total degree then descending power
    /// of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let terms = keys.iter().map(|k| (self.terms[k].clone(), vec![("x", k.0), ("y", k.1)]));
        let mut s = String::new();
        write_terms(&mut s, terms)?;
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn bp(terms: &[(i64, u32, u32)]) -> BPoly<Rat> {
        let t: Vec<_> = terms.iter().map(|(c, i, j)| (rat(*c), *i, *j)).collect();
        BPoly::from_rat_terms((), &t)
    }

    #[test]
    fn substitute_examples() {
        let circle = bp(&[(1, 2, 0), (1, 0, 2)]);
        let x = BPoly::x(());
        let zero = BPoly::zero(());
        assert_eq!(circle.substitute(&x, &zero).unwrap(), bp(&[(1, 2, 0)]));

        let parab = bp(&[(1, 0, 1), (-1, 2, 0)]);
        let t = UPoly::x(());
        let t2 = t.pow(2);
        assert!(parab.substitute_univariate(&t, &t2).unwrap().is_zero());

        let f = bp(&[(1, 1, 0), (1, 0, 1)]);
        let xs = bp(&[(1, 1, 0), (1, 0, 0)]);
        let ys = bp(&[(1, 0, 1), (-1, 0, 0)]);
        assert_eq!(f.substitute(&xs, &ys).unwrap(), f);
    }

    #[test]
    fn derivatives_and_parts() {
        let f = bp(&[(1, 0, 2), (-1, 3, 0), (1, 1, 0)]); // y^2 - x^3 + x
        assert_eq!(f.partial_x(), bp(&[(-3, 2, 0), (1, 0, 0)]));
        assert_eq!(f.partial_y(), bp(&[(2, 0, 1)]));
        assert_eq!(f.homogeneous_part(3), bp(&[(-1, 3, 0)]));
        assert_eq!(f.total_degree(), Some(3));
    }

    #[test]
    fn exact_division() {
        let a = bp(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]);
        let b = bp(&[(1, 0, 1), (-1, 1, 0)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_divide(&b).unwrap(), a);
        assert_eq!(prod.exact_divide(&a).unwrap(), b);
        assert!(a.exact_divide(&b).is_err());
        let r = bp(&[(1, 2, 0), (1, 0, 2)]);
        assert_eq!((&r.pow(3) * &b).divisor_power(&r), 3);
    }

    #[test]
    fn display() {
        assert_eq!(bp(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]).to_string(), "x^2+y^2-1");
        assert_eq!(bp(&[(-2, 1, 1), (3, 0, 1)]).to_string(), "-2*x*y+3*y");
        assert_eq!(BPoly::<Rat>::zero(()).to_string(), "0");
    }
}
