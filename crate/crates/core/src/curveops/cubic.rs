//! Singular cubics whose cubic part is divisible by `x² + y²`.
//!
//! After moving the singular point to the origin and a point of the set to
//! `(1, 0)` the curve reads `(−x + by)(x² + y²) + x² + dy² + exy`. Lines
//! `x = ty` through the singular point parametrize it, and the squared
//! distance between the points with parameters `t` and `t_j` factors as
//! `(t − t_j)²(t² + 1)(t_j² + 1)·Q_j(t)` (after clearing denominators).
//! Three coprime `Q_j` give the genus-3 curve `z² = (t² + 1)Q₁Q₂Q₃`.

use std::fmt;

use crate::arith::{rational_sqrt, Field, RealField, Rat, SqfInt, GQF, QF};
use crate::certify::{squarefree_product, HyperModel};
use crate::curveops::singular::find_singular_points;
use crate::curveops::Curve;
use crate::error::{invalid, Error, Result};
use crate::geom::{NPt, Similarity};
use crate::poly::{poly_gcd, BPoly, UPoly};

/// Coefficients of `(−x + by)(x² + y²) + x² + dy² + exy`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicNormalForm {
    pub b: QF,
    pub d: QF,
    pub e: QF,
}

impl fmt::Display for CubicNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={} d={} e={}", self.b, self.d, self.e)
    }
}

impl CubicNormalForm {
    /// Validates the coefficients. The curve is reducible when
    /// `b² + eb + d = 0`: then `p(b) = 0` and the line `x = by` through the
    /// singular point is a component (`b = d = 0` gives the line `x = 0`). It
    /// is also reducible when `d = 1, e = 0` (it becomes
    /// `(x² + y²)(1 − x + by)`). A cubic with a double point at the origin has
    /// no other splittings: any factor through the origin divides the cubic
    /// part `(−x + by)(x² + y²)`.
    pub fn new(b: QF, d: QF, e: QF) -> Result<Self> {
        let k = b.k();
        if d.k() != k || e.k() != k {
            return Err(Error::FieldMismatch { left: k.get(), right: if d.k() != k { d.k() } else { e.k() }.get() });
        }
        if (b.square() + &(e.clone() * &b) + &d).is_zero() {
            return Err(Error::ReducibleCurve(format!("b^2 + e*b + d = 0: the line x = ({b})*y is a component")));
        }
        if d.is_one_elem() && e.is_zero() {
            return Err(Error::ReducibleCurve("d = 1, e = 0: the curve contains x^2+y^2".into()));
        }
        Ok(CubicNormalForm { b, d, e })
    }

    pub fn from_rats(b: Rat, d: Rat, e: Rat, k: SqfInt) -> Result<Self> {
        CubicNormalForm::new(QF::from_rat(k, b), QF::from_rat(k, d), QF::from_rat(k, e))
    }

    pub fn k(&self) -> SqfInt {
        self.b.k()
    }

    /// The normal-form polynomial.
    pub fn poly(&self) -> BPoly<QF> {
        let k = self.k();
        let one = QF::one(k);
        BPoly::from_terms(
            k,
            [
                ((3, 0), -one.clone()),
                ((1, 2), -one.clone()),
                ((2, 1), self.b.clone()),
                ((0, 3), self.b.clone()),
                ((2, 0), one),
                ((0, 2), self.d.clone()),
                ((1, 1), self.e.clone()),
            ],
        )
    }

    pub fn curve(&self) -> Curve {
        Curve::new(self.poly()).expect("cubic")
    }
}

fn qf_int(k: SqfInt, n: i64) -> QF {
    QF::from_rat(k, Rat::from_integer(n.into()))
}

/// Moves the singular point of `C` to the origin and `witness` to `(1, 0)`
/// by `z ↦ (z − P)/(w − P)`, then divides by the `x²` coefficient.
pub fn cubic_k2_normalize(c: &Curve, witness: &NPt) -> Result<(CubicNormalForm, Similarity)> {
    if c.degree() != 3 {
        return Err(invalid(format!("{c} is not a cubic")));
    }
    let k = c.k();
    let f = c.f();
    let r = &BPoly::x(k).pow(2) + &BPoly::y(k).pow(2);
    if f.homogeneous_part(3).exact_divide(&r).is_err() {
        return Err(Error::WrongCase(format!("x^2+y^2 does not divide the cubic part of {c}")));
    }
    let sing = find_singular_points(c)?;
    let Some((px, py)) = sing.into_iter().next() else {
        return Err(Error::NotApplicable(format!("{c} has no singular point over Q(sqrt {k})")));
    };
    if !c.contains(witness) {
        return Err(invalid(format!("witness {witness} is not on {c}")));
    }
    let (wx, wy) = witness.coords(k);
    let dx = wx - &px;
    let dy = wy - &py;
    let rho2 = dx.square() + &dy.square();
    if rho2.is_zero() {
        return Err(invalid("the witness is the singular point"));
    }
    match rho2.as_rational().map(rational_sqrt) {
        Some(Ok(Some(_))) => {}
        _ => return Err(invalid(format!("squared distance {rho2} from the singular point is not a rational square"))),
    }
    let x = BPoly::x(k);
    let y = BPoly::y(k);
    let xe = &(&x.scale(&dx) - &y.scale(&dy)) + &BPoly::constant(px.clone());
    let ye = &(&x.scale(&dy) + &y.scale(&dx)) + &BPoly::constant(py.clone());
    let h = f.substitute(&xe, &ye)?;
    let cx2 = h.coeff(2, 0);
    if cx2.is_zero() {
        return Err(Error::ReducibleCurve(format!(
            "{c} contains the line through its singular point and the witness"
        )));
    }
    let h = h.scale(&cx2.inv()?);
    let nf = CubicNormalForm::new(h.coeff(0, 3), h.coeff(0, 2), h.coeff(1, 1))?;
    if nf.poly() != h {
        return Err(Error::InternalInconsistency(format!("normalized cubic {h} is not in normal form")));
    }
    let sim = Similarity::new(
        GQF::new(px, py)?,
        GQF::new(dx, dy)?.invert()?,
    )?;
    Ok((nf, sim))
}

/// `p(t) = t² + et + d` and `q(t) = (t − b)(t² + 1)`, with the curve
/// parametrized by `y = p/q`, `x = t·y`.
pub fn cubic_parametrize(nf: &CubicNormalForm) -> (UPoly<QF>, UPoly<QF>) {
    let k = nf.k();
    let p = UPoly::new(k, vec![nf.d.clone(), nf.e.clone(), QF::one(k)]);
    let q = &UPoly::linear_root(nf.b.clone()) * &UPoly::new(k, vec![QF::one(k), QF::zero(k), QF::one(k)]);
    (p, q)
}

/// Closed forms of the coefficients of `Q_j` as functions of `t_j`.
pub mod closed_form {
    use super::*;

    fn quad(t: &QF, a2: QF, a1: QF, a0: QF) -> QF {
        a2 * &t.square() + &(a1 * t) + &a0
    }

    /// `(1 + (e + b)²)t² + 2(bd + de − b)t + d² + b²`.
    pub fn c2(nf: &CubicNormalForm, t: &QF) -> QF {
        let (b, d, e, k) = (&nf.b, &nf.d, &nf.e, nf.k());
        let two = qf_int(k, 2);
        quad(
            t,
            QF::one(k) + &(e.clone() + b).square(),
            two * &(b.clone() * d + &(d.clone() * e) - b),
            d.square() + &b.square(),
        )
    }

    /// `2(bd + de − b)t² + 2(b² + d² − bed − b²d − be − d)t + 2(bd + b²e − bd²)`.
    pub fn c1(nf: &CubicNormalForm, t: &QF) -> QF {
        let (b, d, e, k) = (&nf.b, &nf.d, &nf.e, nf.k());
        let two = qf_int(k, 2);
        let lin = b.square() + &d.square() - &(b.clone() * e * d) - &(b.square() * d) - &(b.clone() * e) - d;
        quad(
            t,
            two.clone() * &(b.clone() * d + &(d.clone() * e) - b),
            two.clone() * &lin,
            two * &(b.clone() * d + &(b.square() * e) - &(b.clone() * &d.square())),
        )
    }

    /// `(d² + b²)t² + 2(b²e + db − d²b)t + b²e² + b²d² + d² + 2ebd`.
    pub fn c0(nf: &CubicNormalForm, t: &QF) -> QF {
        let (b, d, e, k) = (&nf.b, &nf.d, &nf.e, nf.k());
        let two = qf_int(k, 2);
        quad(
            t,
            d.square() + &b.square(),
            two.clone() * &(b.square() * e + &(d.clone() * b) - &(d.square() * b)),
            b.square() * &e.square() + &(b.square() * &d.square()) + &d.square() + &(two * e * b * d),
        )
    }

    /// A commonly quoted form of `c₁` whose linear coefficient carries `−bd`
    /// where the expansion gives `−b²d`. The two agree exactly when
    /// `bd(b − 1)t = 0`.
    pub fn c1_quoted(nf: &CubicNormalForm, t: &QF) -> QF {
        let (b, d, k) = (&nf.b, &nf.d, nf.k());
        let correction = qf_int(k, 2) * b * d * &(b.clone() - &QF::one(k)) * t;
        c1(nf, t) + &correction
    }

    /// The quoted "leading coefficient" of the undivided quadratic,
    /// `(t² + 1)·c₀(t)`. The expansion's actual leading coefficient is
    /// `(t² + 1)·c₂(t)`; the quoted leading and constant forms are swapped.
    pub fn leading_quoted(nf: &CubicNormalForm, t: &QF) -> QF {
        (t.square() + &QF::one(nf.k())) * &c0(nf, t)
    }

    /// The quoted "constant term", `(t² + 1)·c₂(t)`.
    pub fn constant_quoted(nf: &CubicNormalForm, t: &QF) -> QF {
        (t.square() + &QF::one(nf.k())) * &c2(nf, t)
    }
}

/// One quadratic `Q_j = c₂t² + c₁t + c₀` for a parameter `t_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QjData {
    pub t_j: QF,
    pub q: UPoly<QF>,
    pub c2: QF,
    pub c1: QF,
    pub c0: QF,
}

impl QjData {
    /// `c₁² − 4c₂c₀`.
    pub fn discriminant(&self) -> QF {
        self.c1.square() - &(qf_int(self.t_j.k(), 4) * &self.c2 * &self.c0)
    }

    /// Negative discriminant under the real embedding: the roots are a
    /// conjugate non-real pair.
    pub fn has_imaginary_roots(&self) -> bool {
        self.discriminant().signum_real() < 0
    }
}

/// `(p(t)q(t_j) − p(t_j)q(t))² + (t p(t)q(t_j) − t_j p(t_j)q(t))²`: the
/// squared distance between the points with parameters `t` and `t_j`,
/// times `q(t)²q(t_j)²`.
pub fn distance_numerator(nf: &CubicNormalForm, t_j: &QF) -> UPoly<QF> {
    let k = nf.k();
    let (p, q) = cubic_parametrize(nf);
    let pj = p.eval(t_j);
    let qj = q.eval(t_j);
    let t = UPoly::x(k);
    let a = &p.scale(&qj) - &q.scale(&pj);
    let b = &(&t * &p).scale(&qj) - &q.scale(&(t_j.clone() * &pj));
    &(&a * &a) + &(&b * &b)
}

fn degenerate(t: &QF, why: &str) -> Error {
    Error::DegenerateParameter { t: t.to_string(), reason: why.into() }
}

/// Builds `Q_j` by exact division of [`distance_numerator`] by
/// `(t − t_j)²(t² + 1)(t_j² + 1)` and checks it against the closed forms.
pub fn qj_build(nf: &CubicNormalForm, t_j: &QF) -> Result<QjData> {
    let k = nf.k();
    if t_j.k() != k {
        return Err(Error::FieldMismatch { left: k.get(), right: t_j.k().get() });
    }
    let (p, q) = cubic_parametrize(nf);
    if q.eval(t_j).is_zero() {
        return Err(degenerate(t_j, "q(t_j) = 0: the parameter is not a point of the curve"));
    }
    // Both branches through the singular point have p = 0; the distance to
    // the other branch's parameter is then a real double root of Q_j.
    if p.eval(t_j).is_zero() {
        return Err(degenerate(t_j, "p(t_j) = 0: the parameter is the singular point"));
    }
    let c2 = closed_form::c2(nf, t_j);
    let c0 = closed_form::c0(nf, t_j);
    if c2.is_zero() {
        return Err(degenerate(t_j, "c2(t_j) = 0"));
    }
    if c0.is_zero() {
        return Err(degenerate(t_j, "c0(t_j) = 0"));
    }
    let c1 = closed_form::c1(nf, t_j);
    let dnum = distance_numerator(nf, t_j);
    if dnum.degree() != Some(6) {
        return Err(Error::InternalInconsistency(format!("distance numerator {dnum} is not of degree 6")));
    }
    let line = UPoly::linear_root(t_j.clone());
    let circ = UPoly::new(k, vec![QF::one(k), QF::zero(k), QF::one(k)]);
    let divisor = &(&line * &line) * &circ;
    let quotient = dnum
        .exact_divide(&divisor)
        .map_err(|e| Error::InternalInconsistency(format!("distance numerator not divisible: {e}")))?;
    let scale = (t_j.square() + &QF::one(k)).inv()?;
    let qj = quotient.scale(&scale);
    let expected = UPoly::new(k, vec![c0.clone(), c1.clone(), c2.clone()]);
    if qj != expected {
        return Err(Error::InternalInconsistency(format!(
            "Q_j = {qj} differs from the closed form {expected}"
        )));
    }
    Ok(QjData { t_j: t_j.clone(), q: qj, c2, c1, c0 })
}

/// Outcome of checking the degree-6 factorization at one parameter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IdentityCheck {
    /// `D(t) = (t − t_j)²(t² + 1)(t_j² + 1)(c₂t² + c₁t + c₀)` with the
    /// closed-form coefficients.
    pub factorization: bool,
    pub c2: bool,
    pub c1: bool,
    pub c0: bool,
    /// The quoted variant of `c₁` equals the actual coefficient.
    pub c1_quoted: bool,
    /// The quoted leading-coefficient form equals the actual leading
    /// coefficient of `D/((t − t_j)²(t² + 1))`.
    pub leading_quoted: bool,
    /// The quoted constant-term form equals the actual constant term.
    pub constant_quoted: bool,
}

/// Checks the factorization of [`distance_numerator`] directly, without
/// going through [`qj_build`]'s error paths. Returns `None` for parameters
/// where the construction is undefined (`q(t_j) = 0`).
pub fn check_identity(nf: &CubicNormalForm, t_j: &QF) -> Result<Option<IdentityCheck>> {
    let k = nf.k();
    let (_, q) = cubic_parametrize(nf);
    if q.eval(t_j).is_zero() {
        return Ok(None);
    }
    let dnum = distance_numerator(nf, t_j);
    let line = UPoly::linear_root(t_j.clone());
    let circ = UPoly::new(k, vec![QF::one(k), QF::zero(k), QF::one(k)]);
    let (quot, rem) = dnum.div_rem(&(&(&line * &line) * &circ))?;
    let s = t_j.square() + &QF::one(k);
    let c2 = closed_form::c2(nf, t_j);
    let c1 = closed_form::c1(nf, t_j);
    let c0 = closed_form::c0(nf, t_j);
    let actual = |i: usize| quot.coeff(i);
    Ok(Some(IdentityCheck {
        factorization: rem.is_zero()
            && quot == UPoly::new(k, vec![c0.clone(), c1.clone(), c2.clone()]).scale(&s),
        c2: actual(2) == s.clone() * &c2,
        c1: actual(1) == s.clone() * &c1,
        c0: actual(0) == s.clone() * &c0,
        c1_quoted: actual(1) == s.clone() * &closed_form::c1_quoted(nf, t_j),
        leading_quoted: actual(2) == closed_form::leading_quoted(nf, t_j),
        constant_quoted: actual(0) == closed_form::constant_quoted(nf, t_j),
    }))
}

/// The roots any two proportional `Q_j` would be forced to share: `b` and
/// `(be + d − d²)/(bd + de − b)` (the second is absent when the denominator
/// vanishes). Both are real, so they cannot be the imaginary roots of a
/// `Q_j`, and proportional `Q_j` occur for finitely many parameters only.
pub fn forced_roots(nf: &CubicNormalForm) -> (QF, Option<QF>) {
    let (b, d, e) = (&nf.b, &nf.d, &nf.e);
    let num = b.clone() * e + d - &d.square();
    let den = b.clone() * d + &(d.clone() * e) - b;
    (b.clone(), den.inv().ok().map(|i| num * &i))
}

/// Greedily picks, in input order, three candidates whose `Q_j` are
/// pairwise coprime and coprime to `t² + 1`.
pub fn select_coprime_qj(nf: &CubicNormalForm, candidates: &[QF]) -> Result<[QjData; 3]> {
    let k = nf.k();
    let circ = UPoly::new(k, vec![QF::one(k), QF::zero(k), QF::one(k)]);
    let mut chosen: Vec<QjData> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let mut seen: Vec<&QF> = Vec::new();
    for t in candidates {
        if seen.contains(&t) {
            notes.push(format!("t={t}: duplicate"));
            continue;
        }
        seen.push(t);
        let qd = match qj_build(nf, t) {
            Ok(q) => q,
            Err(e) => {
                notes.push(format!("t={t}: {e}"));
                continue;
            }
        };
        if !poly_gcd(&qd.q, &circ)?.is_constant() {
            notes.push(format!("t={t}: Q shares a root with t^2+1"));
            continue;
        }
        let mut clash = None;
        for other in &chosen {
            if !poly_gcd(&qd.q, &other.q)?.is_constant() {
                clash = Some(other.t_j.clone());
                break;
            }
        }
        if let Some(o) = clash {
            notes.push(format!("t={t}: Q shares a root with the one for t={o}"));
            continue;
        }
        chosen.push(qd);
        if chosen.len() == 3 {
            let mut it = chosen.into_iter();
            return Ok([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]);
        }
    }
    let (x1, x2) = forced_roots(nf);
    let forced = match x2 {
        Some(x2) => format!("{x1}, {x2}"),
        None => format!("{x1}"),
    };
    Err(Error::PoolExhausted(format!(
        "found {} of 3 coprime quadratics; rejected: [{}]; shared roots are forced to be real ({forced})",
        chosen.len(),
        notes.join("; ")
    )))
}

/// `z² = (t² + 1)·Q₁Q₂Q₃`, checked squarefree: genus 3.
pub fn product_hyperelliptic(qs: &[QjData; 3]) -> Result<HyperModel> {
    let k = *qs[0].q.ctx();
    let circ = UPoly::new(k, vec![QF::one(k), QF::zero(k), QF::one(k)]);
    let mut factors = vec![("t^2+1".to_string(), circ)];
    for q in qs {
        factors.push((format!("Q(t_j={})", q.t_j), q.q.clone()));
    }
    let rhs = squarefree_product(&factors)?;
    HyperModel::new(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn nf(b: i64, d: i64, e: i64) -> CubicNormalForm {
        CubicNormalForm::from_rats(rat(b), rat(d), rat(e), SqfInt::ONE).unwrap()
    }

    fn q(n: i64) -> QF {
        QF::from_rat(SqfInt::ONE, rat(n))
    }

    #[test]
    fn parametrization() {
        let (p, qq) = cubic_parametrize(&nf(1, 2, 0));
        assert_eq!(p.to_string(), "x^2+2");
        assert_eq!(qq.to_string(), "x^3-x^2+x-1");
        // The cleared form of f(t p/q, p/q) vanishes: q³ f(tp/q, p/q) = p²(−tp + bp)(t²+1)... check via
        // substitution into the homogenized identity.
        let n = nf(1, 1, 1);
        let (p, qq) = cubic_parametrize(&n);
        let t = UPoly::x(SqfInt::ONE);
        let f = n.poly();
        // f is cubic with no constant/linear terms: q³ f(x/q·..) = f₃(tp, p) + q f₂(tp, p).
        let f3 = f.homogeneous_part(3).substitute_univariate(&(&t * &p), &p).unwrap();
        let f2 = f.homogeneous_part(2).substitute_univariate(&(&t * &p), &p).unwrap();
        assert!((&f3 + &(&qq * &f2)).is_zero());
    }

    #[test]
    fn qj_example() {
        let qd = qj_build(&nf(1, 1, 1), &q(2)).unwrap();
        assert_eq!(qd.q.to_string(), "26*x^2+2*x+17");
        assert!(qd.has_imaginary_roots());
        assert!(matches!(qj_build(&nf(1, 1, 1), &q(1)), Err(Error::DegenerateParameter { .. })));
    }

    #[test]
    fn selection_and_product() {
        let n = nf(1, 1, 1);
        let qs = select_coprime_qj(&n, &[q(2), q(3), q(4)]).unwrap();
        let model = product_hyperelliptic(&qs).unwrap();
        assert_eq!(model.rhs.degree(), Some(8));
        assert_eq!(model.genus, Some(3));
        assert!(matches!(select_coprime_qj(&n, &[q(2), q(2), q(3)]), Err(Error::PoolExhausted(_))));
        let same = [qs[0].clone(), qs[0].clone(), qs[1].clone()];
        assert!(matches!(product_hyperelliptic(&same), Err(Error::CommonRoot { .. })));
        let mut circ = qs[0].clone();
        circ.q = UPoly::from_rats(SqfInt::ONE, &[rat(1), rat(0), rat(1)]);
        assert!(matches!(
            product_hyperelliptic(&[circ, qs[1].clone(), qs[2].clone()]),
            Err(Error::CommonRoot { .. })
        ));
    }

    #[test]
    fn reducible_forms_rejected() {
        assert!(matches!(CubicNormalForm::from_rats(rat(0), rat(0), rat(3), SqfInt::ONE), Err(Error::ReducibleCurve(_))));
        assert!(matches!(CubicNormalForm::from_rats(rat(0), rat(1), rat(0), SqfInt::ONE), Err(Error::ReducibleCurve(_))));
        // b² + eb + d = 9 − 8 − 1 = 0: the line x = 3y is a component.
        assert!(matches!(CubicNormalForm::from_rats(rat(3), rat(-1), ratio(-8, 3), SqfInt::ONE), Err(Error::ReducibleCurve(_))));
    }

    #[test]
    fn normalize_round_trip() {
        let n = nf(1, 2, 0);
        let c = n.curve();
        let (back, _) = cubic_k2_normalize(&c, &NPt::new(rat(1), rat(0))).unwrap();
        assert_eq!(back, n);
        // translate by (1, 1): g(x, y) = f(x − 1, y − 1), witness (2, 1)
        let one = q(1);
        let shifted = Curve::new(c.f().translate(&-one.clone(), &-one)).unwrap();
        let (back, sim) = cubic_k2_normalize(&shifted, &NPt::new(rat(2), rat(1))).unwrap();
        assert_eq!(back, n);
        assert_eq!(sim.translation, GQF::new(q(1), q(1)).unwrap());
        // (x² + y²)(1 − x)
        let bad = Curve::from_rational(
            &BPoly::from_rat_terms((), &[(rat(1), 2, 0), (rat(1), 0, 2), (rat(-1), 3, 0), (rat(-1), 1, 2)]),
            SqfInt::ONE,
        )
        .unwrap();
        assert!(matches!(cubic_k2_normalize(&bad, &NPt::new(rat(1), rat(0))), Err(Error::ReducibleCurve(_))));
    }
}
