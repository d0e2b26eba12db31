//! Deciding which finiteness argument applies to a curve through a rational
//! distance set, and recording enough data to recheck it.
//!
//! Every certificate either exhibits a line or circle component (the
//! exempt case) or a curve of genus at least 2 onto which infinitely many
//! points of the set would lift as rational points — impossible by
//! Faltings' theorem.

use std::fmt;

use num_traits::Zero;

use crate::arith::{Field, Rat, GQF, QF};
use crate::certify::{rh_lower_bound, HyperModel, RamificationReport};
use crate::curveops::{
    bad_slope_discriminant, conic_is_degenerate, cone_slices, cubic_is_union_of_lines, cubic_k2_normalize,
    find_singular_points, invert_curve, is_projectively_nonsingular, isotropic_norm, isotropic_slices,
    line_circle_factor, origin_nonsingular, product_hyperelliptic, qj_build, select_coprime_qj,
    simple_roots_excluding, ConeSlices, CubicNormalForm, Curve, FactorKind, FactorReport, QjData,
};
use crate::error::{invalid, Error, Result};
use crate::geom::{dist2, invert_set, NPt, NormalizedSet, Pt, Similarity, Verdict};
use crate::arith::is_rational_square;

/// The argument a certificate uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CaseTag {
    LineComponent,
    CircleComponent,
    Genus2Direct,
    Genus1Ramified,
    Genus0HighDeg,
    CubicInvertedDeg5,
    CubicK2Product,
    ConicInverted,
}

impl CaseTag {
    pub const ALL: [CaseTag; 8] = [
        CaseTag::LineComponent,
        CaseTag::CircleComponent,
        CaseTag::Genus2Direct,
        CaseTag::Genus1Ramified,
        CaseTag::Genus0HighDeg,
        CaseTag::CubicInvertedDeg5,
        CaseTag::CubicK2Product,
        CaseTag::ConicInverted,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::LineComponent => "line-component",
            CaseTag::CircleComponent => "circle-component",
            CaseTag::Genus2Direct => "genus2-direct",
            CaseTag::Genus1Ramified => "genus1-ramified",
            CaseTag::Genus0HighDeg => "genus0-highdeg",
            CaseTag::CubicInvertedDeg5 => "cubic-inverted-deg5",
            CaseTag::CubicK2Product => "cubic-k2-product",
            CaseTag::ConicInverted => "conic-inverted",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        CaseTag::ALL.into_iter().find(|c| c.as_str() == s)
    }

    pub fn is_exempt(self) -> bool {
        matches!(self, CaseTag::LineComponent | CaseTag::CircleComponent)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conclusion {
    /// Only finitely many points of the set lie on the curve.
    FinitelyMany,
    /// The curve has a line or circle component; no finiteness claim.
    Exempt,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::FinitelyMany => "finitely many rational points by Faltings",
            Conclusion::Exempt => "exempt (line/circle)",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Conclusion::FinitelyMany, Conclusion::Exempt].into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why the base curve has the genus used in a Riemann–Hurwitz bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenusBasis {
    /// A smooth plane cubic: irreducible of genus 1.
    SmoothCubic,
    /// A quartic with no line or circle component; genus at least 0.
    NoLineOrCircleFactor,
    /// The caller asserted irreducibility and this genus.
    Asserted(u32),
}

impl GenusBasis {
    pub fn genus(self) -> u32 {
        match self {
            GenusBasis::SmoothCubic => 1,
            GenusBasis::NoLineOrCircleFactor => 0,
            GenusBasis::Asserted(g) => g,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Line or circle components over the curve's field.
    Factors(FactorReport),
    /// A degenerate conic or a cubic that splits into lines over `ℂ`.
    LineUnion,
    /// The caller asserted irreducibility and genus at least 2.
    Asserted { genus: u32 },
    /// The cone cover `z² = |q − apex|²` over the curve.
    Cone { apex: NPt, slices: ConeSlices, basis: GenusBasis, report: RamificationReport },
    /// A cubic inverted about `center`; the cone cover at `apex` (in the
    /// centered, inverted coordinates) plus the places over the circular
    /// points.
    Inverted {
        center: NPt,
        inverted: Curve,
        kappa: u32,
        apex: NPt,
        slices: ConeSlices,
        circular: [usize; 2],
        report: RamificationReport,
    },
    /// A singular cubic through the circular points: three distance
    /// quadratics give a genus-3 hyperelliptic curve.
    CubicProduct { point: NPt, nf: CubicNormalForm, similarity: Similarity, qs: Vec<QjData>, model: HyperModel },
    /// A conic inverted about a set point into a cubic.
    ConicInverted { center: NPt, inverted: Curve, kappa: u32, inner: Box<Certificate> },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub case: CaseTag,
    pub curve: Curve,
    pub witness: Witness,
    pub conclusion: Conclusion,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CertifyOptions {
    /// Assert that the curve is irreducible of this genus.
    pub assert_genus: Option<u32>,
}

fn npt_sub(p: &NPt, q: &NPt) -> NPt {
    NPt::new(&p.r1 - &q.r1, &p.r2 - &q.r2)
}

/// `p / |p|²`.
fn npt_invert(p: &NPt, k: crate::arith::SqfInt) -> Result<NPt> {
    let n = dist2(p, &NPt::origin(), k);
    if n.is_zero() {
        return Err(invalid("cannot invert the center"));
    }
    Ok(NPt::new(&p.r1 / &n, &p.r2 / &n))
}

/// The curve moved so that `p` sits at the origin.
fn centered(c: &Curve, p: &NPt) -> Result<Curve> {
    let (x, y) = p.coords(c.k());
    Curve::new(c.f().translate(&x, &y))
}

fn exempt_case(report: &FactorReport) -> CaseTag {
    if report.factors.iter().any(|f| f.kind == FactorKind::Line) {
        CaseTag::LineComponent
    } else {
        CaseTag::CircleComponent
    }
}

fn finite(case: CaseTag, curve: &Curve, witness: Witness) -> Certificate {
    Certificate { case, curve: curve.clone(), witness, conclusion: Conclusion::FinitelyMany }
}

/// Diagnostic appended to "needs more points" errors.
fn bad_slopes_note(c: &Curve, s: &NormalizedSet) -> String {
    let Some(p) = s.points.first() else {
        return "no points".into();
    };
    match centered(c, p).and_then(|g| bad_slope_discriminant(&g)) {
        Ok(d) => format!("bad slopes at {p} are roots of {d}"),
        Err(e) => format!("bad slopes at {p} unavailable: {e}"),
    }
}

/// Chooses and builds the finiteness argument for `c` and the set points on
/// it. Every point of `s` must lie on `c`.
pub fn certify_curve(c: &Curve, s: &NormalizedSet, opts: &CertifyOptions) -> Result<Certificate> {
    c.check_field(s.k)?;
    if let Some(i) = s.points.iter().position(|p| !c.contains(p)) {
        return Err(invalid(format!("point {i} ({}) is not on {c}", s.points[i])));
    }
    let d = c.degree();
    if let Some(g) = opts.assert_genus {
        let max = (d.saturating_sub(1) * d.saturating_sub(2)) / 2;
        if g > max {
            return Err(invalid(format!("a plane curve of degree {d} has genus at most {max}, not {g}")));
        }
    }
    if d == 1 {
        let report = FactorReport {
            factors: vec![crate::curveops::Factor { kind: FactorKind::Line, poly: c.f().normalize_leading() }],
            cofactor: crate::poly::BPoly::one(c.k()),
        };
        return Ok(Certificate {
            case: CaseTag::LineComponent,
            curve: c.clone(),
            witness: Witness::Factors(report),
            conclusion: Conclusion::Exempt,
        });
    }
    if d <= 4 {
        let report = line_circle_factor(c)?;
        if report.factors.iter().any(|f| f.kind != FactorKind::DegenerateCircle) {
            return Ok(Certificate {
                case: exempt_case(&report),
                curve: c.clone(),
                witness: Witness::Factors(report),
                conclusion: Conclusion::Exempt,
            });
        }
        if !report.is_empty() {
            return Err(Error::NotApplicable(format!(
                "{c} has a circle component of nonpositive squared radius; certify the cofactor {}",
                report.cofactor
            )));
        }
    }
    if (d == 2 && conic_is_degenerate(c)) || (d == 3 && cubic_is_union_of_lines(c)) {
        return Ok(Certificate {
            case: CaseTag::LineComponent,
            curve: c.clone(),
            witness: Witness::LineUnion,
            conclusion: Conclusion::Exempt,
        });
    }
    if let Some(g) = opts.assert_genus.filter(|&g| g >= 2) {
        return Ok(finite(CaseTag::Genus2Direct, c, Witness::Asserted { genus: g }));
    }
    match d {
        2 => certify_conic(c, s, opts),
        3 => certify_cubic(c, s),
        4 => {
            let basis = match opts.assert_genus {
                Some(g) => GenusBasis::Asserted(g),
                None => GenusBasis::NoLineOrCircleFactor,
            };
            cone_search(c, s, basis, CaseTag::Genus0HighDeg)
        }
        _ => match opts.assert_genus {
            Some(g) => cone_search(c, s, GenusBasis::Asserted(g), CaseTag::Genus0HighDeg),
            None => Err(Error::NotCertifiableWithoutAssertion(format!(
                "irreducibility and genus of the degree-{d} curve {c} are not computed; pass a genus assertion"
            ))),
        },
    }
}

fn certify_conic(c: &Curve, s: &NormalizedSet, opts: &CertifyOptions) -> Result<Certificate> {
    let Some(center) = s.points.first() else {
        return Err(Error::NeedsMorePoints("a conic needs a set point to invert about".into()));
    };
    let g = centered(c, center)?;
    let (inverted, kappa) = invert_curve(&g)?;
    let shifted = NormalizedSet::new(s.k, s.points.iter().map(|p| npt_sub(p, center)).collect());
    let inner_set = invert_set(&shifted, 0, &Rat::from_integer(1.into()))?;
    let inner = certify_curve(&inverted, &inner_set, opts)?;
    if inner.conclusion != Conclusion::FinitelyMany {
        return Err(Error::InternalInconsistency(format!("inverted conic {inverted} has a line or circle component")));
    }
    Ok(finite(
        CaseTag::ConicInverted,
        c,
        Witness::ConicInverted { center: center.clone(), inverted, kappa, inner: Box::new(inner) },
    ))
}

/// The least number of ramification points forcing genus at least 2 over a
/// base of genus `g1`.
fn ramification_needed(g1: u32) -> u32 {
    (0..).find(|&r| rh_lower_bound(g1, 2, r).is_ok_and(|b| b.g2_lower >= 2)).expect("finite")
}

/// Tries each set point as the cone apex.
fn cone_search(c: &Curve, s: &NormalizedSet, basis: GenusBasis, case: CaseTag) -> Result<Certificate> {
    let need = ramification_needed(basis.genus());
    let mut notes = Vec::new();
    for p in &s.points {
        let g = centered(c, p)?;
        if !origin_nonsingular(&g)? {
            notes.push(format!("{p}: singular"));
            continue;
        }
        let slices = match cone_slices(g.f()) {
            Ok(sl) => sl,
            Err(Error::IsotropicComponent) => {
                notes.push(format!("{p}: isotropic component"));
                continue;
            }
            Err(e) => return Err(e),
        };
        let count = slices.total() as u32;
        if count >= need {
            let report = rh_lower_bound(basis.genus(), 2, count)?;
            return Ok(finite(case, c, Witness::Cone { apex: p.clone(), slices, basis, report }));
        }
        notes.push(format!("{p}: {count} of {need} ramification points"));
    }
    Err(Error::NeedsMorePoints(format!(
        "no apex gives enough ramification [{}]; {}",
        notes.join("; "),
        bad_slopes_note(c, s)
    )))
}

fn certify_cubic(c: &Curve, s: &NormalizedSet) -> Result<Certificate> {
    if is_projectively_nonsingular(c)? {
        return cone_search(c, s, GenusBasis::SmoothCubic, CaseTag::Genus1Ramified);
    }
    let r = isotropic_norm(c.k());
    let through_circular = c.f().homogeneous_part(3).exact_divide(&r).is_ok();
    let product_attempt = if through_circular && !find_singular_points(c)?.is_empty() {
        Some(cubic_product(c, s))
    } else {
        None
    };
    match product_attempt {
        Some(Ok(cert)) => Ok(cert),
        Some(Err(e)) => match inverted_search(c, s) {
            Ok(cert) => Ok(cert),
            Err(Error::NeedsMorePoints(_)) => Err(e),
            Err(other) => Err(other),
        },
        None => inverted_search(c, s),
    }
}

fn cubic_product(c: &Curve, s: &NormalizedSet) -> Result<Certificate> {
    let k = c.k();
    let (px, py) = find_singular_points(c)?.into_iter().next().expect("checked nonempty");
    let sing = Pt::new(px, py)?;
    let witness = s.points.iter().position(|w| {
        let wp = Pt::from_npt(w, k);
        let d2 = (wp.x.clone() - &sing.x).square() + &(wp.y.clone() - &sing.y).square();
        !d2.is_zero() && d2.as_rational().is_some_and(is_rational_square)
    });
    let Some(wi) = witness else {
        return Err(Error::NeedsMorePoints(
            "no set point lies at a rational distance from the singular point".into(),
        ));
    };
    let (nf, similarity) = cubic_k2_normalize(c, &s.points[wi])?;
    let candidates: Vec<QF> = s
        .points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != wi)
        .map(|(_, q)| similarity.apply(&Pt::from_npt(q, k)))
        .filter(|q| !q.y.is_zero())
        .map(|q| q.x.div(&q.y))
        .collect::<Result<_>>()?;
    let qs = select_coprime_qj(&nf, &candidates)?;
    let model = product_hyperelliptic(&qs)?;
    Ok(finite(
        CaseTag::CubicK2Product,
        c,
        Witness::CubicProduct { point: s.points[wi].clone(), nf, similarity, qs: qs.to_vec(), model },
    ))
}

/// `|p|² / (2(p_x ± i p_y))`: where the isotropic line through the origin
/// meets the one through `p`.
fn isotropic_meet(p: &NPt, k: crate::arith::SqfInt, sign: i64) -> Result<GQF> {
    let (x, y) = p.coords(k);
    let n = QF::from_rat(k, dist2(p, &NPt::origin(), k));
    let two = QF::from_rat(k, Rat::from_integer(2.into()));
    let den = GQF::new(two.clone() * &x, two * &y * &QF::from_rat(k, Rat::from_integer(sign.into())))?;
    Ok(GQF::from_real(n) * &den.invert()?)
}

/// Circular-place ramification of `w² = |q − p|²·|q|²` on the centered
/// curve `g`, for `p` the (centered) second apex.
fn circular_counts(g: &Curve, p: &NPt) -> Result<[usize; 2]> {
    let (plus, minus) = isotropic_slices(g.f());
    if plus.is_zero() || minus.is_zero() {
        return Err(Error::IsotropicComponent);
    }
    let k = g.k();
    Ok([
        simple_roots_excluding(&plus, &isotropic_meet(p, k, 1)?)?,
        simple_roots_excluding(&minus, &isotropic_meet(p, k, -1)?)?,
    ])
}

/// Inverted-cubic data for a center and an apex, both set points.
fn inverted_witness(c: &Curve, center: &NPt, apex: &NPt) -> Result<Witness> {
    let k = c.k();
    let g = centered(c, center)?;
    let (inverted, kappa) = invert_curve(&g)?;
    let p = npt_sub(apex, center);
    let apex_img = npt_invert(&p, k)?;
    let slices = cone_slices(centered(&inverted, &apex_img)?.f())?;
    let circular = circular_counts(&g, &p)?;
    let total = (slices.total() + circular[0] + circular[1]) as u32;
    let report = rh_lower_bound(0, 2, total)?;
    Ok(Witness::Inverted { center: center.clone(), inverted, kappa, apex: apex_img, slices, circular, report })
}

fn inverted_search(c: &Curve, s: &NormalizedSet) -> Result<Certificate> {
    let mut notes = Vec::new();
    for center in &s.points {
        if !origin_nonsingular(&centered(c, center)?)? {
            notes.push(format!("center {center}: singular"));
            continue;
        }
        for apex in s.points.iter().filter(|p| *p != center) {
            match inverted_witness(c, center, apex) {
                Ok(w) => {
                    let Witness::Inverted { report, .. } = &w else { unreachable!() };
                    if report.g2_lower >= 2 {
                        return Ok(finite(CaseTag::CubicInvertedDeg5, c, w));
                    }
                    notes.push(format!("center {center}, apex {apex}: {} ramification points", report.ram_count));
                }
                Err(Error::IsotropicComponent) => notes.push(format!("center {center}, apex {apex}: isotropic component")),
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::NeedsMorePoints(format!(
        "no center/apex pair gives 5 ramification points [{}]; {}",
        notes.join("; "),
        bad_slopes_note(c, s)
    )))
}

impl Certificate {
    /// Recomputes every piece of witness data from the curve.
    pub fn verify(&self) -> Verdict<String> {
        match self.check() {
            Ok(()) => Verdict::Holds,
            Err(e) => Verdict::Fails(e),
        }
    }

    fn check(&self) -> std::result::Result<(), String> {
        let c = &self.curve;
        let err = |e: Error| e.to_string();
        let ensure = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(msg.to_string()) };
        let expected = if self.case.is_exempt() { Conclusion::Exempt } else { Conclusion::FinitelyMany };
        ensure(self.conclusion == expected, "conclusion does not match the case")?;
        match (&self.witness, self.case) {
            (Witness::Factors(report), CaseTag::LineComponent | CaseTag::CircleComponent) => {
                ensure(!report.is_empty(), "no factors listed")?;
                ensure(exempt_case(report) == self.case, "case does not match the factor kinds")?;
                let mut product = report.cofactor.clone();
                for f in &report.factors {
                    let deg = f.poly.total_degree();
                    let shape = match f.kind {
                        FactorKind::Line => deg == Some(1),
                        FactorKind::Circle | FactorKind::DegenerateCircle => {
                            deg == Some(2) && f.poly.coeff(1, 1).is_zero() && f.poly.coeff(2, 0) == f.poly.coeff(0, 2)
                        }
                    };
                    ensure(shape, "factor has the wrong shape")?;
                    product = &product * &f.poly;
                }
                ensure(product.normalize_leading() == c.f().normalize_leading(), "factors do not multiply to the curve")
            }
            (Witness::LineUnion, CaseTag::LineComponent) => ensure(
                conic_is_degenerate(c) || cubic_is_union_of_lines(c),
                "curve is not a union of lines",
            ),
            (Witness::Asserted { genus }, CaseTag::Genus2Direct) => {
                let d = c.degree();
                ensure(*genus >= 2 && *genus <= (d - 1) * (d - 2) / 2, "asserted genus out of range")
            }
            (Witness::Cone { apex, slices, basis, report }, CaseTag::Genus1Ramified | CaseTag::Genus0HighDeg) => {
                ensure(c.contains(apex), "apex is not on the curve")?;
                let g = centered(c, apex).map_err(err)?;
                ensure(origin_nonsingular(&g).map_err(err)?, "apex is singular")?;
                ensure(cone_slices(g.f()).map_err(err)? == *slices, "slices do not match")?;
                ensure(report.recheck(), "ramification bound does not recompute")?;
                ensure(
                    report.deg_pi == 2 && report.ram_count as usize == slices.total(),
                    "ramification count does not match the slices",
                )?;
                ensure(report.g1_lower == basis.genus(), "base genus does not match its basis")?;
                ensure(report.g2_lower >= 2, "bound is below 2")?;
                match (basis, self.case) {
                    (GenusBasis::SmoothCubic, CaseTag::Genus1Ramified) => ensure(
                        c.degree() == 3 && is_projectively_nonsingular(c).map_err(err)?,
                        "cubic is not proven smooth",
                    ),
                    (GenusBasis::NoLineOrCircleFactor, CaseTag::Genus0HighDeg) => ensure(
                        c.degree() == 4 && line_circle_factor(c).map_err(err)?.is_empty(),
                        "quartic has a line or circle factor",
                    ),
                    (GenusBasis::Asserted(g), CaseTag::Genus0HighDeg) => {
                        ensure(c.degree() >= 4 && *g <= 1, "assertion out of range")
                    }
                    _ => Err("genus basis does not fit the case".into()),
                }
            }
            (Witness::Inverted { center, inverted, kappa, apex, slices, circular, report }, CaseTag::CubicInvertedDeg5) => {
                ensure(c.degree() == 3 && c.contains(center), "center is not on the cubic")?;
                ensure(
                    origin_nonsingular(&centered(c, center).map_err(err)?).map_err(err)?,
                    "center is singular",
                )?;
                let p = npt_invert(apex, c.k()).map_err(err)?;
                let original_apex = NPt::new(&p.r1 + &center.r1, &p.r2 + &center.r2);
                let fresh = inverted_witness(c, center, &original_apex).map_err(err)?;
                let stored = Witness::Inverted {
                    center: center.clone(),
                    inverted: inverted.clone(),
                    kappa: *kappa,
                    apex: apex.clone(),
                    slices: slices.clone(),
                    circular: *circular,
                    report: *report,
                };
                ensure(fresh == stored, "inversion data does not recompute")?;
                ensure(c.contains(&original_apex), "apex is not the image of a curve point")?;
                ensure(report.g1_lower == 0 && report.g2_lower >= 2, "bound is below 2")
            }
            (Witness::CubicProduct { point, nf, similarity, qs, model }, CaseTag::CubicK2Product) => {
                let (nf2, sim2) = cubic_k2_normalize(c, point).map_err(err)?;
                ensure(nf2 == *nf && sim2 == *similarity, "normal form does not recompute")?;
                ensure(qs.len() == 3, "need three quadratics")?;
                for q in qs {
                    ensure(qj_build(nf, &q.t_j).map_err(err)? == *q, "quadratic does not recompute")?;
                }
                let arr: [QjData; 3] = [qs[0].clone(), qs[1].clone(), qs[2].clone()];
                let m = product_hyperelliptic(&arr).map_err(err)?;
                ensure(m == *model && m.genus == Some(3), "hyperelliptic model does not recompute")
            }
            (Witness::ConicInverted { center, inverted, kappa, inner }, CaseTag::ConicInverted) => {
                ensure(c.degree() == 2 && c.contains(center), "center is not on the conic")?;
                let (inv, kap) = invert_curve(&centered(c, center).map_err(err)?).map_err(err)?;
                ensure(inv == *inverted && kap == *kappa, "inverted curve does not recompute")?;
                ensure(inner.curve == *inverted, "inner certificate is for another curve")?;
                ensure(inner.conclusion == Conclusion::FinitelyMany, "inner certificate is exempt")?;
                inner.check().map_err(|e| format!("inner: {e}"))
            }
            _ => Err(format!("witness does not fit case {}", self.case)),
        }
    }
}
