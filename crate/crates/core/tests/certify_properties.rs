//! Riemann–Hurwitz bookkeeping, the line obstruction, circle reduction and
//! certificate self-verification.

mod common;

use proptest::prelude::*;

use common::{curve, distinct_rats, positive_rat, small_rat};
use ratdist::arith::{rat, ratio, Field, Rat, SqfInt, QF};
use ratdist::certify::{
    build_line_obstruction, certify_curve, reduce_circle_to_line, rh_lower_bound, CaseTag, Certificate,
    CertifyOptions, Conclusion, ImageRole, Witness,
};
use ratdist::construct::unit_circle_rational_set;
use ratdist::curveops::{cubic_parametrize, Curve, CubicNormalForm};
use ratdist::geom::{collinear, verify_rational_set, NPt, NormalizedSet};
use ratdist::poly::is_squarefree;
use ratdist::Error;

/// `(m² − 1)/(2m)`: parameters with `1 + t²` a rational square.
fn pythagorean_parameter() -> impl Strategy<Value = Rat> {
    (1i64..12, 1i64..12)
        .prop_filter("m ≠ 1", |(a, b)| a != b)
        .prop_map(|(a, b)| {
            let m = ratio(a, b);
            (&m * &m - rat(1)) / (rat(2) * &m)
        })
}

/// Points of the normal-form cubic at the given parameters.
fn cubic_points(nf: &CubicNormalForm, ts: &[Rat]) -> Vec<NPt> {
    let k = nf.k();
    let (p, q) = cubic_parametrize(nf);
    ts.iter()
        .filter_map(|t| {
            let tq = QF::from_rat(k, t.clone());
            let y = p.eval(&tq).div(&q.eval(&tq)).ok()?;
            let y = y.as_rational()?.clone();
            (!y.is_zero_elem()).then(|| NPt::new(t * &y, y))
        })
        .collect()
}

fn assert_self_verifies(cert: &Certificate) {
    assert!(cert.verify().holds(), "{:?}", cert.verify());
    let expected = if cert.case.is_exempt() { Conclusion::Exempt } else { Conclusion::FinitelyMany };
    assert_eq!(cert.conclusion, expected);
}

#[test]
fn rh_monotone_on_a_grid() {
    // 4 base genera × 25 ramification counts = 100 cases.
    for g1 in 0..4u32 {
        for ram in 0..25u32 {
            let here = rh_lower_bound(g1, 2, ram).unwrap().g2_lower;
            assert!(here <= rh_lower_bound(g1, 2, ram + 1).unwrap().g2_lower);
            assert!(here <= rh_lower_bound(g1 + 1, 2, ram).unwrap().g2_lower);
            // 2g₂ − 2 ≥ 2(2g₁ − 2) + ram, and g₂ − 1 would violate it.
            let rhs = 2 * (2 * g1 as i64 - 2) + ram as i64;
            assert!(2 * here as i64 - 2 >= rhs);
            assert!(here == 0 || 2 * (here as i64 - 1) - 2 < rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn obstruction_is_squarefree(
        k in prop_oneof![Just(1u64), Just(2), Just(3), Just(5)],
        pts in prop::collection::btree_set((small_rat(), positive_rat()), 3..=3),
    ) {
        let pts: Vec<NPt> = pts.into_iter().map(|(a, b)| NPt::new(a, b)).collect();
        let model = build_line_obstruction(&[pts[0].clone(), pts[1].clone(), pts[2].clone()], SqfInt::new(k).unwrap()).unwrap();
        prop_assert!(is_squarefree(&model.rhs).unwrap());
        prop_assert_eq!(model.rhs.degree(), Some(6));
        prop_assert_eq!(model.genus, Some(2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn circle_reduction_collinear(params in distinct_rats(3, 9), c in 0usize..9) {
        let Ok(on) = unit_circle_rational_set(&params) else { return Ok(()) };
        let c = c % on.len();
        // The center of the circle is at distance 1 from all of its points.
        let mut points = on.points.clone();
        points.push(NPt::new(rat(0), rat(0)));
        let s = NormalizedSet::new(SqfInt::ONE, points).verify();
        prop_assert!(s.verified);
        let circle = curve(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]);
        let (img, prov) = reduce_circle_to_line(&s, &circle, c).unwrap();
        let line: Vec<&NPt> =
            img.points.iter().zip(&prov).filter(|(_, p)| p.role == ImageRole::OnCurve).map(|(q, _)| q).collect();
        prop_assert_eq!(line.len(), on.len() - 1);
        for w in line.windows(3) {
            prop_assert!(collinear(w[0], w[1], w[2]));
        }
        prop_assert!(verify_rational_set(&img).holds());
        prop_assert_eq!(prov.last().unwrap().role, ImageRole::Center);
        prop_assert_eq!(img.points.last().unwrap(), &s.points[c]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn certificates_verify_themselves(
        b in small_rat(),
        d in small_rat(),
        e in small_rat(),
        ts in prop::collection::btree_set(pythagorean_parameter(), 5..8),
    ) {
        let Ok(nf) = CubicNormalForm::from_rats(b, d, e, SqfInt::ONE) else { return Ok(()) };
        let ts: Vec<Rat> = ts.into_iter().collect();
        let pts = cubic_points(&nf, &ts);
        let s = NormalizedSet::new(SqfInt::ONE, pts);
        match certify_curve(&nf.curve(), &s, &CertifyOptions::default()) {
            Ok(cert) => {
                assert_self_verifies(&cert);
                prop_assert!(!cert.case.is_exempt());
                // Any change to the stored witness is caught.
                let mut bad = cert.clone();
                match &mut bad.witness {
                    Witness::CubicProduct { qs, .. } => qs[0].c1 = qs[0].c1.clone() + &QF::one(SqfInt::ONE),
                    Witness::Inverted { circular, .. } => circular[0] += 1,
                    Witness::Cone { report, .. } => report.ram_count += 1,
                    _ => bad.conclusion = Conclusion::Exempt,
                }
                prop_assert!(!bad.verify().holds());
            }
            Err(Error::NeedsMorePoints(_) | Error::PoolExhausted(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn inverted_parabola_is_a_product_case() {
    // y(x² + y²) = x² with x = ty: y = t²/(1 + t²), |(x, y)| = t²/√(1 + t²).
    let c = curve(&[(1, 2, 1), (1, 0, 3), (-1, 2, 0)]);
    let pts: Vec<NPt> = [ratio(3, 4), ratio(4, 3), ratio(5, 12), ratio(12, 5), ratio(8, 15), ratio(7, 24)]
        .iter()
        .map(|t| {
            let y = t * t / (rat(1) + t * t);
            NPt::new(t * &y, y)
        })
        .collect();
    let s = NormalizedSet::new(SqfInt::ONE, pts);
    let cert = certify_curve(&c, &s, &CertifyOptions::default()).unwrap();
    assert_eq!(cert.case, CaseTag::CubicK2Product);
    let Witness::CubicProduct { model, .. } = &cert.witness else { panic!("{:?}", cert.witness) };
    assert_eq!(model.genus, Some(3));
    assert_self_verifies(&cert);
}

/// Rational points of small height on `c`.
fn small_points(c: &Curve, h: i64) -> Vec<NPt> {
    let mut coords: Vec<Rat> = Vec::new();
    for den in 1..=h {
        for num in -h * den..=h * den {
            let q = ratio(num, den);
            if !coords.contains(&q) {
                coords.push(q);
            }
        }
    }
    let mut out = Vec::new();
    for x in &coords {
        for y in &coords {
            let p = NPt::new(x.clone(), y.clone());
            if c.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Sanity sweep: points of small height on a certified curve that keep the
/// set rational never change the verdict.
#[test]
fn certified_curves_stay_certified_under_small_points() {
    let c = curve(&[(1, 0, 2), (-1, 3, 0), (1, 1, 0)]);
    let s = NormalizedSet::new(
        SqfInt::ONE,
        vec![NPt::new(rat(0), rat(0)), NPt::new(rat(1), rat(0)), NPt::new(rat(-1), rat(0))],
    );
    let found = small_points(&c, 4);
    // y² = x³ − x has exactly these affine rational points.
    assert_eq!(found.len(), 3);
    let mut grown = s.points.clone();
    for p in found {
        if !grown.contains(&p) {
            grown.push(p);
        }
    }
    let grown = NormalizedSet::new(SqfInt::ONE, grown).verify();
    assert!(grown.verified);
    let cert = certify_curve(&c, &grown, &CertifyOptions::default()).unwrap();
    assert_eq!(cert.case, CaseTag::Genus1Ramified);
    assert_self_verifies(&cert);
}
