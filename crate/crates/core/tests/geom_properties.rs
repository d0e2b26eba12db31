//! Inversion, normalization and curve fitting on randomly built sets.

mod common;

use proptest::prelude::*;

use common::{distinct_rats, is_curve_general, nonzero_rat, positive_rat, small_rat};
use ratdist::arith::{rat, ratio, Field, Rat, SqfInt, GQF, QF};
use ratdist::construct::{line_rational_set, unit_circle_rational_set};
use ratdist::geom::{
    dist2, extract_curve_general, fit_curve, invert_set, normalize_set, points_for_degree, points_on_curve,
    verify_general_position,
    verify_rational_set, NPt, NormalizedSet, Pt, Similarity,
};

/// A rational set from one of the two generators.
fn generated_set() -> impl Strategy<Value = NormalizedSet> {
    (distinct_rats(3, 11), any::<bool>()).prop_filter_map("generator rejected parameters", |(params, circle)| {
        if circle {
            unit_circle_rational_set(&params).ok()
        } else {
            line_rational_set(&params).ok()
        }
    })
}

/// `z ↦ m(z − t)` with `|m|` rational: `m = s·(1 − u² + 2ui)/(1 + u²)`.
fn similarity(k: SqfInt) -> impl Strategy<Value = Similarity> {
    (positive_rat(), small_rat(), small_rat(), small_rat(), small_rat(), small_rat()).prop_map(
        move |(s, u, ta, tb, tc, td)| {
            let den = rat(1) + &u * &u;
            let re = &s * (rat(1) - &u * &u) / &den;
            let im = &s * (rat(2) * &u) / &den;
            let m = GQF::new(QF::from_rat(k, re), QF::from_rat(k, im)).unwrap();
            let t = GQF::new(QF::new(k, ta, tb), QF::new(k, tc, td)).unwrap();
            Similarity::new(t, m).unwrap()
        },
    )
}

/// The equilateral triangle on `(0,0)`, `(1,0)`: a rational set with `k = 3`.
fn equilateral() -> NormalizedSet {
    let k = SqfInt::new(3).unwrap();
    NormalizedSet::new(k, vec![NPt::new(rat(0), rat(0)), NPt::new(rat(1), rat(0)), NPt::new(ratio(1, 2), ratio(1, 2))])
        .verify()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inversion_keeps_distances_rational(s in generated_set(), c in 0usize..10, radius in positive_rat()) {
        let c = c % s.len();
        let img = invert_set(&s, c, &radius).unwrap();
        prop_assert!(verify_rational_set(&img).holds());
        let others: Vec<usize> = (0..s.len()).filter(|&i| i != c).collect();
        let r4 = radius.pow(4);
        for (a, &i) in others.iter().enumerate() {
            for (b, &j) in others.iter().enumerate().skip(a + 1) {
                // |p′ − q′|² = r⁴|p − q|²/(|p − c|²|q − c|²)
                let expected = &r4 * s.dist2(i, j) / (s.dist2(i, c) * s.dist2(j, c));
                prop_assert_eq!(img.dist2(a, b), expected);
            }
        }
    }

    #[test]
    fn normalization_forgets_similarities(s in generated_set(), sim in similarity(SqfInt::ONE)) {
        let raw: Vec<Pt> = s.points.iter().map(|p| Pt::from_npt(p, s.k)).collect();
        let moved: Vec<Pt> = raw.iter().map(|p| sim.apply(p)).collect();
        let (a, _) = normalize_set(&raw, 0, 1).unwrap();
        let (b, _) = normalize_set(&moved, 0, 1).unwrap();
        prop_assert_eq!(a.k, b.k);
        prop_assert_eq!(a.sorted_points(), b.sorted_points());
    }

    #[test]
    fn normalization_recovers_the_radical(sim in similarity(SqfInt::new(3).unwrap())) {
        let s = equilateral();
        let raw: Vec<Pt> = s.points.iter().map(|p| Pt::from_npt(p, s.k)).collect();
        let moved: Vec<Pt> = raw.iter().map(|p| sim.apply(p)).collect();
        let (b, _) = normalize_set(&moved, 0, 1).unwrap();
        prop_assert_eq!(b.k.get(), 3);
        prop_assert_eq!(b.sorted_points(), s.sorted_points());
    }

    #[test]
    fn fitted_curves_pass_through_their_points(
        d in 1u32..4,
        coords in prop::collection::vec((small_rat(), small_rat()), 9),
    ) {
        let need = ratdist::geom::points_for_degree(d);
        let pts: Vec<NPt> = coords.into_iter().take(need).map(|(a, b)| NPt::new(a, b)).collect();
        let k = SqfInt::ONE;
        for c in fit_curve(&pts, k, d).unwrap() {
            for p in &pts {
                prop_assert!(c.eval_npt(p).is_zero_elem());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn extraction_is_curve_general(coords in prop::collection::btree_set((small_rat(), small_rat()), 8..13)) {
        let pts: Vec<NPt> = coords.into_iter().map(|(a, b)| NPt::new(a, b)).collect();
        let s = NormalizedSet::new(SqfInt::ONE, pts);
        prop_assume!(verify_general_position(&s).holds());
        let out = extract_curve_general(&s, 2).unwrap();
        prop_assert!(out.len() <= s.len());
        prop_assert!(out.points.iter().all(|p| s.points.contains(p)));
        prop_assert!(is_curve_general(&out, 2));
    }
}

/// The greedy extraction spelled out with field arithmetic: a point is kept
/// unless a curve through earlier kept points already contains it, and a
/// pencil of curves through kept points ends the scan.
fn greedy_reference(s: &NormalizedSet, max_d: u32) -> Vec<NPt> {
    use itertools::Itertools;
    let mut kept: Vec<NPt> = Vec::new();
    for p in &s.points {
        let mut blocked = false;
        for d in 1..=max_d {
            let need = points_for_degree(d);
            for sub in kept.iter().cloned().combinations(need) {
                let curves = fit_curve(&sub, s.k, d).unwrap();
                if curves.len() > 1 {
                    return kept;
                }
                let one = NormalizedSet::new(s.k, vec![p.clone()]);
                blocked |= !points_on_curve(&one, &curves[0]).unwrap().is_empty();
            }
        }
        if !blocked {
            kept.push(p.clone());
        }
    }
    kept
}

/// Points in general position with many on the parabola `y = a x² + c`,
/// over `ℚ(√k)`.
fn parabola_heavy_set() -> impl Strategy<Value = NormalizedSet> {
    (
        prop::sample::select(vec![1u64, 2, 3]),
        nonzero_rat(),
        small_rat(),
        prop::collection::btree_set(-6i64..7, 4..8),
        prop::collection::vec((small_rat(), small_rat()), 2..5),
    )
        .prop_flat_map(|(k, a, c, xs, extra)| {
            let k = SqfInt::new(k).unwrap();
            let mut pts: Vec<NPt> = xs.into_iter().map(|x| NPt::new(rat(x), &a * rat(x * x) + &c)).collect();
            pts.extend(extra.into_iter().map(|(u, v)| NPt::new(u, v)));
            Just(pts).prop_shuffle().prop_map(move |pts| NormalizedSet::new(k, pts))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn extraction_matches_the_field_arithmetic_greedy(s in parabola_heavy_set()) {
        let distinct: std::collections::BTreeSet<_> = s.points.iter().collect();
        prop_assume!(distinct.len() == s.len());
        prop_assume!(verify_general_position(&s).holds());
        let out = extract_curve_general(&s, 2).unwrap();
        prop_assert_eq!(out.points, greedy_reference(&s, 2));
    }
}

#[test]
fn inversion_distance_formula_on_a_fixed_set() {
    let s = unit_circle_rational_set(&[rat(0), ratio(1, 2), ratio(1, 3), rat(2)]).unwrap();
    let img = invert_set(&s, 1, &ratio(3, 2)).unwrap();
    let k = s.k;
    let c = &s.points[1];
    let d = |p: &NPt, q: &NPt| dist2(p, q, k);
    let r4: Rat = ratio(81, 16);
    let expected = &r4 * d(&s.points[0], &s.points[2]) / (d(&s.points[0], c) * d(&s.points[2], c));
    assert_eq!(img.dist2(0, 1), expected);
}
