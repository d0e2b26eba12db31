//! Inversion, cone ramification and the cubic distance quadratics.

mod common;

use proptest::prelude::*;

use common::{curve, curve_through_origin, small_rat};
use ratdist::arith::{ratio, Field, SqfInt, QF};
use ratdist::curveops::{
    bad_slope_discriminant, check_identity, cone_ramification_count, cone_slices, invert_curve, isotropic_norm,
    qj_build, CubicNormalForm,
};
use ratdist::poly::is_squarefree;

fn normal_form() -> impl Strategy<Value = CubicNormalForm> {
    (small_rat(), small_rat(), small_rat())
        .prop_filter_map("reducible normal form", |(b, d, e)| CubicNormalForm::from_rats(b, d, e, SqfInt::ONE).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn inversion_is_an_involution(c in curve_through_origin(3)) {
        let r = isotropic_norm(SqfInt::ONE);
        prop_assume!(c.f().divisor_power(&r) == 0);
        let (once, _) = invert_curve(&c).unwrap();
        let (twice, _) = invert_curve(&once).unwrap();
        prop_assert!(twice.same_up_to_scale(&c));
    }

    #[test]
    fn inverted_top_form(c in curve_through_origin(4)) {
        let (img, kappa) = invert_curve(&c).unwrap();
        let linear = c.f().homogeneous_part(1);
        let expected = &linear * &isotropic_norm(SqfInt::ONE).pow(kappa - 1);
        prop_assert_eq!(img.degree(), 2 * kappa - 1);
        prop_assert_eq!(img.f().homogeneous_part(img.degree()), expected);
    }

    #[test]
    fn ramification_count_is_bounded(c in curve_through_origin(4)) {
        let Ok(slices) = cone_slices(c.f()) else {
            // An isotropic line through the origin is a component.
            return Ok(());
        };
        let d = c.degree() as usize;
        prop_assert!(slices.total() <= 2 * d);
        let full = |p: &ratdist::poly::UPoly<_>| p.degree() == Some(d) && is_squarefree(p).unwrap();
        if full(&slices.plus) && full(&slices.minus) {
            prop_assert_eq!(slices.total(), 2 * d - 2);
        }
        prop_assert_eq!(cone_ramification_count(&c).unwrap(), slices.total());
    }

    #[test]
    fn degree_six_identity(nf in normal_form(), t in small_rat()) {
        let t = QF::from_rat(SqfInt::ONE, t);
        if let Some(check) = check_identity(&nf, &t).unwrap() {
            prop_assert!(check.factorization && check.c2 && check.c1 && check.c0);
        }
    }

    #[test]
    fn distance_quadratics_have_imaginary_roots(nf in normal_form(), t in small_rat()) {
        let t = QF::from_rat(SqfInt::ONE, t);
        if let Ok(q) = qj_build(&nf, &t) {
            prop_assert!(q.has_imaginary_roots(), "Q_j = {} at t_j = {}", q.q.display_var("t"), t);
        }
    }
}

/// Lines through a singular origin all meet the curve doubly there, so the
/// slope discriminant is only finite for curves smooth at the origin.
#[test]
fn bad_slopes_are_finite_for_irreducible_curves() {
    let curves = [
        curve(&[(1, 2, 0), (1, 0, 2), (-2, 1, 0)]),
        curve(&[(1, 0, 1), (-1, 2, 0)]),
        curve(&[(1, 0, 2), (-1, 3, 0), (1, 1, 0)]),
        curve(&[(1, 0, 2), (-2, 0, 1), (-1, 3, 0), (-1, 2, 0)]),
        curve(&[(1, 1, 0), (1, 3, 0), (1, 0, 3)]),
        curve(&[(1, 4, 0), (1, 0, 4), (-1, 1, 1), (1, 0, 1)]),
    ];
    for c in &curves {
        let disc = bad_slope_discriminant(c).unwrap_or_else(|e| panic!("{c}: {e}"));
        let d = c.degree() as usize;
        assert!(!disc.is_zero(), "{c}");
        assert!(disc.degree().unwrap() <= 2 * d * (d - 1), "{c}: {}", disc.display_var("a"));
    }
}

#[test]
fn quadratics_from_a_fixed_cubic() {
    let k = SqfInt::ONE;
    let nf = CubicNormalForm::from_rats(ratio(1, 2), ratio(2, 1), ratio(-1, 3), k).unwrap();
    for t in [ratio(3, 1), ratio(-5, 2), ratio(7, 4)] {
        let q = qj_build(&nf, &QF::from_rat(k, t)).unwrap();
        assert!(q.has_imaginary_roots());
        assert!(!q.c2.is_zero_elem());
    }
}

#[test]
fn singular_origin_has_no_finite_bad_slope_set() {
    assert!(bad_slope_discriminant(&curve(&[(1, 0, 2), (-1, 3, 0), (-1, 2, 0)])).is_err());
}
