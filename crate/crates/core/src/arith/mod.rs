//! Exact arithmetic: rationals, squarefree radicands, `ℚ(√k)` and `ℚ(√k)(i)`.
//!
//! Nothing in here touches floating point.

mod field;
mod gqf;
mod qf;
mod rat;
mod sqf;

pub use field::{Field, RealField};
pub use gqf::GQF;
pub use qf::{qf_invert, QF};
pub use rat::{
    ceil_rat, fmt_rat, int_sqrt_exact, is_rational_square, parse_rat, rat, ratio, rational_sqrt,
    Rat,
};
pub use sqf::{squarefree_decompose, SqfInt};

#[cfg(test)]
mod axioms {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| ratio(n, d))
    }

    fn qf_in(k: u64) -> impl Strategy<Value = QF> {
        let k = SqfInt::new(k).unwrap();
        (small_rat(), small_rat()).prop_map(move |(a, b)| QF::new(k, a, b))
    }

    fn qf_triple() -> impl Strategy<Value = (QF, QF, QF)> {
        prop_oneof![Just(1u64), Just(2), Just(3), Just(5), Just(6), Just(30)]
            .prop_flat_map(|k| (qf_in(k), qf_in(k), qf_in(k)))
    }

    fn gqf_triple() -> impl Strategy<Value = (GQF, GQF, GQF)> {
        prop_oneof![Just(1u64), Just(2), Just(7)].prop_flat_map(|k| {
            let g = move || (qf_in(k), qf_in(k)).prop_map(|(re, im)| GQF::new(re, im).unwrap());
            (g(), g(), g())
        })
    }

    fn check_axioms<F: Field>(x: F, y: F, z: F) {
        let ctx = x.ctx();
        assert_eq!(x.clone() + &y, y.clone() + &x);
        assert_eq!(x.clone() * &y, y.clone() * &x);
        assert_eq!((x.clone() + &y) + &z, x.clone() + &(y.clone() + &z));
        assert_eq!((x.clone() * &y) * &z, x.clone() * &(y.clone() * &z));
        assert_eq!(x.clone() * &(y.clone() + &z), x.clone() * &y + &(x.clone() * &z));
        assert_eq!(x.clone() - &x, F::zero_in(&ctx));
        if !x.is_zero_elem() {
            let xi = x.inv().unwrap();
            assert!((x.clone() * &xi).is_one_elem());
            assert_eq!(xi.inv().unwrap(), x);
        } else {
            assert!(x.inv().is_err());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn qf_field_axioms((x, y, z) in qf_triple()) {
            check_axioms(x, y, z);
        }

        #[test]
        fn gqf_field_axioms((x, y, z) in gqf_triple()) {
            check_axioms(x, y, z);
        }

        #[test]
        fn qf_norm_zero_iff_zero(x in qf_in(6)) {
            prop_assert_eq!(x.norm() == rat(0), x.is_zero());
        }
    }
}
