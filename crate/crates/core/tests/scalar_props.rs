use num_traits::One;
use proptest::prelude::*;
use qsuper_core::scalar::{rat, LaurentPoly};
use qsuper_core::{qint, Field, RatFunc, Rational};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4)
        .prop_map(|t| LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
    }

    #[test]
    fn inverse(a in ratfunc()) {
        match a.inv() {
            Some(i) => prop_assert!(a.mul_ref(&i).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn canonical_form_is_unique(a in ratfunc(), b in ratfunc()) {
        prop_assume!(!b.is_zero());
        let back = a.mul_ref(&b).checked_div(&b).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfunc(), b in ratfunc(), p in 2i64..40) {
        let x = rat(p, 3);
        if let (Ok(sa), Ok(sb)) = (a.specialize(&x), b.specialize(&x)) {
            prop_assert_eq!(a.mul_ref(&b).specialize(&x).unwrap(), &sa * &sb);
            prop_assert_eq!(a.add_ref(&b).specialize(&x).unwrap(), &sa + &sb);
        }
    }

    #[test]
    fn bar_is_an_involutive_automorphism(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul_ref(&b).bar(), a.bar().mul_ref(&b.bar()));
    }

    #[test]
    fn quantum_integers_are_bar_invariant(n in -12i64..12) {
        prop_assert_eq!(qint(n).bar(), qint(n));
        prop_assert_eq!(qint(-n), qint(n).neg_ref());
        prop_assert_eq!(qint(n).specialize(&Rational::one()).unwrap(), rat(n, 1));
    }
}
