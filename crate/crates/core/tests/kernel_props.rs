use num::Zero;
use proptest::prelude::*;

use virasoro_core::kernel::{format_rational, parse_rational, LaurentPoly, Rational, UniPoly};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 0..6).prop_map(UniPoly::new)
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), LaurentPoly::zero());
    }

    #[test]
    fn laurent_shift_is_additive(a in laurent(), j in -5i64..=5, k in -5i64..=5) {
        prop_assert_eq!(a.shift(j).shift(k), a.shift(j + k));
        prop_assert_eq!(a.shift(k), &a * &LaurentPoly::monomial(k, Rational::from_integer(1.into())));
    }

    #[test]
    fn laurent_degrees_add_under_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.max_exponent(), Some(a.max_exponent().unwrap() + b.max_exponent().unwrap()));
        prop_assert_eq!(p.min_exponent(), Some(a.min_exponent().unwrap() + b.min_exponent().unwrap()));
    }

    #[test]
    fn laurent_canonical_form_has_no_zero_terms(a in laurent(), b in laurent()) {
        for (_, c) in (&a - &b).terms() {
            prop_assert!(!c.is_zero());
        }
    }

    #[test]
    fn unipoly_shift_composes(f in unipoly(), a in rational(), b in rational()) {
        prop_assert_eq!(f.shift(&a).shift(&b), f.shift(&(&a + &b)));
    }

    #[test]
    fn unipoly_shift_matches_evaluation(f in unipoly(), c in rational(), x in rational()) {
        prop_assert_eq!(f.shift(&c).eval(&x), f.eval(&(&x - &c)));
    }

    #[test]
    fn unipoly_product_evaluates_pointwise(f in unipoly(), g in unipoly(), x in rational()) {
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
    }

    #[test]
    fn rational_text_round_trip(q in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}
