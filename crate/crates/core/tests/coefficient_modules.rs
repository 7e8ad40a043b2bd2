use num::Zero;
use proptest::prelude::*;

use virasoro_core::coeff::{
    validate_descriptor, CoefficientModule, Descriptor, GammaDescriptor, ModuleVector,
    OneDimDescriptor, QLambdaDescriptor, QVec,
};
use virasoro_core::kernel::{int, Rational};
use virasoro_core::oracles::{check_module_axiom, rng_from_seed, RandomVector};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// Valid descriptors other than the two reference examples, checked against
/// conditions (I)-(III) below.
fn qlambda_instances() -> Vec<QLambdaDescriptor> {
    vec![
        QLambdaDescriptor::new(5, [2, 4, 5], [(5, int(1))]),
        QLambdaDescriptor::new(8, [3, 4, 6, 7, 8], [(7, int(0)), (8, int(1))]),
        QLambdaDescriptor::new(3, [2, 3], [(3, int(1))]),
        QLambdaDescriptor::new(4, [2, 3, 4], [(4, Rational::new((-1).into(), 2.into()))]),
        QLambdaDescriptor::new(6, [3, 4, 5, 6], [(5, int(2)), (6, int(3))]),
    ]
}

#[test]
fn sample_qlambda_descriptors_are_valid() {
    for q in qlambda_instances() {
        let v = validate_descriptor(&Descriptor::QLambda(q.clone()));
        assert!(v.is_empty(), "r={} S={:?}: {v:?}", q.r, q.s);
    }
}

#[test]
fn module_axiom_qlambda() {
    for q in qlambda_instances() {
        let rep = check_module_axiom(&q, 10, 3, 3).unwrap();
        assert!(rep.passed(), "r={}: {:?}", q.r, rep.failures.first());
    }
}

#[test]
fn module_axiom_onedim() {
    for b in [int(0), int(1), Rational::new(2.into(), 7.into())] {
        let rep = check_module_axiom(&OneDimDescriptor::new(b), 5, 0, 0).unwrap();
        assert!(rep.passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn module_axiom_gamma(a1 in rational(), l1 in rational(), l2 in rational(), seed in any::<u64>()) {
        let g = GammaDescriptor::new(a1, l1, l2);
        let rep = check_module_axiom(&g, 3, seed, 4).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failures.first());
    }

    /// `d̄_r` is injective on Γ: it shifts and scales by a nonzero `λ_r`.
    #[test]
    fn gamma_top_generator_is_injective(a1 in rational(), l1 in rational(), l2 in rational(), seed in any::<u64>()) {
        let g = GammaDescriptor::new(a1, l1.clone(), l2.clone());
        prop_assume!(!l1.is_zero() || !l2.is_zero());
        let r = g.rank();
        let mut rng = rng_from_seed(seed);
        let v = g.random_vector(&mut rng, 4);
        prop_assume!(!v.is_zero());
        prop_assert!(!g.act(r, &v).unwrap().is_zero());
        prop_assert!(!g.act(r, &g.act(r, &v).unwrap()).unwrap().is_zero());
    }

    /// Swapping one adjacent pair in a word changes its normal form by the
    /// bracket term: `u·i·j·w = u·j·i·w + (j − i)·u·(i+j)·w`.
    #[test]
    fn straightening_is_locally_confluent(
        idx in 0usize..5,
        word in prop::collection::vec(0usize..=8, 2..6),
        pos in 0usize..5,
    ) {
        let q = &qlambda_instances()[idx];
        let word: Vec<usize> = word.into_iter().map(|i| i % (q.r + 1)).collect();
        let p = pos % (word.len() - 1);
        let (i, j) = (word[p], word[p + 1]);
        let mut swapped = word.clone();
        swapped.swap(p, p + 1);
        let lhs = q.straighten(&word).unwrap();
        let mut rhs = q.straighten(&swapped).unwrap();
        if i + j <= q.r {
            let mut merged = word[..p].to_vec();
            merged.push(i + j);
            merged.extend_from_slice(&word[p + 2..]);
            let bracket = q.straighten(&merged).unwrap().scale(&int(j as i64 - i as i64));
            rhs = rhs.add_vector(&bracket);
        }
        prop_assert_eq!(lhs, rhs);
    }

    /// Normal forms only use sorted complement generators, and acting by
    /// generators one at a time agrees with straightening the whole word.
    #[test]
    fn straightening_output_is_canonical(idx in 0usize..5, word in prop::collection::vec(0usize..=8, 0..6)) {
        let q = &qlambda_instances()[idx];
        let word: Vec<usize> = word.into_iter().map(|i| i % (q.r + 1)).collect();
        let v = q.straighten(&word).unwrap();
        prop_assert!(q.check_member(&v).is_ok());
        let mut acc = QVec::vac();
        for &i in word.iter().rev() {
            acc = q.act(i, &acc).unwrap();
        }
        prop_assert_eq!(acc, v);
    }

    #[test]
    fn descriptor_family_dispatch_matches_concrete(seed in any::<u64>()) {
        let q = qlambda_instances()[0].clone();
        let d = Descriptor::QLambda(q.clone());
        let mut rng = rng_from_seed(seed);
        let v = d.random_vector(&mut rng, 3);
        for i in 0..=q.r {
            let a = d.act(i, &v).unwrap();
            prop_assert!(d.check_member(&a).is_ok());
        }
    }
}
