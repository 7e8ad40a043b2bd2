use proptest::prelude::*;

use virasoro_core::action::{ModuleInstance, TwistedInstance, WeightVector};
use virasoro_core::coeff::{
    CoefficientModule, Descriptor, GammaDescriptor, OneDimDescriptor, QLambdaDescriptor,
};
use virasoro_core::kernel::{int, rat, LaurentPoly, Rational};
use virasoro_core::oracles::{
    annihilation_profile, check_bracket, check_hv_relations, determine_omega_constant,
    reachability_probe, tensor_contrast_check, DropFactorial, ReachConfig, SampleSpec,
    VerificationReport,
};

fn gamma2() -> GammaDescriptor {
    GammaDescriptor::new(int(0), int(1), int(1))
}

fn qlambda_r5() -> QLambdaDescriptor {
    QLambdaDescriptor::new(5, [2, 4, 5], [(5, int(1))])
}

#[test]
fn mutant_is_caught_on_qlambda() {
    let inst = ModuleInstance::new(qlambda_r5(), rat(1, 4));
    let good = check_bracket(&inst, 2, 2, 1, 2).unwrap();
    assert!(good.passed());
    let bad = check_bracket(&DropFactorial(inst), 2, 2, 1, 2).unwrap();
    assert!(!bad.passed());
    let f = &bad.failures[0];
    assert!(f.inputs.contains("a=") && f.expected != f.actual);
}

#[test]
fn mutant_on_gamma_is_a_rescaled_gamma_module() {
    let g = GammaDescriptor::new(rat(1, 2), int(2), int(3));
    let mutant = DropFactorial(ModuleInstance::new(g, rat(1, 4)));
    let rescaled = ModuleInstance::new(GammaDescriptor::new(rat(1, 2), int(4), int(18)), rat(1, 4));
    use virasoro_core::action::VirasoroAction;
    let w = WeightVector::single(
        1,
        virasoro_core::kernel::UniPoly::new(vec![int(1), int(2), int(-1)]),
    );
    for m in -3..=3 {
        assert_eq!(mutant.d(m, &w).unwrap(), rescaled.d(m, &w).unwrap());
    }
}

#[test]
fn hv_relations_on_zero_offset() {
    let inst = ModuleInstance::new(gamma2(), Rational::from_integer(0.into()));
    let rep = check_hv_relations(&inst, 3, 4, 9, 3).unwrap();
    assert!(rep.passed());
    assert!(check_hv_relations(&ModuleInstance::new(gamma2(), int(1)), 3, 4, 9, 3).is_err());
}

#[test]
fn twisted_bracket_holds_for_other_twists() {
    let beta = LaurentPoly::from_terms([(2, rat(-1, 3)), (-1, int(5))]);
    let tw = TwistedInstance::new(qlambda_r5(), beta);
    assert!(check_bracket(&tw, 2, 2, 4, 2).unwrap().passed());
}

#[test]
fn onedim_profile_vanishes_from_three() {
    let inst = ModuleInstance::new(OneDimDescriptor::new(rat(2, 3)), rat(1, 5));
    let p = annihilation_profile(&inst, 6, &SampleSpec::default()).unwrap();
    assert_eq!(p.vanishing_from(), Some(3));
    assert!(p.orders[&2].nonvanishing_everywhere());
    // b(1 - b) = 0: the second order vanishes as well.
    let degenerate = ModuleInstance::new(OneDimDescriptor::new(int(1)), rat(1, 5));
    let p = annihilation_profile(&degenerate, 6, &SampleSpec::default()).unwrap();
    assert!(p.orders[&2].vanishes());
}

#[test]
fn constant_oracle_preconditions() {
    let r0 = ModuleInstance::new(OneDimDescriptor::new(int(2)), int(0));
    assert!(determine_omega_constant(&r0, 10, 0, 2).is_err());
    let c = determine_omega_constant(&ModuleInstance::new(qlambda_r5(), int(0)), 3, 0, 2).unwrap();
    assert_eq!(c.constant, int(924));
    assert!(c.independent);
}

#[test]
fn tensor_contrast_on_gamma() {
    let spec = SampleSpec {
        samples: 3,
        lm_window: 2,
        ..SampleSpec::default()
    };
    let inst = ModuleInstance::new(gamma2(), int(0));
    let rep = tensor_contrast_check(&rat(1, 3), &int(2), &inst, &spec).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
}

#[test]
fn report_serde_round_trip() {
    let inst = ModuleInstance::new(gamma2(), rat(1, 3));
    let rep = check_bracket(
        &DropFactorial(ModuleInstance::new(qlambda_r5(), int(0))),
        1,
        1,
        0,
        1,
    )
    .unwrap();
    let ok = check_bracket(&inst, 2, 2, 0, 2).unwrap();
    for r in [rep, ok] {
        let text = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.passed(), r.failures.is_empty());
    }
}

#[test]
fn suites_are_deterministic_given_seed() {
    let inst = ModuleInstance::new(gamma2(), rat(1, 3));
    let a = check_bracket(&inst, 2, 3, 42, 3).unwrap();
    let b = check_bracket(&inst, 2, 3, 42, 3).unwrap();
    assert_eq!(a, b);
    let spec = SampleSpec {
        samples: 2,
        seed: 42,
        lm_window: 2,
        degree: 3,
    };
    assert_eq!(
        annihilation_profile(&inst, 8, &spec).unwrap(),
        annihilation_profile(&inst, 8, &spec).unwrap()
    );
}

#[test]
fn reach_zero_seed_and_guard() {
    let inst = ModuleInstance::new(gamma2(), int(0));
    let rr = reachability_probe(&inst, &WeightVector::zero(), &ReachConfig::default()).unwrap();
    assert_eq!(rr.rank, 0);
    let huge = ReachConfig {
        degree_cap: 1000,
        ..ReachConfig::default()
    };
    assert!(reachability_probe(&inst, &WeightVector::single(0, inst.coeff.unit()), &huge).is_err());
}

#[test]
fn reach_on_qlambda_and_twisted() {
    let inst = ModuleInstance::new(Descriptor::QLambda(qlambda_r5()), int(0));
    let cfg = ReachConfig {
        degree_cap: 1,
        ..ReachConfig::default()
    };
    let rr = reachability_probe(&inst, &WeightVector::single(0, inst.coeff.unit()), &cfg).unwrap();
    assert!(rr.full, "{rr:?}");
    let tw = TwistedInstance::new(
        gamma2(),
        LaurentPoly::from_terms([(0, int(1)), (1, int(2)), (-3, int(-1))]),
    );
    let rr = reachability_probe(
        &tw,
        &WeightVector::single(0, tw.coeff.unit()),
        &ReachConfig::default(),
    )
    .unwrap();
    assert!(rr.full, "{rr:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn profile_is_monotone(seed in any::<u64>(), l2 in 0i64..=2, alpha in -3i64..=3) {
        let inst = ModuleInstance::new(GammaDescriptor::new(rat(1, 2), int(1), int(l2)), rat(alpha, 2));
        let r = inst.coeff.rank() as u32;
        let spec = SampleSpec { samples: 2, seed, lm_window: 2, degree: 3 };
        let p = annihilation_profile(&inst, 2 * r + 5, &spec).unwrap();
        prop_assert!(p.is_monotone());
        prop_assert_eq!(p.vanishing_from(), Some(2 * r + 3));
    }

    #[test]
    fn reach_rank_bounded_and_monotone(
        len in 1usize..=3,
        window in 1i64..=4,
        cap in 0usize..=2,
        l1 in 1i64..=3,
    ) {
        let inst = ModuleInstance::new(GammaDescriptor::new(int(0), int(l1), int(1)), rat(1, 3));
        let seed = WeightVector::single(0, inst.coeff.unit());
        let base = ReachConfig { degree_cap: cap, operator_window: window, word_length: len, ..ReachConfig::default() };
        let r0 = reachability_probe(&inst, &seed, &base).unwrap();
        prop_assert!(r0.rank <= r0.slice_dim);
        prop_assert!(r0.level_ranks.windows(2).all(|w| w[0] <= w[1]));
        let longer = reachability_probe(&inst, &seed, &ReachConfig { word_length: len + 1, ..base.clone() }).unwrap();
        prop_assert!(longer.rank >= r0.rank);
        let wider = reachability_probe(&inst, &seed, &ReachConfig { operator_window: window + 1, ..base }).unwrap();
        prop_assert!(wider.rank >= r0.rank);
    }
}
