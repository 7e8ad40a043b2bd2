//! Verification suites.
//!
//! Each suite recomputes both sides of an identity independently with exact
//! arithmetic and records every mismatch as a counterexample in a
//! [`VerificationReport`]. Suites are deterministic given their seed.

mod ab;
mod annihilation;
mod bracket;
mod eh;
mod mw;
mod reach;
mod report;
mod sampling;

pub use ab::{ab_omega_check, AbOracleConfig, AbRealization};
pub use annihilation::{
    annihilation_profile, determine_omega_constant, stated_constant, tensor_contrast_check,
    AnnihilationProfile, OmegaConstant, OrderOutcome, Verdict,
};
pub use bracket::{
    check_bracket, check_hv_relations, check_module_axiom, check_twisted_omega,
    check_twisted_reduction, intertwiner_check, intertwiner_check_with_map, DropFactorial,
};
pub use eh::{eh_identity_check, eh_identity_holds, eh_lhs, eh_rhs};
pub use mw::{mw_c4_typo_check, mw_cancellation_check, mw_coefficient, C4Reading, MWOracleConfig};
pub use reach::{reachability_probe, ReachConfig, ReachReport};
pub use report::{Failure, VerificationReport};
pub use sampling::{
    random_rational, random_weight_vector, rng_from_seed, RandomVector, SampleSpec,
};
