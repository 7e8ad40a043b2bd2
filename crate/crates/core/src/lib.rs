//! Exact construction of the weight Virasoro modules `N(M, α) = M ⊗ ℂ[t^{±1}]`
//! and their twisted deformations `N(M, β)`, together with a verification
//! engine that checks module identities and annihilation profiles bit-exactly
//! over the rationals.
//!
//! Layers, bottom up:
//! - [`kernel`]: rationals, Laurent and univariate polynomials.
//! - [`coeff`]: the truncated algebras `𝔞_r` and modules over them.
//! - [`action`]: the Virasoro actions on `M ⊗ ℂ[t^{±1}]` and the `ω` operators.
//! - [`oracles`]: verification suites and independent comparison oracles.
//! - [`io`] and [`driver`]: descriptor files, vector literals, report documents.

pub mod action;
pub mod coeff;
pub mod driver;
pub mod error;
pub mod io;
pub mod kernel;
pub mod linalg;
pub mod oracles;

pub use error::{Error, Result};
