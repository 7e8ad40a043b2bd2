//! Modules over the truncated positive Virasoro algebras `𝔞_r`.
//!
//! `𝔞_r` has basis `d̄_0, …, d̄_r` with `[d̄_i, d̄_j] = (j − i) d̄_{i+j}`, the
//! bracket vanishing once `i + j > r`. Any type implementing
//! [`CoefficientModule`] can be fed into the Virasoro layer; the three
//! concrete families live in submodules and are unified by [`Descriptor`].

mod ar;
mod family;
mod gamma;
mod onedim;
mod qlambda;

use std::fmt::{Debug, Display};

use num::{One, Zero};

use crate::kernel::{Rational, UniPoly};
use crate::Result;

pub use ar::{ar_bracket, ArDescriptor};
pub use family::{validate_descriptor, AKey, AVector, Descriptor, Violation};
pub use gamma::GammaDescriptor;
pub use onedim::OneDimDescriptor;
pub use qlambda::{q_lambda_straighten, Monomial, QLambdaDescriptor, QVec};

/// A vector in some coefficient module: a finite linear combination of basis
/// elements with rational coefficients, kept in canonical form.
pub trait ModuleVector: Clone + PartialEq + Debug + Display {
    type Basis: Ord + Clone + Debug;

    fn is_zero_vector(&self) -> bool;
    fn add_vector(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    /// Nonzero coefficients in increasing basis order.
    fn terms(&self) -> Vec<(Self::Basis, Rational)>;
    /// Filtration degree of a basis element (x-degree, PBW length, ...).
    fn basis_degree(b: &Self::Basis) -> usize;

    fn sub_vector(&self, other: &Self) -> Self {
        self.add_vector(&other.scale(&-Rational::one()))
    }

    fn max_degree(&self) -> Option<usize> {
        self.terms()
            .iter()
            .map(|(b, _)| Self::basis_degree(b))
            .max()
    }
}

/// A module over `𝔞_r`: the rank `r` and the action of each `d̄_i`.
pub trait CoefficientModule {
    type Vector: ModuleVector;

    fn rank(&self) -> usize;
    fn family(&self) -> &'static str;
    fn zero(&self) -> Self::Vector;
    /// Action of `d̄_i`, `0 ≤ i ≤ rank`.
    fn act(&self, i: usize, v: &Self::Vector) -> Result<Self::Vector>;
    /// A distinguished nonzero vector (cyclic vector, constant polynomial, ...).
    fn unit(&self) -> Self::Vector;
    /// Number of basis elements of filtration degree at most `degree`.
    fn filtration_dim(&self, degree: usize) -> usize;

    fn check_member(&self, _v: &Self::Vector) -> Result<()> {
        Ok(())
    }
}

impl ModuleVector for Rational {
    type Basis = ();

    fn is_zero_vector(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_vector(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn terms(&self) -> Vec<((), Rational)> {
        if Zero::is_zero(self) {
            vec![]
        } else {
            vec![((), self.clone())]
        }
    }
    fn basis_degree(_: &()) -> usize {
        0
    }
}

impl ModuleVector for UniPoly {
    type Basis = usize;

    fn is_zero_vector(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add_vector(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &Rational) -> Self {
        UniPoly::scale(self, c)
    }
    fn terms(&self) -> Vec<(usize, Rational)> {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }
    fn basis_degree(k: &usize) -> usize {
        *k
    }
}
