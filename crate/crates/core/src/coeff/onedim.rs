use num::One;

use super::CoefficientModule;
use crate::kernel::Rational;
use crate::{Error, Result};

/// The one-dimensional `𝔞_0`-module `ℂv` with `d̄_0 v = b v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimDescriptor {
    pub b: Rational,
}

impl OneDimDescriptor {
    pub fn new(b: Rational) -> Self {
        Self { b }
    }
}

impl CoefficientModule for OneDimDescriptor {
    type Vector = Rational;

    fn rank(&self) -> usize {
        0
    }

    fn family(&self) -> &'static str {
        "onedim"
    }

    fn zero(&self) -> Rational {
        Rational::default()
    }

    fn unit(&self) -> Rational {
        Rational::one()
    }

    fn filtration_dim(&self, _degree: usize) -> usize {
        1
    }

    fn act(&self, i: usize, v: &Rational) -> Result<Rational> {
        match i {
            0 => Ok(&self.b * v),
            _ => Err(Error::IndexOutOfRange { index: i, rank: 0 }),
        }
    }
}
