use num::Zero;

use super::CoefficientModule;
use crate::kernel::{int, Rational, UniPoly};
use crate::{Error, Result};

/// `M = ℂ[x]` with `d̄_0 f = (x + α₁) f` and `d̄_i f = λ_i f(x − i)` for
/// `i = 1, 2`.
///
/// The rank is 2 when `λ₂ ≠ 0` and 1 otherwise, so that `d̄_r` is the top
/// generator acting injectively whenever `λ_r ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaDescriptor {
    pub alpha1: Rational,
    pub lambda1: Rational,
    pub lambda2: Rational,
}

impl GammaDescriptor {
    pub fn new(alpha1: Rational, lambda1: Rational, lambda2: Rational) -> Self {
        Self {
            alpha1,
            lambda1,
            lambda2,
        }
    }

    pub fn effective_rank(&self) -> usize {
        if self.lambda2.is_zero() {
            1
        } else {
            2
        }
    }

    /// Scalar `λ_i` attached to `d̄_i`, `i ∈ {1, 2}`.
    pub fn lambda(&self, i: usize) -> &Rational {
        match i {
            1 => &self.lambda1,
            2 => &self.lambda2,
            _ => panic!("Γ has no λ_{i}"),
        }
    }
}

impl CoefficientModule for GammaDescriptor {
    type Vector = UniPoly;

    fn rank(&self) -> usize {
        self.effective_rank()
    }

    fn family(&self) -> &'static str {
        "gamma"
    }

    fn zero(&self) -> UniPoly {
        UniPoly::zero()
    }

    fn unit(&self) -> UniPoly {
        UniPoly::one()
    }

    fn filtration_dim(&self, degree: usize) -> usize {
        degree + 1
    }

    fn act(&self, i: usize, f: &UniPoly) -> Result<UniPoly> {
        match i {
            0 => Ok(&(&UniPoly::x() + &UniPoly::constant(self.alpha1.clone())) * f),
            1 | 2 => {
                let lambda = self.lambda(i);
                if lambda.is_zero() {
                    Ok(UniPoly::zero())
                } else {
                    Ok(f.shift(&int(i as i64)).scale(lambda))
                }
            }
            _ => Err(Error::IndexOutOfRange {
                index: i,
                rank: self.effective_rank(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn d1_shifts_and_scales() {
        let m = GammaDescriptor::new(int(0), int(2), int(3));
        // 2 (x − 1)^2
        assert_eq!(m.act(1, &poly(&[0, 0, 1])).unwrap(), poly(&[2, -4, 2]));
    }

    #[test]
    fn d0_multiplies() {
        let m = GammaDescriptor::new(int(3), int(1), int(0));
        assert_eq!(m.act(0, &poly(&[1, 1])).unwrap(), poly(&[3, 4, 1]));
    }

    #[test]
    fn effective_rank_follows_lambda2() {
        assert_eq!(GammaDescriptor::new(int(0), int(1), int(0)).rank(), 1);
        assert_eq!(GammaDescriptor::new(int(0), int(0), int(1)).rank(), 2);
        let rank1 = GammaDescriptor::new(int(0), int(1), int(0));
        assert!(rank1.act(2, &poly(&[1])).unwrap().is_zero());
        assert!(rank1.act(3, &poly(&[1])).is_err());
    }

    #[test]
    fn top_generator_injective() {
        let m = GammaDescriptor::new(int(1), int(1), int(-2));
        for d in 0..8 {
            let f = UniPoly::monomial(d, int(1));
            assert_eq!(m.act(2, &f).unwrap().degree(), Some(d));
        }
    }
}
