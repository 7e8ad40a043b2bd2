use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::rational::{format_coefficient, Rational};

/// Dense univariate polynomial over the rationals, coefficients indexed from
/// degree 0. Trailing zeros are trimmed so the leading coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rational::one())
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// The polynomial `g(x) = f(x - c)`.
    ///
    /// Horner's scheme in the shifted variable, so every step is an exact
    /// multiplication by the linear factor `(x - c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // out <- out * (x - c) + a
            let mut next = vec![Rational::zero(); out.len() + 1];
            for (k, b) in out.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * c;
            }
            next[0] += a;
            out = next;
        }
        Self::new(out)
    }
}

/// `f(x) ↦ f(x - c)`.
pub fn poly_shift(f: &UniPoly, c: &Rational) -> UniPoly {
    f.shift(c)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}·1", format_coefficient(c))?,
                1 => write!(f, "{}·x", format_coefficient(c))?,
                _ => write!(f, "{}·x^{}", format_coefficient(c), k)?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn shift_square() {
        // (x - 1)^2 = x^2 - 2x + 1
        assert_eq!(poly_shift(&p(&[0, 0, 1]), &int(1)), p(&[1, -2, 1]));
    }

    #[test]
    fn shift_by_zero_is_identity() {
        let f = UniPoly::new(vec![rat(1, 2), int(-3), int(0), rat(7, 5)]);
        assert_eq!(poly_shift(&f, &int(0)), f);
    }

    #[test]
    fn shift_linear() {
        assert_eq!(poly_shift(&UniPoly::x(), &int(2)), p(&[-2, 1]));
    }

    #[test]
    fn shift_agrees_with_evaluation() {
        let f = UniPoly::new(vec![rat(1, 3), int(2), rat(-5, 2), int(0), int(4)]);
        let c = rat(3, 7);
        let g = f.shift(&c);
        for k in -5..=5 {
            let x = rat(k, 3);
            assert_eq!(g.eval(&x), f.eval(&(&x - &c)));
        }
    }

    #[test]
    fn trimming() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert!((&f - &f).is_zero());
        assert_eq!((&f - &f).degree(), None);
    }
}
