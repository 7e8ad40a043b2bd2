use num::One;
use rand::Rng;

use super::report::{Failure, VerificationReport};
use super::sampling::{random_nonzero_rational, random_rational, rng_from_seed};
use crate::kernel::{binomial, format_rational, int, Rational, UniPoly};
use crate::{Error, Result};

/// Parameter `b ≠ 1` of the module `A_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbOracleConfig {
    pub b: Rational,
}

impl AbOracleConfig {
    pub fn new(b: Rational) -> Result<Self> {
        if b.is_one() {
            return Err(Error::Precondition("A_b requires b != 1".into()));
        }
        Ok(Self { b })
    }
}

/// `A_b` realized on `ℚ[∂]`, `∂ = t d/dt`: `∂` acts by multiplication,
/// `t^k f(∂) = f(∂ − k)`, hence `d_n f(∂) = (∂ + n(b − 1)) f(∂ − n)`.
#[derive(Clone, Debug)]
pub struct AbRealization {
    pub b: Rational,
}

impl AbRealization {
    pub fn new(config: &AbOracleConfig) -> Self {
        Self {
            b: config.b.clone(),
        }
    }

    pub fn t(&self, k: i64, f: &UniPoly) -> UniPoly {
        f.shift(&int(k))
    }

    pub fn d(&self, n: i64, f: &UniPoly) -> UniPoly {
        let factor = UniPoly::new(vec![int(n) * (&self.b - Rational::one()), Rational::one()]);
        &factor * &self.t(n, f)
    }

    /// `Σ_i C(s,i) (−1)^{s−i} d_{l−m−i} d_{m+i} f`.
    pub fn omega(&self, l: i64, m: i64, s: u32, f: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for i in 0..=s {
            let sign = if (s - i).is_multiple_of(2) { 1 } else { -1 };
            let c = binomial(s as u64, i as u64) * int(sign);
            let i = i as i64;
            out = &out + &self.d(l - m - i, &self.d(m + i, f)).scale(&c);
        }
        out
    }

    /// The closed form `t^l (∂² + (m + lb)∂ + (m(1 − b) + lb) m b) f`.
    pub fn omega0_closed_form(&self, l: i64, m: i64, f: &UniPoly) -> UniPoly {
        let b = &self.b;
        let (l, m) = (int(l), int(m));
        let linear = &m + &l * b;
        let constant = (&m * (Rational::one() - b) + &l * b) * &m * b;
        let op = UniPoly::new(vec![constant, linear, Rational::one()]);
        (&op * f).shift(&l)
    }
}

/// Checks on the `∂`-realization of `A_b`:
/// (i) `[d_a, d_b] = (b − a) d_{a+b}` for `|a|, |b| ≤ window`;
/// (ii) `ω^{(0)}_{l,m}` equals its closed-form quadratic in `∂` for
/// `samples` random `(l, m, b')`;
/// (iii) `ω^{(s)}_{l,m} f = 0` for all `s` in `s_range`, `|l|, |m| ≤ window`.
pub fn ab_omega_check(
    config: &AbOracleConfig,
    s_range: std::ops::RangeInclusive<u32>,
    window: i64,
    degree: usize,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if *s_range.start() < 3 {
        return Err(Error::Precondition("A_b vanishing starts at s = 3".into()));
    }
    let ab = AbRealization::new(config);
    let mut report = VerificationReport::new("ab")
        .with_seed(seed)
        .param("b", format_rational(&config.b))
        .param(
            "s_range",
            format!("{}..={}", s_range.start(), s_range.end()),
        )
        .param("window", window)
        .param("degree", degree)
        .param("samples", samples);
    let mut rng = rng_from_seed(seed);
    let random_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut cs: Vec<Rational> = (0..degree).map(|_| random_rational(rng)).collect();
        cs.push(random_nonzero_rational(rng));
        UniPoly::new(cs)
    };

    for _ in 0..samples.clamp(1, 5) {
        let f = random_poly(&mut rng);
        for a in -window..=window {
            for c in -window..=window {
                let lhs = &ab.d(a, &ab.d(c, &f)) - &ab.d(c, &ab.d(a, &f));
                let rhs = ab.d(a + c, &f).scale(&int(c - a));
                report.check(lhs == rhs, || {
                    Failure::new(format!("bracket a={a}, b={c}, f={f}"), &rhs, &lhs)
                });
            }
        }
    }

    for _ in 0..samples {
        let b = loop {
            let b = random_rational(&mut rng);
            if !b.is_one() {
                break b;
            }
        };
        let other = AbRealization { b: b.clone() };
        let l = rng.gen_range(-9..=9);
        let m = rng.gen_range(-9..=9);
        let f = random_poly(&mut rng);
        let lhs = other.omega(l, m, 0, &f);
        let rhs = other.omega0_closed_form(l, m, &f);
        report.check(lhs == rhs, || {
            Failure::new(
                format!("omega0 b={}, l={l}, m={m}, f={f}", format_rational(&b)),
                &rhs,
                &lhs,
            )
        });
    }

    for _ in 0..samples.clamp(1, 5) {
        let f = random_poly(&mut rng);
        for s in s_range.clone() {
            for l in -window..=window {
                for m in -window..=window {
                    let out = ab.omega(l, m, s, &f);
                    report.check(out.is_zero(), || {
                        Failure::new(format!("omega^({s})_({l},{m}) f={f}"), "0", &out)
                    });
                }
            }
        }
    }

    let witness = ab.omega(1, 2, 2, &UniPoly::one());
    report
        .derived_constants
        .insert("omega2_(1,2)(1)".into(), witness.to_string());
    if witness.is_zero() {
        report.note("omega^(2) vanished on f = 1 at (l, m) = (1, 2); b is not generic");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d1_on_one_at_b0() {
        let ab = AbRealization { b: int(0) };
        assert_eq!(
            ab.d(1, &UniPoly::one()),
            UniPoly::new(vec![int(-1), int(1)])
        );
    }

    #[test]
    fn t_and_partial_commutation() {
        // ∂ t^k = t^k (∂ + k)
        let ab = AbRealization { b: int(3) };
        let f = UniPoly::new(vec![int(2), int(-1), int(5)]);
        for k in -3..=3 {
            let lhs = &UniPoly::x() * &ab.t(k, &f);
            let rhs = ab.t(k, &(&(&UniPoly::x() + &UniPoly::constant(int(k))) * &f));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn second_difference_is_nonzero_generically() {
        let ab = AbRealization {
            b: Rational::new(2.into(), 7.into()),
        };
        assert!(!ab.omega(1, 2, 2, &UniPoly::one()).is_zero());
    }

    #[test]
    fn rejects_b_equal_one() {
        assert!(AbOracleConfig::new(int(1)).is_err());
    }
}
