use num::Zero;

use super::report::{Failure, VerificationReport};
use crate::kernel::{format_rational, int, Rational};
use crate::{Error, Result};

/// Parameters `z ≠ 0, m₂, m₃, m₄` of the comparison module, subject to the
/// genericity conditions
/// `z m₃ ≠ m₄`, `2z m₂ ≠ m₃`, `3z m₃ ≠ 2m₄`, `z² m₂ + m₄ ≠ 2z m₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWOracleConfig {
    pub z: Rational,
    pub m2: Rational,
    pub m3: Rational,
    pub m4: Rational,
}

impl MWOracleConfig {
    pub fn new(z: Rational, m2: Rational, m3: Rational, m4: Rational) -> Result<Self> {
        let cfg = Self { z, m2, m3, m4 };
        let broken = cfg.violations();
        if broken.is_empty() {
            Ok(cfg)
        } else {
            Err(Error::Precondition(format!(
                "genericity violated: {}",
                broken.join(", ")
            )))
        }
    }

    pub fn violations(&self) -> Vec<&'static str> {
        let (z, m2, m3, m4) = (&self.z, &self.m2, &self.m3, &self.m4);
        let mut out = Vec::new();
        if z.is_zero() {
            out.push("z != 0");
        }
        if z * m3 == *m4 {
            out.push("z*m3 != m4");
        }
        if int(2) * z * m2 == *m3 {
            out.push("2*z*m2 != m3");
        }
        if int(3) * z * m3 == int(2) * m4 {
            out.push("3*z*m3 != 2*m4");
        }
        if z * z * m2 + m4 == int(2) * z * m3 {
            out.push("z^2*m2 + m4 != 2*z*m3");
        }
        out
    }
}

/// Which value to use for `c₄`, the scalar by which `d_4 − z³ d_1` acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C4Reading {
    /// `c₄ = m₄`, the value of the general formula at `i = 4`.
    Formula,
    /// `c₄ = m₃`, as printed next to `c₂` and `c₃` in the published derivation.
    Printed,
}

/// Scalar `c_i` with `(d_i − z^{i−1} d_1) v = c_i v`, `i ≥ 2`.
pub fn mw_coefficient(cfg: &MWOracleConfig, i: u32, c4: C4Reading) -> Rational {
    match i {
        0 | 1 => panic!("c_i is only defined for i >= 2"),
        2 => cfg.m2.clone(),
        3 => cfg.m3.clone(),
        4 if c4 == C4Reading::Printed => cfg.m3.clone(),
        _ => {
            let i = i as i64;
            -int(i - 4) * &cfg.m3 * zpow(&cfg.z, i - 3) + int(i - 3) * &cfg.m4 * zpow(&cfg.z, i - 4)
        }
    }
}

fn zpow(z: &Rational, k: i64) -> Rational {
    (0..k).fold(int(1), |acc, _| acc * z)
}

fn combination(cfg: &MWOracleConfig, i: u32, c4: C4Reading) -> Rational {
    let z = &cfg.z;
    mw_coefficient(cfg, i + 1, c4) - int(2) * z * mw_coefficient(cfg, i, c4)
        + z * z * mw_coefficient(cfg, i - 1, c4)
}

/// `c_{i+1} − 2z c_i + z² c_{i−1} = 0` for every `i` in `i_range`.
pub fn mw_cancellation_check(
    cfg: &MWOracleConfig,
    i_range: std::ops::RangeInclusive<u32>,
) -> Result<VerificationReport> {
    mw_check(cfg, i_range, C4Reading::Formula)
}

/// The same combination with the printed `c₄ = m₃`; expected to fail for
/// generic parameters, serving as a witness that the printed value cannot
/// be right.
pub fn mw_c4_typo_check(
    cfg: &MWOracleConfig,
    i_range: std::ops::RangeInclusive<u32>,
) -> Result<VerificationReport> {
    mw_check(cfg, i_range, C4Reading::Printed)
}

fn mw_check(
    cfg: &MWOracleConfig,
    i_range: std::ops::RangeInclusive<u32>,
    c4: C4Reading,
) -> Result<VerificationReport> {
    if !cfg.violations().is_empty() {
        return Err(Error::Precondition(format!(
            "genericity violated: {}",
            cfg.violations().join(", ")
        )));
    }
    if *i_range.start() < 4 {
        return Err(Error::Precondition(
            "cancellation holds for i >= 4 only".into(),
        ));
    }
    let suite = match c4 {
        C4Reading::Formula => "mw",
        C4Reading::Printed => "mw-printed-c4",
    };
    let mut report = VerificationReport::new(suite)
        .param("z", format_rational(&cfg.z))
        .param("m2", format_rational(&cfg.m2))
        .param("m3", format_rational(&cfg.m3))
        .param("m4", format_rational(&cfg.m4))
        .param(
            "i_range",
            format!("{}..={}", i_range.start(), i_range.end()),
        );
    for i in i_range {
        let value = combination(cfg, i, c4);
        report.check(value.is_zero(), || {
            Failure::new(format!("i={i}"), "0", format_rational(&value))
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn cfg() -> MWOracleConfig {
        MWOracleConfig::new(rat(2, 3), int(1), rat(-5, 2), int(7)).unwrap()
    }

    #[test]
    fn formula_agrees_at_four() {
        let c = cfg();
        assert_eq!(mw_coefficient(&c, 4, C4Reading::Formula), c.m4);
    }

    #[test]
    fn printed_c4_leaves_residue() {
        let c = cfg();
        // 2z (m₄ − m₃) at i = 4
        let expect = int(2) * &c.z * (&c.m4 - &c.m3);
        assert_eq!(combination(&c, 4, C4Reading::Printed), expect);
        assert!(combination(&c, 4, C4Reading::Formula).is_zero());
    }

    #[test]
    fn guard() {
        assert!(MWOracleConfig::new(int(1), int(1), int(3), int(3)).is_err());
        assert!(MWOracleConfig::new(int(0), int(1), int(3), int(5)).is_err());
        assert!(MWOracleConfig::new(int(1), int(1), int(0), int(0)).is_err());
        let bad = MWOracleConfig {
            z: int(1),
            m2: int(0),
            m3: int(0),
            m4: int(0),
        };
        assert!(mw_cancellation_check(&bad, 4..=6).is_err());
        assert!(mw_cancellation_check(&cfg(), 3..=6).is_err());
    }
}
