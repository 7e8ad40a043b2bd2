use super::report::{Failure, VerificationReport};
use crate::kernel::{binomial, int, LaurentPoly};
use crate::{Error, Result};

fn q(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(k, int(1))
}

/// `Σ_{i=0}^{s} C(s,i) (−1)^{s−i} (1 − q^{−m−i}) (1 − q^{m+i})`.
pub fn eh_lhs(s: u32, m: i64) -> LaurentPoly {
    let one = LaurentPoly::one();
    let mut out = LaurentPoly::zero();
    for i in 0..=s {
        let sign = if (s - i).is_multiple_of(2) { 1 } else { -1 };
        let c = binomial(s as u64, i as u64) * int(sign);
        let k = m + i as i64;
        let term = &(&one - &q(-k)) * &(&one - &q(k));
        out = &out + &term.scale(&c);
    }
    out
}

/// `−(q^m (q − 1)^s + q^{−m} (q^{−1} − 1)^s)`.
pub fn eh_rhs(s: u32, m: i64) -> LaurentPoly {
    let one = LaurentPoly::one();
    let a = &q(m) * &(&q(1) - &one).pow(s);
    let b = &q(-m) * &(&q(-1) - &one).pow(s);
    -(&a + &b)
}

pub fn eh_identity_holds(s: u32, m: i64) -> bool {
    eh_lhs(s, m) == eh_rhs(s, m)
}

/// Exact Laurent-polynomial check of the `q = e^h` identity for every
/// `1 ≤ s ≤ s_max`, `|m| ≤ m_window`.
pub fn eh_identity_check(s_max: u32, m_window: i64) -> Result<VerificationReport> {
    if s_max < 1 {
        return Err(Error::Precondition("E_h identity needs s >= 1".into()));
    }
    let mut report = VerificationReport::new("eh")
        .param("s_max", s_max)
        .param("m_window", m_window);
    for s in 1..=s_max {
        for m in -m_window..=m_window {
            let (lhs, rhs) = (eh_lhs(s, m), eh_rhs(s, m));
            report.check(lhs == rhs, || {
                Failure::new(format!("s={s}, m={m}"), &rhs, &lhs)
            });
        }
    }
    Ok(report)
}
