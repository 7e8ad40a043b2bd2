use num::Zero;

use super::report::{Failure, VerificationReport};
use super::sampling::{random_weight_vector, rng_from_seed, RandomVector, SampleSpec};
use crate::action::{
    omega_apply, t_act, ModuleInstance, OmegaSpec, TwistedInstance, VirasoroAction, WeightVector,
    WeightVectorOf,
};
use crate::coeff::{CoefficientModule, ModuleVector};
use crate::kernel::{int, Rational};
use crate::{Error, Result};

/// `[d_a, d_b] w = (b − a) d_{a+b} w` for all `|a|, |b| ≤ window`, on
/// `samples` random vectors. The central term never contributes since `c`
/// acts as zero.
pub fn check_bracket<A>(
    action: &A,
    window: i64,
    samples: usize,
    seed: u64,
    degree: usize,
) -> Result<VerificationReport>
where
    A: VirasoroAction,
    A::Coeff: RandomVector,
{
    if window < 1 {
        return Err(Error::Precondition(
            "bracket window must be at least 1".into(),
        ));
    }
    let mut report = VerificationReport::new("bracket")
        .with_seed(seed)
        .param("instance", action.describe())
        .param("window", window)
        .param("samples", samples)
        .param("degree", degree);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let w = random_weight_vector(action.coeff(), &mut rng, degree);
        let singles: Vec<_> = (-window..=window)
            .map(|a| action.d(a, &w))
            .collect::<Result<_>>()?;
        for a in -window..=window {
            for b in -window..=window {
                let da_db = action.d(a, &singles[(b + window) as usize])?;
                let db_da = action.d(b, &singles[(a + window) as usize])?;
                let lhs = da_db.sub(&db_da);
                let rhs = action.d(a + b, &w)?.scale(&int(b - a));
                report.check(lhs == rhs, || {
                    Failure::new(format!("a={a}, b={b}, w={w}"), &rhs, &lhs)
                });
            }
        }
    }
    Ok(report)
}

/// The Heisenberg-Virasoro relations on `N(M, 0)` with all central elements
/// acting as zero: `[d_n, t^m] = m t^{m+n}` and `[t^n, t^m] = 0`.
pub fn check_hv_relations<M>(
    inst: &ModuleInstance<M>,
    window: i64,
    samples: usize,
    seed: u64,
    degree: usize,
) -> Result<VerificationReport>
where
    M: CoefficientModule + RandomVector,
{
    if !Zero::is_zero(&inst.alpha) {
        return Err(Error::Precondition(
            "Heisenberg-Virasoro extension needs alpha = 0".into(),
        ));
    }
    let mut report = VerificationReport::new("hv")
        .with_seed(seed)
        .param("instance", inst.describe())
        .param("window", window)
        .param("samples", samples);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let w = random_weight_vector(&inst.coeff, &mut rng, degree);
        for n in -window..=window {
            let dn_w = inst.d(n, &w)?;
            for m in -window..=window {
                let lhs = inst.d(n, &t_act(m, &w))?.sub(&t_act(m, &dn_w));
                let rhs = t_act(m + n, &w).scale(&int(m));
                report.check(lhs == rhs, || {
                    Failure::new(format!("[d_{n}, t^{m}] on {w}"), &rhs, &lhs)
                });
                let tt = t_act(n, &t_act(m, &w)).sub(&t_act(m, &t_act(n, &w)));
                report.check(tt.is_zero(), || {
                    Failure::new(format!("[t^{n}, t^{m}] on {w}"), "0", &tt)
                });
            }
        }
    }
    Ok(report)
}

/// `d̄_i d̄_j v − d̄_j d̄_i v = (j − i) d̄_{i+j} v` (zero when `i + j > r`) for
/// every pair `0 ≤ i, j ≤ r`.
pub fn check_module_axiom<M: RandomVector>(
    coeff: &M,
    samples: usize,
    seed: u64,
    degree: usize,
) -> Result<VerificationReport> {
    let r = coeff.rank();
    let mut report = VerificationReport::new("module-axiom")
        .with_seed(seed)
        .param("family", coeff.family())
        .param("rank", r)
        .param("samples", samples)
        .param("degree", degree);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let v = coeff.random_vector(&mut rng, degree);
        for i in 0..=r {
            for j in 0..=r {
                let lhs = coeff
                    .act(i, &coeff.act(j, &v)?)?
                    .sub_vector(&coeff.act(j, &coeff.act(i, &v)?)?);
                let rhs = if i + j <= r {
                    coeff.act(i + j, &v)?.scale(&int(j as i64 - i as i64))
                } else {
                    coeff.zero()
                };
                report.check(lhs == rhs, || {
                    Failure::new(format!("i={i}, j={j}, v={v}"), &rhs, &lhs)
                });
            }
        }
    }
    Ok(report)
}

/// A constant twist `β = c` reproduces `N(M, c)` exactly.
pub fn check_twisted_reduction<M>(
    coeff: &M,
    c: &Rational,
    window: i64,
    samples: usize,
    seed: u64,
    degree: usize,
) -> Result<VerificationReport>
where
    M: RandomVector + Clone,
{
    let twisted = TwistedInstance::new(
        coeff.clone(),
        crate::kernel::LaurentPoly::constant(c.clone()),
    );
    let plain = ModuleInstance::new(coeff.clone(), c.clone());
    let mut report = VerificationReport::new("twisted-constant")
        .with_seed(seed)
        .param("family", coeff.family())
        .param("beta", c)
        .param("window", window);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let w = random_weight_vector(coeff, &mut rng, degree);
        for n in -window..=window {
            let a = twisted.d(n, &w)?;
            let b = plain.d(n, &w)?;
            report.check(a == b, || Failure::new(format!("n={n}, w={w}"), &b, &a));
        }
    }
    Ok(report)
}

/// `ω^{(s)} ∘ w = ω^{(s)} w` for every `s ≥ s_min`: the twist corrections
/// are polynomials in `m` of degree too small to survive the `s`-th
/// difference. Both sides are computed by literal composition.
pub fn check_twisted_omega<M>(
    twisted: &TwistedInstance<M>,
    s_range: std::ops::RangeInclusive<u32>,
    spec: &SampleSpec,
) -> Result<VerificationReport>
where
    M: RandomVector + Clone,
{
    let r = twisted.coeff.rank() as u32;
    if *s_range.start() < r + 3 {
        return Err(Error::Precondition(format!(
            "twisted omega comparison requires s >= r + 3 = {}",
            r + 3
        )));
    }
    let plain = ModuleInstance::new(twisted.coeff.clone(), Rational::zero());
    let mut report = VerificationReport::new("twisted-omega")
        .with_seed(spec.seed)
        .param("instance", twisted.describe())
        .param(
            "s_range",
            format!("{}..={}", s_range.start(), s_range.end()),
        )
        .param("lm_window", spec.lm_window);
    let mut rng = rng_from_seed(spec.seed);
    for _ in 0..spec.samples {
        let w = random_weight_vector(&twisted.coeff, &mut rng, spec.degree);
        for s in s_range.clone() {
            for l in -spec.lm_window..=spec.lm_window {
                for m in -spec.lm_window..=spec.lm_window {
                    let om = OmegaSpec::new(l, m, s);
                    let a = omega_apply(om, &w, twisted)?;
                    let b = omega_apply(om, &w, &plain)?;
                    report.check(a == b, || {
                        Failure::new(format!("s={s}, l={l}, m={m}, w={w}"), &b, &a)
                    });
                }
            }
        }
    }
    Ok(report)
}

/// `φ: v(l) ↦ v(l + n₀)` intertwines `N(M, α) → N(M, α − n₀)`.
pub fn intertwiner_check<M>(
    coeff: &M,
    alpha: &Rational,
    n0: i64,
    window: i64,
    samples: usize,
    seed: u64,
    degree: usize,
) -> Result<VerificationReport>
where
    M: RandomVector + Clone,
{
    intertwiner_check_with_map(coeff, alpha, n0, n0, window, samples, seed, degree)
}

/// As [`intertwiner_check`], but with the candidate map `v(l) ↦ v(l + shift)`
/// so that wrong maps can be tested as negative controls.
#[allow(clippy::too_many_arguments)]
pub fn intertwiner_check_with_map<M>(
    coeff: &M,
    alpha: &Rational,
    n0: i64,
    shift: i64,
    window: i64,
    samples: usize,
    seed: u64,
    degree: usize,
) -> Result<VerificationReport>
where
    M: RandomVector + Clone,
{
    let source = ModuleInstance::new(coeff.clone(), alpha.clone());
    let target = ModuleInstance::new(coeff.clone(), alpha - int(n0));
    let mut report = VerificationReport::new("intertwiner")
        .with_seed(seed)
        .param("family", coeff.family())
        .param("alpha", alpha)
        .param("n0", n0)
        .param("map_shift", shift)
        .param("window", window);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let w = random_weight_vector(coeff, &mut rng, degree);
        for m in -window..=window {
            let lhs = target.d(m, &w.shift(shift))?;
            let rhs = source.d(m, &w)?.shift(shift);
            report.check(lhs == rhs, || {
                Failure::new(format!("m={m}, w={w}"), &rhs, &lhs)
            });
        }
    }
    Ok(report)
}

/// Deliberately corrupted action for negative controls: `d_m` with the
/// `1/(i+1)!` divisors removed.
///
/// This amounts to replacing `d̄_i` by `(i+1)! d̄_i`, which on `Γ` is again a
/// `Γ` module (with `λ_i` rescaled), so the mutant is only detectable on
/// coefficient modules whose structure constants it breaks, such as `Q_λ`.
#[derive(Clone, Debug)]
pub struct DropFactorial<M>(pub ModuleInstance<M>);

impl<M: CoefficientModule> VirasoroAction for DropFactorial<M> {
    type Coeff = M;

    fn coeff(&self) -> &M {
        &self.0.coeff
    }

    fn d(&self, m: i64, w: &WeightVectorOf<M>) -> Result<WeightVectorOf<M>> {
        let coeff = &self.0.coeff;
        let mut out = WeightVector::zero();
        for (n, v) in w.components() {
            let mut acc = v.scale(&(&self.0.alpha + int(n)));
            let mut pow = int(m);
            for i in 0..=coeff.rank() {
                acc = acc.add_vector(&coeff.act(i, v)?.scale(&pow));
                pow *= int(m);
            }
            out.add_component(n + m, &acc);
        }
        Ok(out)
    }

    fn describe(&self) -> String {
        format!("mutant[drop-factorial] {}", self.0.describe())
    }
}
