//! Runs named verification suites against a descriptor file and collects
//! the results into a [`ReportDocument`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::action::{
    c_act, omega_apply, t_act, ModuleInstance, OmegaSpec, TwistedInstance, VirasoroAction,
    WeightVector,
};
use crate::coeff::{AVector, CoefficientModule, Descriptor};
use crate::io::{DescriptorFile, Mode, OperatorSpec, ReportDocument};
use crate::kernel::{format_rational, rat, Rational};
use crate::oracles::{
    ab_omega_check, annihilation_profile, check_bracket, check_hv_relations, check_module_axiom,
    check_twisted_omega, check_twisted_reduction, determine_omega_constant, eh_identity_check,
    eh_identity_holds, intertwiner_check, intertwiner_check_with_map, mw_c4_typo_check,
    mw_cancellation_check, random_rational, reachability_probe, rng_from_seed,
    tensor_contrast_check, AbOracleConfig, DropFactorial, Failure, MWOracleConfig, ReachConfig,
    ReachReport, SampleSpec, VerificationReport,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Bracket,
    Hv,
    Annihilation,
    Constant,
    Reach,
    Intertwiner,
    Tensor,
    Eh,
    Ab,
    Mw,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Bracket,
        Suite::Hv,
        Suite::Annihilation,
        Suite::Constant,
        Suite::Reach,
        Suite::Intertwiner,
        Suite::Tensor,
        Suite::Eh,
        Suite::Ab,
        Suite::Mw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bracket => "bracket",
            Suite::Hv => "hv",
            Suite::Annihilation => "lemma3",
            Suite::Constant => "constant",
            Suite::Reach => "reach",
            Suite::Intertwiner => "intertwiner",
            Suite::Tensor => "tensor",
            Suite::Eh => "eh",
            Suite::Ab => "ab",
            Suite::Mw => "mw",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Suites to run. With `all`, suites that do not apply to the descriptor
/// are skipped with a note; a suite named explicitly must apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSelection {
    pub suites: Vec<Suite>,
    pub all: bool,
}

impl SuiteSelection {
    pub fn all() -> Self {
        Self {
            suites: Suite::ALL.to_vec(),
            all: true,
        }
    }

    /// Comma-separated suite names, or `all`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        if names.is_empty() {
            return Err(Error::Parse("empty suite list".into()));
        }
        if names.contains(&"all") {
            return Ok(Self::all());
        }
        let mut suites = names
            .into_iter()
            .map(Suite::from_str)
            .collect::<Result<Vec<_>>>()?;
        suites.sort();
        suites.dedup();
        Ok(Self { suites, all: false })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutant {
    /// Drops the `1/(i+1)!` divisors from `d_m`.
    DropFactorial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Index window `|a|, |b| ≤ window` for bracket-type suites.
    pub window: i64,
    pub samples: usize,
    /// Degree of random coefficient vectors.
    pub degree: usize,
    /// Filtration cap of the reachability slice.
    pub degree_cap: usize,
    pub mutant: Option<Mutant>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            window: 5,
            samples: 20,
            degree: 4,
            degree_cap: 3,
            mutant: None,
        }
    }
}

impl VerifyOptions {
    fn omega_spec(&self) -> SampleSpec {
        SampleSpec {
            samples: self.samples.clamp(1, 5),
            seed: self.seed,
            lm_window: self.window.clamp(1, 3),
            degree: self.degree,
        }
    }

    fn reach_config(&self) -> ReachConfig {
        ReachConfig {
            degree_cap: self.degree_cap,
            ..ReachConfig::default()
        }
    }

    fn to_map(&self) -> BTreeMap<String, String> {
        let spec = self.omega_spec();
        let reach = self.reach_config();
        let mut m = BTreeMap::new();
        m.insert("window".into(), self.window.to_string());
        m.insert("samples".into(), self.samples.to_string());
        m.insert("degree".into(), self.degree.to_string());
        m.insert("degree_cap".into(), self.degree_cap.to_string());
        m.insert("omega_samples".into(), spec.samples.to_string());
        m.insert("omega_lm_window".into(), spec.lm_window.to_string());
        m.insert("constant_samples".into(), self.samples.max(50).to_string());
        m.insert(
            "reach_grades".into(),
            format!("{}..={}", reach.grade_lo, reach.grade_hi),
        );
        m.insert(
            "reach_operator_window".into(),
            reach.operator_window.to_string(),
        );
        m.insert("reach_word_length".into(), reach.word_length.to_string());
        m.insert("intertwiner_n0".into(), "-2..=2".into());
        m.insert("eh_s_max".into(), "12".into());
        m.insert("ab_s_range".into(), "3..=6".into());
        m.insert("mw_i_range".into(), "4..=20".into());
        if let Some(Mutant::DropFactorial) = self.mutant {
            m.insert("mutant".into(), "drop-factorial".into());
        }
        m
    }
}

/// Why a suite cannot run on this descriptor, if it cannot.
fn inapplicable(suite: Suite, file: &DescriptorFile) -> Option<String> {
    let r = file.descriptor.rank();
    let twisted = matches!(file.mode, Mode::Twisted(_));
    match suite {
        Suite::Constant | Suite::Tensor if r == 0 => {
            Some(format!("{suite} needs rank r >= 1 (this module has r = 0)"))
        }
        Suite::Intertwiner if twisted => {
            Some("intertwiner compares plain modules N(M, alpha)".into())
        }
        _ => None,
    }
}

fn top_order_expected(desc: &Descriptor) -> bool {
    match desc {
        Descriptor::OneDim(d) => {
            !Zero::is_zero(&(&d.b * (Rational::from_integer(1.into()) - &d.b)))
        }
        _ => true,
    }
}

/// Runs `selection` against `file`. Failing checks end up in the document;
/// only configuration problems are errors.
pub fn run_verify(
    file: &DescriptorFile,
    selection: &SuiteSelection,
    opts: &VerifyOptions,
) -> Result<ReportDocument> {
    if opts.window < 1 {
        return Err(Error::Precondition("window must be at least 1".into()));
    }
    if opts.mutant.is_some() && matches!(file.mode, Mode::Twisted(_)) {
        return Err(Error::Precondition(
            "mutants are defined for plain modules only".into(),
        ));
    }
    let mut doc = ReportDocument::new(opts.seed, file.to_toml(), opts.to_map());
    for &suite in &selection.suites {
        if let Some(why) = inapplicable(suite, file) {
            if selection.all {
                let mut r = VerificationReport::new(suite.name());
                r.note(format!("skipped: {why}"));
                doc.push(r);
                continue;
            }
            return Err(Error::Precondition(why));
        }
        for report in run_suite(suite, file, opts)? {
            doc.push(report);
        }
    }
    Ok(doc)
}

fn run_suite(
    suite: Suite,
    file: &DescriptorFile,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    let desc = &file.descriptor;
    let zero_alpha = ModuleInstance::new(desc.clone(), Rational::zero());
    let plain_alpha = file.alpha().cloned().unwrap_or_else(Rational::zero);
    let plain = ModuleInstance::new(desc.clone(), plain_alpha.clone());
    let (seed, window, samples, degree) = (opts.seed, opts.window, opts.samples, opts.degree);
    let spec = opts.omega_spec();
    let r = desc.rank() as u32;
    let mut out = Vec::new();
    match suite {
        Suite::Bracket => {
            match (&file.mode, opts.mutant) {
                (Mode::Plain(_), None) => {
                    out.push(check_bracket(&plain, window, samples, seed, degree)?)
                }
                (Mode::Plain(_), Some(Mutant::DropFactorial)) => out.push(check_bracket(
                    &DropFactorial(plain.clone()),
                    window,
                    samples,
                    seed,
                    degree,
                )?),
                (Mode::Twisted(beta), _) => {
                    let tw = TwistedInstance::new(desc.clone(), beta.clone());
                    out.push(check_bracket(&tw, window, samples, seed, degree)?);
                    out.push(check_twisted_reduction(
                        desc,
                        &beta.coeff(0),
                        window,
                        samples,
                        seed,
                        degree,
                    )?);
                }
            }
            out.push(check_module_axiom(desc, samples, seed, degree)?);
        }
        Suite::Hv => {
            let mut rep = check_hv_relations(&zero_alpha, window, samples, seed, degree)?;
            if !plain_alpha.is_zero() || matches!(file.mode, Mode::Twisted(_)) {
                rep.note("relations checked on N(M, 0), the module the extension acts on");
            }
            out.push(rep);
        }
        Suite::Annihilation => {
            let inst = match file.mode {
                Mode::Plain(_) => &plain,
                Mode::Twisted(_) => &zero_alpha,
            };
            let profile = annihilation_profile(inst, 2 * r + 6, &spec)?;
            let mut rep = profile.to_report(top_order_expected(desc));
            rep.seed = Some(seed);
            if !top_order_expected(desc) {
                rep.note(
                    "degenerate parameters: top-order coefficient vanishes, outside the hypotheses",
                );
            }
            out.push(rep);
            if let Mode::Twisted(beta) = &file.mode {
                let tw = TwistedInstance::new(desc.clone(), beta.clone());
                out.push(check_twisted_omega(&tw, r + 3..=2 * r + 6, &spec)?);
            }
        }
        Suite::Constant => {
            let inst = match file.mode {
                Mode::Plain(_) => &plain,
                Mode::Twisted(_) => &zero_alpha,
            };
            let c = determine_omega_constant(inst, samples.max(50), seed, degree)?;
            let mut rep = c.to_report();
            rep.seed = Some(seed);
            out.push(rep);
        }
        Suite::Reach => {
            let seed_vec = WeightVector::single(0, desc.unit());
            let cfg = opts.reach_config();
            let rr = match &file.mode {
                Mode::Plain(_) => reachability_probe(&plain, &seed_vec, &cfg)?,
                Mode::Twisted(beta) => reachability_probe(
                    &TwistedInstance::new(desc.clone(), beta.clone()),
                    &seed_vec,
                    &cfg,
                )?,
            };
            out.push(reach_report(&rr, &cfg, file, "1 @ grade 0"));
        }
        Suite::Intertwiner => {
            let mut rep = VerificationReport::new("intertwiner").with_seed(seed);
            for n0 in -2..=2 {
                rep.merge(intertwiner_check(
                    desc,
                    &plain_alpha,
                    n0,
                    window,
                    samples,
                    seed,
                    degree,
                )?);
            }
            rep = rep
                .param("alpha", format_rational(&plain_alpha))
                .param("n0", "-2..=2")
                .param("window", window);
            out.push(rep);
            let mut control = VerificationReport::new("intertwiner-control")
                .with_seed(seed)
                .param("map", "v(l) -> v(l + n0 + 1)");
            for n0 in -2..=2 {
                let sab = intertwiner_check_with_map(
                    desc,
                    &plain_alpha,
                    n0,
                    n0 + 1,
                    window,
                    samples.min(3),
                    seed,
                    degree,
                )?;
                control.check(!sab.passed(), || {
                    Failure::new(format!("sabotaged map, n0={n0}"), "rejected", "accepted")
                });
            }
            out.push(control);
        }
        Suite::Tensor => {
            let inst = match file.mode {
                Mode::Plain(_) => &plain,
                Mode::Twisted(_) => &zero_alpha,
            };
            out.push(tensor_contrast_check(&rat(1, 3), &rat(2, 1), inst, &spec)?);
        }
        Suite::Eh => {
            let mut rep = eh_identity_check(12, window)?;
            let mut guard = VerificationReport::new("eh-s0-control");
            for m in -window..=window {
                guard.check(!eh_identity_holds(0, m), || {
                    Failure::new(format!("s=0, m={m}"), "identity fails", "identity holds")
                });
            }
            rep.note("s = 0 excluded: see eh-s0-control");
            out.push(rep);
            out.push(guard);
        }
        Suite::Ab => {
            let b = file.ab_b.clone().unwrap_or_else(|| rat(1, 2));
            let cfg = AbOracleConfig::new(b)?;
            out.push(ab_omega_check(
                &cfg,
                3..=6,
                window.min(4),
                5,
                samples,
                seed,
            )?);
        }
        Suite::Mw => {
            let configs = match &file.mw {
                Some(p) => vec![MWOracleConfig::new(
                    p.z.clone(),
                    p.m2.clone(),
                    p.m3.clone(),
                    p.m4.clone(),
                )?],
                None => random_mw_configs(seed, 10),
            };
            let mut rep = VerificationReport::new("mw")
                .with_seed(seed)
                .param("configs", configs.len());
            let mut typo = VerificationReport::new("mw-printed-c4")
                .with_seed(seed)
                .param("c4", "m3 (printed) instead of m4");
            let mut refuted = 0;
            for cfg in &configs {
                rep.merge(mw_cancellation_check(cfg, 4..=20)?);
                let printed = mw_c4_typo_check(cfg, 4..=20)?;
                let expect_fail = cfg.m3 != cfg.m4;
                typo.check(printed.passed() != expect_fail, || {
                    Failure::new(
                        format!(
                            "z={}, m3={}, m4={}",
                            format_rational(&cfg.z),
                            format_rational(&cfg.m3),
                            format_rational(&cfg.m4)
                        ),
                        if expect_fail {
                            "printed c4 fails"
                        } else {
                            "printed c4 holds"
                        },
                        if printed.passed() { "holds" } else { "fails" },
                    )
                });
                refuted += usize::from(!printed.passed());
            }
            if refuted > 0 {
                typo.discrepancies.push(format!(
                    "printed c4 = m3 breaks the i = 4 cancellation on {refuted} of {} configs; c4 = m4 used",
                    configs.len()
                ));
            }
            out.push(rep);
            out.push(typo);
        }
    }
    Ok(out)
}

/// Random parameters satisfying the genericity guard.
pub fn random_mw_configs(seed: u64, count: usize) -> Vec<MWOracleConfig> {
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let z = random_rational(&mut rng);
        let (m2, m3, m4) = (
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        if let Ok(cfg) = MWOracleConfig::new(z, m2, m3, m4) {
            out.push(cfg);
        }
    }
    out
}

/// Converts a probe result into a report. Full rank is required only when
/// the descriptor meets the simplicity hypotheses.
fn reach_report(
    rr: &ReachReport,
    cfg: &ReachConfig,
    file: &DescriptorFile,
    seed: &str,
) -> VerificationReport {
    let hypotheses = file.descriptor.rank() >= 1;
    let mut rep = VerificationReport::new("reach")
        .param("seed_vector", seed)
        .param("degree_cap", cfg.degree_cap)
        .param("grades", format!("{}..={}", cfg.grade_lo, cfg.grade_hi))
        .param("operator_window", cfg.operator_window)
        .param("word_length", cfg.word_length);
    rep.derived_constants
        .insert("rank".into(), rr.rank.to_string());
    rep.derived_constants
        .insert("slice_dim".into(), rr.slice_dim.to_string());
    rep.derived_constants
        .insert("level_ranks".into(), format!("{:?}", rr.level_ranks));
    rep.note(rr.note.clone());
    if hypotheses {
        rep.check(rr.full, || {
            Failure::new(
                format!("seed {seed}"),
                format!("rank {}", rr.slice_dim),
                format!("rank {}", rr.rank),
            )
        });
    } else {
        rep.note("rank r = 0: outside the simplicity hypotheses, rank reported only");
    }
    rep
}

/// Reachability from an arbitrary seed vector.
pub fn run_probe(
    file: &DescriptorFile,
    seed: &WeightVector<AVector>,
    cfg: &ReachConfig,
) -> Result<ReachReport> {
    let mut rr = match &file.mode {
        Mode::Plain(a) => reachability_probe(
            &ModuleInstance::new(file.descriptor.clone(), a.clone()),
            seed,
            cfg,
        )?,
        Mode::Twisted(b) => reachability_probe(
            &TwistedInstance::new(file.descriptor.clone(), b.clone()),
            seed,
            cfg,
        )?,
    };
    if seed.is_zero() {
        rr.note.push_str("; zero seed");
    }
    if file.descriptor.rank() == 0 {
        rr.note
            .push_str("; rank r = 0 is outside the simplicity hypotheses");
    }
    Ok(rr)
}

/// Applies one operator to a vector in the module the file describes.
pub fn apply_operator(
    file: &DescriptorFile,
    op: OperatorSpec,
    w: &WeightVector<AVector>,
) -> Result<WeightVector<AVector>> {
    let desc = file.descriptor.clone();
    match (&file.mode, op) {
        (_, OperatorSpec::C) => Ok(c_act(w)),
        (_, OperatorSpec::T(k)) => Ok(t_act(k, w)),
        (Mode::Plain(a), OperatorSpec::D(m)) => ModuleInstance::new(desc, a.clone()).d(m, w),
        (Mode::Twisted(b), OperatorSpec::D(m)) => TwistedInstance::new(desc, b.clone()).d(m, w),
        (Mode::Plain(a), OperatorSpec::Omega { l, m, s }) => omega_apply(
            OmegaSpec::new(l, m, s),
            w,
            &ModuleInstance::new(desc, a.clone()),
        ),
        (Mode::Twisted(b), OperatorSpec::Omega { l, m, s }) => omega_apply(
            OmegaSpec::new(l, m, s),
            w,
            &TwistedInstance::new(desc, b.clone()),
        ),
    }
}
