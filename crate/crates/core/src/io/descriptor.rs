//! Descriptor files: TOML documents naming a coefficient module and the
//! offset `α` or twist `β` of the Virasoro module built on it.
//!
//! ```toml
//! family = "qlambda"        # onedim | gamma | qlambda
//! r = 5                     # qlambda only
//! S = [2, 4, 5]             # qlambda only
//!
//! [lambda]                  # qlambda only; missing entries are 0
//! 5 = "1"
//!
//! [parameters]              # onedim: b; gamma: alpha1, lambda1, lambda2
//!
//! [mode]                    # exactly one of alpha / beta; default alpha = 0
//! alpha = "1/3"
//! # beta = { "0" = "1", "1" = "2", "-3" = "-1" }
//!
//! [mw]                      # optional comparison-oracle parameters
//! z = "2/3"
//! m2 = "1"
//! m3 = "-5/2"
//! m4 = "7"
//!
//! [ab]
//! b = "1/2"
//! ```
//!
//! All rationals are exact `"p/q"` strings.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::coeff::{
    validate_descriptor, Descriptor, GammaDescriptor, OneDimDescriptor, QLambdaDescriptor,
    Violation,
};
use crate::kernel::{format_rational, parse_rational, LaurentPoly, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Family {
    Onedim,
    Gamma,
    Qlambda,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMode {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMw {
    z: String,
    m2: String,
    m3: String,
    m4: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAb {
    b: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    s: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    parameters: BTreeMap<String, String>,
    #[serde(default)]
    mode: RawMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mw: Option<RawMw>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ab: Option<RawAb>,
}

/// Plain `N(M, α)` or twisted `N(M, β)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    Plain(Rational),
    Twisted(LaurentPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwParams {
    pub z: Rational,
    pub m2: Rational,
    pub m3: Rational,
    pub m4: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DescriptorFile {
    pub descriptor: Descriptor,
    pub mode: Mode,
    pub mw: Option<MwParams>,
    pub ab_b: Option<Rational>,
}

fn field(name: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| Error::Parse(format!("field `{name}`: {e}")))
}

fn required<'a>(params: &'a BTreeMap<String, String>, name: &str) -> Result<&'a str> {
    params
        .get(name)
        .map(String::as_str)
        .ok_or_else(|| Error::Parse(format!("missing field `parameters.{name}`")))
}

fn reject_extra(params: &BTreeMap<String, String>, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::Parse(format!(
            "unknown field `parameters.{k}` (expected one of {allowed:?})"
        ))),
        None => Ok(()),
    }
}

impl DescriptorFile {
    /// Parses and validates; any violated invariant is an error.
    pub fn parse(text: &str) -> Result<Self> {
        let (file, violations) = Self::parse_unvalidated(text)?;
        if violations.is_empty() {
            Ok(file)
        } else {
            Err(Error::InvalidDescriptor(violations))
        }
    }

    /// Parses without rejecting invalid descriptors; returns the violations
    /// alongside.
    pub fn parse_unvalidated(text: &str) -> Result<(Self, Vec<Violation>)> {
        let raw: RawDescriptor =
            toml::from_str(text).map_err(|e| Error::Parse(e.to_string().trim_end().to_string()))?;
        let descriptor = match raw.family {
            Family::Onedim => {
                reject_extra(&raw.parameters, &["b"])?;
                if raw.r.is_some() || raw.s.is_some() || raw.lambda.is_some() {
                    return Err(Error::Parse("onedim takes no `r`, `S` or `lambda`".into()));
                }
                let b = field("parameters.b", required(&raw.parameters, "b")?)?;
                Descriptor::OneDim(OneDimDescriptor::new(b))
            }
            Family::Gamma => {
                reject_extra(&raw.parameters, &["alpha1", "lambda1", "lambda2"])?;
                if raw.r.is_some() || raw.s.is_some() || raw.lambda.is_some() {
                    return Err(Error::Parse("gamma takes no `r`, `S` or `lambda`".into()));
                }
                let get = |k: &str| -> Result<Rational> {
                    field(&format!("parameters.{k}"), required(&raw.parameters, k)?)
                };
                Descriptor::Gamma(GammaDescriptor::new(
                    get("alpha1")?,
                    get("lambda1")?,
                    get("lambda2")?,
                ))
            }
            Family::Qlambda => {
                reject_extra(&raw.parameters, &[])?;
                let r = raw
                    .r
                    .ok_or_else(|| Error::Parse("qlambda needs `r`".into()))?;
                let s = raw
                    .s
                    .ok_or_else(|| Error::Parse("qlambda needs `S`".into()))?;
                let mut lambda = BTreeMap::new();
                for (k, v) in raw.lambda.iter().flatten() {
                    let i: usize = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("`lambda` key {k:?} is not an index")))?;
                    lambda.insert(i, field(&format!("lambda.{k}"), v)?);
                }
                Descriptor::QLambda(QLambdaDescriptor::new(r, s, lambda))
            }
        };
        let mode = match (raw.mode.alpha, raw.mode.beta) {
            (Some(_), Some(_)) => {
                return Err(Error::Parse(
                    "`mode` takes either `alpha` or `beta`, not both".into(),
                ))
            }
            (Some(a), None) => Mode::Plain(field("mode.alpha", &a)?),
            (None, Some(b)) => {
                let mut beta = LaurentPoly::zero();
                for (k, v) in &b {
                    let e: i64 = k.trim().parse().map_err(|_| {
                        Error::Parse(format!("`mode.beta` key {k:?} is not an exponent"))
                    })?;
                    beta.add_term(e, field(&format!("mode.beta.{k}"), v)?);
                }
                Mode::Twisted(beta)
            }
            (None, None) => Mode::Plain(Rational::zero()),
        };
        let mw = raw
            .mw
            .map(|m| -> Result<MwParams> {
                Ok(MwParams {
                    z: field("mw.z", &m.z)?,
                    m2: field("mw.m2", &m.m2)?,
                    m3: field("mw.m3", &m.m3)?,
                    m4: field("mw.m4", &m.m4)?,
                })
            })
            .transpose()?;
        let ab_b = raw.ab.map(|a| field("ab.b", &a.b)).transpose()?;
        let file = DescriptorFile {
            descriptor,
            mode,
            mw,
            ab_b,
        };
        let violations = validate_descriptor(&file.descriptor);
        Ok((file, violations))
    }

    /// Canonical TOML form; parsing it yields `self` again.
    pub fn to_toml(&self) -> String {
        let mut params = BTreeMap::new();
        let (family, r, s, lambda) = match &self.descriptor {
            Descriptor::OneDim(d) => {
                params.insert("b".to_string(), format_rational(&d.b));
                (Family::Onedim, None, None, None)
            }
            Descriptor::Gamma(g) => {
                params.insert("alpha1".to_string(), format_rational(&g.alpha1));
                params.insert("lambda1".to_string(), format_rational(&g.lambda1));
                params.insert("lambda2".to_string(), format_rational(&g.lambda2));
                (Family::Gamma, None, None, None)
            }
            Descriptor::QLambda(q) => {
                let lambda = q
                    .lambda
                    .iter()
                    .map(|(i, c)| (i.to_string(), format_rational(c)))
                    .collect();
                (
                    Family::Qlambda,
                    Some(q.r),
                    Some(q.s.iter().copied().collect()),
                    Some(lambda),
                )
            }
        };
        let mode = match &self.mode {
            Mode::Plain(a) => RawMode {
                alpha: Some(format_rational(a)),
                beta: None,
            },
            Mode::Twisted(b) => RawMode {
                alpha: None,
                beta: Some(
                    b.terms()
                        .map(|(k, c)| (k.to_string(), format_rational(c)))
                        .collect(),
                ),
            },
        };
        let raw = RawDescriptor {
            family,
            r,
            s,
            lambda,
            parameters: params,
            mode,
            mw: self.mw.as_ref().map(|m| RawMw {
                z: format_rational(&m.z),
                m2: format_rational(&m.m2),
                m3: format_rational(&m.m3),
                m4: format_rational(&m.m4),
            }),
            ab: self.ab_b.as_ref().map(|b| RawAb {
                b: format_rational(b),
            }),
        };
        toml::to_string(&raw).expect("descriptor serializes")
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match &self.mode {
            Mode::Plain(a) => Some(a),
            Mode::Twisted(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};

    const GAMMA: &str = r#"
family = "gamma"
[parameters]
alpha1 = "0"
lambda1 = "1"
lambda2 = "1"
[mode]
alpha = "1/3"
"#;

    #[test]
    fn parses_gamma() {
        let f = DescriptorFile::parse(GAMMA).unwrap();
        assert_eq!(
            f.descriptor,
            Descriptor::Gamma(GammaDescriptor::new(int(0), int(1), int(1)))
        );
        assert_eq!(f.mode, Mode::Plain(rat(1, 3)));
    }

    #[test]
    fn canonical_round_trip() {
        let f = DescriptorFile::parse(GAMMA).unwrap();
        let text = f.to_toml();
        let g = DescriptorFile::parse(&text).unwrap();
        assert_eq!(f, g);
        assert_eq!(g.to_toml(), text);
    }

    #[test]
    fn qlambda_and_beta() {
        let text = r#"
family = "qlambda"
r = 5
S = [2, 4, 5]
[lambda]
5 = "1"
[mode]
beta = { "0" = "1", "1" = "2", "-3" = "-1" }
"#;
        let f = DescriptorFile::parse(text).unwrap();
        let q = f.descriptor.as_qlambda().unwrap();
        assert_eq!(q.lambda(5), int(1));
        let Mode::Twisted(beta) = &f.mode else {
            panic!()
        };
        assert_eq!(beta.coeff(-3), int(-1));
        assert_eq!(DescriptorFile::parse(&f.to_toml()).unwrap(), f);
    }

    #[test]
    fn invalid_descriptor_is_rejected_but_describable() {
        let text = "family = \"qlambda\"\nr = 5\nS = [2, 4, 5]\n[lambda]\n5 = \"0\"\n";
        assert!(matches!(
            DescriptorFile::parse(text),
            Err(Error::InvalidDescriptor(v)) if v == vec![Violation::ConditionI]
        ));
        let (_, v) = DescriptorFile::parse_unvalidated(text).unwrap();
        assert_eq!(v, vec![Violation::ConditionI]);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let err = DescriptorFile::parse("family = \"gamma\"\n[parameters]\nalpha1 = \"1/0\"\nlambda1 = \"1\"\nlambda2 = \"0\"\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("parameters.alpha1"), "{err}");
        let err = DescriptorFile::parse("family = \"gamma\"\n[parameters\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2"), "{err}");
        let err =
            DescriptorFile::parse("family = \"onedim\"\n[parameters]\nb = \"1\"\nc = \"2\"\n")
                .unwrap_err()
                .to_string();
        assert!(err.contains("parameters.c"), "{err}");
        assert!(DescriptorFile::parse("family = \"lie\"\n").is_err());
    }
}
