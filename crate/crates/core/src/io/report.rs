use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::oracles::VerificationReport;
use crate::Result;

pub const TOOL_NAME: &str = "virasoro";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything one `verify` run produced. Serialized as pretty JSON with
/// sorted maps and no timestamps, so identical runs give identical bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    /// The descriptor in canonical TOML form.
    pub descriptor: String,
    /// Sampling windows and other run options.
    pub options: BTreeMap<String, String>,
    pub suites: Vec<VerificationReport>,
    /// `suite.name` → exact value.
    pub derived_constants: BTreeMap<String, String>,
    /// Measured values that disagree with a published value.
    pub discrepancy_flags: Vec<String>,
    pub passed: bool,
}

impl ReportDocument {
    pub fn new(seed: u64, descriptor: String, options: BTreeMap<String, String>) -> Self {
        Self {
            tool: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
            seed,
            descriptor,
            options,
            suites: Vec::new(),
            derived_constants: BTreeMap::new(),
            discrepancy_flags: Vec::new(),
            passed: true,
        }
    }

    pub fn push(&mut self, report: VerificationReport) {
        for (k, v) in &report.derived_constants {
            self.derived_constants
                .insert(format!("{}.{k}", report.suite), v.clone());
        }
        for d in &report.discrepancies {
            self.discrepancy_flags
                .push(format!("{}: {d}", report.suite));
        }
        self.passed &= report.passed();
        self.suites.push(report);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::Failure;

    #[test]
    fn push_collects_constants_and_flags() {
        let mut doc = ReportDocument::new(7, String::new(), BTreeMap::new());
        let mut r = VerificationReport::new("constant");
        r.derived_constants.insert("c_2".into(), "-20".into());
        r.discrepancies.push("stated -720".into());
        doc.push(r);
        assert!(doc.passed);
        assert_eq!(doc.derived_constants["constant.c_2"], "-20");
        let mut bad = VerificationReport::new("bracket");
        bad.check(false, || Failure::new("a", "b", "c"));
        doc.push(bad);
        assert!(!doc.passed);
        assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}
