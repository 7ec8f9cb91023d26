//! The full verification run and its deterministic report.

mod adjudicate;
mod sections;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{MultiPoly, Param};
use crate::catalog::Catalog;
use crate::error::Result;

pub use adjudicate::{adjudicate, family_subalgebra, functional_partner, Adjudication};
pub use sections::{check_entry, run_all};

/// JSON schema of the report.
pub const REPORT_SCHEMA: &str = include_str!("../../../../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check_id: String,
    pub subject: String,
    pub verdict: Verdict,
    /// A failing required check makes the run fail.
    pub required: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub engine_version: String,
    pub catalog_hash: String,
    pub assumptions: Vec<String>,
    /// Substituted parameter values, by name.
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(catalog: &Catalog, opts: &RunOptions) -> Self {
        Report {
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            catalog_hash: catalog.hash.clone(),
            assumptions: vec![
                "the parameters b_i of the commutation conditions are the Weyl parameters a_i".into(),
                "a_4 = a_1 a_2, a_5 = a_2 a_3, a_6 = a_1 a_2 a_3".into(),
                "parameters are real unless a check states otherwise".into(),
            ],
            parameters: opts.params.iter().map(|(p, v)| (p.name().to_string(), v.to_string())).collect(),
            checks: Vec::new(),
        }
    }

    /// True when some check fails that counts under the given strictness.
    pub fn failed(&self, strict: bool) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail && (c.required || strict))
    }

    pub fn exit_code(&self, strict: bool) -> i32 {
        i32::from(self.failed(strict))
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, mirroring the JSON.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "engine {}  catalog sha256 {}", self.engine_version, self.catalog_hash);
        for a in &self.assumptions {
            let _ = writeln!(s, "assume {a}");
        }
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "param {k} = {v}");
        }
        for c in &self.checks {
            let tag = if c.required { "" } else { " (not required)" };
            let _ = writeln!(s, "{} {} [{}]{}: {}", c.verdict.label(), c.check_id, c.subject, tag, c.witness);
        }
        let _ = writeln!(
            s,
            "summary: {} pass, {} fail ({} required), {} info",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.checks.iter().filter(|c| c.verdict == Verdict::Fail && c.required).count(),
            self.count(Verdict::Info)
        );
        s
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Values substituted into every catalog r-matrix.
    pub params: BTreeMap<Param, MultiPoly>,
}

impl RunOptions {
    /// Parses `k=v` assignments, where `v` is any scalar expression.
    pub fn with_assignments<'a>(mut self, items: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        use crate::catalog::{parse_expression, Value};
        use crate::error::Error;
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Type(format!("expected key=value, found `{item}`")))?;
            let p = Param::lookup(k.trim())?;
            let value = match parse_expression(crate::lie::sl4(), v)? {
                Value::Scalar(s) => s,
                other => return Err(Error::Type(format!("value of {k} is a {}", other.kind()))),
            };
            self.params.insert(p, value);
        }
        Ok(self)
    }
}
