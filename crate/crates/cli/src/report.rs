//! Report types for the verification CLI.
//!
//! A run produces a [`RunReport`] holding one [`SuiteReport`] per suite, each
//! a list of [`Claim`]s.  A claim records the statement being checked, the
//! computed value, the expected value, and whether they agree.
//!
//! JSON output is canonical: reports are converted to a [`serde_json::Value`]
//! (whose object maps are ordered) before printing, and timing data is kept
//! out of the serialized form, so re-running the same command yields
//! byte-identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One verified statement: a computed value checked against an expectation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// The mathematical statement being checked, in plain language.
    pub statement: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
}

/// Build a claim by serializing both sides and comparing for equality.
pub fn claim<C: Serialize, E: Serialize>(id: &str, statement: &str, computed: C, expected: E) -> Claim {
    let computed = serde_json::to_value(computed).expect("claim values serialize");
    let expected = serde_json::to_value(expected).expect("claim values serialize");
    let pass = computed == expected;
    Claim { id: id.to_string(), statement: statement.to_string(), computed, expected, pass }
}

/// The outcome of one suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub depends_on: Vec<String>,
    pub claims: Vec<Claim>,
    pub pass: bool,
    /// Wall-clock time; shown in text output but omitted from JSON so that
    /// repeated runs serialize identically.
    #[serde(skip)]
    pub millis: u128,
}

impl SuiteReport {
    pub fn new(suite: &str, depends_on: &[&str], claims: Vec<Claim>, millis: u128) -> SuiteReport {
        let pass = claims.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.to_string(),
            depends_on: depends_on.iter().map(|s| s.to_string()).collect(),
            claims,
            pass,
            millis,
        }
    }
}

/// The outcome of a whole `verify` or `replay-theorem3` invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(seed: u64, suites: Vec<SuiteReport>) -> RunReport {
        let pass = suites.iter().all(|s| s.pass);
        RunReport { seed, suites, pass }
    }
}

/// Serialize any report through `serde_json::Value`, which stores object
/// keys in sorted order, so equal data always prints as identical bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("json values print")
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("json values print")
}

/// Text rendering of a run report: one block per suite, one line per claim,
/// and an overall verdict line.
pub fn render_run_text(report: &RunReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("seed {}\n", report.seed));
    for suite in &report.suites {
        let verdict = if suite.pass { "pass" } else { "FAIL" };
        let deps = if suite.depends_on.is_empty() {
            String::new()
        } else {
            format!(" (after {})", suite.depends_on.join(", "))
        };
        out.push_str(&format!(
            "suite {} — {} ({} claims, {} ms){}\n",
            suite.suite,
            verdict,
            suite.claims.len(),
            suite.millis,
            deps
        ));
        for c in &suite.claims {
            let mark = if c.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {:<14} {}\n", c.id, c.statement));
            out.push_str(&format!(
                "         computed {}  expected {}\n",
                compact(&c.computed),
                compact(&c.expected)
            ));
        }
    }
    let passed = report.suites.iter().filter(|s| s.pass).count();
    let verdict = if report.pass { "pass" } else { "FAIL" };
    out.push_str(&format!("overall: {} ({}/{} suites)\n", verdict, passed, report.suites.len()));
    out
}

/// Text rendering of a `compute` result as aligned key/value lines.
pub fn render_compute_text(report: &herbert_core::engine::ComputeReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<12} {v}\n"));
    line("group", report.group.clone());
    line("module", report.module.clone());
    line("degree", report.degree.to_string());
    line("kind", report.kind.clone());
    if let Some(w) = &report.wang {
        line("wang.status", w.status.clone());
        line("wang.left", w.left.structure.clone());
        line("wang.right", w.right.structure.clone());
    }
    match &report.result {
        Some(shape) => line("result", shape.structure.clone()),
        None => line("result", "undetermined (extension ambiguous)".to_string()),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let claims = vec![
            claim("a", "one equals one", 1, 1),
            claim("b", "labels match", "Z/4", "Z/4"),
        ];
        RunReport::new(7, vec![SuiteReport::new("demo", &["other"], claims, 12)])
    }

    #[test]
    fn canonical_json_round_trips_byte_identically() {
        let report = sample();
        let text = to_canonical_json(&report);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap(), text);
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(to_canonical_json(&back), text);
        // Timing is display-only and must not leak into the serialization.
        assert!(!text.contains("millis"));
        assert_eq!(back.suites[0].millis, 0);
    }

    #[test]
    fn failing_claims_fail_their_suite_and_run() {
        let claims = vec![claim("bad", "two equals three", 2, 3)];
        let report = RunReport::new(0, vec![SuiteReport::new("demo", &[], claims, 0)]);
        assert!(!report.pass);
        assert!(!report.suites[0].pass);
        let text = render_run_text(&report);
        assert!(text.contains("FAIL"));
        assert!(text.contains("overall: FAIL (0/1 suites)"));
    }
}
