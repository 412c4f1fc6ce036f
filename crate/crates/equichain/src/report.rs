//! Structured, deterministic result reporting shared by the library checkers
//! and the command-line interface. A report is a command echo, a digest of
//! the input it ran on, and an ordered list of named checks with verdicts.
//! Identical inputs must produce byte-identical reports, in both text and
//! JSON renderings.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The check ran and the property holds.
    Pass,
    /// The check ran and the property does not hold.
    Fail,
    /// The hypotheses of the check are not satisfied; nothing was asserted.
    Inapplicable,
    /// A computed value, recorded without judgement.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    /// Cells, degrees or positions pinning down a failure.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub checks: Vec<CheckItem>,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>) -> Self {
        Report { command: command.into(), input_digest: input_digest.into(), checks: vec![] }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.checks.push(CheckItem {
            name: name.into(),
            verdict,
            detail: detail.into(),
            witnesses: vec![],
        });
    }

    pub fn push_with_witnesses(
        &mut self,
        name: impl Into<String>,
        verdict: Verdict,
        detail: impl Into<String>,
        witnesses: Vec<String>,
    ) {
        self.checks.push(CheckItem { name: name.into(), verdict, detail: detail.into(), witnesses });
    }

    pub fn pass(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::Pass, detail);
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::Fail, detail);
    }

    pub fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::Info, detail);
    }

    pub fn inapplicable(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::Inapplicable, detail);
    }

    /// Record a boolean outcome under a single name.
    pub fn assert_that(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(name, if ok { Verdict::Pass } else { Verdict::Fail }, detail);
    }

    /// True when no check failed (informational and inapplicable items do
    /// not count against the run).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// 0 when every verdict passes, 1 when a mathematical check failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Absorb another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}\n", self.input_digest));
        for c in &self.checks {
            match c.verdict {
                Verdict::Info => {
                    if c.detail.is_empty() {
                        out.push_str(&format!("{}\n", c.name));
                    } else {
                        out.push_str(&format!("{} = {}\n", c.name, c.detail));
                    }
                }
                v => {
                    let tag = match v {
                        Verdict::Pass => "PASS",
                        Verdict::Fail => "FAIL",
                        Verdict::Inapplicable => "INAPPLICABLE",
                        Verdict::Info => unreachable!(),
                    };
                    if c.detail.is_empty() {
                        out.push_str(&format!("[{tag}] {}\n", c.name));
                    } else {
                        out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
                    }
                }
            }
            for w in &c.witnesses {
                out.push_str(&format!("  witness: {w}\n"));
            }
        }
        out.push_str(&format!("result: {}\n", if self.passed() { "pass" } else { "FAIL" }));
        out
    }

    pub fn render_json(&self) -> String {
        // same shape as the struct plus the bottom-line verdict the text
        // footer carries, so a stored JSON report keeps its conclusion
        #[derive(Serialize)]
        struct WithResult<'a> {
            command: &'a str,
            input_digest: &'a str,
            checks: &'a [CheckItem],
            result: &'a str,
        }
        let out = WithResult {
            command: &self.command,
            input_digest: &self.input_digest,
            checks: &self.checks,
            result: if self.passed() { "pass" } else { "fail" },
        };
        let mut s = serde_json::to_string_pretty(&out).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("homology --which invariant --coeff z", "sha256:abc");
        r.info("H_1", "0");
        r.info("H_0", "Z + Z/2");
        r.pass("junction H_0", "exact");
        r
    }

    #[test]
    fn text_rendering_is_stable() {
        let r = sample();
        let text = r.render_text();
        assert!(text.contains("H_1 = 0"));
        assert!(text.contains("H_0 = Z + Z/2"));
        assert!(text.contains("[PASS] junction H_0: exact"));
        assert!(text.ends_with("result: pass\n"));
        assert_eq!(text, sample().render_text());
    }

    #[test]
    fn json_roundtrip() {
        let r = sample();
        let json = r.render_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(json, sample().render_json());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["result"], "pass");
        let mut failing = sample();
        failing.fail("exactness", "ker/im = Z/2");
        let v: serde_json::Value = serde_json::from_str(&failing.render_json()).unwrap();
        assert_eq!(v["result"], "fail");
    }

    #[test]
    fn exit_codes_track_failures() {
        let mut r = sample();
        assert_eq!(r.exit_code(), 0);
        r.inapplicable("hypothesis", "not a mod-p sphere");
        assert_eq!(r.exit_code(), 0);
        r.fail("exactness", "ker/im = Z/2 at degree 1");
        assert_eq!(r.exit_code(), 1);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn absorb_prefixes_names() {
        let mut outer = Report::new("check conner", "sha256:xyz");
        let mut inner = Report::new("", "");
        inner.pass("acyclic", "yes");
        outer.absorb("quotient", inner);
        assert_eq!(outer.checks[0].name, "quotient: acyclic");
    }
}
