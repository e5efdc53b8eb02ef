//! Verdicts and verification reports.

use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Violated(Vec<String>),
    /// A hypothesis of the checked statement does not hold.
    Inapplicable(String),
    /// Only part of the quantifier range was checked.
    Partial(String),
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }

    /// `Violated` when `witnesses` is nonempty, otherwise `Certified`.
    pub fn from_witnesses(witnesses: Vec<String>) -> Self {
        if witnesses.is_empty() {
            Verdict::Certified
        } else {
            Verdict::Violated(witnesses)
        }
    }

    /// Process exit code: 0 certified, 1 violated, 2 inapplicable or partial.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::Violated(_) => 1,
            Verdict::Inapplicable(_) | Verdict::Partial(_) => 2,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::Violated(_) => "violated",
            Verdict::Inapplicable(_) => "inapplicable",
            Verdict::Partial(_) => "partial",
        }
    }

    /// The worse of two verdicts: violated > inapplicable > partial > certified.
    pub fn combine(self, other: Verdict) -> Verdict {
        fn rank(v: &Verdict) -> u8 {
            match v {
                Verdict::Certified => 0,
                Verdict::Partial(_) => 1,
                Verdict::Inapplicable(_) => 2,
                Verdict::Violated(_) => 3,
            }
        }
        match (self, other) {
            (Verdict::Violated(mut a), Verdict::Violated(b)) => {
                a.extend(b);
                Verdict::Violated(a)
            }
            (a, b) => {
                if rank(&b) > rank(&a) {
                    b
                } else {
                    a
                }
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Certified => f.write_str("certified"),
            Verdict::Violated(w) => write!(f, "violated ({} witness{})", w.len(), if w.len() == 1 { "" } else { "es" }),
            Verdict::Inapplicable(r) => write!(f, "inapplicable: {r}"),
            Verdict::Partial(s) => write!(f, "partial: {s}"),
        }
    }
}

/// A named sub-check of a report.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub verdict: Verdict,
    pub certificates: Vec<Certificate>,
    /// Free-form text lines (tables, relation matrices).
    pub lines: Vec<String>,
    /// Structured payload for the JSON form.
    pub data: Value,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            verdict: Verdict::Certified,
            certificates: Vec::new(),
            lines: Vec::new(),
            data: Value::Null,
            elapsed_ms: 0,
        }
    }

    /// Records a sub-check and folds it into the overall verdict.
    pub fn certify(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.verdict = std::mem::replace(&mut self.verdict, Verdict::Certified).combine(verdict.clone());
        self.certificates.push(Certificate {
            name: name.into(),
            verdict,
        });
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_millis();
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.subject, self.verdict);
        for c in &self.certificates {
            out.push_str(&format!("  {:<40} {}\n", c.name, c.verdict));
            if let Verdict::Violated(w) = &c.verdict {
                for line in w.iter().take(20) {
                    out.push_str(&format!("      {line}\n"));
                }
                if w.len() > 20 {
                    out.push_str(&format!("      ... {} more\n", w.len() - 20));
                }
            }
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
