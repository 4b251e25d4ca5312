//! Verification reports as plain text or as one JSON record per line, both
//! under the header line `qmatroid-report v1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const HEADER: &str = "qmatroid-report v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub input: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    pub fn new(suite: &str, check: &str, input: &str, q: Option<i64>, lhs: impl ToString, rhs: impl ToString) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        CheckRecord {
            suite: suite.into(),
            check: check.into(),
            input: input.into(),
            q,
            pass: lhs == rhs,
            lhs,
            rhs,
            note: String::new(),
            elapsed_ms: None,
        }
    }

    /// A record whose verdict is not a plain comparison of `lhs` and `rhs`.
    pub fn verdict(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = Some(ms);
        self
    }

    fn text_line(&self) -> String {
        let mut s = format!(
            "{} {} {} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.check,
            self.input
        );
        if let Some(q) = self.q {
            let _ = write!(s, " q={q}");
        }
        let _ = write!(s, " lhs={} rhs={}", self.lhs, self.rhs);
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(s, " time={ms}ms");
        }
        if !self.note.is_empty() {
            let _ = write!(s, " # {}", self.note);
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = format!("{HEADER}\n");
        for r in &self.records {
            let line = match format {
                Format::Text => r.text_line(),
                Format::Structured => serde_json::to_string(r).expect("record is serializable"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        if format == Format::Text {
            let failed = self.records.iter().filter(|r| !r.pass).count();
            let _ = writeln!(out, "summary: {} checks, {} failed", self.records.len(), failed);
        }
        out
    }

    /// Parses the structured form.
    pub fn parse_structured(text: &str) -> Result<Report> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim() == HEADER => {}
            _ => return Err(Error::parse(1, format!("expected header `{HEADER}`"))),
        }
        let mut records = Vec::new();
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let r = serde_json::from_str(line).map_err(|e| Error::parse(i + 1, e.to_string()))?;
            records.push(r);
        }
        Ok(Report { records })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::default();
        r.push(CheckRecord::new("theorem1", "alpha-sum", "U24", Some(5), 8, 8).elapsed(3));
        r.push(CheckRecord::new("theorem1", "alpha-sum", "U24", Some(9), -32, 48).note("suspect g(q,n)"));
        r.push(CheckRecord::new("convolution", "tutte", "K4", None, "a", "a"));
        r
    }

    #[test]
    fn structured_round_trip() {
        let r = sample();
        let text = r.render(Format::Structured);
        assert!(text.starts_with(HEADER));
        let back = Report::parse_structured(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.render(Format::Structured), text);
    }

    #[test]
    fn text_lines() {
        let text = sample().render(Format::Text);
        assert!(text.contains("PASS theorem1 alpha-sum U24 q=5 lhs=8 rhs=8 time=3ms"));
        assert!(text.contains("FAIL theorem1 alpha-sum U24 q=9 lhs=-32 rhs=48 # suspect g(q,n)"));
        assert!(text.ends_with("summary: 3 checks, 1 failed\n"));
        assert!(!sample().all_pass());
    }

    #[test]
    fn rejects_missing_header() {
        assert!(Report::parse_structured("{}\n").is_err());
        assert!(matches!(
            Report::parse_structured(&format!("{HEADER}\nnot json\n")),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
