use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::taxonomy::NswClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Hit,
    Miss,
}

/// One non-standard span of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    /// Byte offset of the span in the input.
    pub offset: usize,
    /// Exact input slice covered by the span.
    pub surface: String,
    pub class: NswClass,
    /// Spoken form, without sentence-initial capitalisation; absent on a miss.
    pub expansion: Option<String>,
    /// `rule:<id>` or `lexicon:<file>:<line>`.
    pub source: String,
    pub status: Status,
}

impl ReportRecord {
    pub fn end(&self) -> usize {
        self.offset + self.surface.len()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub records: Vec<ReportRecord>,
}

impl RunReport {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn misses(&self) -> impl Iterator<Item = &ReportRecord> {
        self.records.iter().filter(|r| r.status == Status::Miss)
    }

    pub fn hits(&self) -> impl Iterator<Item = &ReportRecord> {
        self.records.iter().filter(|r| r.status == Status::Hit)
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(out, "{}", serde_json::to_string(r).expect("records serialize"));
        }
        out
    }

    pub fn from_jsonl(text: &str) -> serde_json::Result<Self> {
        let records = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<serde_json::Result<_>>()?;
        Ok(Self { records })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_round_trip() {
        let report = RunReport {
            records: vec![
                ReportRecord {
                    offset: 3,
                    surface: "3.".into(),
                    class: NswClass::OrdinalNumber,
                    expansion: Some("treći".into()),
                    source: "rule:ordinal".into(),
                    status: Status::Hit,
                },
                ReportRecord {
                    offset: 9,
                    surface: "xyz.".into(),
                    class: NswClass::Abbreviation,
                    expansion: None,
                    source: "lexicon".into(),
                    status: Status::Miss,
                },
            ],
        };
        let text = report.to_jsonl();
        assert!(text.lines().next().unwrap().contains(r#""class":"OrdinalNumber""#));
        assert!(text.contains(r#""status":"miss""#));
        assert_eq!(RunReport::from_jsonl(&text).unwrap(), report);
        assert_eq!(report.misses().count(), 1);
    }
}
