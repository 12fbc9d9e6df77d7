//! One table shape for every subcommand, printed as TSV or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Every cell is a string so exact integers survive 64-bit JSON readers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub summary: BTreeMap<String, String>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Report::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn summarize(&mut self, key: &str, value: impl ToString) {
        self.summary.insert(key.to_string(), value.to_string());
    }

    /// Header row, then one line per row. Summary entries are not part of the
    /// table; in TSV they go nowhere.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.columns.join("\t")).unwrap();
        for row in &self.rows {
            writeln!(out, "{}", row.join("\t")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain strings serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_has_header_and_lf_endings() {
        let mut r = Report::new("count", &["n", "count"]);
        r.push(["4", "29"]);
        assert_eq!(r.to_tsv(), "n\tcount\n4\t29\n");
    }

    #[test]
    fn json_round_trips() {
        let mut r = Report::new("count", &["n", "count"]).param("species", "husimi");
        r.push(["4", "29"]);
        r.summarize("total", "29");
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
