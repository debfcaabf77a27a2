//! Reference tables for `verify`, either the embedded copies or a fixture
//! file in the same line format `verify --dump-fixture` prints:
//!
//! ```text
//! # comment
//! cell <n> <m> <count>
//! total <n> <count>
//! sum <n> <count>      (table 2 only)
//! delta <n> <count>    (table 2 only)
//! ```

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use msd_core::tables;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Summary {
    Sum,
    Total,
    Delta,
}

impl Summary {
    fn keyword(self) -> &'static str {
        match self {
            Summary::Sum => "sum",
            Summary::Total => "total",
            Summary::Delta => "delta",
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReferenceTable {
    pub cells: BTreeMap<(usize, usize), u64>,
    pub summary: BTreeMap<(Summary, usize), u64>,
}

impl ReferenceTable {
    pub fn embedded(table: u8) -> Result<Self, CliError> {
        let mut t = ReferenceTable::default();
        match table {
            1 => {
                t.cells
                    .extend(tables::TABLE1_CELLS.iter().map(|&(n, m, c)| ((n, m), c)));
                t.summary.extend(
                    tables::TABLE1_TOTALS
                        .iter()
                        .map(|&(n, c)| ((Summary::Total, n), c)),
                );
            }
            2 => {
                t.cells
                    .extend(tables::TABLE2_CELLS.iter().map(|&(n, m, c)| ((n, m), c)));
                for (kind, rows) in [
                    (Summary::Sum, tables::TABLE2_SUMS),
                    (Summary::Total, tables::TABLE2_TOTALS),
                    (Summary::Delta, tables::TABLE2_DELTAS),
                ] {
                    t.summary.extend(rows.iter().map(|&(n, c)| ((kind, n), c)));
                }
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown table {other}, expected 1 or 2"
                )))
            }
        }
        Ok(t)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut t = ReferenceTable::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| CliError::Malformed {
                line: idx + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums: Vec<u64> = fields[1..]
                .iter()
                .map(|f| f.parse::<u64>().map_err(|e| bad(format!("{f:?}: {e}"))))
                .collect::<Result<_, _>>()?;
            match (fields[0], nums.as_slice()) {
                ("cell", &[n, m, c]) => {
                    t.cells.insert((n as usize, m as usize), c);
                }
                ("sum", &[n, c]) => {
                    t.summary.insert((Summary::Sum, n as usize), c);
                }
                ("total", &[n, c]) => {
                    t.summary.insert((Summary::Total, n as usize), c);
                }
                ("delta", &[n, c]) => {
                    t.summary.insert((Summary::Delta, n as usize), c);
                }
                _ => return Err(bad(format!("unrecognised fixture line {line:?}"))),
            }
        }
        Ok(t)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (&(n, m), c) in &self.cells {
            let _ = writeln!(s, "cell {n} {m} {c}");
        }
        for (&(kind, n), c) in &self.summary {
            let _ = writeln!(s, "{kind} {n} {c}");
        }
        s
    }

    /// Cells and summary rows for orders `2..=max_order` only.
    pub fn restricted(&self, max_order: usize) -> Self {
        ReferenceTable {
            cells: self
                .cells
                .iter()
                .filter(|((n, _), _)| (2..=max_order).contains(n))
                .map(|(&k, &v)| (k, v))
                .collect(),
            summary: self
                .summary
                .iter()
                .filter(|((_, n), _)| (2..=max_order).contains(n))
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }
}
