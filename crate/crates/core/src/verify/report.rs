//! Report documents and per-cell accumulation.

use super::VerifyConfig;
use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

/// Parameter tuple of a cell or a single check, keyed by name.
pub type Params = BTreeMap<String, i64>;

pub(crate) fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Most counterexample records kept in one report.
pub const MAX_RECORDS: usize = 1000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// Distinct graphs looked at.
    pub examined: u64,
    /// Work units, one per (graph or instance, parameter point).
    pub applied: u64,
    pub passes: u64,
    pub failures: u64,
    /// Units whose hypotheses were not met.
    pub skips: u64,
}

impl Counts {
    pub fn is_consistent(&self) -> bool {
        self.passes + self.failures + self.skips == self.applied
    }
}

/// A single violated check, enough to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph6: String,
    pub params: Params,
    pub observed: String,
    pub expected: String,
    /// Identifier of the check, understood by [`super::recheck`].
    pub claim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSummary {
    pub params: Params,
    pub applied: u64,
    pub passes: u64,
    pub failures: u64,
    pub skips: u64,
    /// No unit met the hypotheses.
    pub vacuous: bool,
    /// Named counters, e.g. equality cases or classification buckets.
    pub tally: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: u64,
}

/// One suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    /// Whether failures count as counterexamples to a proven statement.
    pub asserting: bool,
    pub config: VerifyConfig,
    pub grid: Vec<CellSummary>,
    pub counts: Counts,
    pub counterexamples: Vec<CounterexampleRecord>,
    pub counterexamples_truncated: bool,
    pub observations: BTreeMap<String, serde_json::Value>,
    /// Discrepancies in published closed forms that touch this run.
    pub errata: Vec<String>,
    pub timing: Timing,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.counts.failures == 0 && self.counterexamples.is_empty()
    }

    /// The report with timing zeroed, for byte comparisons.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport {
            timing: Timing::default(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// One CSV row per cell.
    pub fn to_csv(&self) -> String {
        let mut keys: Vec<&String> = Vec::new();
        let mut tally_keys: Vec<&String> = Vec::new();
        for c in &self.grid {
            for k in c.params.keys() {
                if !keys.contains(&k) {
                    keys.push(k);
                }
            }
            for k in c.tally.keys() {
                if !tally_keys.contains(&k) {
                    tally_keys.push(k);
                }
            }
        }
        tally_keys.sort();
        let mut out = String::new();
        let mut header: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
        header.extend(["applied", "passes", "failures", "skips", "vacuous"].map(String::from));
        header.extend(tally_keys.iter().map(|k| k.to_string()));
        out.push_str(&header.join(","));
        out.push('\n');
        for c in &self.grid {
            let mut row: Vec<String> = keys
                .iter()
                .map(|k| c.params.get(*k).map_or(String::new(), |v| v.to_string()))
                .collect();
            row.extend([c.applied, c.passes, c.failures, c.skips].map(|x| x.to_string()));
            row.push(c.vacuous.to_string());
            row.extend(
                tally_keys
                    .iter()
                    .map(|k| c.tally.get(*k).copied().unwrap_or(0).to_string()),
            );
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so an interrupted run leaves no partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })?;
    Ok(())
}

/// What a single check concluded.
#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    Pass,
    Fail(CounterexampleRecord),
    Skip,
}

/// A check result plus named counters to bump in its cell.
#[derive(Clone, Debug)]
pub(crate) struct Unit {
    pub outcome: Outcome,
    pub tags: Vec<String>,
}

impl Unit {
    pub fn pass() -> Unit {
        Unit {
            outcome: Outcome::Pass,
            tags: Vec::new(),
        }
    }

    pub fn skip() -> Unit {
        Unit {
            outcome: Outcome::Skip,
            tags: Vec::new(),
        }
    }

    pub fn fail(rec: CounterexampleRecord) -> Unit {
        Unit {
            outcome: Outcome::Fail(rec),
            tags: Vec::new(),
        }
    }

    pub fn tag(mut self, t: impl Into<String>) -> Unit {
        self.tags.push(t.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

/// Accumulates units into cells in a fixed order.
pub(crate) struct Collector {
    pub cells: Vec<CellSummary>,
    pub records: Vec<CounterexampleRecord>,
    pub truncated: bool,
    pub examined: u64,
}

impl Collector {
    pub fn new(cells: Vec<Params>) -> Collector {
        let cells = cells
            .into_iter()
            .map(|params| CellSummary {
                params,
                applied: 0,
                passes: 0,
                failures: 0,
                skips: 0,
                vacuous: true,
                tally: BTreeMap::new(),
            })
            .collect();
        Collector {
            cells,
            records: Vec::new(),
            truncated: false,
            examined: 0,
        }
    }

    pub fn absorb(&mut self, cell: usize, unit: Unit) {
        let c = &mut self.cells[cell];
        c.applied += 1;
        match unit.outcome {
            Outcome::Pass => {
                c.passes += 1;
                c.vacuous = false;
            }
            Outcome::Fail(rec) => {
                c.failures += 1;
                c.vacuous = false;
                if self.records.len() < MAX_RECORDS {
                    self.records.push(rec);
                } else {
                    self.truncated = true;
                }
            }
            Outcome::Skip => c.skips += 1,
        }
        for t in unit.tags {
            *c.tally.entry(t).or_default() += 1;
        }
    }

    pub fn counts(&self) -> Counts {
        let mut k = Counts {
            examined: self.examined,
            ..Counts::default()
        };
        for c in &self.cells {
            k.applied += c.applied;
            k.passes += c.passes;
            k.failures += c.failures;
            k.skips += c.skips;
        }
        k
    }
}
