//! Built-in catalog of published values and patterns for the three
//! 4-valent circulant families, plus verification and table machinery.
//!
//! Entries live in `data/*.pat`, one record per line:
//!
//! ```text
//! family;n;value;labels;locus
//! s3;12;11;0,5,10,3,8,1,6,11,4,9,2,7;Thm-12k
//! ```
//!
//! `value` is an integer for exact values, `>=v` / `<=v` for bounds. The
//! label field is empty for value-only rows. A locus containing
//! `disputed` marks a record whose printed form fails verification; such
//! records are kept verbatim for the report but never used by the
//! constructions.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{check_labeling, ConstraintProfile, Violation};
use crate::pattern::{tile, Family, Pattern};
use crate::solver::{lambda_exact, SolveError, SolveOptions};

const TABLES: &str = include_str!("../data/tables.pat");
const APPENDIX: &str = include_str!("../data/appendix.pat");
const OBSERVATIONS: &str = include_str!("../data/observations.pat");

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("record needs 5 ';'-separated fields, got {0}")]
    FieldCount(usize),
    #[error("bad field {field}: {text:?}")]
    BadField { field: &'static str, text: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Exact,
    LowerBound,
    UpperBound,
}

impl ValueKind {
    /// True when the recorded value is a valid lower bound on lambda.
    pub fn bounds_below(self) -> bool {
        matches!(self, ValueKind::Exact | ValueKind::LowerBound)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: Family,
    pub n: usize,
    pub kind: ValueKind,
    pub value: u32,
    pub pattern: Option<Pattern>,
    pub locus: String,
    /// The printed form fails verification; kept verbatim, reported as such.
    pub disputed: bool,
}

impl CatalogEntry {
    pub fn parse(line: &str) -> Result<CatalogEntry, CatalogError> {
        let fields: Vec<&str> = line.split(';').collect();
        if fields.len() != 5 {
            return Err(CatalogError::FieldCount(fields.len()));
        }
        let family: Family = fields[0].parse().map_err(|_| CatalogError::BadField {
            field: "family",
            text: fields[0].into(),
        })?;
        let n: usize = fields[1].parse().map_err(|_| CatalogError::BadField {
            field: "n",
            text: fields[1].into(),
        })?;
        let (kind, value_text) = if let Some(rest) = fields[2].strip_prefix(">=") {
            (ValueKind::LowerBound, rest)
        } else if let Some(rest) = fields[2].strip_prefix("<=") {
            (ValueKind::UpperBound, rest)
        } else {
            (ValueKind::Exact, fields[2])
        };
        let value: u32 = value_text.parse().map_err(|_| CatalogError::BadField {
            field: "value",
            text: fields[2].into(),
        })?;
        let pattern = if fields[3].is_empty() {
            None
        } else {
            let labels = fields[3]
                .split(',')
                .map(|t| {
                    t.parse::<u32>().map_err(|_| CatalogError::BadField {
                        field: "labels",
                        text: fields[3].into(),
                    })
                })
                .collect::<Result<Vec<u32>, _>>()?;
            Some(Pattern::new(labels, Some(family), fields[4]).map_err(|_| {
                CatalogError::BadField {
                    field: "labels",
                    text: fields[3].into(),
                }
            })?)
        };
        let locus = fields[4].to_string();
        let disputed = locus.contains("disputed");
        Ok(CatalogEntry {
            family,
            n,
            kind,
            value,
            pattern,
            locus,
            disputed,
        })
    }

    /// Inverse of `parse`, byte-identical on round trips.
    pub fn serialize(&self) -> String {
        let value = match self.kind {
            ValueKind::Exact => format!("{}", self.value),
            ValueKind::LowerBound => format!(">={}", self.value),
            ValueKind::UpperBound => format!("<={}", self.value),
        };
        let labels = match &self.pattern {
            None => String::new(),
            Some(p) => p
                .labels()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(","),
        };
        format!(
            "{};{};{};{};{}",
            self.family, self.n, value, labels, self.locus
        )
    }
}

fn parse_all(text: &str) -> Vec<CatalogEntry> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| CatalogEntry::parse(l).unwrap_or_else(|e| panic!("bad catalog line {l:?}: {e}")))
        .collect()
}

/// Every catalog record: all table rows, appendix patterns and observation
/// patterns, in data-file order.
pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        let mut all = parse_all(TABLES);
        all.extend(parse_all(APPENDIX));
        all.extend(parse_all(OBSERVATIONS));
        all
    })
}

/// The primary record for `(family, n)`: exact values win over bounds, and
/// among equals a record with a pattern wins.
pub fn lookup(family: Family, n: usize) -> Option<&'static CatalogEntry> {
    entries()
        .iter()
        .filter(|e| e.family == family && e.n == n)
        .max_by_key(|e| (e.kind == ValueKind::Exact, e.pattern.is_some(), !e.disputed))
}

/// How one entry fared under verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryStatus {
    /// Pattern tiles to a valid labeling with span equal to the claim.
    Pass,
    /// Pattern length does not divide n.
    BadLength { len: usize },
    /// Valid labeling but the span differs from the claimed value.
    SpanMismatch { span: u32 },
    /// Constraint violations when tiled.
    Invalid { violations: Vec<Violation> },
}

#[derive(Debug, Clone)]
pub struct EntryReport {
    pub family: Family,
    pub n: usize,
    pub locus: String,
    pub claimed: u32,
    pub disputed: bool,
    pub status: EntryStatus,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.status == EntryStatus::Pass
    }

    /// A failure nobody flagged in the data, or a flagged entry that now
    /// passes: either way the data and reality disagree unexpectedly.
    pub fn unexpected(&self) -> bool {
        self.passed() == self.disputed
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (&self.status, self.disputed) {
            (EntryStatus::Pass, false) => "pass".to_string(),
            (EntryStatus::Pass, true) => "pass (but flagged disputed!)".to_string(),
            (st, disputed) => {
                let what = match st {
                    EntryStatus::BadLength { len } => format!("length {len} does not divide n"),
                    EntryStatus::SpanMismatch { span } => format!("span {span} != claimed"),
                    EntryStatus::Invalid { violations } => {
                        let v = &violations[0];
                        format!(
                            "{} violation(s), first at ({},{}) dist {}: diff {} < {}",
                            violations.len(),
                            v.i,
                            v.j,
                            v.distance,
                            v.actual,
                            v.required
                        )
                    }
                    EntryStatus::Pass => unreachable!(),
                };
                if disputed {
                    format!("fail ({what}) [disputed in data, expected]")
                } else {
                    format!("FAIL ({what})")
                }
            }
        };
        write!(
            f,
            "{} n={:<3} {:<12} claimed {:<3} {}",
            self.family, self.n, self.locus, self.claimed, verdict
        )
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub entries: Vec<EntryReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    /// Entries whose outcome contradicts their disputed flag.
    pub fn unexpected(&self) -> Vec<&EntryReport> {
        self.entries.iter().filter(|e| e.unexpected()).collect()
    }

    pub fn clean_fraction(&self) -> f64 {
        self.passed() as f64 / self.entries.len() as f64
    }
}

/// Verifies a single pattern entry: tile over `C_n`, check, compare span.
pub fn verify_entry(entry: &CatalogEntry, p: &ConstraintProfile) -> EntryReport {
    let pattern = entry.pattern.as_ref().expect("entry has a pattern");
    let report = |status| EntryReport {
        family: entry.family,
        n: entry.n,
        locus: entry.locus.clone(),
        claimed: entry.value,
        disputed: entry.disputed,
        status,
    };
    let Ok(f) = tile(pattern, entry.n) else {
        return report(EntryStatus::BadLength { len: pattern.len() });
    };
    let spec = entry
        .family
        .spec(entry.n)
        .expect("catalog entries satisfy family minimums");
    let g = Graph::circulant(spec);
    let violations = check_labeling(&g, &f, p).expect("tiling has n labels");
    if !violations.is_empty() {
        return report(EntryStatus::Invalid { violations });
    }
    let span = f.span();
    if span != entry.value {
        return report(EntryStatus::SpanMismatch { span });
    }
    report(EntryStatus::Pass)
}

/// Runs every pattern entry through the checker. Failures are report
/// content, not errors; `disputed` records are expected to fail.
pub fn verify_all(p: &ConstraintProfile) -> VerifyReport {
    let entries = entries()
        .iter()
        .filter(|e| e.pattern.is_some())
        .map(|e| verify_entry(e, p))
        .collect();
    VerifyReport { entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    Catalog,
    Solve,
    Both,
}

impl std::str::FromStr for TableMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "catalog" => Ok(TableMode::Catalog),
            "solve" => Ok(TableMode::Solve),
            "both" => Ok(TableMode::Both),
            other => Err(format!(
                "unknown mode {other:?} (expected catalog, solve or both)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: usize,
    pub value: Option<u32>,
    pub kind: String,
    pub source: String,
}

/// Reproduces table rows for the given orders. `Catalog` reads stored
/// values, `Solve` recomputes lambda exactly (subject to the node budget),
/// `Both` cross-checks and marks mismatches.
pub fn table(
    family: Family,
    ns: &[usize],
    mode: TableMode,
    budget: Option<u64>,
    threads: usize,
) -> Vec<TableRow> {
    ns.iter()
        .map(|&n| table_row(family, n, mode, budget, threads))
        .collect()
}

enum SolveStatus {
    Value(u32),
    OutOfBudget { at: u32 },
    Error(String),
}

fn solve_lambda(family: Family, n: usize, budget: Option<u64>, threads: usize) -> SolveStatus {
    if n < family.min_n() {
        return SolveStatus::Error(format!("n={n} below family minimum {}", family.min_n()));
    }
    let spec = family.spec(n).expect("n above family minimum");
    let g = Graph::circulant(spec);
    let mut opts = SolveOptions::anchored().with_threads(threads);
    opts.node_budget = budget;
    match lambda_exact(&g, &ConstraintProfile::l321(), &opts, 0) {
        Ok(r) => SolveStatus::Value(r.value),
        Err(SolveError::LambdaBudget { at, .. }) => SolveStatus::OutOfBudget { at },
        Err(e) => SolveStatus::Error(e.to_string()),
    }
}

fn table_row(
    family: Family,
    n: usize,
    mode: TableMode,
    budget: Option<u64>,
    threads: usize,
) -> TableRow {
    let catalog_entry = lookup(family, n);
    let kind_name = |k: ValueKind| match k {
        ValueKind::Exact => "exact",
        ValueKind::LowerBound => "lower_bound",
        ValueKind::UpperBound => "upper_bound",
    };
    match mode {
        TableMode::Catalog => match catalog_entry {
            Some(e) => TableRow {
                n,
                value: Some(e.value),
                kind: kind_name(e.kind).into(),
                source: e.locus.clone(),
            },
            None => TableRow {
                n,
                value: None,
                kind: "none".into(),
                source: "no catalog entry".into(),
            },
        },
        TableMode::Solve => match solve_lambda(family, n, budget, threads) {
            SolveStatus::Value(value) => TableRow {
                n,
                value: Some(value),
                kind: "exact".into(),
                source: "solve".into(),
            },
            SolveStatus::OutOfBudget { at } => TableRow {
                n,
                value: None,
                kind: "unresolved (budget)".into(),
                source: format!("solve stalled at k={at}"),
            },
            SolveStatus::Error(e) => TableRow {
                n,
                value: None,
                kind: "error".into(),
                source: e,
            },
        },
        TableMode::Both => {
            let solved = solve_lambda(family, n, budget, threads);
            match (catalog_entry, solved) {
                (Some(e), SolveStatus::Value(value)) => {
                    let consistent = match e.kind {
                        ValueKind::Exact => value == e.value,
                        ValueKind::LowerBound => value >= e.value,
                        ValueKind::UpperBound => value <= e.value,
                    };
                    if consistent {
                        TableRow {
                            n,
                            value: Some(value),
                            kind: "exact".into(),
                            source: format!("catalog({})+solve", e.locus),
                        }
                    } else {
                        TableRow {
                            n,
                            value: Some(value),
                            kind: "MISMATCH".into(),
                            source: format!(
                                "solve={} but catalog {} {}{}",
                                value,
                                e.locus,
                                match e.kind {
                                    ValueKind::Exact => "=",
                                    ValueKind::LowerBound => ">=",
                                    ValueKind::UpperBound => "<=",
                                },
                                e.value
                            ),
                        }
                    }
                }
                (None, SolveStatus::Value(value)) => TableRow {
                    n,
                    value: Some(value),
                    kind: "exact".into(),
                    source: "solve (no catalog entry)".into(),
                },
                (entry, SolveStatus::OutOfBudget { at }) => TableRow {
                    n,
                    value: entry.map(|e| e.value),
                    kind: "unresolved (budget)".into(),
                    source: format!("solve stalled at k={at}"),
                },
                (_, SolveStatus::Error(e)) => TableRow {
                    n,
                    value: None,
                    kind: "error".into(),
                    source: e,
                },
            }
        }
    }
}
