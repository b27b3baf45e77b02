//! Command-line front end. Every verb maps onto one library operation and
//! prints line-oriented text, or a single JSON object with `--json`.
//!
//! Exit codes: 0 success/feasible, 1 infeasible or verification failure,
//! 2 usage error, 3 node budget exhausted.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use l321::bounds::{lower_bound, max_window, BoundsError, WindowAnchor};
use l321::catalog::{self, TableMode, TableRow};
use l321::graph::{CirculantSpec, Graph};
use l321::labeling::{check_labeling, ConstraintProfile, Labeling, Violation};
use l321::pattern::{
    compose_segments, construct_upper, tile, ConstructError, FamilyCase, Pattern, SegmentPlan,
};
use l321::solver::{extend_prefix, lambda_exact, solve, Outcome, SolveError, SolveOptions};

/// Default node budget for searches started from the command line.
const DEFAULT_BUDGET: u64 = 1_000_000_000;

const EXIT_OK: u8 = 0;
const EXIT_INFEASIBLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "l321",
    about = "L(3,2,1)- and k-radio labelings of circulant graphs",
    version
)]
struct Cli {
    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GraphArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Generators, e.g. 1,3 (closed under g -> n-g automatically)
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<usize>,
}

#[derive(Args)]
struct ProfileArg {
    /// Minimum differences by distance, e.g. 3,2,1
    #[arg(long, value_delimiter = ',', default_value = "3,2,1")]
    profile: Vec<usize>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node budget (0 = unlimited)
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for deterministic root splitting
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide feasibility with labels 0..=K
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        /// Largest allowed label
        #[arg(long)]
        max_label: u32,
        #[command(flatten)]
        profile: ProfileArg,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Fix labels of the first vertices and search completions
        #[arg(long, value_delimiter = ',')]
        prefix: Option<Vec<usize>>,
    },
    /// Smallest feasible span and a witness labeling
    Lambda {
        #[command(flatten)]
        graph: GraphArgs,
        /// Start the upward search from this label budget
        #[arg(long, default_value_t = 0)]
        from: u32,
        #[command(flatten)]
        profile: ProfileArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a pattern or a labels file against a circulant
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Pattern to tile (length must divide n)
        #[arg(long, value_delimiter = ',', conflicts_with = "labels_file")]
        pattern: Option<Vec<usize>>,
        /// File with n whitespace/comma-separated labels
        #[arg(long)]
        labels_file: Option<PathBuf>,
        #[command(flatten)]
        profile: ProfileArg,
    },
    /// Concatenate pattern segments, optionally verifying the result
    Compose {
        /// Segment as LABELS or LABELSxREPEAT, e.g. 0,3,6,9,12,1,4,7,10,13x2
        #[arg(long = "segment", required = true)]
        segments: Vec<String>,
        /// Expected total length (checked when given)
        #[arg(long)]
        n: Option<usize>,
        /// Verify the composition on C_n with these generators
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<usize>>,
        #[command(flatten)]
        profile: ProfileArg,
    },
    /// Constructive labeling from the published patterns
    Upper {
        /// s3-even | s3-odd | s4 | s5-even | s5-odd
        #[arg(long)]
        family: FamilyCase,
        #[arg(long)]
        n: usize,
    },
    /// Largest labelable window of the distance graph G(Z, D)
    Window {
        /// Distance set, e.g. 1,3
        #[arg(long, value_delimiter = ',', required = true)]
        dset: Vec<usize>,
        #[arg(long)]
        max_label: u32,
        /// Search ceiling
        #[arg(long, default_value_t = 64)]
        cap: usize,
        /// Drop the first-vertex-0 anchor (larger, unanchored maxima)
        #[arg(long)]
        free: bool,
        #[command(flatten)]
        profile: ProfileArg,
        /// Node budget (0 = unlimited)
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Certified lower bound on lambda for a circulant
    Bound {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        profile: ProfileArg,
    },
    /// Reproduce table rows from the catalog and/or the exact solver
    Table {
        /// s3 | s4 | s5
        #[arg(long)]
        family: l321::pattern::Family,
        /// START:END or START:END:STEP (inclusive)
        #[arg(long)]
        range: String,
        #[arg(long, default_value = "catalog")]
        mode: TableMode,
        /// text | csv | json
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Verify every catalog pattern against the checker
    CatalogVerify,
}

fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    if text.is_empty() {
        return Err("empty list".into());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid integer {t:?}"))
        })
        .collect()
}

fn parse_range(text: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = text.split(':').collect();
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("invalid integer {t:?} in range"))
    };
    match parts.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?, 1)),
        [a, b, s] => {
            let step = parse(s)?;
            if step == 0 {
                return Err("range step must be positive".into());
            }
            Ok((parse(a)?, parse(b)?, step))
        }
        _ => Err(format!("range {text:?} is not START:END or START:END:STEP")),
    }
}

fn parse_segment(text: &str) -> Result<(Vec<u32>, usize), String> {
    let (labels_text, reps) = match text.rsplit_once('x') {
        Some((l, r)) => (
            l,
            r.parse::<usize>()
                .map_err(|_| format!("invalid repeat count {r:?}"))?,
        ),
        None => (text, 1),
    };
    let labels = parse_list(labels_text)?;
    Ok((labels.into_iter().map(|l| l as u32).collect(), reps))
}

/// Distinguishes bad invocations (exit 2) from negative results (exit 1/3).
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::LambdaBudget { .. } => CliError::Failure(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn profile_from(mins: &[usize]) -> Result<ConstraintProfile, CliError> {
    ConstraintProfile::new(mins.iter().map(|&m| m as u32).collect())
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn spec_from(args: &GraphArgs) -> Result<CirculantSpec, CliError> {
    CirculantSpec::new(args.n, args.gens.iter().copied())
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn budget_opt(b: &BudgetArgs) -> Option<u64> {
    (b.budget != 0).then_some(b.budget)
}

struct Report {
    exit: u8,
    text: String,
    json: Value,
}

fn violations_json(violations: &[Violation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|v| {
                json!({
                    "i": v.i,
                    "j": v.j,
                    "distance": v.distance,
                    "required": v.required,
                    "actual": v.actual,
                })
            })
            .collect(),
    )
}

fn labels_json(f: &Labeling) -> Value {
    Value::Array(f.labels().iter().map(|&l| json!(l)).collect())
}

fn labels_text(f: &Labeling) -> String {
    f.labels()
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.exit)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INFEASIBLE)
        }
    }
}

fn run(cmd: &Cmd) -> Result<Report, CliError> {
    match cmd {
        Cmd::Solve {
            graph,
            max_label,
            profile,
            budget,
            prefix,
        } => cmd_solve(graph, *max_label, profile, budget, prefix.as_deref()),
        Cmd::Lambda {
            graph,
            from,
            profile,
            budget,
        } => cmd_lambda(graph, *from, profile, budget),
        Cmd::Verify {
            graph,
            pattern,
            labels_file,
            profile,
        } => cmd_verify(graph, pattern.as_deref(), labels_file.as_deref(), profile),
        Cmd::Compose {
            segments,
            n,
            gens,
            profile,
        } => cmd_compose(segments, *n, gens.as_deref(), profile),
        Cmd::Upper { family, n } => cmd_upper(*family, *n),
        Cmd::Window {
            dset,
            max_label,
            cap,
            free,
            profile,
            budget,
        } => cmd_window(dset, *max_label, *cap, *free, profile, *budget),
        Cmd::Bound { graph, profile } => cmd_bound(graph, profile),
        Cmd::Table {
            family,
            range,
            mode,
            format,
            budget,
        } => cmd_table(*family, range, *mode, format, budget),
        Cmd::CatalogVerify => cmd_catalog_verify(),
    }
}

fn cmd_solve(
    graph: &GraphArgs,
    max_label: u32,
    profile: &ProfileArg,
    budget: &BudgetArgs,
    prefix: Option<&[usize]>,
) -> Result<Report, CliError> {
    let spec = spec_from(graph)?;
    let p = profile_from(&profile.profile)?;
    let g = Graph::circulant(spec.clone());
    let mut opts = SolveOptions::anchored().with_threads(budget.threads);
    opts.node_budget = budget_opt(budget);
    let result = match prefix {
        Some(prefix) => {
            let prefix: Vec<u32> = prefix.iter().map(|&l| l as u32).collect();
            opts.anchor = l321::solver::AnchorPolicy::Free;
            extend_prefix(&g, max_label, &p, &prefix, &opts)?
        }
        None => solve(&g, max_label, &p, &opts)?,
    };
    let mut text = format!("graph: {spec}\nmax label: {max_label}\n");
    let (exit, outcome_text, witness) = match &result.outcome {
        Outcome::Feasible(f) => (EXIT_OK, "feasible", Some(f.clone())),
        Outcome::Infeasible => (EXIT_INFEASIBLE, "infeasible", None),
        Outcome::BudgetExhausted => (EXIT_BUDGET, "budget exhausted", None),
    };
    writeln!(text, "outcome: {outcome_text}").unwrap();
    if let Some(f) = &witness {
        writeln!(text, "labels: {}", labels_text(f)).unwrap();
    }
    writeln!(text, "nodes: {}", result.nodes).unwrap();
    let mut obj = json!({
        "verb": "solve",
        "inputs": {
            "n": spec.n(),
            "gens": spec.gens(),
            "max_label": max_label,
            "profile": p.mins(),
        },
        "result": outcome_text,
        "nodes": result.nodes,
    });
    if let Some(f) = &witness {
        obj["witness"] = labels_json(f);
    }
    Ok(Report {
        exit,
        text,
        json: obj,
    })
}

fn cmd_lambda(
    graph: &GraphArgs,
    from: u32,
    profile: &ProfileArg,
    budget: &BudgetArgs,
) -> Result<Report, CliError> {
    let spec = spec_from(graph)?;
    let p = profile_from(&profile.profile)?;
    let g = Graph::circulant(spec.clone());
    let mut opts = SolveOptions::anchored().with_threads(budget.threads);
    opts.node_budget = budget_opt(budget);
    match lambda_exact(&g, &p, &opts, from) {
        Ok(r) => {
            let text = format!(
                "graph: {spec}\nlambda = {}\nlabels: {}\nnodes: {}\n",
                r.value,
                labels_text(&r.witness),
                r.nodes
            );
            let json = json!({
                "verb": "lambda",
                "inputs": {"n": spec.n(), "gens": spec.gens(), "from": from, "profile": p.mins()},
                "result": r.value,
                "witness": labels_json(&r.witness),
                "nodes": r.nodes,
            });
            Ok(Report {
                exit: EXIT_OK,
                text,
                json,
            })
        }
        Err(SolveError::LambdaBudget { at, nodes }) => Ok(Report {
            exit: EXIT_BUDGET,
            text: format!(
                "graph: {spec}\nunresolved: budget exhausted at k={at}\nnodes: {nodes}\n"
            ),
            json: json!({
                "verb": "lambda",
                "inputs": {"n": spec.n(), "gens": spec.gens(), "from": from, "profile": p.mins()},
                "result": format!("budget exhausted at k={at}"),
                "nodes": nodes,
            }),
        }),
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify(
    graph: &GraphArgs,
    pattern: Option<&[usize]>,
    labels_file: Option<&std::path::Path>,
    profile: &ProfileArg,
) -> Result<Report, CliError> {
    let spec = spec_from(graph)?;
    let p = profile_from(&profile.profile)?;
    let (f, what) = match (pattern, labels_file) {
        (Some(pattern), None) => {
            let pat = Pattern::new(
                pattern.iter().map(|&l| l as u32).collect(),
                None,
                "command line",
            )
            .map_err(|e| CliError::Usage(e.to_string()))?;
            let f = tile(&pat, spec.n()).map_err(|e| CliError::Usage(e.to_string()))?;
            (f, format!("pattern of length {}", pat.len()))
        }
        (None, Some(path)) => {
            let content = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let labels: Vec<u32> = content
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| CliError::Usage(format!("invalid label {t:?} in file")))
                })
                .collect::<Result<_, _>>()?;
            if labels.len() != spec.n() {
                return Err(CliError::Usage(format!(
                    "labels file has {} labels but n = {}",
                    labels.len(),
                    spec.n()
                )));
            }
            let f = Labeling::new(labels).map_err(|e| CliError::Usage(e.to_string()))?;
            (f, format!("labels file {}", path.display()))
        }
        _ => {
            return Err(CliError::Usage(
                "provide exactly one of --pattern or --labels-file".into(),
            ))
        }
    };
    let g = Graph::circulant(spec.clone());
    let violations = check_labeling(&g, &f, &p).map_err(|e| CliError::Usage(e.to_string()))?;
    let span = f.span();
    let mut text = format!("graph: {spec}\nchecking {what}\nspan: {span}\n");
    let exit = if violations.is_empty() {
        writeln!(text, "valid").unwrap();
        EXIT_OK
    } else {
        for v in &violations {
            writeln!(
                text,
                "violation: ({},{}) at distance {} need {} got {}",
                v.i, v.j, v.distance, v.required, v.actual
            )
            .unwrap();
        }
        writeln!(text, "invalid ({} violations)", violations.len()).unwrap();
        EXIT_INFEASIBLE
    };
    let json = json!({
        "verb": "verify",
        "inputs": {"n": spec.n(), "gens": spec.gens(), "profile": p.mins()},
        "result": if violations.is_empty() { "valid" } else { "invalid" },
        "span": span,
        "violations": violations_json(&violations),
    });
    Ok(Report { exit, text, json })
}

fn cmd_compose(
    segments: &[String],
    n: Option<usize>,
    gens: Option<&[usize]>,
    profile: &ProfileArg,
) -> Result<Report, CliError> {
    let parsed: Vec<(Vec<u32>, usize)> = segments
        .iter()
        .map(|s| parse_segment(s).map_err(CliError::Usage))
        .collect::<Result<_, _>>()?;
    let total: usize = parsed.iter().map(|(l, r)| l.len() * r).sum();
    if let Some(n) = n {
        if n != total {
            return Err(CliError::Usage(format!(
                "segments cover {total} vertices but --n is {n}"
            )));
        }
    }
    let plan = SegmentPlan::new(
        parsed
            .into_iter()
            .map(|(labels, reps)| Pattern::new(labels, None, "command line").map(|p| (p, reps)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Usage(e.to_string()))?,
        total,
    )
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let f = compose_segments(&plan).map_err(|e| CliError::Usage(e.to_string()))?;
    let span = f.span();
    let mut text = format!(
        "composed {} segment(s) into {} labels (span {span})\nlabels: {}\n",
        segments.len(),
        f.len(),
        labels_text(&f)
    );
    let mut exit = EXIT_OK;
    let mut verification = Value::Null;
    if let Some(gens) = gens {
        let spec = CirculantSpec::new(total, gens.iter().copied())
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let p = profile_from(&profile.profile)?;
        let g = Graph::circulant(spec.clone());
        let violations = check_labeling(&g, &f, &p).map_err(|e| CliError::Usage(e.to_string()))?;
        if violations.is_empty() {
            writeln!(text, "valid on {spec}").unwrap();
        } else {
            writeln!(text, "invalid on {spec} ({} violations)", violations.len()).unwrap();
            exit = EXIT_INFEASIBLE;
        }
        verification = json!({
            "graph": {"n": spec.n(), "gens": spec.gens()},
            "valid": violations.is_empty(),
            "violations": violations_json(&violations),
        });
    }
    let json = json!({
        "verb": "compose",
        "inputs": {"segments": segments, "n": total},
        "result": {"length": f.len(), "span": span},
        "witness": labels_json(&f),
        "verification": verification,
    });
    Ok(Report { exit, text, json })
}

fn cmd_upper(family: FamilyCase, n: usize) -> Result<Report, CliError> {
    match construct_upper(family, n) {
        Ok(c) => {
            let text = format!(
                "family: {family}\nn: {n}\nspan = {}\nsource: {}\nlabels: {}\n",
                c.span,
                c.source,
                labels_text(&c.labeling)
            );
            let json = json!({
                "verb": "upper",
                "inputs": {"family": family.to_string(), "n": n},
                "result": {"span": c.span, "source": c.source},
                "witness": labels_json(&c.labeling),
            });
            Ok(Report {
                exit: EXIT_OK,
                text,
                json,
            })
        }
        Err(e @ ConstructError::Uncovered { .. }) => Err(CliError::Usage(e.to_string())),
        Err(e) => Err(CliError::Failure(e.to_string())),
    }
}

fn cmd_window(
    dset: &[usize],
    max_label: u32,
    cap: usize,
    free: bool,
    profile: &ProfileArg,
    budget: u64,
) -> Result<Report, CliError> {
    let p = profile_from(&profile.profile)?;
    let anchor = if free {
        WindowAnchor::Free
    } else {
        WindowAnchor::FirstVertexZero
    };
    match max_window(
        dset,
        max_label,
        &p,
        cap,
        (budget != 0).then_some(budget),
        anchor,
    ) {
        Ok(w) => {
            let bound_text = if w.exact {
                format!("max window = {}", w.max_m)
            } else {
                format!("max window >= {} (cap reached)", w.max_m)
            };
            let text = format!(
                "distance set: {:?}\nmax label: {max_label}\nanchor: {}\n{bound_text}\nwitness: {}\n",
                w.dset,
                if free { "free" } else { "first vertex 0" },
                labels_text(&w.witness)
            );
            let json = json!({
                "verb": "window",
                "inputs": {"dset": dset, "max_label": max_label, "cap": cap, "free": free, "profile": p.mins()},
                "result": {"max_m": w.max_m, "exact": w.exact},
                "witness": labels_json(&w.witness),
            });
            Ok(Report {
                exit: EXIT_OK,
                text,
                json,
            })
        }
        Err(BoundsError::Budget { m }) => Ok(Report {
            exit: EXIT_BUDGET,
            text: format!("budget exhausted while searching windows of length {m}\n"),
            json: json!({
                "verb": "window",
                "inputs": {"dset": dset, "max_label": max_label, "cap": cap, "free": free},
                "result": format!("budget exhausted at window length {m}"),
            }),
        }),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

fn cmd_bound(graph: &GraphArgs, profile: &ProfileArg) -> Result<Report, CliError> {
    let spec = spec_from(graph)?;
    let p = profile_from(&profile.profile)?;
    let bound = lower_bound(&spec, &p);
    let text = format!("graph: {spec}\nlower bound = {bound}\n");
    let json = json!({
        "verb": "bound",
        "inputs": {"n": spec.n(), "gens": spec.gens(), "profile": p.mins()},
        "result": bound,
    });
    Ok(Report {
        exit: EXIT_OK,
        text,
        json,
    })
}

fn cmd_table(
    family: l321::pattern::Family,
    range: &str,
    mode: TableMode,
    format: &str,
    budget: &BudgetArgs,
) -> Result<Report, CliError> {
    let (start, end, step) = parse_range(range).map_err(CliError::Usage)?;
    let ns: Vec<usize> = (start..=end).step_by(step).collect();
    if ns.is_empty() {
        return Err(CliError::Usage(format!("range {range:?} is empty")));
    }
    let rows = catalog::table(family, &ns, mode, budget_opt(budget), budget.threads);
    let any_mismatch = rows.iter().any(|r| r.kind == "MISMATCH");
    let any_unresolved = rows.iter().any(|r| r.kind.starts_with("unresolved"));
    let exit = if any_mismatch {
        EXIT_INFEASIBLE
    } else if any_unresolved {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let text = match format {
        "csv" => {
            let mut out = String::from("n,value,kind,source\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.n,
                    r.value.map(|v| v.to_string()).unwrap_or_default(),
                    r.kind,
                    csv_quote(&r.source)
                )
                .unwrap();
            }
            out
        }
        "json" => format!("{}\n", rows_json(&rows)),
        "text" => {
            let mut out = format!("family {family}, mode {mode:?}\n");
            for r in &rows {
                writeln!(
                    out,
                    "n={:<4} value={:<4} {:<20} {}",
                    r.n,
                    r.value.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                    r.kind,
                    r.source
                )
                .unwrap();
            }
            out
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown format {other:?} (expected text, csv or json)"
            )))
        }
    };
    let json = json!({
        "verb": "table",
        "inputs": {"family": family.to_string(), "range": range, "mode": format!("{mode:?}")},
        "result": rows_json(&rows),
    });
    Ok(Report { exit, text, json })
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn rows_json(rows: &[TableRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "value": r.value,
                    "kind": r.kind,
                    "source": r.source,
                })
            })
            .collect(),
    )
}

fn cmd_catalog_verify() -> Result<Report, CliError> {
    let report = catalog::verify_all(&ConstraintProfile::l321());
    let mut text = String::new();
    for entry in &report.entries {
        writeln!(text, "{entry}").unwrap();
    }
    let unexpected = report.unexpected();
    writeln!(
        text,
        "{} entries: {} pass, {} fail ({} unexpected)",
        report.entries.len(),
        report.passed(),
        report.failed(),
        unexpected.len()
    )
    .unwrap();
    let exit = if unexpected.is_empty() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    let json = json!({
        "verb": "catalog-verify",
        "inputs": {},
        "result": {
            "total": report.entries.len(),
            "passed": report.passed(),
            "failed": report.failed(),
            "unexpected": unexpected.len(),
            "entries": Value::Array(report.entries.iter().map(|e| json!({
                "family": e.family.to_string(),
                "n": e.n,
                "locus": e.locus,
                "claimed": e.claimed,
                "disputed": e.disputed,
                "passed": e.passed(),
            })).collect()),
        },
    });
    Ok(Report { exit, text, json })
}
