//! `finring`: classify small finite rings, dump their structural sets, run
//! the SDT verification suite, and scan the catalog.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finring::classify::{classify_ring, ClassifyOptions};
use finring::decompose::verify_boolean_yaqub;
use finring::invariants;
use finring::parser::{build, parse_ring_expr, GRAMMAR};
use finring::search::{self, Problem};
use finring::suite::{self, SuiteOptions, SuiteResult};
use finring::tables::{export_tables, TableRing};
use finring::{catalog, Caps, Error, FiniteRing};
use serde::Serialize;
use serde_json::{json, Value};

mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const BUILD: u8 = 3;
    pub const PRECONDITION: u8 = 4;
}

#[derive(Parser, Debug)]
#[command(
    name = "finring",
    version,
    about = "Classify and verify small finite rings"
)]
#[command(after_help = format!("Ring expressions:\n\n{GRAMMAR}"))]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest catalog ring visited by catalog scans.
    #[arg(long, global = true, default_value_t = 4096)]
    max_order: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest ring order any constructor may produce.
    #[arg(long, global = true, default_value_t = Caps::default().order)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct RingArgs {
    /// Ring expression, e.g. "T3(Z2)" or "Z2 x Z9".
    #[arg(required_unless_present = "table", conflicts_with = "table")]
    expr: Option<String>,
    /// Read the ring from a table JSON file instead.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
    /// Replace the ring by eRe for the idempotent with this index.
    #[arg(long, value_name = "INDEX")]
    corner: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a ring against every ring-class flag.
    Classify {
        #[command(flatten)]
        ring: RingArgs,
        /// Include an SDT witness for every element.
        #[arg(long)]
        witnesses: bool,
    },
    /// Print structural subsets as sorted element indices.
    Sets {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = SetName::All)]
        set: SetName,
    },
    /// Run the verification suite on a ring or on the catalog.
    Verify {
        #[arg(conflicts_with = "catalog", required_unless_present_any = ["catalog", "table"])]
        expr: Option<String>,
        #[arg(long, value_name = "FILE", conflicts_with = "catalog")]
        table: Option<PathBuf>,
        #[arg(long, conflicts_with = "catalog")]
        corner: Option<usize>,
        /// Every catalog ring up to --max-order.
        #[arg(long)]
        catalog: bool,
        /// "all" or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Split R/J(R) of an SDT ring into its Boolean and Yaqub factors.
    Decompose {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Scan the catalog for one of the open-problem phenomena.
    Search {
        #[arg(long, value_parser = parse_problem)]
        problem: Problem,
        /// Extra rings as table JSON files.
        #[arg(long, value_name = "FILE")]
        table: Vec<PathBuf>,
    },
    /// Dump operation tables or the element encoding.
    Export {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = What::Tables)]
        what: What,
        /// Write to this file instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SetName {
    Units,
    Jacobson,
    Delta,
    Nilpotents,
    Idempotents,
    Tripotents,
    Center,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum What {
    Tables,
    Encoding,
}

fn parse_problem(s: &str) -> Result<Problem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrderOverflow { .. }
            | Error::CapExceeded { .. }
            | Error::AxiomViolation { .. }
            | Error::NotAnIdeal { .. } => exit::BUILD,
            Error::ImplicationViolation { .. } | Error::InternalInvariant(_) => exit::VERIFICATION,
            _ => exit::PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

struct Ctx {
    json: bool,
    caps: Caps,
    max_order: usize,
    seed: u64,
}

fn load_table(path: &PathBuf, caps: &Caps) -> CliResult<FiniteRing> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::BUILD, format!("cannot read {}: {e}", path.display())))?;
    let table =
        TableRing::from_json(&text).map_err(|e| Failure::new(exit::BUILD, e.to_string()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "table".into());
    table
        .build(caps, &name)
        .map_err(|e| Failure::new(exit::BUILD, e.to_string()))
}

fn load_ring(
    cx: &Ctx,
    expr: Option<&str>,
    table: Option<&PathBuf>,
    corner: Option<usize>,
) -> CliResult<FiniteRing> {
    let r = match (expr, table) {
        (_, Some(path)) => load_table(path, &cx.caps)?,
        (Some(text), None) => {
            let ast =
                parse_ring_expr(text).map_err(|e| Failure::new(exit::PARSE, e.to_string()))?;
            build(&ast, &cx.caps).map_err(|e| Failure::new(exit::BUILD, e.to_string()))?
        }
        (None, None) => return Err(Failure::new(exit::PARSE, "no ring given")),
    };
    match corner {
        Some(e) => Ok(cx
            .caps
            .corner(&r, e)
            .map_err(|e| Failure::new(exit::PRECONDITION, e.to_string()))?),
        None => Ok(r),
    }
}

fn ring(cx: &Ctx, args: &RingArgs) -> CliResult<FiniteRing> {
    load_ring(cx, args.expr.as_deref(), args.table.as_ref(), args.corner)
}

fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn classify(cx: &Ctx, args: &RingArgs, witnesses: bool) -> CliResult<String> {
    let r = ring(cx, args)?;
    let opts = ClassifyOptions {
        witnesses,
        ..ClassifyOptions::default()
    };
    let report = classify_ring(&r, &opts)?;
    if cx.json {
        return Ok(emit(&report));
    }
    let mut out = format!("{} (order {})\n", r.name(), r.order());
    let flags = serde_json::to_value(&report.flags).expect("flags serialize");
    for (k, v) in flags.as_object().expect("flags are an object") {
        writeln!(out, "  {k}: {v}").unwrap();
    }
    let cd = serde_json::to_value(&report.char_data).expect("char data serializes");
    for (k, v) in cd.as_object().expect("char data is an object") {
        writeln!(out, "  {k}: {v}").unwrap();
    }
    if let Some(w) = &report.witnesses {
        for (a, [e, d]) in w {
            writeln!(out, "  {a} = {e} + {d}").unwrap();
        }
    }
    Ok(out)
}

fn sets(cx: &Ctx, args: &RingArgs, which: SetName) -> CliResult<String> {
    let r = ring(cx, args)?;
    let mut all = serde_json::Map::new();
    let wanted = |s: SetName| which == SetName::All || which == s;
    if wanted(SetName::Units) {
        all.insert("units".into(), json!(invariants::units(&r)));
    }
    if wanted(SetName::Jacobson) {
        all.insert("jacobson".into(), json!(invariants::jacobson_radical(&r)?));
    }
    if wanted(SetName::Delta) {
        all.insert("delta".into(), json!(invariants::delta(&r)));
    }
    if wanted(SetName::Nilpotents) {
        all.insert("nilpotents".into(), json!(invariants::nilpotents(&r)));
    }
    if wanted(SetName::Idempotents) {
        all.insert("idempotents".into(), json!(invariants::idempotents(&r)));
    }
    if wanted(SetName::Tripotents) {
        all.insert("tripotents".into(), json!(invariants::tripotents(&r)));
    }
    if wanted(SetName::Center) {
        all.insert("center".into(), json!(invariants::center(&r)));
    }
    if cx.json {
        return Ok(emit(&all));
    }
    let mut out = String::new();
    for (k, v) in &all {
        let elems: Vec<String> = v
            .as_array()
            .expect("sets serialize as arrays")
            .iter()
            .map(Value::to_string)
            .collect();
        writeln!(out, "{k}: {}", elems.join(" ")).unwrap();
    }
    Ok(out)
}

fn suite_ids(selection: &str) -> CliResult<Option<Vec<String>>> {
    if selection == "all" {
        return Ok(None);
    }
    let ids: Vec<String> = selection.split(',').map(|s| s.trim().to_string()).collect();
    suite::validate_ids(&ids).map_err(|e| Failure::new(exit::PARSE, e.to_string()))?;
    Ok(Some(ids))
}

fn suite_text(res: &SuiteResult, out: &mut String) {
    let count = |s| res.checks.iter().filter(|c| c.status == s).count();
    writeln!(
        out,
        "{} (order {}): {} passed, {} skipped, {} failed",
        res.ring,
        res.order,
        count(suite::Status::Pass),
        count(suite::Status::Skipped),
        count(suite::Status::Fail)
    )
    .unwrap();
    for c in &res.checks {
        match c.status {
            suite::Status::Fail => writeln!(
                out,
                "  FAIL {}: {}",
                c.id,
                c.counterexample
                    .as_ref()
                    .map(Value::to_string)
                    .unwrap_or_default()
            )
            .unwrap(),
            suite::Status::Skipped if res.checks.len() <= 3 => writeln!(
                out,
                "  skipped {}: {}",
                c.id,
                c.reason.as_deref().unwrap_or_default()
            )
            .unwrap(),
            suite::Status::Pass if res.checks.len() <= 3 => {
                writeln!(out, "  pass {}", c.id).unwrap()
            }
            _ => {}
        }
    }
}

fn verify(
    cx: &Ctx,
    expr: Option<&str>,
    table: Option<&PathBuf>,
    corner: Option<usize>,
    use_catalog: bool,
    selection: &str,
) -> CliResult<(String, u8)> {
    let only = suite_ids(selection)?;
    let opts = SuiteOptions {
        only: only.clone(),
        seed: cx.seed,
        ..SuiteOptions::default()
    };
    let mut results = Vec::new();
    if use_catalog {
        for entry in catalog::entries_up_to(cx.max_order) {
            let r = entry.build(&cx.caps)?;
            results.push(suite::run_suite(&r, &opts)?);
        }
    } else {
        let r = load_ring(cx, expr, table, corner)?;
        results.push(suite::run_suite(&r, &opts)?);
    }
    let failed = results.iter().any(|r| !r.passed());
    // A full catalog run must exercise every check.
    let uncovered = if use_catalog && only.is_none() {
        suite::uncovered(&results)
    } else {
        Vec::new()
    };
    let code = if failed || !uncovered.is_empty() {
        exit::VERIFICATION
    } else {
        exit::OK
    };
    let out = if cx.json {
        if use_catalog {
            emit(&json!({ "results": results, "uncovered": uncovered, "passed": code == exit::OK }))
        } else {
            emit(&results[0])
        }
    } else {
        let mut out = String::new();
        for r in &results {
            suite_text(r, &mut out);
        }
        if !uncovered.is_empty() {
            writeln!(out, "checks never passed: {}", uncovered.join(", ")).unwrap();
        }
        out
    };
    Ok((out, code))
}

fn decompose(cx: &Ctx, args: &RingArgs) -> CliResult<String> {
    let r = ring(cx, args)?;
    let report = verify_boolean_yaqub(&r)?;
    if cx.json {
        return Ok(emit(&report));
    }
    let mut out = format!("{}: R/J has order {}\n", r.name(), report.quotient_order);
    writeln!(
        out,
        "  R1 = R/J / 2(R/J): order {}, boolean {}",
        report.r1.order, report.r1.boolean
    )
    .unwrap();
    writeln!(
        out,
        "  R2 = R/J / 3(R/J): order {}, yaqub or zero {}",
        report.r2.order, report.r2.yaqub
    )
    .unwrap();
    writeln!(out, "  CRT map bijective: {}", report.crt_bijective).unwrap();
    writeln!(out, "  verdict: {}", report.verdict).unwrap();
    Ok(out)
}

fn search_cmd(cx: &Ctx, problem: Problem, tables: &[PathBuf]) -> CliResult<String> {
    let mut rings = Vec::new();
    for entry in catalog::entries_up_to(cx.max_order) {
        rings.push(entry.build(&cx.caps)?);
    }
    for path in tables {
        rings.push(load_table(path, &cx.caps)?);
    }
    let report = search::run(problem, &rings)?;
    if cx.json {
        return Ok(emit(&report));
    }
    // Text mode prints the same data compactly, one finding per line.
    let v = serde_json::to_value(&report).expect("report serializes");
    let mut out = format!(
        "{problem}: {} rings scanned\n",
        v["scanned"].as_array().map_or(0, Vec::len)
    );
    for key in ["discrepancies", "instances", "rows"] {
        if let Some(items) = v.get(key).and_then(Value::as_array) {
            for item in items {
                writeln!(out, "  {item}").unwrap();
            }
        }
    }
    if let Some(n) = v.get("non_sdt") {
        writeln!(out, "  instances with R not SDT: {n}").unwrap();
    }
    Ok(out)
}

fn export(cx: &Ctx, args: &RingArgs, what: What, out: Option<&PathBuf>) -> CliResult<String> {
    let r = ring(cx, args)?;
    let text = match what {
        What::Tables => emit(&export_tables(&r)?),
        What::Encoding => emit(&r.encoding()),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| {
                Failure::new(
                    exit::PRECONDITION,
                    format!("cannot write {}: {e}", path.display()),
                )
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn run(cli: &Cli) -> CliResult<(String, u8)> {
    let cx = Ctx {
        json: cli.json,
        caps: Caps::with_order_cap(cli.cap),
        max_order: cli.max_order,
        seed: cli.seed,
    };
    let ok = |s: String| Ok((s, exit::OK));
    match &cli.command {
        Command::Classify { ring, witnesses } => ok(classify(&cx, ring, *witnesses)?),
        Command::Sets { ring, set } => ok(sets(&cx, ring, *set)?),
        Command::Verify {
            expr,
            table,
            corner,
            catalog,
            suite,
        } => verify(
            &cx,
            expr.as_deref(),
            table.as_ref(),
            *corner,
            *catalog,
            suite,
        ),
        Command::Decompose { ring } => ok(decompose(&cx, ring)?),
        Command::Search { problem, table } => ok(search_cmd(&cx, *problem, table)?),
        Command::Export { ring, what, out } => ok(export(&cx, ring, *what, out.as_ref())?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
