//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 invalid input or out-of-range
//! parameters, 3 verification failure, 4 cap or node budget exceeded. Every
//! failure writes one `error:<code>: <message>` line to standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::antiramsey::{anti_ramsey, coloring_from_partition, Coloring};
use crate::error::Error;
use crate::extremal::{candidate_sequences, ellq, Config, ExtremalResult, Method, VertexPartition};
use crate::graph::MultipartiteGraph;
use crate::greedy::{algorithm_a, closed_form_boundary};
use crate::oracle::{find_rainbow_tree, oracle_ar, oracle_min_boundary};
use crate::scan::{scan, Hit, ScanOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// Environment variable read when `--node-budget` is absent.
pub const NODE_BUDGET_ENV: &str = "ANTIRAMSEY_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "antiramsey", version, about = "Anti-Ramsey numbers of complete multipartite graphs for q-edge trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ar(G, T_q), optionally writing an extremal witness coloring.
    Ar(ArArgs),
    /// l_q(G), the extremal size behind ar.
    Ellq(QueryArgs),
    /// Minimum number of edges meeting an r-subset, via the greedy selection.
    MinBoundary(BoundaryArgs),
    /// Candidate block-size sequences for n vertices and parameter q.
    Sequences(SequenceArgs),
    /// Writes an extremal witness coloring (same as `ar --witness`).
    Witness(WitnessArgs),
    /// Searches a witness file for a rainbow q-edge tree.
    CheckColoring(CheckArgs),
    /// Brute-force ground truth.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Cross-checks the fast routes against the oracles on all small instances.
    Scan(ScanArgs),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// l_q by set-partition enumeration.
    Ellq(OracleQueryArgs),
    /// ar by edge-coloring enumeration.
    Ar(OracleQueryArgs),
    /// Minimum boundary by subset enumeration.
    MinBoundary(OracleBoundaryArgs),
}

#[derive(Debug, Args)]
struct Limits {
    /// Node budget per block-assignment search [env: ANTIRAMSEY_NODE_BUDGET].
    #[arg(long)]
    node_budget: Option<u64>,
    /// Largest order accepted by the vertex oracles.
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest edge count accepted by the coloring oracle.
    #[arg(long)]
    max_edges: Option<u64>,
}

#[derive(Debug, Args)]
struct QueryArgs {
    /// Partite set sizes, comma separated.
    #[arg(long)]
    parts: String,
    #[arg(long)]
    q: usize,
    /// auto, closed-form, sequence-solver or oracle.
    #[arg(long, default_value = "auto")]
    method: String,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Debug, Args)]
struct ArArgs {
    #[command(flatten)]
    query: QueryArgs,
    /// Write an extremal coloring to this file.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[arg(long)]
    parts: String,
    #[arg(long)]
    q: usize,
    /// Output file; the witness goes to standard output when omitted.
    #[arg(long, visible_alias = "witness")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Debug, Args)]
struct BoundaryArgs {
    #[arg(long)]
    parts: String,
    #[arg(long)]
    r: usize,
    /// Evaluate the closed form (r in 2..=4) instead of the greedy selection.
    #[arg(long)]
    closed_form: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SequenceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Witness file.
    #[arg(long)]
    file: PathBuf,
    /// Tree size to look for; defaults to the `q:` header of the file.
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct OracleQueryArgs {
    #[arg(long)]
    parts: String,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Debug, Args)]
struct OracleBoundaryArgs {
    #[arg(long)]
    parts: String,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Largest order scanned.
    #[arg(long)]
    max_n: usize,
    /// Also compare ar against the coloring oracle when |E| is at most this.
    #[arg(long, default_value_t = 10)]
    max_edges: u64,
    /// Report how often the boundary formula holds for 3q >= 2n+1 (exploratory).
    #[arg(long)]
    two_thirds_probe: bool,
    #[arg(long)]
    node_budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

/// A failed command: exit code and one-line message.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::Domain(_) => EXIT_DOMAIN,
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Internal(_) => EXIT_VERIFY,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_DOMAIN, message: format!("i/o error: {e}") }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: EXIT_VERIFY, message: format!("json error: {e}") }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let mut lines = rendered.lines();
            let first = lines.next().unwrap_or_default().trim_start_matches("error: ");
            let _ = writeln!(err, "error:{EXIT_USAGE}: {first}");
            for line in lines {
                let _ = writeln!(err, "{line}");
            }
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error:{}: {}", f.code, f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Ar(a) => cmd_ar(a, out),
        Command::Ellq(a) => cmd_ellq(a, out),
        Command::MinBoundary(a) => cmd_min_boundary(a, out),
        Command::Sequences(a) => cmd_sequences(a, out),
        Command::Witness(a) => cmd_witness(a, out),
        Command::CheckColoring(a) => cmd_check(a, out),
        Command::Oracle(o) => cmd_oracle(o, out),
        Command::Scan(a) => cmd_scan(a, out),
    }
}

fn parse_parts(s: &str) -> Result<MultipartiteGraph, Failure> {
    Ok(s.parse::<MultipartiteGraph>()?)
}

fn node_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(NODE_BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: EXIT_USAGE,
            message: format!("{NODE_BUDGET_ENV}={v:?} is not a non-negative integer"),
        }),
        Err(_) => Ok(Config::default().node_budget),
    }
}

fn config(limits: &Limits) -> Result<Config, Failure> {
    let d = Config::default();
    Ok(Config {
        node_budget: node_budget(limits.node_budget)?,
        max_n: limits.max_n.unwrap_or(d.max_n),
        max_edges: limits.max_edges.unwrap_or(d.max_edges),
    })
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn certificate_rows(c: &Option<VertexPartition>) -> Value {
    c.as_ref().map_or(Value::Null, |p| json!(p.rows()))
}

fn print_certificate(out: &mut dyn Write, c: &Option<VertexPartition>) -> Result<(), Failure> {
    if let Some(p) = c {
        writeln!(out, "block sizes: {}", p.sequence())?;
        for (i, row) in p.rows().iter().enumerate() {
            writeln!(out, "part {i}: {}", join(row))?;
        }
    }
    Ok(())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn write_witness(path: &Path, coloring: &Coloring, q: usize) -> Result<(), Failure> {
    std::fs::write(path, coloring.to_witness_text(q)).map_err(|e| Failure {
        code: EXIT_DOMAIN,
        message: format!("cannot write witness {}: {e}", path.display()),
    })
}

fn witness_for(g: &MultipartiteGraph, q: usize, value: u64, certificate: &Option<VertexPartition>) -> Result<Coloring, Failure> {
    let cert = certificate
        .as_ref()
        .ok_or_else(|| Error::Internal(format!("no certificate for K_{{{g}}}, q = {q}")))?;
    let coloring = coloring_from_partition(g, cert)?;
    if coloring.t() as u64 != value {
        return Err(Error::Internal(format!("witness has {} colors, expected {value}", coloring.t())).into());
    }
    Ok(coloring)
}

fn cmd_ar(a: ArArgs, out: &mut dyn Write) -> Outcome {
    let q = &a.query;
    let g = parse_parts(&q.parts)?;
    let method: Method = q.method.parse()?;
    let cfg = config(&q.limits)?;
    let r = anti_ramsey(&g, q.q, method, &cfg)?;
    if let Some(path) = &a.witness {
        let coloring = witness_for(&g, q.q, r.value, &r.certificate)?;
        write_witness(path, &coloring, q.q)?;
    }
    if q.json {
        emit_json(
            out,
            &json!({
                "parts": g.parts(),
                "n": g.n(),
                "q": q.q,
                "value": r.value,
                "ellq": r.ellq_value,
                "method": r.method,
                "certificate": certificate_rows(&r.certificate),
                "witness_path": a.witness.as_ref().map(|p| p.display().to_string()),
            }),
        )?;
    } else {
        writeln!(out, "ar = {} (method: {})", r.value, r.method)?;
        writeln!(out, "ellq = {}", r.ellq_value)?;
        if let Some(path) = &a.witness {
            writeln!(out, "witness: {} ({} colors)", path.display(), r.value)?;
        }
    }
    Ok(EXIT_OK)
}

fn print_ellq(out: &mut dyn Write, g: &MultipartiteGraph, q: usize, r: &ExtremalResult, json: bool) -> Outcome {
    if json {
        emit_json(
            out,
            &json!({
                "parts": g.parts(),
                "n": g.n(),
                "q": q,
                "value": r.value,
                "method": r.method,
                "certificate": certificate_rows(&r.certificate),
            }),
        )?;
    } else {
        writeln!(out, "ellq = {} (method: {})", r.value, r.method)?;
        print_certificate(out, &r.certificate)?;
    }
    Ok(EXIT_OK)
}

fn cmd_ellq(a: QueryArgs, out: &mut dyn Write) -> Outcome {
    let g = parse_parts(&a.parts)?;
    let method: Method = a.method.parse()?;
    let r = ellq(&g, a.q, method, &config(&a.limits)?)?;
    print_ellq(out, &g, a.q, &r, a.json)
}

fn cmd_min_boundary(a: BoundaryArgs, out: &mut dyn Write) -> Outcome {
    let g = parse_parts(&a.parts)?;
    let trace = algorithm_a(&g, a.r)?;
    let (value, method) = if a.closed_form {
        (closed_form_boundary(&g, a.r)?, "closed-form")
    } else {
        (g.boundary_edge_count(&trace.selection)?, "greedy")
    };
    if a.json {
        emit_json(
            out,
            &json!({
                "parts": g.parts(),
                "n": g.n(),
                "r": a.r,
                "value": value,
                "method": method,
                "selection": trace.selection.counts(),
                "pick_order": trace.pick_order,
                "degrees_at_pick": trace.degrees_at_pick,
            }),
        )?;
    } else {
        writeln!(out, "min-boundary = {value} (method: {method})")?;
        writeln!(out, "selection: {}", join(trace.selection.counts()))?;
        writeln!(out, "pick order: {}", join(&trace.pick_order))?;
        writeln!(out, "degrees at pick: {}", join(&trace.degrees_at_pick))?;
    }
    Ok(EXIT_OK)
}

fn cmd_sequences(a: SequenceArgs, out: &mut dyn Write) -> Outcome {
    let seqs = candidate_sequences(a.n, a.q)?;
    if a.json {
        let list: Vec<&[usize]> = seqs.iter().map(|s| s.sizes()).collect();
        emit_json(out, &json!({ "n": a.n, "q": a.q, "sequences": list }))?;
    } else {
        for s in &seqs {
            writeln!(out, "{s}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_witness(a: WitnessArgs, out: &mut dyn Write) -> Outcome {
    let g = parse_parts(&a.parts)?;
    let cfg = config(&a.limits)?;
    let r = anti_ramsey(&g, a.q, Method::Auto, &cfg)?;
    let coloring = witness_for(&g, a.q, r.value, &r.certificate)?;
    match &a.out {
        Some(path) => {
            write_witness(path, &coloring, a.q)?;
            if a.json {
                emit_json(
                    out,
                    &json!({
                        "parts": g.parts(),
                        "n": g.n(),
                        "q": a.q,
                        "value": r.value,
                        "ellq": r.ellq_value,
                        "method": r.method,
                        "certificate": certificate_rows(&r.certificate),
                        "witness_path": path.display().to_string(),
                    }),
                )?;
            } else {
                writeln!(out, "ar = {} (method: {})", r.value, r.method)?;
                writeln!(out, "witness: {} ({} colors)", path.display(), r.value)?;
            }
        }
        None => write!(out, "{}", coloring.to_witness_text(a.q))?,
    }
    Ok(EXIT_OK)
}

fn cmd_check(a: CheckArgs, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(&a.file).map_err(|e| Failure {
        code: EXIT_DOMAIN,
        message: format!("cannot read {}: {e}", a.file.display()),
    })?;
    let (coloring, file_q) = Coloring::parse_witness(&text)?;
    let q = a.q.unwrap_or(file_q);
    let tree = find_rainbow_tree(&coloring, q)?;
    if a.json {
        emit_json(
            out,
            &json!({
                "parts": coloring.graph().parts(),
                "q": q,
                "t": coloring.t(),
                "rainbow_tree": tree.as_ref().map(|t| json!({
                    "edges": t.edges.iter().map(|e| [e.u.part, e.u.offset, e.v.part, e.v.offset]).collect::<Vec<_>>(),
                    "colors": t.colors,
                })),
            }),
        )?;
    }
    match tree {
        None => {
            if !a.json {
                writeln!(out, "no-rainbow")?;
            }
            Ok(EXIT_OK)
        }
        Some(t) => {
            if !a.json {
                writeln!(out, "rainbow tree with {q} edges:")?;
                for (e, c) in t.edges.iter().zip(&t.colors) {
                    writeln!(out, "{e} {c}")?;
                }
            }
            Err(Failure { code: EXIT_VERIFY, message: format!("found a rainbow tree with {q} edges") })
        }
    }
}

fn cmd_oracle(o: OracleCommand, out: &mut dyn Write) -> Outcome {
    match o {
        OracleCommand::Ellq(a) => {
            let g = parse_parts(&a.parts)?;
            let cfg = config(&a.limits)?;
            let r = ellq(&g, a.q, Method::Oracle, &cfg)?;
            print_ellq(out, &g, a.q, &r, a.json)
        }
        OracleCommand::Ar(a) => {
            let g = parse_parts(&a.parts)?;
            let cfg = config(&a.limits)?;
            let (value, coloring) = oracle_ar(&g, a.q, cfg.max_edges)?;
            if a.json {
                emit_json(
                    out,
                    &json!({
                        "parts": g.parts(),
                        "n": g.n(),
                        "q": a.q,
                        "value": value,
                        "method": "oracle",
                        "colors": coloring.colors(),
                    }),
                )?;
            } else {
                writeln!(out, "ar = {value} (method: oracle)")?;
            }
            Ok(EXIT_OK)
        }
        OracleCommand::MinBoundary(a) => {
            let g = parse_parts(&a.parts)?;
            let cfg = config(&a.limits)?;
            let value = oracle_min_boundary(&g, a.r, cfg.max_n)?;
            if a.json {
                emit_json(
                    out,
                    &json!({ "parts": g.parts(), "n": g.n(), "r": a.r, "value": value, "method": "oracle" }),
                )?;
            } else {
                writeln!(out, "min-boundary = {value} (method: oracle)")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn hits(list: &[Hit]) -> String {
    if list.is_empty() {
        return "none".into();
    }
    list.iter().map(|h| format!("({};{})", join(&h.parts), h.q)).collect::<Vec<_>>().join(" ")
}

fn cmd_scan(a: ScanArgs, out: &mut dyn Write) -> Outcome {
    if a.max_n < 2 {
        return Err(Error::domain(format!("--max-n must be at least 2, got {}", a.max_n)).into());
    }
    let options = ScanOptions { max_n: a.max_n, max_edges: a.max_edges, two_thirds_probe: a.two_thirds_probe };
    let cfg = Config { node_budget: node_budget(a.node_budget)?, max_n: a.max_n, max_edges: a.max_edges };
    let (report, error) = scan(&options, &cfg);
    if a.json {
        emit_json(out, &serde_json::to_value(&report)?)?;
    } else {
        for i in report.instances.iter().filter(|i| !i.agree) {
            writeln!(
                out,
                "disagree: {} = {} by {}, {} by oracle for K_{{{}}}, q = {}",
                match i.quantity {
                    crate::scan::Quantity::Ellq => "ellq",
                    crate::scan::Quantity::Ar => "ar",
                },
                i.formula,
                i.method,
                i.oracle,
                join(&i.parts),
                i.q
            )?;
        }
        let s = &report.summary;
        writeln!(out, "instances: {}", s.instances)?;
        writeln!(out, "agreements: {}", s.agreements)?;
        writeln!(out, "disagreements: {}", s.disagreements)?;
        writeln!(out, "exceptional hits: {}", hits(&s.exceptional_hits))?;
        writeln!(out, "strict-gap hits: {}", hits(&s.strict_gap_hits))?;
        if let Some(p) = &report.probe {
            writeln!(out, "two-thirds probe: {} instances, formula holds on {}", p.instances, p.boundary_formula_holds)?;
            writeln!(out, "two-thirds probe failures: {}", hits(&p.boundary_formula_fails))?;
        }
    }
    if let Some(e) = error {
        return Err(e.into());
    }
    if report.summary.disagreements > 0 {
        return Err(Failure {
            code: EXIT_VERIFY,
            message: format!("{} disagreements between fast routes and oracles", report.summary.disagreements),
        });
    }
    Ok(EXIT_OK)
}
