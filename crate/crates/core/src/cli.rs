//! Command-line front end. Every subcommand writes JSON lines.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cycle::OrientedCycle;
use crate::graph::{enumerate_graphs, parse_edge_list, parse_graph6, Graph};
use crate::invariants::{longest_cycle, CycleCensus};
use crate::structure::{
    check_hopping_conclusions, find_bad_paths, find_setups, find_small_pairs, hopping_fixpoint,
    HoppingCheck,
};
use crate::verifier::{scan_corpus, OracleBudget, ScanConfig, Summary, OFFSETS};

#[derive(Debug, Parser)]
#[command(
    name = "toughcycles",
    version,
    about = "Circumference bounds for 1-tough graphs, checked exhaustively"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of each input graph.
    Invariants(RunArgs),
    /// Invariants plus the bound at each offset.
    Check(RunArgs),
    /// Invariants, bounds and the lemma oracles.
    Oracles(RunArgs),
    /// The hopping fixpoint for a cycle and an off-cycle vertex.
    Hopping(HoppingArgs),
    /// Every setup on the longest cycles of each input graph.
    Setups(SetupArgs),
    /// Corpus scan: bounds, and the oracles with `--oracles`.
    Scan(RunArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<String>,
    /// `"n a0 b0 a1 b1 .."`.
    #[arg(long, value_name = "STR")]
    edge_list: Option<String>,
    /// Generate all graphs on N vertices, or on each of `A..B`.
    #[arg(long, value_name = "N")]
    gen_n: Option<String>,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[command(flatten)]
    source: Source,
    /// With `--gen-n`, only connected graphs.
    #[arg(long)]
    connected: bool,
    #[arg(long, value_delimiter = ',', default_value = "0,2,4")]
    offsets: Vec<usize>,
    #[arg(long)]
    oracles: bool,
    #[arg(long, value_name = "K")]
    jobs: Option<usize>,
    /// Per-graph oracle time budget.
    #[arg(long, value_name = "T", default_value_t = 10_000)]
    timeout_ms: u64,
    /// Per-graph cap on setups visited by the oracles.
    #[arg(long, value_name = "N")]
    max_setups: Option<usize>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Record per-graph wall time (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct HoppingArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    connected: bool,
    /// Off-cycle vertex; default is every vertex isolated in `G - V(C)`.
    #[arg(long)]
    u: Option<usize>,
    /// Cycle as a comma-separated vertex list; default is a longest cycle.
    #[arg(long, value_delimiter = ',')]
    cycle: Option<Vec<usize>>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SetupArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    connected: bool,
    /// Only setups meeting (S3).
    #[arg(long)]
    s3: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// A failure that ends the run with exit code 1.
#[derive(Debug)]
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code: 0 clean, 2 counterexample or oracle failure, 1 usage or input
/// error.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Fatal> {
    match command {
        Command::Invariants(a) => run_records(a, Mode::Invariants, out, err),
        Command::Check(a) => run_records(a, Mode::Check, out, err),
        Command::Oracles(a) => run_records(a, Mode::Oracles, out, err),
        Command::Scan(a) => run_records(a, Mode::Scan, out, err),
        Command::Setups(a) => run_setups(a, out, err),
        Command::Hopping(a) => run_hopping(a, out, err),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Invariants,
    Check,
    Oracles,
    Scan,
}

fn run_records(
    a: RunArgs,
    mode: Mode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Fatal> {
    if let Some(bad) = a.offsets.iter().find(|o| !OFFSETS.contains(o)) {
        return Err(Fatal(format!("offset {bad} is not one of 0, 2, 4")));
    }
    if a.jobs == Some(0) {
        return Err(Fatal("--jobs must be at least 1".into()));
    }
    let (graphs, warnings) = read_source(&a.source, a.connected, err)?;
    let config = ScanConfig {
        offsets: if mode == Mode::Invariants {
            Vec::new()
        } else {
            a.offsets.clone()
        },
        oracles: mode == Mode::Oracles || (mode == Mode::Scan && a.oracles),
        budget: OracleBudget {
            max_setups: a.max_setups,
            timeout: Some(Duration::from_millis(a.timeout_ms)),
        },
        timing: a.timing,
        jobs: a.jobs,
    };
    let mut report = scan_corpus(&graphs, &config);
    report.summary.warnings = warnings;
    let mut sink = open_sink(a.out.as_ref(), out)?;
    for r in &report.records {
        write_line(&mut sink, r)?;
    }
    write_summary(&mut sink, &report.summary)?;
    sink.flush()?;
    let failed = report.summary.total_counterexamples() > 0 || report.summary.oracle_failures() > 0;
    Ok(if failed { 2 } else { 0 })
}

fn run_setups(a: SetupArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Fatal> {
    let (graphs, warnings) = read_source(&a.source, a.connected, err)?;
    let mut sink = open_sink(a.out.as_ref(), out)?;
    let mut count = 0u64;
    for g in &graphs {
        let setups = match find_setups(g, a.s3) {
            Ok(s) => s,
            Err(why) => {
                write_line(
                    &mut sink,
                    &json!({ "graph": g.to_string(), "no_setups": why }),
                )?;
                continue;
            }
        };
        for s in &setups {
            count += 1;
            let d = s.describe();
            let line = json!({
                "graph": g.to_string(),
                "cycle": d.cycle,
                "u": d.u,
                "v": d.v,
                "b": d.b,
                "intervals": s.intervals().intervals,
                "s3": s.s3_satisfied(),
                "small_pairs": find_small_pairs(s),
                "bad_paths": find_bad_paths(s),
            });
            write_line(&mut sink, &line)?;
        }
    }
    let summary =
        json!({ "summary": { "graphs": graphs.len(), "setups": count, "warnings": warnings } });
    write_line(&mut sink, &summary)?;
    sink.flush()?;
    Ok(0)
}

fn run_hopping(a: HoppingArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Fatal> {
    let (graphs, _) = read_source(&a.source, a.connected, err)?;
    let mut sink = open_sink(a.out.as_ref(), out)?;
    let mut failed = false;
    for g in &graphs {
        let c = match &a.cycle {
            Some(vs) => OrientedCycle::new(g, vs.clone())?,
            None => match longest_cycle(g) {
                Some(c) => c,
                None => {
                    write_line(
                        &mut sink,
                        &json!({ "graph": g.to_string(), "error": "acyclic" }),
                    )?;
                    continue;
                }
            },
        };
        let census = CycleCensus::new(g);
        let us: Vec<usize> = match a.u {
            Some(u) => vec![u],
            None => (g.vertices() - c.vertex_set())
                .iter()
                .filter(|&u| g.neighbors(u).is_subset(c.vertex_set()))
                .collect(),
        };
        for u in us {
            if u >= g.n() {
                return Err(Fatal(format!("u = {u} is not a vertex")));
            }
            let h = hopping_fixpoint(g, &c, u)?;
            let check = check_hopping_conclusions(g, &c, u, &h, &census);
            failed |= matches!(check, HoppingCheck::Checked(v) if !v.all());
            let trace: Vec<_> = h
                .trace
                .iter()
                .map(|(x, y)| json!({ "x": x, "y": y }))
                .collect();
            let line = json!({
                "graph": g.to_string(),
                "cycle": c.vertices(),
                "u": u,
                "trace": trace,
                "x": h.x,
                "y": h.y,
                "iterations": h.iterations,
                "check": check,
            });
            write_line(&mut sink, &line)?;
        }
    }
    sink.flush()?;
    Ok(if failed { 2 } else { 0 })
}

/// The graphs named by `source`, and the number of malformed lines skipped.
fn read_source(
    source: &Source,
    connected: bool,
    err: &mut dyn Write,
) -> Result<(Vec<Graph>, u64), Fatal> {
    if let Some(text) = &source.edge_list {
        return Ok((vec![parse_edge_list(text)?], 0));
    }
    if let Some(range) = &source.gen_n {
        let (lo, hi) = parse_range(range)?;
        let mut graphs = Vec::new();
        for n in lo..=hi {
            graphs.extend(enumerate_graphs(n, connected)?);
        }
        return Ok((graphs, 0));
    }
    let path = source.input.as_deref().expect("clap requires one source");
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let f = File::open(path).map_err(|e| Fatal(format!("cannot open {path}: {e}")))?;
        Box::new(BufReader::new(f))
    };
    let mut graphs = Vec::new();
    let mut warnings = 0;
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(g) => graphs.push(g),
            Err(e) => {
                warnings += 1;
                let _ = writeln!(err, "warning: line {}: {e}", k + 1);
            }
        }
    }
    Ok((graphs, warnings))
}

/// `N` or an inclusive `A..B`.
fn parse_range(range: &str) -> Result<(usize, usize), Fatal> {
    let bad = || Fatal(format!("--gen-n expects N or A..B, got {range:?}"));
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = range.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn open_sink<'a>(
    path: Option<&PathBuf>,
    out: &'a mut dyn Write,
) -> Result<Box<dyn Write + 'a>, Fatal> {
    Ok(match path {
        Some(p) => {
            let f =
                File::create(p).map_err(|e| Fatal(format!("cannot write {}: {e}", p.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(out),
    })
}

fn write_line<T: Serialize>(sink: &mut dyn Write, value: &T) -> Result<(), Fatal> {
    serde_json::to_writer(&mut *sink, value)?;
    sink.write_all(b"\n")?;
    Ok(())
}

fn write_summary(sink: &mut dyn Write, summary: &Summary) -> Result<(), Fatal> {
    // A struct rather than `json!` keeps the field order.
    #[derive(Serialize)]
    struct Line<'a> {
        summary: &'a Summary,
    }
    write_line(sink, &Line { summary })
}
