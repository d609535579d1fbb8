//! The `frank` command line.
//!
//! Every subcommand reads graphs from a family string, a graph6 string or a
//! graph6 file, writes its result to stdout (or `--output`) and returns an
//! exit code: 0 on success, 1 when a verification or computation does not
//! succeed, 2 on usage and input errors. All randomness comes from `--seed`.
//! JSON reports carry the crate version, the seed and the wall-clock time;
//! `--no-timing` blanks the times so that repeated runs are byte-identical.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::certificate::{verify_certificate, Certificate};
use crate::constructions::family_certificate;
use crate::fixtures::{fixture_dir, load_certificate, SNARKS};
use crate::graph::{
    enumerate_cubic_3ec, generate_family, parse_graph6, read_graph6_lines, write_graph6,
    FamilySpec, Graph,
};
use crate::orientation::Orientation;
use crate::solver::{
    check_conjectures, orientation_classes, solve, Budget, FrankValue, OrientationSpace,
    ScanOptions, SolveReport, SolverError, MAX_SCAN_EDGES,
};
use crate::transforms::{reduce_to_triangle_free, TransformSpec};

#[derive(Debug, Parser)]
#[command(
    name = "frank",
    version,
    about = "Frank numbers of 3-edge-connected graphs"
)]
pub struct Cli {
    /// Worker threads (default: available parallelism). Output does not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Omit wall-clock times from reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Progress messages on stderr.
    #[arg(long, short, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graph6 string of one or more family graphs.
    Gen {
        /// e.g. petersen, gp:7,3, wheel:5, mobius:8, prism:4, flower:5, blanusa:1
        #[arg(long, required = true)]
        family: Vec<FamilySpec>,
    },
    /// Compute the Frank number of one graph.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        limits: Limits,
        /// Write the certificate JSON here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check a certificate.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Strongly connected orientation classes and the deletable-set histogram.
    Enumerate {
        #[command(flatten)]
        input: GraphInput,
        /// Identify an orientation with its reversal as well.
        #[arg(long)]
        include_reversal: bool,
        #[arg(long, default_value_t = MAX_SCAN_EDGES)]
        max_edges: usize,
    },
    /// Apply truncate:v, lcm:v[:x1,x2,..] or contract:a,b,c.
    Transform {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long = "op")]
        op: TransformSpec,
        /// Write the transform trace JSON here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Contract triangles until none is left (or K4 is reached).
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Frank numbers of many graphs as CSV.
    Batch {
        #[command(flatten)]
        graphs: GraphList,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check the conjectures on a list of graphs.
    Conjectures {
        #[command(flatten)]
        graphs: GraphList,
        /// Which conjectures to check.
        #[arg(long, value_delimiter = ',', default_values_t = [1u8, 2, 3, 4])]
        which: Vec<u8>,
    },
}

#[derive(Debug, Args)]
pub struct GraphInput {
    #[arg(long, group = "graph")]
    pub family: Option<FamilySpec>,
    #[arg(long, group = "graph")]
    pub graph6: Option<String>,
    /// A file holding exactly one graph6 line.
    #[arg(long, group = "graph")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphList {
    /// graph6 file, one graph per line.
    #[arg(long, group = "list")]
    pub input: Option<PathBuf>,
    /// All 3-edge-connected cubic graphs of this order.
    #[arg(long, group = "list")]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Limits {
    #[arg(long, default_value_t = 3)]
    pub max_k: usize,
    /// Larger graphs fall back to the 2-certificate search.
    #[arg(long, default_value_t = MAX_SCAN_EDGES)]
    pub max_edges: usize,
    /// Seconds per graph.
    #[arg(long)]
    pub time_limit: Option<f64>,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget {
            max_edges: self.max_edges,
            time_limit: self.time_limit.map(Duration::from_secs_f64),
            fix_first_edge: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::FileNotFound(_)
            | CliError::Io { .. }
            | CliError::Input(_) => 2,
            CliError::Solver(_) | CliError::Failed(_) => 1,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdout, stderr),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            }
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let mut ctx = Context {
        cli,
        messages: Vec::new(),
    };
    let result = pool.install(|| ctx.dispatch());
    for line in &ctx.messages {
        let _ = writeln!(stderr, "{line}");
    }
    let (text, code) = match result {
        Ok(outcome) => (outcome.text, outcome.code),
        Err(CliError::Solver(SolverError::Inconclusive(report))) => {
            let text = ctx.envelope(None, &json!({ "report": *report }));
            let _ = writeln!(stderr, "inconclusive: {:?}", report.frank_number);
            (text, 1)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    code
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

struct Context<'a> {
    cli: &'a Cli,
    /// Progress lines, printed to stderr once the command returns.
    messages: Vec<String>,
}

#[derive(Serialize)]
struct BatchRow {
    graph6: String,
    n: usize,
    m: usize,
    frank_number: String,
    method: String,
    sc_orientations: String,
    max_deletable: String,
    seconds: String,
}

impl<'a> Context<'a> {
    fn dispatch(&mut self) -> Result<Outcome, CliError> {
        match &self.cli.command {
            Command::Gen { family } => self.gen(family),
            Command::Compute {
                input,
                limits,
                certificate,
            } => self.compute(input, limits, certificate.as_deref()),
            Command::Verify { input, certificate } => self.verify(input, certificate),
            Command::Enumerate {
                input,
                include_reversal,
                max_edges,
            } => self.enumerate(input, *include_reversal, *max_edges),
            Command::Transform { input, op, trace } => self.transform(input, op, trace.as_deref()),
            Command::Reduce { input, trace } => self.reduce(input, trace.as_deref()),
            Command::Batch { graphs, limits } => self.batch(graphs, limits),
            Command::Conjectures { graphs, which } => self.conjectures(graphs, which),
        }
    }

    fn format(&self, allowed: &[Format]) -> Result<Format, CliError> {
        match self.cli.format {
            None => Ok(allowed[0]),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(CliError::Usage(format!(
                "--format {} is not available here",
                f.to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
            ))),
        }
    }

    fn log(&mut self, message: impl FnOnce() -> String) {
        if self.cli.verbose > 0 {
            self.messages.push(message());
        }
    }

    fn seconds(&self, started: Instant) -> Option<f64> {
        (!self.cli.no_timing).then(|| started.elapsed().as_secs_f64())
    }

    /// Wraps `body` (a JSON object) with version, seed and time.
    fn envelope(&self, seconds: Option<f64>, body: &serde_json::Value) -> String {
        let mut value = json!({
            "version": env!("CARGO_PKG_VERSION"),
            "seed": self.cli.seed,
            "seconds": seconds,
        });
        if let (Some(map), Some(extra)) = (value.as_object_mut(), body.as_object()) {
            map.extend(extra.clone());
        }
        let mut text = serde_json::to_string_pretty(&value).expect("json values serialize");
        text.push('\n');
        text
    }

    fn strip_times(&self, report: &mut SolveReport) {
        if self.cli.no_timing {
            report.stats.seconds = 0.0;
        }
    }

    fn gen(&mut self, families: &[FamilySpec]) -> Result<Outcome, CliError> {
        let format = self.format(&[Format::Graph6, Format::Json])?;
        let mut lines = Vec::new();
        for spec in families {
            let g = generate_family(spec).map_err(|e| CliError::Usage(e.to_string()))?;
            lines.push((spec.to_string(), write_graph6(&g), g.n(), g.m()));
        }
        Ok(Outcome::ok(match format {
            Format::Json => {
                let graphs: Vec<_> = lines
                    .iter()
                    .map(|(family, g6, n, m)| json!({ "family": family, "graph6": g6, "n": n, "m": m }))
                    .collect();
                self.envelope(None, &json!({ "graphs": graphs }))
            }
            _ => lines
                .iter()
                .map(|(_, g6, _, _)| format!("{g6}\n"))
                .collect(),
        }))
    }

    fn compute(
        &mut self,
        input: &GraphInput,
        limits: &Limits,
        out: Option<&Path>,
    ) -> Result<Outcome, CliError> {
        self.format(&[Format::Json])?;
        let started = Instant::now();
        let g = read_one(input)?;
        let hint = match &input.family {
            Some(spec) => self.hint(spec)?,
            None => None,
        };
        let mut report = solve(&g, limits.max_k, &limits.budget(), self.cli.seed, hint)?;
        self.strip_times(&mut report);
        if let (Some(path), Some(c)) = (out, &report.certificate) {
            write_file(path, &c.to_json())?;
        }
        let body = json!({ "graph6": write_graph6(&g), "report": report });
        Ok(Outcome::ok(self.envelope(self.seconds(started), &body)))
    }

    /// A known 2-certificate for families that have one: the constructive
    /// rules, or the stored snark fixtures.
    fn hint(&mut self, spec: &FamilySpec) -> Result<Option<Certificate>, CliError> {
        if let Some(built) = family_certificate(spec) {
            return built.map(Some).map_err(|e| CliError::Failed(e.to_string()));
        }
        if SNARKS.contains(spec) {
            match load_certificate(&fixture_dir(), spec) {
                Ok(c) => return Ok(Some(c)),
                Err(e) => self.log(|| format!("no fixture used for {spec}: {e}")),
            }
        }
        Ok(None)
    }

    fn verify(&mut self, input: &GraphInput, path: &Path) -> Result<Outcome, CliError> {
        self.format(&[Format::Json])?;
        let c = Certificate::from_json(&read_file(path)?)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let given = input.family.is_some() || input.graph6.is_some() || input.input.is_some();
        let g = if given {
            read_one(input)?
        } else {
            c.graph().map_err(|e| CliError::Input(e.to_string()))?
        };
        let report = verify_certificate(&g, &c);
        let code = if report.valid { 0 } else { 1 };
        let body = json!({ "graph6": write_graph6(&g), "report": report });
        Ok(Outcome {
            text: self.envelope(None, &body),
            code,
        })
    }

    fn enumerate(
        &mut self,
        input: &GraphInput,
        include_reversal: bool,
        max_edges: usize,
    ) -> Result<Outcome, CliError> {
        self.format(&[Format::Json])?;
        let started = Instant::now();
        let g = read_one(input)?;
        let space = OrientationSpace::new(&g)?;
        let opts = ScanOptions {
            max_edges,
            ..ScanOptions::default()
        };
        // the scan fixes edge 0; reversal preserves deletable sets, so each
        // scanned orientation stands for itself and its reversal
        let mut histogram = vec![0u64; g.m() + 1];
        for (_, set) in space.iter_sc(&opts)? {
            histogram[set.count_ones() as usize] += 2;
        }
        let classes = orientation_classes(&g, include_reversal)?;
        let class_list: Vec<_> = classes
            .classes
            .iter()
            .map(|c| {
                json!({
                    "size": c.size,
                    "deletable": c.deletable_count(),
                    "arcs": Orientation::from_u64(&g, c.representative).arcs(),
                })
            })
            .collect();
        let histogram: Vec<_> = histogram
            .iter()
            .enumerate()
            .filter(|&(_, &count)| count > 0)
            .map(|(size, count)| json!({ "deletable": size, "orientations": count }))
            .collect();
        let body = json!({
            "graph6": write_graph6(&g),
            "sc_orientations": classes.sc_orientations,
            "include_reversal": include_reversal,
            "group_order": classes.group_order,
            "classes": classes.count(),
            "deletable_histogram": histogram,
            "class_list": class_list,
        });
        Ok(Outcome::ok(self.envelope(self.seconds(started), &body)))
    }

    fn transform(
        &mut self,
        input: &GraphInput,
        op: &TransformSpec,
        trace: Option<&Path>,
    ) -> Result<Outcome, CliError> {
        let format = self.format(&[Format::Graph6, Format::Json])?;
        let g = read_one(input)?;
        let (h, t) = op.apply(&g).map_err(|e| CliError::Failed(e.to_string()))?;
        let trace_json = serde_json::to_value(&t).expect("traces serialize");
        self.emit_graph(format, &h, trace_json, trace)
    }

    fn reduce(&mut self, input: &GraphInput, trace: Option<&Path>) -> Result<Outcome, CliError> {
        let format = self.format(&[Format::Graph6, Format::Json])?;
        let g = read_one(input)?;
        let (h, traces) =
            reduce_to_triangle_free(&g).map_err(|e| CliError::Failed(e.to_string()))?;
        let trace_json = serde_json::to_value(&traces).expect("traces serialize");
        self.emit_graph(format, &h, trace_json, trace)
    }

    fn emit_graph(
        &mut self,
        format: Format,
        h: &Graph,
        trace_json: serde_json::Value,
        trace: Option<&Path>,
    ) -> Result<Outcome, CliError> {
        if let Some(path) = trace {
            let mut text =
                serde_json::to_string_pretty(&trace_json).expect("json values serialize");
            text.push('\n');
            write_file(path, &text)?;
        }
        Ok(Outcome::ok(match format {
            Format::Json => self.envelope(
                None,
                &json!({ "graph6": write_graph6(h), "trace": trace_json }),
            ),
            _ => format!("{}\n", write_graph6(h)),
        }))
    }

    fn batch(&mut self, graphs: &GraphList, limits: &Limits) -> Result<Outcome, CliError> {
        let format = self.format(&[Format::Csv, Format::Json])?;
        let list = read_list(graphs)?;
        self.log(|| format!("{} graphs", list.len()));
        let budget = limits.budget();
        let seed = self.cli.seed;
        let no_timing = self.cli.no_timing;
        let rows: Vec<BatchRow> = list
            .par_iter()
            .map(|g| {
                let result = solve(g, limits.max_k, &budget, seed, None);
                batch_row(g, result, no_timing)
            })
            .collect();
        let failed = rows
            .iter()
            .any(|r| r.method == "error" || r.method == "inconclusive");
        let text = match format {
            Format::Json => self.envelope(None, &json!({ "rows": rows })),
            _ => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                for row in &rows {
                    writer.serialize(row).expect("in-memory csv");
                }
                String::from_utf8(writer.into_inner().expect("in-memory csv"))
                    .expect("csv is utf-8")
            }
        };
        Ok(Outcome {
            text,
            code: i32::from(failed),
        })
    }

    fn conjectures(&mut self, graphs: &GraphList, which: &[u8]) -> Result<Outcome, CliError> {
        self.format(&[Format::Json])?;
        if let Some(&c) = which.iter().find(|&&c| !(1..=4).contains(&c)) {
            return Err(CliError::Usage(format!("there is no conjecture {c}")));
        }
        let started = Instant::now();
        let list = read_list(graphs)?;
        let report = check_conjectures(&list, which)?;
        let tally: Vec<_> = which
            .iter()
            .map(|&c| {
                let (holds, fails, skipped) = report.tally(c);
                json!({ "conjecture": c, "holds": holds, "fails": fails, "skipped": skipped })
            })
            .collect();
        let code = i32::from(report.any_failure());
        let body = json!({ "graphs": list.len(), "tally": tally, "details": report.graphs });
        Ok(Outcome {
            text: self.envelope(self.seconds(started), &body),
            code,
        })
    }
}

fn batch_row(g: &Graph, result: Result<SolveReport, SolverError>, no_timing: bool) -> BatchRow {
    let seconds = |s: f64| {
        if no_timing {
            String::new()
        } else {
            format!("{s:.3}")
        }
    };
    let mut row = BatchRow {
        graph6: write_graph6(g),
        n: g.n(),
        m: g.m(),
        frank_number: String::new(),
        method: String::new(),
        sc_orientations: String::new(),
        max_deletable: String::new(),
        seconds: String::new(),
    };
    let report = match result {
        Ok(report) => report,
        Err(SolverError::Inconclusive(report)) => {
            row.method = "inconclusive".into();
            *report
        }
        Err(e) => {
            row.method = "error".into();
            row.frank_number = e.to_string();
            return row;
        }
    };
    row.frank_number = match report.frank_number {
        FrankValue::Exact(k) => k.to_string(),
        FrankValue::Bounds { lower, upper } => format!(
            "{lower}..{}",
            upper.map_or(String::new(), |u| u.to_string())
        ),
    };
    if row.method.is_empty() {
        row.method = serde_json::to_value(report.method)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
    }
    if report.stats.orientations_scanned > 0 {
        row.sc_orientations = report.stats.sc_orientations.to_string();
        row.max_deletable = report.stats.max_deletable.to_string();
    }
    row.seconds = seconds(report.stats.seconds);
    row
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| match source.kind() {
        io::ErrorKind::NotFound => CliError::FileNotFound(path.to_owned()),
        _ => CliError::Io {
            path: path.to_owned(),
            source,
        },
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = read_file(path)?;
    read_graph6_lines(BufReader::new(text.as_bytes()))
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_one(input: &GraphInput) -> Result<Graph, CliError> {
    if let Some(spec) = &input.family {
        return generate_family(spec).map_err(|e| CliError::Usage(e.to_string()));
    }
    if let Some(text) = &input.graph6 {
        return parse_graph6(text.trim()).map_err(|e| CliError::Input(e.to_string()));
    }
    if let Some(path) = &input.input {
        let mut graphs = read_graph6_file(path)?;
        if graphs.len() != 1 {
            return Err(CliError::Usage(format!(
                "{} holds {} graphs; this command takes one (use batch)",
                path.display(),
                graphs.len()
            )));
        }
        return Ok(graphs.remove(0));
    }
    Err(CliError::Usage(
        "give a graph with --family, --graph6 or --input".into(),
    ))
}

fn read_list(list: &GraphList) -> Result<Vec<Graph>, CliError> {
    if let Some(path) = &list.input {
        return read_graph6_file(path);
    }
    if let Some(n) = list.order {
        return enumerate_cubic_3ec(n).map_err(|e| CliError::Usage(e.to_string()));
    }
    Err(CliError::Usage(
        "give graphs with --input or --order".into(),
    ))
}
