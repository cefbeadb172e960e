//! Command-line front end. [`run`] parses an argument vector, executes one
//! subcommand and returns everything the binary prints, so the whole
//! surface can be driven in-process.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed (class
//! violation, improper coloring, broken structural claim, failing suite
//! criterion), 2 for usage errors, unreadable or malformed input and size
//! limits.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bounds::eval_bounds;
use crate::coloring::{
    color_bull_diamond, color_dispatch, color_p5_with, color_p6_with, color_p7_with, Certified, ColoringError,
    Strategy, TriangleFreeColorer,
};
use crate::decomposition::{clique_layering, verify_lemma31, LayeringCase, LayeringError};
use crate::gen::{sample_traced, SamplerSpec};
use crate::graph::Graph;
use crate::io;
use crate::oracle::{
    self, chromatic_number_exact_with_limit, verify_coloring, Coloring, OracleError, DEFAULT_CHI_LIMIT,
};
use crate::recognition::{classify, Pattern};
use crate::suite::{run_criterion, SuiteConfig, SuiteReport, CRITERIA};

/// Name of the environment variable that overrides the exact-search cap.
pub const DESK_LIMIT_VAR: &str = "CHIBOUND_DESK_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "chibound",
    version,
    about = "Coloring and chromatic bounds for (bull, diamond)-free graphs"
)]
struct Cli {
    /// Print plain text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    /// Also write a run report (argv, input digests, outputs, timing) here.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Auto,
    Thm32,
    P5,
    P6,
    P7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TfStrategy {
    Exact,
    Dsatur,
}

impl From<TfStrategy> for Strategy {
    fn from(s: TfStrategy) -> Self {
        match s {
            TfStrategy::Exact => Strategy::Exact,
            TfStrategy::Dsatur => Strategy::DsaturChecked,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Forbidden-pattern flags, witnesses, triangle count and clique number.
    Classify {
        graph: PathBuf,
        /// Check for an induced path on this many vertices.
        #[arg(long, default_value_t = 6)]
        probe_path: usize,
    },
    /// Layering from a maximum clique and the structural clause checks.
    Decompose {
        graph: PathBuf,
        /// Root clique, comma separated; defaults to a maximum clique.
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
    },
    /// Constructive coloring with a certified palette bound.
    Color {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = TheoremArg::Auto)]
        theorem: TheoremArg,
        /// Subroutine for triangle-free pieces.
        #[arg(long, value_enum, default_value_t = TfStrategy::Exact)]
        tf_strategy: TfStrategy,
    },
    /// Chromatic number.
    Chi {
        graph: PathBuf,
        /// Always run the exact search and print the coloring as
        /// `vertex color` lines.
        #[arg(long)]
        exact: bool,
        /// Write the `vertex color` lines to this file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Every upper bound that applies, with six-decimal values.
    Bounds {
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        probe_path: usize,
    },
    /// Seeded random graph from a forbidden-subgraph class.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Comma-separated patterns: bull, diamond, paw, triangle, claw,
        /// chair, p<t>, c<t>, k<t>.
        #[arg(long, value_delimiter = ',', default_value = "bull,diamond")]
        forbid: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep one component of at least n/2 vertices.
        #[arg(long)]
        connect: bool,
        /// Plant cliques of these sizes before repair.
        #[arg(long, value_delimiter = ',')]
        clique: Vec<usize>,
        #[arg(long, default_value_t = 64)]
        max_attempts: usize,
        /// Output file; `.dimacs`, `.col` and `.clq` get DIMACS, anything
        /// else an edge list. Without it the edge list goes to stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check a coloring given as `vertex color` lines.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// The acceptance battery.
    Suite {
        #[arg(long, default_value_t = crate::suite::DEFAULT_SEED)]
        seed: u64,
        /// Run only these criteria, comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<u8>>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub passed: bool,
    pub failed: Vec<String>,
}

/// Everything one invocation did.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub outputs: Value,
    pub millis: f64,
    pub summary: RunSummary,
    pub exit_code: i32,
}

/// The result of [`run`]: the report plus the text for each stream.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::Oracle(_) | ColoringError::Precondition(_) => Self::usage(e.to_string()),
            _ => Self::check(e.to_string()),
        }
    }
}

impl From<LayeringError> for Failure {
    fn from(e: LayeringError) -> Self {
        match e {
            LayeringError::Forbidden { .. } | LayeringError::Structure { .. } => Self::check(e.to_string()),
            _ => Self::usage(e.to_string()),
        }
    }
}

/// What a subcommand produced: JSON, its plain rendering, and the checks
/// that failed (empty when all passed).
struct Produced {
    json: Value,
    plain: String,
    failed: Vec<String>,
}

impl Produced {
    fn ok(json: Value, plain: String) -> Self {
        Self {
            json,
            plain,
            failed: Vec::new(),
        }
    }
}

struct Context {
    inputs: Vec<InputDigest>,
    chi_limit: usize,
}

impl Context {
    fn read_graph(&mut self, path: &Path) -> Result<Graph, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        self.digest(path, &bytes);
        let text =
            String::from_utf8(bytes).map_err(|_| Failure::usage(format!("{}: not valid UTF-8", path.display())))?;
        io::parse_auto(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }

    fn read_text(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        self.digest(path, &bytes);
        String::from_utf8(bytes).map_err(|_| Failure::usage(format!("{}: not valid UTF-8", path.display())))
    }

    fn digest(&mut self, path: &Path, bytes: &[u8]) {
        let hash = Sha256::digest(bytes);
        let hex = hash.iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        });
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex,
        });
    }
}

/// The exact-search cap: `CHIBOUND_DESK_LIMIT` when set, else the default.
pub fn desk_limit() -> Result<usize, String> {
    match std::env::var(DESK_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{DESK_LIMIT_VAR} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_CHI_LIMIT),
    }
}

/// Parses and executes one command line (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let start = Instant::now();
    let finish = |outputs: Value, failed: Vec<String>, code: i32, stdout: String, stderr: String| {
        let report = RunReport {
            command: argv.clone(),
            inputs: Vec::new(),
            outputs,
            millis: start.elapsed().as_secs_f64() * 1e3,
            summary: RunSummary {
                passed: code == 0,
                failed,
            },
            exit_code: code,
        };
        Outcome {
            report,
            exit_code: code,
            stdout,
            stderr,
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (out, err) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return finish(Value::Null, Vec::new(), code, out, err);
        }
    };
    let chi_limit = match desk_limit() {
        Ok(l) => l,
        Err(msg) => return finish(Value::Null, Vec::new(), 2, String::new(), format!("error: {msg}\n")),
    };
    let mut ctx = Context {
        inputs: Vec::new(),
        chi_limit,
    };
    let result = execute(&cli.command, &mut ctx);
    let mut outcome = match result {
        Ok(p) => {
            let code = if p.failed.is_empty() { 0 } else { 1 };
            let stdout = if cli.plain {
                p.plain
            } else {
                serde_json::to_string_pretty(&p.json).expect("serializable") + "\n"
            };
            finish(p.json, p.failed, code, stdout, String::new())
        }
        Err(f) => {
            let msg = f.message.clone();
            finish(
                Value::Null,
                vec![msg.clone()],
                f.code,
                String::new(),
                format!("error: {msg}\n"),
            )
        }
    };
    outcome.report.inputs = ctx.inputs;
    if let Some(path) = &cli.report {
        let text = serde_json::to_string_pretty(&outcome.report).expect("serializable") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            outcome.stderr.push_str(&format!("error: {}: {e}\n", path.display()));
            outcome.exit_code = 2;
            outcome.report.exit_code = 2;
        }
    }
    outcome
}

fn execute(cmd: &Command, ctx: &mut Context) -> Result<Produced, Failure> {
    match cmd {
        Command::Classify { graph, probe_path } => {
            let g = ctx.read_graph(graph)?;
            let r = classify(&g, *probe_path).map_err(|e| Failure::usage(e.to_string()))?;
            let mut plain = String::new();
            let _ = writeln!(plain, "n {}\nm {}", r.n, r.m);
            let _ = writeln!(
                plain,
                "bull_free {}\ndiamond_free {}\npaw_free {}",
                r.bull_free, r.diamond_free, r.paw_free
            );
            let _ = writeln!(
                plain,
                "triangle_free {}\ntriangle_count {}",
                r.triangle_free, r.triangle_count
            );
            let _ = writeln!(plain, "p{}_free {}\nomega {}", r.path_probe, r.path_free, r.omega);
            for (k, w) in &r.witnesses {
                let _ = writeln!(plain, "witness {k} {}", join(w));
            }
            Ok(Produced::ok(to_value(&r), plain))
        }
        Command::Decompose { graph, clique } => {
            let g = ctx.read_graph(graph)?;
            let k = match clique {
                Some(vs) => {
                    if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
                        return Err(Failure::usage(format!(
                            "clique vertex {v} is out of range for n = {}",
                            g.n()
                        )));
                    }
                    g.set_of(vs.iter().copied())
                }
                None => oracle::max_clique(&g),
            };
            let l = clique_layering(&g, &k)?;
            let verdict = verify_lemma31(&g, &l);
            let summary = l.summary();
            let mut plain = String::new();
            let _ = writeln!(plain, "clique {}", join(&summary.clique));
            for (i, w) in summary.w.iter().enumerate() {
                let _ = writeln!(plain, "{}", format!("W{} {}", i + 1, join(w)).trim_end());
            }
            for (i, layer) in summary.layers.iter().enumerate() {
                let _ = writeln!(plain, "{}", format!("N{} {}", i + 1, join(layer)).trim_end());
            }
            let _ = writeln!(plain, "case {}", case_text(summary.case));
            let mut failed = Vec::new();
            for c in &verdict.clauses {
                let _ = writeln!(plain, "clause {} {}", c.clause, if c.holds { "holds" } else { "fails" });
                if !c.holds {
                    failed.push(format!("clause {}", c.clause));
                }
            }
            let json = json!({ "layering": summary, "clauses": verdict.clauses, "forbidden": verdict.forbidden });
            Ok(Produced { json, plain, failed })
        }
        Command::Color {
            graph,
            theorem,
            tf_strategy,
        } => {
            let g = ctx.read_graph(graph)?;
            let strategy = Strategy::from(*tf_strategy);
            let mut colorers = None;
            let (c, cert): Certified = match theorem {
                TheoremArg::Auto => {
                    let (r, choice) = color_dispatch(&g)?;
                    colorers = Some(choice);
                    r
                }
                TheoremArg::Thm32 => color_bull_diamond(&g, &TriangleFreeColorer::new(strategy, None))?,
                TheoremArg::P5 => color_p5_with(&g, strategy)?,
                TheoremArg::P6 => color_p6_with(&g, strategy)?,
                TheoremArg::P7 => color_p7_with(&g, strategy)?,
            };
            let verdict = verify_coloring(&g, &c);
            let mut failed = Vec::new();
            if !verdict.proper {
                failed.push("coloring is not proper".to_string());
            }
            if c.palette > cert.claimed_bound {
                failed.push(format!(
                    "palette {} exceeds the claimed bound {}",
                    c.palette, cert.claimed_bound
                ));
            }
            let mut plain = format!(
                "palette {} theorem {} bound {} omega {}\n",
                c.palette, cert.theorem, cert.claimed_bound, cert.omega
            );
            plain.push_str(&coloring_lines(&c));
            let json = json!({
                "palette": c.palette,
                "certificate": cert,
                "assignment": c.assignment,
                "colorers": colorers,
                "proper": verdict.proper,
            });
            Ok(Produced { json, plain, failed })
        }
        Command::Chi { graph, exact, out } => {
            let g = ctx.read_graph(graph)?;
            let (chi, coloring, method) = chromatic(&g, *exact, ctx.chi_limit)?;
            let lines = coloring_lines(&coloring);
            if let Some(path) = out {
                std::fs::write(path, &lines).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            let mut plain = format!("{chi}\n");
            if *exact {
                plain.push_str(&lines);
            }
            let json = json!({
                "chi": chi,
                "method": method,
                "omega": oracle::clique_number(&g),
                "assignment": coloring.assignment,
            });
            Ok(Produced::ok(json, plain))
        }
        Command::Bounds { graph, probe_path } => {
            let g = ctx.read_graph(graph)?;
            let class = classify(&g, *probe_path).map_err(|e| Failure::usage(e.to_string()))?;
            let r = eval_bounds(&g, &class);
            let json = to_value(&r);
            let mut plain = String::new();
            for (name, e) in &r.bounds {
                let value = json["bounds"][name]["value"].to_string().trim_matches('"').to_string();
                let mut flags = Vec::new();
                if !e.applicable {
                    flags.push("not_applicable");
                }
                if e.asymptotic_only {
                    flags.push("asymptotic");
                }
                if e.or_omega {
                    flags.push("or_omega");
                }
                let _ = writeln!(plain, "{name} {value} {}", flags.join(","));
            }
            Ok(Produced::ok(json, plain))
        }
        Command::Sample {
            n,
            p,
            forbid,
            seed,
            connect,
            clique,
            max_attempts,
            out,
        } => {
            let family = forbid
                .iter()
                .map(|s| s.parse::<Pattern>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::usage(e.to_string()))?;
            let mut spec = SamplerSpec::new(*n, *p, &family, *seed)
                .with_cliques(clique)
                .with_attempts(*max_attempts);
            if *connect {
                spec = spec.connected();
            }
            let (g, trace) = sample_traced(&spec).map_err(|e| Failure::usage(e.to_string()))?;
            let mut json = json!({
                "spec": spec.to_string(),
                "n": g.n(),
                "m": g.m(),
                "trace": trace,
            });
            let plain = match out {
                Some(path) => {
                    let text = io::write(&g, io::format_for_path(path));
                    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                    json["out"] = json!(path.display().to_string());
                    format!(
                        "wrote {} (n {} m {}, {} attempts, {} edges deleted)\n",
                        path.display(),
                        g.n(),
                        g.m(),
                        trace.attempts,
                        trace.deleted_edges
                    )
                }
                None => {
                    json["edges"] = json!(g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>());
                    io::write_edge_list(&g)
                }
            };
            Ok(Produced::ok(json, plain))
        }
        Command::Verify { graph, coloring } => {
            let g = ctx.read_graph(graph)?;
            let text = ctx.read_text(coloring)?;
            let c = parse_coloring(&text, g.n()).map_err(|e| Failure::usage(format!("{}: {e}", coloring.display())))?;
            let verdict = verify_coloring(&g, &c);
            let mut failed = Vec::new();
            let plain = if verdict.proper {
                format!("proper, {} colors\n", c.distinct_colors())
            } else {
                failed.push("coloring is not proper".into());
                let mut s = String::from("improper\n");
                for v in &verdict.violations {
                    let _ = writeln!(s, "{}", serde_json::to_string(v).expect("serializable"));
                }
                s
            };
            let json = json!({ "verdict": verdict, "colors": c.distinct_colors() });
            Ok(Produced { json, plain, failed })
        }
        Command::Suite { seed, only } => {
            let cfg = SuiteConfig {
                seed: *seed,
                chi_limit: ctx.chi_limit,
            };
            let ids: Vec<u8> = match only {
                Some(ids) => ids.clone(),
                None => CRITERIA.iter().map(|c| c.0).collect(),
            };
            let criteria: Vec<_> = ids.iter().map(|&id| run_criterion(id, &cfg)).collect();
            let report = SuiteReport {
                seed: *seed,
                passed: criteria.iter().all(|c| c.passed),
                criteria,
            };
            let failed = report
                .criteria
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("criterion {} {}", c.id, c.name))
                .collect();
            let mut plain = report.table();
            let _ = writeln!(plain, "{}", if report.passed { "ALL PASS" } else { "SOME FAILED" });
            Ok(Produced {
                json: to_value(&report),
                plain,
                failed,
            })
        }
    }
}

/// `chi` without `--exact` first tries to close the gap between the clique
/// number and a constructive coloring, and searches only when they differ.
fn chromatic(g: &Graph, exact: bool, limit: usize) -> Result<(usize, Coloring, &'static str), Failure> {
    if !exact {
        let omega = oracle::clique_number(g);
        let colors = oracle::dsatur(g);
        let c = Coloring::from_colors(&colors);
        if c.palette == omega {
            return Ok((omega, c, "clique_matches_dsatur"));
        }
        if let Ok(((c, _), _)) = color_dispatch(g) {
            if c.palette == omega {
                return Ok((omega, c, "clique_matches_constructive"));
            }
        }
    }
    let (chi, c) = chromatic_number_exact_with_limit(g, limit)?;
    Ok((chi, c, "exact_search"))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn case_text(case: LayeringCase) -> String {
    match case {
        LayeringCase::TwoPart { i, j } => format!("two_part {i} {j}"),
        LayeringCase::SinglePart { i } => format!("single_part {i}"),
        other => other.tag().to_string(),
    }
}

/// One `vertex color` line per colored vertex.
pub fn coloring_lines(c: &Coloring) -> String {
    let mut s = String::new();
    for (v, col) in c.assignment.iter().enumerate() {
        if let Some(col) = col {
            let _ = writeln!(s, "{v} {col}");
        }
    }
    s
}

/// Reads `vertex color` lines; `#` starts a comment. Vertices not listed
/// stay uncolored.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring, String> {
    let mut assignment = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [v, c] = parts.as_slice() else {
            return Err(format!("line {}: expected `vertex color`", i + 1));
        };
        let v: usize = v.parse().map_err(|_| format!("line {}: bad vertex `{v}`", i + 1))?;
        let c: usize = c.parse().map_err(|_| format!("line {}: bad color `{c}`", i + 1))?;
        if v >= n {
            return Err(format!("line {}: vertex {v} out of range for n = {n}", i + 1));
        }
        if c == 0 {
            return Err(format!("line {}: colors start at 1", i + 1));
        }
        if assignment[v].replace(c).is_some() {
            return Err(format!("line {}: vertex {v} colored twice", i + 1));
        }
    }
    let palette = assignment.iter().flatten().copied().max().unwrap_or(0);
    Ok(Coloring {
        palette,
        certificate: None,
        assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_lines_round_trip() {
        let c = Coloring::from_colors(&[1, 2, 1, 3]);
        let back = parse_coloring(&coloring_lines(&c), 4).unwrap();
        assert_eq!(back.assignment, c.assignment);
        assert!(parse_coloring("0 1\n0 2\n", 2).is_err());
        assert!(parse_coloring("5 1\n", 2).is_err());
        assert!(parse_coloring("0 0\n", 2).is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["chibound", "frobnicate"]).exit_code, 2);
        assert_eq!(run(["chibound", "chi", "/nonexistent/graph.edges"]).exit_code, 2);
        assert_eq!(run(["chibound", "--version"]).exit_code, 0);
    }
}
