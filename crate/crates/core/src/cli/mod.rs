//! The `skeinkit` command line.
//!
//! Every command prints one JSON report on stdout and a short summary on
//! stderr. Exit codes: 0 all assertions pass, 1 an assertion failed, 2 bad
//! input, 3 a resource budget was exceeded.

pub mod fixtures;
mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{self, DiameterMode};
use crate::diagram::{parse_pd, Diagram};
use crate::error::{Error, Result};
use crate::jones::{self, DegreeSpan, Engine};
use crate::par::{self, Exec};
use crate::skein::sweep::{SweepConfig, DEFAULT_WIDTH_BUDGET};

pub use verify::cmd_verify;

#[derive(Parser, Debug)]
#[command(
    name = "skeinkit",
    version,
    about = "Kauffman brackets, colored Jones polynomials and crossing-number bounds"
)]
pub struct Cli {
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Largest number of frontier matchings a sweep may hold
    /// [env: SKEINKIT_WIDTH_BUDGET] [default: Catalan(12) = 208012].
    #[arg(long, global = true)]
    pub width_budget: Option<u64>,
    /// Worker threads; 0 picks the number of cores [env: SKEINKIT_THREADS].
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct PdInput {
    /// PD code file; `-` or absent reads stdin.
    #[arg(long, default_value = "-")]
    pub pd: PathBuf,
    /// Name of a bundled fixture, used instead of `--pd`.
    #[arg(long, conflicts_with = "pd")]
    pub fixture: Option<String>,
}

impl PdInput {
    pub fn load(&self) -> Result<Diagram> {
        match &self.fixture {
            Some(name) => fixtures::load_fixtures(fixtures::BUNDLED.as_bytes())?
                .records
                .iter()
                .find(|r| &r.name == name)
                .ok_or_else(|| Error::Fixture(format!("no bundled fixture named `{name}`")))?
                .diagram(),
            None => load_diagram(&self.pd),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EngineArg {
    Chebyshev,
    Sweep,
    StateSum,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    /// Closed form when the diagram is adequate, fit otherwise.
    Auto,
    ClosedForm,
    Fit,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Writhe, crossing signs, state circles, adequacy, Turaev genus and the H_n table.
    Invariants {
        #[command(flatten)]
        input: PdInput,
        /// Largest colour in the H_n table.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Colored Jones polynomial J_K(n), its degrees and span.
    Jones {
        #[command(flatten)]
        input: PdInput,
        /// Colour; J of the unknot is Δ_{n-1}.
        #[arg(long)]
        n: usize,
        /// `sweep` evaluates the projector-decorated cable directly; `state-sum` only does n = 2.
        #[arg(long, value_enum, default_value = "chebyshev")]
        engine: EngineArg,
    },
    /// Untwisted Whitehead double: construction, bounds, predictor chain and verdict.
    Double {
        #[command(flatten)]
        input: PdInput,
        /// Clasp sign, -1 or 1.
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        clasp: i8,
        /// Colours at which the double's J is computed directly and checked;
        /// the flag with no value skips the direct computation.
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "2")]
        direct_n: Vec<usize>,
    },
    /// Jones slopes and diameter.
    Diameter {
        #[command(flatten)]
        input: PdInput,
        /// `auto` uses the closed form on adequate diagrams and fits otherwise.
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        /// First colour of the fit.
        #[arg(long, default_value_t = 1)]
        start: usize,
        /// Number of consecutive colours fitted; the fourth and later check the first three.
        #[arg(long, default_value_t = 4)]
        points: usize,
    },
    /// Runs the invariant suite over a fixture CSV (the bundled table by default).
    Verify {
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Colours 2..=n_max are computed for every record.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Assertion {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub version: &'static str,
    pub engine: Engine,
    pub input: Value,
    pub result: Value,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &'static str, engine: Engine, input: Value, result: Value, assertions: Vec<Assertion>) -> Self {
        let passed = assertions.iter().all(|a| a.pass);
        Self {
            command,
            version: env!("CARGO_PKG_VERSION"),
            engine,
            input,
            result,
            assertions,
            passed,
        }
    }
}

pub struct Context {
    pub cfg: SweepConfig,
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

/// Reads a PD code; lines starting with `#` are comments.
pub fn load_diagram(path: &PathBuf) -> Result<Diagram> {
    let text = read_input(path)?;
    let body: Vec<&str> = text.lines().filter(|l| !l.trim_start().starts_with('#')).collect();
    let d = parse_pd(&body.join(" "))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .filter(|s| s != "-");
    Ok(match name {
        Some(n) => d.with_name(n),
        None => d,
    })
}

fn input_json(d: &Diagram) -> Value {
    json!({ "name": d.name, "pd": d.to_pd_string() })
}

fn default_engine(d: &Diagram) -> Engine {
    if d.component_count() == 1 {
        Engine::Chebyshev
    } else {
        Engine::Sweep
    }
}

pub fn cmd_invariants(d: &Diagram, n_max: usize) -> Result<Report> {
    let ad = d.adequacy();
    let g = d.turaev_genus()?;
    let table: Vec<Value> = (0..=n_max as i64)
        .map(|n| {
            let h = bounds::h_and_big_h(d, n);
            json!({ "n": n, "H": h.big_h, "h": h.h.to_string() })
        })
        .collect();
    let genus_ok = (ad.v_a + ad.v_b) as i64 == d.crossing_count() as i64 + 2 - 2 * g as i64;
    let result = json!({
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "writhe": d.writhe(),
        "c_plus": d.c_plus(),
        "c_minus": d.c_minus(),
        "v_a": ad.v_a,
        "v_b": ad.v_b,
        "a_adequate": ad.a_adequate,
        "b_adequate": ad.b_adequate,
        "adequate": ad.adequate(),
        "turaev_genus": g,
        "h_table": table,
    });
    let checks = vec![Assertion::new(
        "turaev_genus_identity",
        genus_ok,
        "v_A + v_B = c + 2 - 2g_T",
    )];
    Ok(Report::new(
        "invariants",
        Engine::StateSum,
        input_json(d),
        result,
        checks,
    ))
}

pub fn cmd_jones(d: &Diagram, n: usize, engine: Engine, ctx: &Context) -> Result<Report> {
    let j = jones::colored_jones_with(d, n, engine, &ctx.cfg)?;
    let reduced = jones::reduced(&j);
    let span = DegreeSpan::of(&j);
    let result = json!({
        "n": n,
        "cable_width": n - 1,
        "poly_a": j.poly.to_string(),
        "poly_t": j.to_t_string(),
        "terms_a": j.poly,
        "t_max_deg": j.t_max_deg.to_string(),
        "t_min_deg": j.t_min_deg.to_string(),
        "a_min_deg": span.a_min,
        "a_max_deg": span.a_max,
        "span": span.span,
        "reduced_t": reduced.as_ref().map(jones::format_in_t).ok(),
    });
    let checks = vec![Assertion::new(
        "reduced_exact",
        reduced.is_ok(),
        reduced
            .err()
            .map(|e| e.to_string())
            .unwrap_or_else(|| "J_K(n) / J_U(n) is a Laurent polynomial".into()),
    )];
    Ok(Report::new("jones", engine, input_json(d), result, checks))
}

pub fn cmd_double(d: &Diagram, clasp: i8, direct_n: &[usize], ctx: &Context) -> Result<Report> {
    let chain = bounds::whitehead_chain(d, clasp)?;
    let w = parse_pd(&chain.double_pd)?;
    let mut checks = vec![
        Assertion::new(
            "crossing_count",
            chain.double_crossings == 4 * chain.c_k + 2 + 2 * chain.wr_k.abs(),
            format!("{} crossings", chain.double_crossings),
        ),
        Assertion::new(
            "predictor_matches_exact_formula",
            chain.predictor_matches_exact,
            format!(
                "predictor {} vs formula on the double {}",
                if clasp < 0 {
                    chain.d_plus.d_plus
                } else {
                    chain.neg_d_minus.d_plus
                },
                chain
                    .exact_on_double
                    .map(|q| q.to_string())
                    .unwrap_or_else(|| "unavailable (not adequate on that side)".into())
            ),
        ),
    ];
    if chain.wr_k == 0 {
        let (cp, cm, vb) = bounds::negative_double_counts(chain.c_k, d.adequacy().v_b as i64);
        let wad = chain.double_adequacy;
        if clasp < 0 {
            let ok = (chain.double_c_plus, chain.double_c_minus, wad.v_b as i64) == (cp, cm, vb) && wad.b_adequate;
            checks.push(Assertion::new(
                "symbolic_counts",
                ok,
                format!("(c+, c-, v_B) = ({cp}, {cm}, {vb}), B-adequate"),
            ));
        }
    }
    let mut direct = Vec::new();
    for &n in direct_n {
        let j = jones::colored_jones_with(&w, n, default_engine(&w), &ctx.cfg)?;
        let ni = n as i64;
        let (measured, predicted) = if clasp < 0 {
            (j.t_max_deg, chain.exact_on_double.map(|q| q.eval(ni)))
        } else {
            (-j.t_min_deg, chain.exact_on_double.map(|q| q.eval(ni)))
        };
        let ok = predicted == Some(measured);
        checks.push(Assertion::new(
            format!("direct_n{n}"),
            ok,
            format!(
                "measured {measured}, formula {}",
                predicted.map(|p| p.to_string()).unwrap_or_default()
            ),
        ));
        direct.push(json!({ "n": n, "t_max_deg": j.t_max_deg.to_string(), "t_min_deg": j.t_min_deg.to_string() }));
    }
    let verdict_text = match &chain.verdict {
        Some(v) if v.determined => format!(
            "c(W{}({})) = {}, determined",
            if clasp < 0 { "-" } else { "+" },
            d.name.as_deref().unwrap_or("K"),
            v.c_k.unwrap_or_default()
        ),
        Some(v) => format!(
            "undetermined, c in {}",
            v.interval.map(|(lo, hi)| format!("({lo}, {hi}]")).unwrap_or_default()
        ),
        None => "no verdict: non-adequacy of the double is only certified for zero-writhe companions".into(),
    };
    let mut result = serde_json::to_value(&chain).expect("serializable");
    result["verdict_text"] = json!(verdict_text);
    result["direct"] = json!(direct);
    Ok(Report::new("double", default_engine(&w), input_json(d), result, checks))
}

pub fn cmd_diameter(d: &Diagram, mode: ModeArg, start: usize, points: usize, ctx: &Context) -> Result<Report> {
    let closed = match mode {
        ModeArg::ClosedForm => true,
        ModeArg::Fit => false,
        ModeArg::Auto => d.adequacy().adequate(),
    };
    let mode = if closed {
        DiameterMode::AdequateClosedForm
    } else {
        DiameterMode::Fit { start, points }
    };
    let rep = bounds::jones_diameter(d, mode, &ctx.cfg)?;
    let c = d.crossing_count() as i64;
    let checks = vec![Assertion::new(
        "diameter_at_most_2c",
        rep.diameter <= num_rational::Rational64::from(2 * c),
        format!("diameter {} vs 2c(D) = {}", rep.diameter, 2 * c),
    )];
    let engine = if closed { Engine::StateSum } else { default_engine(d) };
    Ok(Report::new(
        "diameter",
        engine,
        input_json(d),
        serde_json::to_value(&rep).expect("serializable"),
        checks,
    ))
}

/// The flag if given, else the environment variable, else the default.
/// The variable is not read at all when the flag is present.
fn setting<T: std::str::FromStr>(flag: Option<T>, var: &str, default: T) -> Result<T> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(var) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{var}={s} is not a valid value"))),
        Err(_) => Ok(default),
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let threads = setting(cli.threads, "SKEINKIT_THREADS", 0)?;
    if threads > 0 {
        par::init_threads(threads);
    }
    let budget = setting(cli.width_budget, "SKEINKIT_WIDTH_BUDGET", DEFAULT_WIDTH_BUDGET)?;
    let ctx = Context {
        cfg: SweepConfig { budget, exec },
    };
    match &cli.command {
        Command::Invariants { input, n_max } => cmd_invariants(&input.load()?, *n_max),
        Command::Jones { input, n, engine } => {
            let d = input.load()?;
            let engine = match engine {
                EngineArg::Chebyshev => default_engine(&d),
                EngineArg::Sweep => Engine::Sweep,
                EngineArg::StateSum => Engine::StateSum,
            };
            cmd_jones(&d, *n, engine, &ctx)
        }
        Command::Double { input, clasp, direct_n } => cmd_double(&input.load()?, *clasp, direct_n, &ctx),
        Command::Diameter {
            input,
            mode,
            start,
            points,
        } => cmd_diameter(&input.load()?, *mode, *start, *points, &ctx),
        Command::Verify { fixtures, n_max } => {
            let text = match fixtures {
                Some(p) => read_input(p)?,
                None => fixtures::BUNDLED.to_string(),
            };
            cmd_verify(&text, *n_max, &ctx)
        }
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let started = Instant::now();
    let to_text = |v: &Value| {
        if cli.pretty {
            serde_json::to_string_pretty(v)
        } else {
            serde_json::to_string(v)
        }
        .expect("serializable")
    };
    match run(&cli) {
        Ok(report) => {
            emit(&to_text(&serde_json::to_value(&report).expect("serializable")));
            let failed: Vec<&Assertion> = report.assertions.iter().filter(|a| !a.pass).collect();
            eprintln!(
                "{}: {}/{} assertions passed in {:.2?}",
                report.command,
                report.assertions.len() - failed.len(),
                report.assertions.len(),
                started.elapsed()
            );
            for a in &failed {
                eprintln!("  FAIL {}: {}", a.name, a.detail);
            }
            if report.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            emit(&to_text(&json!({ "error": e.code(), "message": e.to_string() })));
            eprintln!("error: {e}");
            if e.is_budget() {
                3
            } else {
                2
            }
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args())
}
