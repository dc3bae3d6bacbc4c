//! The `octo-moebius` command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 precondition violation (such as
//! an incompatible matrix), 4 numerical failure (a property that should hold
//! did not). [`run`] returns the code and captured output instead of touching
//! the process, so the binary is a two-line wrapper and tests call it directly.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use crate::error::Error;
use crate::extended::{Extended, ExtendedOctonion};
use crate::g2::{automorphism_defect, td_criterion, AutomorphismForm, FormKind, NestedForm, NestedKind};
use crate::lorentz::{NestedChain, TransformMatrix};
use crate::minkowski::Vector10;
use crate::moebius::{compose_nested, MoebiusParams, OP1Point};
use crate::octonion::Octonion;
use crate::oracle::{fano_triples, generate_table, standard_fixtures};
use crate::sample::{Sampler, Subspace};
use crate::verify::{self, draw_generic_parameters, draw_nested_parameters, draw_td_parameters, Suite};
use crate::PREDICATE_EPSILON;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "octo-moebius", version, about = "Octonionic Möbius transformations, Lorentz actions and G2 forms")]
pub struct Cli {
    /// Seed for every random draw (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random draws per property.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    /// Override the floating-point tolerance of `verify` upper bounds.
    #[arg(long, global = true)]
    pub epsilon: Option<f64>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the 8×8 signed multiplication table and its 7 quaternionic triples.
    Table {
        /// Only the triples.
        #[arg(long)]
        triples: bool,
    },
    /// Evaluate an octonion expression such as `(i*j)*l - [i, j, l]`.
    Eval { expr: String },
    /// Apply a nested chain of 2×2 matrices to a 10-vector.
    LorentzApply {
        /// JSON file: one matrix `{alpha, beta, gamma, delta}` or an array of them.
        #[arg(long)]
        chain: PathBuf,
        /// JSON array of 10 components.
        #[arg(long)]
        vector: String,
    },
    /// Apply a Möbius map (or a nested list of them) to a point of the extended line.
    MoebiusApply {
        /// JSON file: one matrix or an array applied in order.
        #[arg(long)]
        params: PathBuf,
        /// `inf`, a JSON array of 8 coefficients, or an expression.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Print a representative `(b, c)` of the image in OP¹.
        #[arg(long)]
        projective: bool,
    },
    /// Run a property suite: core, minkowski, lorentz, moebius, g2 or all.
    Verify {
        suite: String,
        /// Confine every draw to the quaternions.
        #[arg(long)]
        quaternionic: bool,
    },
    /// Sample the three automorphism forms and CAM_I, one JSON line per draw.
    G2Audit {
        /// Draws per family; defaults to samples / 10.
        #[arg(long)]
        draws: Option<usize>,
    },
    /// Emit bracketing fixtures as JSON lines.
    Fixtures {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownSuite(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::fail(exit_code(&e), format!("error: {e}\n"))
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Table { triples } => table(cli, *triples),
        Command::Eval { expr } => eval(cli, expr),
        Command::LorentzApply { chain, vector } => lorentz_apply(cli, chain, vector),
        Command::MoebiusApply { params, w, projective } => moebius_apply(cli, params, w, *projective),
        Command::Verify { suite, quaternionic } => return verify(cli, suite, *quaternionic),
        Command::G2Audit { draws } => return g2_audit(cli, draws.unwrap_or(cli.samples.div_ceil(10))),
        Command::Fixtures { out } => fixtures(out.as_deref()),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = std::result::Result<Outcome, Outcome>;

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_USAGE, format!("error: {msg}\n"))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn table(cli: &Cli, only_triples: bool) -> CmdResult {
    let t = generate_table();
    let triples = fano_triples(&t)?;
    let named = |line: &[u8; 3]| line.map(|x| Octonion::unit(x as usize - 1).to_string());
    if cli.json {
        return Ok(Outcome::ok(if only_triples {
            pretty(&triples.iter().map(named).collect::<Vec<_>>())
        } else {
            pretty(&t.entries())
        }));
    }
    let mut out = String::new();
    if !only_triples {
        out.push_str(&t.render_grid(true));
        out.push('\n');
    }
    for line in &triples {
        let [a, b, c] = named(line);
        writeln!(out, "{a} {b} = {c}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn eval(cli: &Cli, expr: &str) -> CmdResult {
    let v = crate::expr::eval(expr)?;
    Ok(Outcome::ok(if cli.json { serde_json::to_string(&v).unwrap() + "\n" } else { format!("{v}\n") }))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> std::result::Result<T, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(TransformMatrix),
    Many(Vec<TransformMatrix>),
}

impl OneOrMany {
    fn into_vec(self) -> Vec<TransformMatrix> {
        match self {
            OneOrMany::One(m) => vec![m],
            OneOrMany::Many(ms) => ms,
        }
    }
}

fn lorentz_apply(cli: &Cli, chain: &Path, vector: &str) -> CmdResult {
    let chain = NestedChain::new(read_json::<OneOrMany>(chain)?.into_vec());
    let v: Vector10 = serde_json::from_str(vector).map_err(|e| usage(format!("--vector: {e}")))?;
    let image = chain.apply_to_vector10(&v)?;
    let (before, after) = (v.minkowski_norm(), image.minkowski_norm());
    Ok(Outcome::ok(if cli.json {
        pretty(&json!({ "vector": image, "norm_before": before, "norm_after": after }))
    } else {
        format!("vector: {}\nnorm before: {before}\nnorm after: {after}\n", serde_json::to_string(&image).unwrap())
    }))
}

fn parse_point(w: &str) -> std::result::Result<ExtendedOctonion, Outcome> {
    let w = w.trim();
    if w == "inf" || w == "∞" {
        return Ok(Extended::Infinity);
    }
    if w.starts_with('[') || w.starts_with('"') {
        return serde_json::from_str(w).map_err(|e| usage(format!("--w: {e}")));
    }
    Ok(Extended::Finite(crate::expr::eval(w)?))
}

fn moebius_apply(cli: &Cli, params: &Path, w: &str, projective: bool) -> CmdResult {
    let chain = read_json::<OneOrMany>(params)?
        .into_vec()
        .into_iter()
        .map(MoebiusParams::new)
        .collect::<crate::Result<Vec<_>>>()?;
    let w = parse_point(w)?;
    let out = if projective {
        let mut p = OP1Point::from_extended(&w);
        for m in &chain {
            p = m.apply_projective(&p)?;
        }
        if cli.json {
            pretty(&p)
        } else {
            format!("({}; {})\n", p.b(), p.c())
        }
    } else {
        let image = compose_nested(&chain, &w)?;
        if cli.json {
            serde_json::to_string(&image).unwrap() + "\n"
        } else {
            format!("{image}\n")
        }
    };
    Ok(Outcome::ok(out))
}

fn verify(cli: &Cli, suite: &str, quaternionic: bool) -> Outcome {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return e.into(),
    };
    let cfg = verify::Config {
        seed: cli.seed,
        samples: cli.samples,
        epsilon: cli.epsilon,
        subspace: if quaternionic { Subspace::Quaternionic } else { Subspace::Octonionic },
    };
    let report = verify::run(suite, &cfg);
    let stdout = if cli.json {
        pretty(&report)
    } else {
        let mut s = String::new();
        for p in &report.properties {
            let op = match p.bound {
                verify::Bound::AtMost => "<=",
                verify::Bound::AtLeast => "> ",
            };
            let mark = if p.pass { "ok  " } else { "FAIL" };
            writeln!(s, "{mark} {:<48} {:.3e} {op} {:.0e}", p.name, p.residual, p.tolerance).unwrap();
        }
        let failed = report.failures().count();
        writeln!(s, "{} of {} properties passed", report.properties.len() - failed, report.properties.len())
            .unwrap();
        s
    };
    Outcome { code: if report.pass { EXIT_OK } else { EXIT_NUMERICAL }, stdout, stderr: String::new() }
}

/// One JSON line per (family, form, draw). A line fails when a criterion
/// satisfying draw is not an automorphism, or a generic one is.
fn g2_audit(cli: &Cli, draws: usize) -> Outcome {
    let mut rng = Sampler::new(cli.seed);
    let pairs = 50;
    let mut out = String::new();
    let mut all_ok = true;
    let mut line = |family: &str, form: String, params: serde_json::Value, td: Option<f64>, defect: f64, expect: bool| {
        let automorphism = defect <= PREDICATE_EPSILON;
        let ok = automorphism == expect;
        all_ok &= ok;
        let mut v = json!({
            "family": family,
            "form": form,
            "params": params,
            "defect": defect,
            "automorphism": automorphism,
            "expected": expect,
        });
        if let Some(td) = td {
            v["td_residual"] = json!(td);
        }
        writeln!(out, "{v}").unwrap();
    };
    let form_name = |k: FormKind| serde_json::to_value(k).unwrap().as_str().unwrap().to_string();
    for n in 0..draws {
        let seed = cli.seed ^ n as u64;
        for (family, (a, b), expect) in [
            ("td", draw_td_parameters(&mut rng), true),
            ("generic", draw_generic_parameters(&mut rng), false),
        ] {
            let td = td_criterion(a, b).norm();
            for kind in FormKind::ALL {
                let f = AutomorphismForm::new(kind, a, b).expect("unit parameters");
                let defect = automorphism_defect(&f, pairs, seed);
                line(family, form_name(kind), json!({ "a": a, "b": b }), Some(td), defect, expect);
            }
        }
        let (c, d, ell) = draw_nested_parameters(&mut rng);
        let f = NestedForm::new(NestedKind::CamI, c, d, ell).expect("valid nested parameters");
        let defect = automorphism_defect(&f, pairs, seed);
        line("nested", "CAM_I".into(), json!({ "c": c, "d": d, "ell": ell }), None, defect, true);
    }
    Outcome { code: if all_ok { EXIT_OK } else { EXIT_NUMERICAL }, stdout: out, stderr: String::new() }
}

fn fixtures(out: Option<&Path>) -> CmdResult {
    let mut text = String::new();
    for f in standard_fixtures() {
        writeln!(text, "{}", serde_json::to_string(&f).unwrap()).unwrap();
    }
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("octo-moebius").chain(args.iter().copied()))
    }

    #[test]
    fn eval_prints_the_value() {
        let o = run_args(&["eval", "i*j"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "k\n"));
        let o = run_args(&["eval", "--json", "2 - l"]);
        assert_eq!(o.stdout, "[2.0,0.0,0.0,0.0,0.0,0.0,0.0,-1.0]\n");
        assert_eq!(run_args(&["eval", "i +"]).code, EXIT_USAGE);
    }

    #[test]
    fn table_triples() {
        let o = run_args(&["table", "--triples"]);
        assert_eq!(o.stdout.lines().count(), 7);
        assert!(o.stdout.contains("i j = k"));
    }

    #[test]
    fn unknown_suite_and_bad_flags_are_usage_errors() {
        assert_eq!(run_args(&["verify", "bogus"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }
}
