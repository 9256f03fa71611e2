//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the exit code together with the rendered output, so
//! the whole surface can be exercised in-process.
//!
//! Exit codes: 0 success, 2 input parse error, 3 precondition violation,
//! 4 theorem violation (disagreement between independent computations).

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qborel::instances::Family;
use qborel::{
    io, oracle, qborel as engine, spectra, spread, verify, Error, Monomial, MonomialIdeal, Poset,
    VariableSet,
};

#[derive(Debug, Parser)]
#[command(name = "qborel", version, about = "Principal Q-Borel monomial ideals")]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Poset file (JSON or `j < i` text).
    pub poset: PathBuf,
    /// Monomial such as `x4*x9^2`.
    pub monomial: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SympowMethod {
    Theorem,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpreadMethod {
    Formula,
    Rank,
    Graph,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of Q(m).
    Gen(Input),
    /// Minimal generators of sfQ(m).
    Sfgen(Input),
    /// Associated primes of Q(m).
    Ass(Input),
    /// Maximal associated primes of Q(m).
    Maxass(Input),
    /// Q(m) as the intersection of Q(m_i) over maximal connected components.
    Decompose(Input),
    /// Symbolic power Q(m)^(d).
    Sympow {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'd')]
        d: u32,
        #[arg(long, value_enum, default_value_t = SympowMethod::Theorem)]
        method: SympowMethod,
    },
    /// Ordinary power Q(m)^d.
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'd')]
        d: u32,
    },
    /// Analytic spread of Q(m).
    Spread {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SpreadMethod::All)]
        method: SpreadMethod,
        /// Also report the rank of the Hasse incidence matrix of A(m).
        #[arg(long)]
        incidence: bool,
    },
    /// Analytic spread of sfQ(m).
    Sfspread(Input),
    /// Edges of the linear relation graph of Q(m).
    Lrg(Input),
    /// Borel moves carrying m to TARGET.
    Certify {
        #[command(flatten)]
        input: Input,
        target: String,
    },
    /// Waldschmidt constant, symbolic defects and resurgence of Q(m).
    Invariants {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'd')]
        d: u32,
    },
    /// Seeded randomized cross-check of every structural result.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_THEOREM: i32 = 4;

enum Failure {
    Parse(String),
    Library(Error),
    /// Output was produced but an agreement check failed.
    Disagreement(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Run = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Parse(msg)) => Outcome {
            code: EXIT_PARSE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Library(e)) => {
            let code = match e {
                Error::Parse(_) => EXIT_PARSE,
                Error::TheoremViolation(_) => EXIT_THEOREM,
                _ => EXIT_PRECONDITION,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
        Err(Failure::Disagreement(stdout, msg)) => Outcome {
            code: EXIT_THEOREM,
            stdout,
            stderr: format!("theorem violation: {msg}\n"),
        },
    }
}

fn load(input: &Input) -> std::result::Result<(Poset, Monomial), Failure> {
    let text = fs::read_to_string(&input.poset)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", input.poset.display())))?;
    let poset = io::parse_poset(&text).map_err(|e| match e {
        Error::Parse(msg) => Failure::Parse(msg),
        other => Failure::Parse(format!("invalid poset: {other}")),
    })?;
    let m = parse_monomial(&input.monomial, poset.n())?;
    Ok((poset, m))
}

fn parse_monomial(text: &str, n: usize) -> std::result::Result<Monomial, Failure> {
    Monomial::parse(text, n).map_err(|e| Failure::Parse(e.to_string()))
}

fn render(json_mode: bool, value: Value, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON value serializes");
        s.push('\n');
        s
    } else {
        text
    }
}

fn gens_json(ideal: &MonomialIdeal) -> Value {
    json!(ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

fn set_json(set: &VariableSet) -> Value {
    json!(set.iter().collect::<Vec<_>>())
}

fn prime_text(set: &VariableSet) -> String {
    let vars: Vec<String> = set.iter().map(|i| format!("x{i}")).collect();
    format!("<{}>", vars.join(","))
}

fn primes_output(json_mode: bool, primes: &BTreeSet<VariableSet>) -> String {
    let value = json!({ "primes": primes.iter().map(set_json).collect::<Vec<_>>() });
    let text: String = primes.iter().map(|p| prime_text(p) + "\n").collect();
    render(json_mode, value, text)
}

fn ideal_output(json_mode: bool, ideal: &MonomialIdeal) -> String {
    render(json_mode, json!({ "generators": gens_json(ideal) }), ideal.to_string())
}

fn dispatch(cli: &Cli) -> Run {
    let j = cli.json;
    match &cli.command {
        Command::Gen(input) => {
            let (q, m) = load(input)?;
            Ok(ideal_output(j, &engine::generate_principal(&q, &m)?))
        }
        Command::Sfgen(input) => {
            let (q, m) = load(input)?;
            Ok(ideal_output(j, &engine::generate_sf_principal(&q, &m)?))
        }
        Command::Ass(input) => {
            let (q, m) = load(input)?;
            Ok(primes_output(j, &spectra::associated_primes_principal(&q, &m)?))
        }
        Command::Maxass(input) => {
            let (q, m) = load(input)?;
            Ok(primes_output(j, &spectra::max_associated_primes(&q, &m)?))
        }
        Command::Decompose(input) => {
            let (q, m) = load(input)?;
            let parts = spectra::maximal_connected_components(&q, &m)?;
            let ideals = spectra::component_decomposition(&q, &m)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for (mk, ideal) in parts.iter().zip(&ideals) {
                let a = spectra::order_ideal(&q, mk)?;
                let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
                text.push_str(&format!("Q({mk}) A={a}: {}\n", gens.join(", ")));
                items.push(json!({
                    "monomial": mk.to_string(),
                    "order_ideal": set_json(&a),
                    "generators": gens_json(ideal),
                }));
            }
            Ok(render(j, json!({ "components": items }), text))
        }
        Command::Sympow { input, d, method } => {
            let (q, m) = load(input)?;
            if *d == 0 {
                return Err(Error::NonPositive("d").into());
            }
            let theorem = || spectra::symbolic_power_principal(&q, &m, *d);
            let brute = || -> qborel::Result<MonomialIdeal> {
                oracle::symbolic_power_bruteforce(&engine::generate_principal(&q, &m)?, *d)
            };
            match method {
                SympowMethod::Theorem => Ok(ideal_output(j, &theorem()?)),
                SympowMethod::Oracle => Ok(ideal_output(j, &brute()?)),
                SympowMethod::Both => {
                    let (a, b) = (theorem()?, brute()?);
                    let agree = oracle::ideals_equal(&a, &b)?;
                    let out = render(
                        j,
                        json!({ "generators": gens_json(&a), "oracle_generators": gens_json(&b), "agree": agree }),
                        a.to_string(),
                    );
                    if agree {
                        Ok(out)
                    } else {
                        Err(Failure::Disagreement(out, format!("I^({d}) differs from I^{d}")))
                    }
                }
            }
        }
        Command::Power { input, d } => {
            let (q, m) = load(input)?;
            Ok(ideal_output(j, &engine::generate_principal(&q, &m)?.power(*d)?))
        }
        Command::Spread {
            input,
            method,
            incidence,
        } => {
            let (q, m) = load(input)?;
            let ideal = engine::generate_principal(&q, &m)?;
            let mut values: Vec<(&str, usize)> = Vec::new();
            if matches!(method, SpreadMethod::Formula | SpreadMethod::All) {
                values.push(("formula", spread::analytic_spread_principal(&q, &m)?));
            }
            if matches!(method, SpreadMethod::Rank | SpreadMethod::All) {
                values.push(("rank", spread::analytic_spread_rank(&ideal)?));
            }
            if matches!(method, SpreadMethod::Graph | SpreadMethod::All) {
                let gamma = spread::linear_relation_graph(&ideal);
                values.push(("graph", spread::spread_via_relation_graph(&gamma)));
            }
            if *incidence {
                let a = spectra::order_ideal(&q, &m)?;
                values.push(("incidence_rank", spread::hasse_incidence_rank(&q, &a)?));
            }
            let text = values
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
                + "\n";
            let value = Value::Object(values.iter().map(|(k, v)| (k.to_string(), json!(v))).collect());
            let out = render(j, value, text);
            let spreads: BTreeSet<usize> = values
                .iter()
                .filter(|(k, _)| *k != "incidence_rank")
                .map(|&(_, v)| v)
                .collect();
            if spreads.len() > 1 {
                return Err(Failure::Disagreement(out, "spread computations disagree".into()));
            }
            Ok(out)
        }
        Command::Sfspread(input) => {
            let (q, m) = load(input)?;
            let sf = spread::analytic_spread_sf(&q, &m)?;
            let induced = q.induced(&sf.induced_ground_set)?;
            let value = json!({
                "spread": sf.spread,
                "gcd": sf.gcd.to_string(),
                "induced_ground_set": set_json(&sf.induced_ground_set),
                "induced_covers": induced.global_covers(),
            });
            let text = format!(
                "spread={} gcd={} ground={}\n",
                sf.spread, sf.gcd, sf.induced_ground_set
            );
            Ok(render(j, value, text))
        }
        Command::Lrg(input) => {
            let (q, m) = load(input)?;
            let gamma = spread::linear_relation_graph(&engine::generate_principal(&q, &m)?);
            let edges: Vec<(usize, usize)> = gamma.graph().edges().collect();
            let value = json!({
                "edges": edges,
                "r": gamma.vertex_count(),
                "s": gamma.component_count(),
            });
            Ok(render(j, value, gamma.to_string()))
        }
        Command::Certify { input, target } => {
            let (q, m) = load(input)?;
            let target = parse_monomial(target, q.n())?;
            let moves = engine::move_certificate(&q, &m, &target)?;
            let value = json!({
                "moves": moves.iter().map(|mv| [mv.from(), mv.to()]).collect::<Vec<_>>(),
            });
            let text: String = moves.iter().map(|mv| format!("{mv}\n")).collect();
            Ok(render(j, value, text))
        }
        Command::Invariants { input, d } => {
            let (q, m) = load(input)?;
            let inv = spectra::containment_invariants(&q, &m, *d)?;
            let seq: Vec<String> = inv.waldschmidt_sequence.iter().map(|r| r.to_string()).collect();
            let value = json!({
                "waldschmidt": inv.waldschmidt.to_string(),
                "waldschmidt_sequence": seq,
                "sdefect": inv.sdefect,
                "resurgence": inv.resurgence_bound.to_string(),
            });
            let defects: Vec<String> = inv.sdefect.iter().map(|x| x.to_string()).collect();
            let text = format!(
                "waldschmidt={}\nwaldschmidt_sequence={}\nsdefect={}\nresurgence={}\n",
                inv.waldschmidt,
                seq.join(" "),
                defects.join(" "),
                inv.resurgence_bound
            );
            Ok(render(j, value, text))
        }
        Command::Verify {
            seed,
            trials,
            max_n,
            max_deg,
        } => {
            let report = verify::run_suite(*seed, *trials, Family::new(*max_n, *max_deg));
            let width = verify::PROPERTY_NAMES.iter().map(|n| n.len()).max().unwrap_or(0);
            let mut text = format!(
                "seed={} trials={} max_n={} max_deg={}\n",
                report.seed, report.trials, report.max_n, report.max_deg
            );
            for p in &report.properties {
                let status = if p.passed == p.total { "pass" } else { "FAIL" };
                text.push_str(&format!("{:<width$}  {:>5}/{:<5} {status}\n", p.name, p.passed, p.total));
                if let Some(reason) = &p.first_failure {
                    text.push_str(&format!("  first failure: {reason}\n"));
                }
            }
            let value = serde_json::to_value(&report).expect("report serializes");
            let out = render(j, value, text);
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Disagreement(out, "randomized suite found failures".into()))
            }
        }
    }
}
