//! Command-line front end.
//!
//! Exit codes: 0 success or robust, 1 verified not robust, 2 input error,
//! 3 enumeration budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::boolean_core::{TruthTable, SPECTRUM_CAP};
use crate::error::{Error, Result};
use crate::network::{
    code_network, exhaustive_erasure_check, monte_carlo_fault_sim, CodedNetwork, FaultLocus, SimulationConfig,
    SimulationReport,
};
use crate::neuron::{canonicalize_bias, delta, tighten_integer_bias, Neuron};
use crate::rational::{format_rational, int, parse_rational, Rational};
use crate::records::{neuron_to_value, parse_network, parse_neuron, solution_to_value, to_pretty};
use crate::robustness::{
    is_r_robust, is_ts_robust_with_budget, min_distance, theorem1_verdict, TsVerdict, Witness, WitnessRecord,
    DEFAULT_BUDGET,
};
use crate::solutions::{Solution, SolutionKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ROBUST: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "coded-threshold",
    version,
    about = "Coded threshold neurons: distances, robustness checks and fault simulation"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Maximum number of evaluations an exhaustive check may perform.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Record,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical bias, δ and Fourier spectrum of a neuron.
    Analyze {
        neuron: PathBuf,
        /// Number of spectrum coefficients to list.
        #[arg(long, default_value_t = 5)]
        top: usize,
    },
    /// Check robustness of a coded neuron by enumeration and by the ℓ1 criterion.
    Verify(VerifyArgs),
    /// Minimum and relative distance of a solution.
    Distance {
        neuron: PathBuf,
        #[arg(long, default_value = "parity")]
        solution: String,
        /// Tabulate every applicable solution kind.
        #[arg(long)]
        compare: bool,
    },
    /// Exhaustive single-erasure check and Monte Carlo simulation of a coded network.
    Simulate(SimulateArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub neuron: PathBuf,
    #[arg(long, default_value = "parity")]
    pub solution: String,
    /// Check every pattern with |T| + 2|S| ≤ r.
    #[arg(long, conflicts_with_all = ["t", "s"])]
    pub r: Option<usize>,
    /// Number of erasures (with --s).
    #[arg(long, requires = "s")]
    pub t: Option<usize>,
    /// Number of errors (with --t).
    #[arg(long, requires = "t")]
    pub s: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    pub network: PathBuf,
    #[arg(long, default_value = "0")]
    pub erasure_prob: String,
    #[arg(long, default_value = "0")]
    pub error_prob: String,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Faults per (neuron, synapse) or per shared wire.
    #[arg(long, value_enum, default_value_t = Locus::PerSynapse)]
    pub locus: Locus,
    /// Let parity gates fail too (no guarantee is claimed in this mode).
    #[arg(long)]
    pub faulty_gates: bool,
    /// Simulate the network without parity coding.
    #[arg(long)]
    pub uncoded: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Locus {
    PerSynapse,
    SharedWire,
}

/// A rendered command result.
struct Outcome {
    human: String,
    csv: String,
    record: Value,
    code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<i32> {
    let outcome = match &config.command {
        Command::Analyze { neuron, top } => cmd_analyze(&read_neuron(neuron)?, *top)?,
        Command::Verify(args) => cmd_verify(&read_neuron(&args.neuron)?, args, config.budget)?,
        Command::Distance { neuron, solution, compare } => cmd_distance(&read_neuron(neuron)?, solution, *compare)?,
        Command::Simulate(args) => cmd_simulate(&read(&args.network)?, args, config.budget)?,
    };
    let rendered = match config.format {
        Format::Human => outcome.human.clone(),
        Format::Csv => outcome.csv.clone(),
        Format::Record => to_pretty(&outcome.record) + "\n",
    };
    match &config.out {
        Some(path) => {
            std::fs::write(path, rendered)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
            print!("{}", outcome.human);
        }
        None => print!("{rendered}"),
    }
    Ok(outcome.code)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn read_neuron(path: &Path) -> Result<Neuron> {
    parse_neuron(&read(path)?)
}

fn frac_str(x: &Rational) -> String {
    format_rational(x)
}

fn cmd_analyze(nr: &Neuron, top: usize) -> Result<Outcome> {
    let n = nr.dimension();
    let d = delta(nr)?;
    let canonical = if nr.is_binary() {
        Some(int(canonicalize_bias(nr)?.theta()))
    } else if nr.is_integer() {
        Some(tighten_integer_bias(nr)?.bias().clone())
    } else {
        None
    };
    let spectrum = if n <= SPECTRUM_CAP {
        let signs = nr.truth_signs()?;
        let table = TruthTable::new(n, signs.iter().map(|s| int(i64::from(s.value()))).collect())?;
        Some(crate::boolean_core::walsh_hadamard(&table)?)
    } else {
        None
    };
    let mut human = String::new();
    writeln!(human, "neuron: {nr}").ok();
    writeln!(human, "n = {n}").ok();
    writeln!(human, "binary weights: {}", nr.is_binary()).ok();
    writeln!(human, "integer weights: {}", nr.is_integer()).ok();
    if let Some(c) = &canonical {
        writeln!(human, "canonical bias = {}", frac_str(c)).ok();
    }
    writeln!(human, "delta = {}", frac_str(&d)).ok();
    let mut coeffs = Vec::new();
    if let Some(sp) = &spectrum {
        writeln!(human, "spectrum max |coefficient| over nonempty sets = {}", frac_str(&sp.max_abs_nonempty())).ok();
        for (mask, c) in sp.top(top) {
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            writeln!(human, "  S = {set:?}: {}", frac_str(&c)).ok();
            coeffs.push(json!({ "set": set, "coefficient": frac_str(&c) }));
        }
    }
    let max_coeff = spectrum.as_ref().map(|s| frac_str(&s.max_abs_nonempty()));
    let canonical_str = canonical.as_ref().map(frac_str);
    let csv = format!(
        "n,binary,integer,canonical_bias,delta,spectrum_max\n{n},{},{},{},{},{}\n",
        nr.is_binary(),
        nr.is_integer(),
        canonical_str.clone().unwrap_or_default(),
        frac_str(&d),
        max_coeff.clone().unwrap_or_default()
    );
    let record = json!({
        "neuron": neuron_to_value(nr),
        "n": n,
        "binary": nr.is_binary(),
        "integer": nr.is_integer(),
        "canonical_bias": canonical_str,
        "delta": frac_str(&d),
        "spectrum_max": max_coeff,
        "top_coefficients": coeffs,
    });
    Ok(Outcome { human, csv, record, code: EXIT_OK })
}

fn build(nr: &Neuron, kind: &str) -> Result<(SolutionKind, Solution, Neuron)> {
    let kind: SolutionKind = kind.parse()?;
    let sol = kind.build(nr)?;
    let reference = kind.reference_neuron(nr)?;
    Ok((kind, sol, reference))
}

fn witness_text(w: &Witness) -> String {
    format!(
        "x = {}, erasures {:?}, errors {:?}, expected {}, observed {}",
        w.x,
        w.pattern.erasures(),
        w.pattern.errors(),
        w.expected,
        w.observed
    )
}

fn cmd_verify(nr: &Neuron, args: &VerifyArgs, budget: u64) -> Result<Outcome> {
    let (kind, sol, reference) = build(nr, &args.solution)?;
    let d = min_distance(&sol)?;
    let m = sol.len();
    let relative = &d / int(m as i64);
    let (target, verdict) = match (args.r, args.t, args.s) {
        (Some(r), _, _) => (format!("r = {r}"), is_r_robust(&sol, &reference, r, budget)?),
        (None, Some(t), Some(s)) => {
            (format!("(t, s) = ({t}, {s})"), is_ts_robust_with_budget(&sol, &reference, t, s, budget)?)
        }
        _ => return Err(Error::Parse("verify needs --r or both --t and --s".into())),
    };
    let criterion = match args.r {
        Some(r) if r > 0 => Some(theorem1_verdict(&sol, &reference, r)?),
        _ => None,
    };
    let robust = verdict.is_robust();
    let disagree = criterion.as_ref().is_some_and(|c| c.holds != robust);
    let mut human = String::new();
    writeln!(human, "solution: {kind} (m = {m})").ok();
    writeln!(human, "d = {}, d/m = {}", frac_str(&d), frac_str(&relative)).ok();
    writeln!(human, "target: {target}").ok();
    match &verdict {
        TsVerdict::Robust => writeln!(human, "oracle: robust").ok(),
        TsVerdict::NotRobust(w) => writeln!(human, "oracle: not robust\nwitness: {}", witness_text(w)).ok(),
    };
    if let Some(c) = &criterion {
        writeln!(
            human,
            "criterion: {} (agreement {}, positive distance {}, negative distance {}, literal reading {})",
            if c.holds { "holds" } else { "fails" },
            c.agreement,
            c.positive_distance,
            c.negative_distance,
            if c.literal { "holds" } else { "fails" }
        )
        .ok();
    }
    if disagree {
        eprintln!("warning: oracle and criterion disagree");
        writeln!(human, "DISAGREEMENT between oracle and criterion").ok();
    }
    let witness = verdict.witness().map(WitnessRecord::from);
    let record = json!({
        "solution": solution_to_value(&sol),
        "m": m,
        "d": frac_str(&d),
        "relative": frac_str(&relative),
        "r": args.r,
        "t": args.t,
        "s": args.s,
        "robust": robust,
        "witness": witness,
        "criterion": criterion.as_ref().map(|c| json!({
            "holds": c.holds,
            "literal": c.literal,
            "agreement": c.agreement,
            "positive_distance": c.positive_distance.to_string(),
            "negative_distance": c.negative_distance.to_string(),
        })),
        "disagreement": disagree,
    });
    let csv = format!(
        "kind,m,d,d_over_m,target,robust,criterion\n{kind},{m},{},{},{},{},{}\n",
        frac_str(&d),
        frac_str(&relative),
        target.replace(", ", ";"),
        robust,
        criterion.map_or(String::new(), |c| c.holds.to_string())
    );
    Ok(Outcome { human, csv, record, code: if robust { EXIT_OK } else { EXIT_NOT_ROBUST } })
}

fn compare_kinds(nr: &Neuron) -> Vec<SolutionKind> {
    let mut kinds = vec![SolutionKind::Identity, SolutionKind::Replication(2)];
    if nr.is_binary() {
        kinds.push(SolutionKind::Parity);
    }
    if nr.is_integer() {
        kinds.push(SolutionKind::GeneralizedParity);
    }
    kinds.push(SolutionKind::Fourier);
    kinds.push(SolutionKind::Constant(nr.dimension() + 1));
    kinds
}

fn cmd_distance(nr: &Neuron, kind: &str, compare: bool) -> Result<Outcome> {
    let kinds = if compare { compare_kinds(nr) } else { vec![kind.parse()?] };
    let mut rows = Vec::new();
    for k in kinds {
        let sol = match k.build(nr) {
            Ok(s) => s,
            Err(e) if compare => {
                eprintln!("skipping {k}: {e}");
                continue;
            }
            Err(e) => return Err(e),
        };
        let d = min_distance(&sol)?;
        let relative = &d / int(sol.len() as i64);
        rows.push((k, sol.len(), d, relative));
    }
    let mut human = String::new();
    let mut csv = String::from("kind,m,d,d_over_m\n");
    for (k, m, d, rel) in &rows {
        writeln!(human, "{k}: m = {m}, d = {}, d/m = {}", frac_str(d), frac_str(rel)).ok();
        writeln!(csv, "{k},{m},{},{}", frac_str(d), frac_str(rel)).ok();
    }
    let record = Value::Array(
        rows.iter()
            .map(|(k, m, d, rel)| json!({ "kind": k.to_string(), "m": m, "d": frac_str(d), "relative": frac_str(rel) }))
            .collect(),
    );
    Ok(Outcome { human, csv, record, code: EXIT_OK })
}

fn cmd_simulate(text: &str, args: &SimulateArgs, budget: u64) -> Result<Outcome> {
    let net = parse_network(text)?;
    let cnet = if args.uncoded { CodedNetwork::uncoded(&net)? } else { code_network(&net)? };
    let check = exhaustive_erasure_check(&cnet, 1, budget)?;
    let mut config = SimulationConfig::new(
        parse_rational(&args.erasure_prob)?,
        parse_rational(&args.error_prob)?,
        args.trials,
        args.seed,
    );
    config.locus = match args.locus {
        Locus::PerSynapse => FaultLocus::PerSynapse,
        Locus::SharedWire => FaultLocus::SharedWire,
    };
    config.faulty_gates = args.faulty_gates;
    let sim = monte_carlo_fault_sim(&cnet, &config)?;
    let mut human = String::new();
    writeln!(
        human,
        "network: {} inputs, layer widths {:?}",
        net.input_width(),
        net.layers().iter().map(Vec::len).collect::<Vec<_>>()
    )
    .ok();
    writeln!(human, "coding: {}", if args.uncoded { "none" } else { "parity" }).ok();
    writeln!(
        human,
        "exhaustive single-erasure check: {}/{} runs agree ({})",
        check.agreements,
        check.trials,
        if check.passed() { "pass" } else { "FAIL" }
    )
    .ok();
    if let Some(w) = &check.first_witness {
        let faults: Vec<String> = w
            .plan
            .layers
            .iter()
            .enumerate()
            .flat_map(|(i, l)| {
                l.neurons
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_empty())
                    .map(move |(j, p)| format!("layer {i} neuron {j} erasures {:?}", p.erasures()))
            })
            .collect();
        writeln!(
            human,
            "witness: x = {}, {}, expected {}, observed {}",
            w.x,
            faults.join("; "),
            w.expected,
            w.observed
        )
        .ok();
    }
    writeln!(
        human,
        "monte carlo ({}): {}/{} agree, accuracy {}",
        config.label(),
        sim.agreements,
        sim.trials,
        frac_str(&sim.accuracy())
    )
    .ok();
    writeln!(human, "guaranteed runs: {}/{} agree", sim.guaranteed_agreements, sim.guaranteed_trials).ok();
    for (i, h) in sim.histograms.iter().enumerate() {
        writeln!(human, "layer {i} faults per neuron: {h:?}").ok();
    }
    let csv = format!(
        "{}\nexhaustive;max-erasures=1,{},{},{:.6},{}\n{}\n",
        SimulationReport::CSV_HEADER,
        check.trials,
        check.agreements,
        check.agreements as f64 / check.trials.max(1) as f64,
        args.seed,
        sim.csv_row()
    );
    let record = json!({
        "exhaustive": {
            "trials": check.trials,
            "agreements": check.agreements,
            "passed": check.passed(),
            "accuracy": frac_str(&check.accuracy()),
        },
        "monte_carlo": {
            "config": config.label(),
            "seed": args.seed,
            "trials": sim.trials,
            "agreements": sim.agreements,
            "accuracy": frac_str(&sim.accuracy()),
            "guaranteed_trials": sim.guaranteed_trials,
            "guaranteed_agreements": sim.guaranteed_agreements,
            "histograms": sim.histograms,
        },
    });
    Ok(Outcome { human, csv, record, code: if check.passed() { EXIT_OK } else { EXIT_NOT_ROBUST } })
}
