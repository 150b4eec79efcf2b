use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use germlab_core::derlog::VarietyGerm;
use germlab_core::invariants::{
    derived_invariants, milnor_hypersurface, milnor_of_germ, tjurina_hypersurface, tjurina_icis, verify_icis,
};
use germlab_core::{Budget, Error, Germ, Poly, Report, RingSpec};

mod output;
mod problem;

use output::Results;
use problem::{parse_problem, Problem, ProblemError, Variety};

#[derive(Parser, Debug)]
#[command(name = "germlab", version, about = "Invariants of isolated complete intersection singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Full invariant report with identity checks
    Invariants(Args),
    /// Generators of the module of tangent vector fields
    Theta(Args),
    /// Standard basis and colength of the variety ideal
    Std(Args),
    /// Milnor number of X, or of f when X is the ambient space
    Milnor(Args),
    /// Tjurina number of X, or of f when X is the ambient space
    Tjurina(Args),
    /// Evaluate every identity; exit 0 iff all hold
    Check(Args),
}

#[derive(clap::Args, Debug, Clone)]
struct Args {
    /// Problem file
    file: PathBuf,
    /// Seed for the generic linear form (overrides the file)
    #[arg(long)]
    seed: Option<u64>,
    /// Print only the machine-readable block
    #[arg(long)]
    machine: bool,
    /// Reduction-step cap for each standard basis
    #[arg(long, value_name = "N")]
    max_steps: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Invariants,
    Theta,
    Std,
    Milnor,
    Tjurina,
    Check,
}

enum Failure {
    Input(String),
    Precondition(String),
    Identities(Results, Vec<String>),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Identities(..) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidRing(_) => Failure::Input(e.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (kind, args) = match cli.command {
        Command::Invariants(a) => (Kind::Invariants, a),
        Command::Theta(a) => (Kind::Theta, a),
        Command::Std(a) => (Kind::Std, a),
        Command::Milnor(a) => (Kind::Milnor, a),
        Command::Tjurina(a) => (Kind::Tjurina, a),
        Command::Check(a) => (Kind::Check, a),
    };
    match run(kind, &args) {
        Ok(results) => {
            print_results(&results, args.machine);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let code = failure.code();
            match failure {
                Failure::Input(msg) => eprintln!("germlab: {}: {msg}", args.file.display()),
                Failure::Precondition(msg) => eprintln!("germlab: {msg}"),
                Failure::Identities(results, failed) => {
                    print_results(&results, args.machine);
                    for f in failed {
                        eprintln!("germlab: identity check failed: {f}");
                    }
                }
            }
            ExitCode::from(code)
        }
    }
}

fn print_results(results: &Results, machine_only: bool) {
    let machine = results.machine();
    if !machine_only {
        let parsed = Results::parse_machine(&machine).expect("machine block is well formed");
        print!("{}", parsed.human());
    }
    print!("{machine}");
}

fn run(kind: Kind, args: &Args) -> Result<Results, Failure> {
    let text = fs::read_to_string(&args.file).map_err(|e| Failure::Input(format!("cannot read file: {e}")))?;
    let problem = parse_problem(&text)?;
    let budget = args.max_steps.map(Budget::new).unwrap_or_default();
    let seed = args.seed.unwrap_or(problem.seed);
    let mut res = Results::default();
    res.push("command", kind_name(kind));
    match kind {
        Kind::Invariants | Kind::Check => {
            res.push("seed", seed);
            let x = germ(&problem, budget)?;
            let f = function(&problem)?;
            let mut report = derived_invariants(&x, f, seed)?;
            if let Some(key) = &problem.perturb {
                perturb(&mut report, key);
            }
            if kind == Kind::Invariants {
                push_report(&mut res, &report, &problem.ring);
            }
            push_checks(&mut res, &report);
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.passed())
                .map(|c| format!("{}: lhs = {}, rhs = {}", c.name, c.lhs, c.rhs))
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Identities(res, failed));
            }
        }
        Kind::Theta => {
            let x = germ(&problem, budget)?;
            let theta = &x.theta()?.theta;
            res.push("theta.count", theta.generators().len());
            for (i, g) in theta.generators().iter().enumerate() {
                res.push(format!("theta.{}", i + 1), g.display(&problem.ring));
            }
        }
        Kind::Std => {
            let x = germ(&problem, budget)?;
            let Some(std) = x.ideal_std() else {
                return Err(Failure::Precondition("std needs a variety given by equations, not `ambient`".into()));
            };
            res.push("std.count", std.len());
            for (i, g) in std.elements().enumerate() {
                res.push(format!("std.{}", i + 1), g.display(&problem.ring));
            }
            res.push("colength", std.colength());
            res.push("dimension", std.krull_dimension());
        }
        Kind::Milnor => match &problem.variety {
            Some(Variety::Ambient) | None => {
                let f = function(&problem)?;
                res.push("mu", milnor_hypersurface(f, budget)?);
            }
            Some(Variety::Equations(_)) => {
                let x = germ(&problem, budget)?;
                res.push("mu", milnor_of_germ(&x)?);
            }
        },
        Kind::Tjurina => match &problem.variety {
            Some(Variety::Ambient) | None => {
                let f = function(&problem)?;
                res.push("tau", tjurina_hypersurface(f, budget)?);
            }
            Some(Variety::Equations(_)) => {
                let x = germ(&problem, budget)?;
                verify_icis(x.generators(), x.nvars(), budget)?;
                res.push("tau", tjurina_icis(&x)?);
            }
        },
    }
    Ok(res)
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Invariants => "invariants",
        Kind::Theta => "theta",
        Kind::Std => "std",
        Kind::Milnor => "milnor",
        Kind::Tjurina => "tjurina",
        Kind::Check => "check",
    }
}

fn germ(problem: &Problem, budget: Budget) -> Result<Germ, Failure> {
    match &problem.variety {
        None => Err(Failure::Input("missing [variety] section".into())),
        Some(Variety::Ambient) => Ok(VarietyGerm::ambient(problem.ring.clone(), budget)),
        Some(Variety::Equations(eqs)) => {
            let gens = eqs.iter().map(|(_, p)| p.clone()).collect();
            Ok(VarietyGerm::new(problem.ring.clone(), gens, budget)?)
        }
    }
}

fn function(problem: &Problem) -> Result<&Poly, Failure> {
    problem.function.as_ref().ok_or_else(|| Failure::Input("missing [function] section".into()))
}

fn optional(v: Option<i64>, missing: &str) -> String {
    v.map_or_else(|| missing.to_string(), |v| v.to_string())
}

fn push_report(res: &mut Results, r: &Report, ring: &RingSpec) {
    let n = ring.nvars();
    let form = r.generic_form.iter().enumerate().fold(Poly::zero(n), |acc, (i, &c)| {
        acc.add(&Poly::variable(n, i).scale(&germlab_core::Rational::from_integer(c.into())))
    });
    res.push("d", r.d);
    res.push("k", r.k);
    res.push("mu_x", r.mu_x);
    res.push("tau_x", r.tau_x);
    res.push("mu_x_f", r.mu_x_f);
    res.push("mu_x_p", r.mu_x_p);
    res.push("generic_form", form.display(ring));
    res.push("mu_f", optional(r.mu_f, "infinite"));
    res.push("mu_br", optional(r.mu_br, "infinite"));
    res.push("mu_br_rel", r.mu_br_rel);
    res.push("tau_br", optional(r.tau_br, "infinite"));
    res.push("c1", optional(r.c1, "undefined"));
    res.push("c2", optional(r.c2, "undefined"));
    res.push("gsv", r.gsv);
    res.push("polar_md", r.polar_md);
    res.push("eu_x", r.eu_x);
    res.push("eu_fx", r.eu_fx);
    res.push("brasselet", r.brasselet);
    let weights = match &r.weights {
        Some(w) => w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        None => "none".to_string(),
    };
    res.push("weights", weights);
    res.push("consistent", r.is_consistent());
}

fn push_checks(res: &mut Results, r: &Report) {
    for c in &r.checks {
        res.push(format!("check.{}", c.name), if c.passed() { "pass" } else { "fail" });
        res.push(format!("check.{}.lhs", c.name), c.lhs);
        res.push(format!("check.{}.rhs", c.name), c.rhs);
    }
}

/// Fault injection: shifts one stored value by 1 and re-evaluates the
/// identities, so the failure path can be exercised end to end.
fn perturb(r: &mut Report, key: &str) {
    let bump = |v: &mut i64| *v += 1;
    let bump_opt = |v: &mut Option<i64>| {
        if let Some(v) = v {
            *v += 1;
        }
    };
    match key {
        "mu_f" => bump_opt(&mut r.mu_f),
        "mu_x" => bump(&mut r.mu_x),
        "tau_x" => bump(&mut r.tau_x),
        "mu_x_f" => bump(&mut r.mu_x_f),
        "mu_x_p" => bump(&mut r.mu_x_p),
        "mu_br" => bump_opt(&mut r.mu_br),
        "mu_br_rel" => bump(&mut r.mu_br_rel),
        "tau_br" => bump_opt(&mut r.tau_br),
        "gsv" => bump(&mut r.gsv),
        "eu_x" => bump(&mut r.eu_x),
        "eu_fx" => bump(&mut r.eu_fx),
        "brasselet" => bump(&mut r.brasselet),
        "polar_md" => bump(&mut r.polar_md),
        "c1" => bump_opt(&mut r.c1),
        "c2" => bump_opt(&mut r.c2),
        _ => unreachable!("perturb keys are validated when the file is read"),
    }
    r.recompute_checks();
}
