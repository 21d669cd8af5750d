use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tourney::enumerate::Mode;
use tourney::lab::{self, AxiomId, SweepConfig};
use tourney::teq::{self, TeqMode};
use tourney::{fixtures, game, profile, qualified, solve, Error, PreferenceProfile, SolutionId, Tournament};

#[derive(Parser, Debug)]
#[command(name = "tourney", version, about = "Tournament solutions and a verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute tournament solutions for a matrix file.
    Solve(SolveArgs),
    /// Run property checks over enumerated or sampled tournaments.
    Sweep(SweepArgs),
    /// Build the majority tournament of a preference profile.
    Mcgarvey(InputArgs),
    /// Pick one Banks-set element with a seeded random chain.
    BanksElement(BanksElementArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Matrix file, `-` for stdin, or a built-in name (f1, f2, f3,
    /// f3-substituted, three-cycle, transitive-triple, cycle-with-loser).
    #[arg(long, short)]
    input: String,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated solutions.
    #[arg(long, short, value_delimiter = ',', default_value = "cnl,co,uc,ucinf,ba,tc,mc,me,bp,teq")]
    solutions: Vec<SolutionId>,
    /// Also print the exact equilibrium strategy behind BP.
    #[arg(long)]
    strategy: bool,
    #[arg(long, default_value = "seeded")]
    teq_mode: TeqMode,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Order range such as `1..5`, `1..=5` or `6`.
    #[arg(long, value_parser = parse_orders)]
    orders: RangeInclusive<usize>,
    #[arg(long, default_value = "labeled")]
    mode: Mode,
    /// Comma-separated checks or groups (inclusions, conjectures, mc-unique,
    /// me-unique, teq-unique, oracles, equilibrium, condorcet, hard, all).
    #[arg(long, default_value = "hard")]
    checks: String,
    /// Random tournaments per order instead of exhaustive enumeration.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Exhaustive axiom checks such as `tc:mon`, run per order in range.
    #[arg(long, value_delimiter = ',')]
    axiom: Vec<String>,
    /// Append the strong-stability demonstration.
    #[arg(long)]
    demo: bool,
    /// Append wall-clock lines.
    #[arg(long)]
    timings: bool,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BanksElementArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected an order range like 1..5, found {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Exit status plus diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrderTooLargeForExact { .. } => 3,
            Error::EvenElectorate(_) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read_text(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))
}

fn builtin(name: &str) -> Option<Tournament> {
    Some(match name.to_ascii_lowercase().as_str() {
        "f1" => fixtures::f1(),
        "f2" => fixtures::f2(),
        "f3" => fixtures::f3(),
        "f3-substituted" => fixtures::f3_with_cycle_components(),
        "three-cycle" => fixtures::three_cycle(),
        "transitive-triple" => fixtures::transitive_triple(),
        "cycle-with-loser" => fixtures::cycle_with_loser(),
        _ => return None,
    })
}

fn load_tournament(input: &str) -> Result<Tournament, Failure> {
    if input != "-" && !Path::new(input).exists() {
        if let Some(t) = builtin(input) {
            return Ok(t);
        }
    }
    let text = read_text(input)?;
    Tournament::parse(&text).map_err(|e| usage(format!("{input}: {e}")))
}

fn cmd_solve(args: &SolveArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let t = load_tournament(&args.input.input)?;
    for &id in &args.solutions {
        let set = match id {
            SolutionId::Teq => teq::teq(&t, args.teq_mode)?,
            _ => solve(id, &t)?,
        };
        writeln!(out, "{id}: {}", set.display_one_based()).map_err(io_failure)?;
        if id == SolutionId::Bp && args.strategy {
            writeln!(out, "BP strategy: {}", game::equilibrium(&t)).map_err(io_failure)?;
        }
    }
    Ok(0)
}

fn io_failure(e: io::Error) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

/// Axioms the harness treats as proved for a solution; violations of these
/// fail the sweep, any other axiom check is informational.
fn axiom_is_hard(s: SolutionId, a: AxiomId) -> bool {
    matches!(s, SolutionId::Tc | SolutionId::Mc)
        && matches!(a, AxiomId::Mon | AxiomId::Iua | AxiomId::Wsp | AxiomId::Ssp)
}

fn parse_axiom(arg: &str) -> Result<(SolutionId, AxiomId), Failure> {
    let (s, a) = arg
        .split_once(':')
        .ok_or_else(|| usage(format!("expected SOLUTION:AXIOM, found {arg:?}")))?;
    Ok((s.parse().map_err(usage)?, a.parse().map_err(usage)?))
}

fn cmd_sweep(args: &SweepArgs) -> Result<u8, Failure> {
    let checks = lab::parse_checks(&args.checks).map_err(usage)?;
    let axioms = args
        .axiom
        .iter()
        .map(|s| parse_axiom(s))
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = SweepConfig {
        orders: args.orders.clone(),
        mode: args.mode,
        checks,
        sample: args.sample,
        seed: args.seed,
        jobs: args.jobs,
    };
    let report = lab::sweep(&cfg)?;
    let mut text = if args.timings { report.render() } else { report.body() };
    let mut failed = report.hard_violations() > 0;
    for (s, a) in axioms {
        for n in args.orders.clone() {
            let tally = lab::axiom_sweep(s, a, n)?;
            text.push_str(&format!(
                "axiom:{s}:{a} n={n} checked={} viol={}\n",
                tally.checked, tally.violations
            ));
            if let Some(w) = tally.first {
                text.push_str(&w.render());
                failed |= axiom_is_hard(s, a);
            }
        }
    }
    if args.demo {
        let demo = lab::strong_stability_demo();
        text.push_str(&demo.to_string());
        failed |= !demo.confirmed();
    }
    match &args.output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => io::stdout().write_all(text.as_bytes()).map_err(io_failure)?,
    }
    Ok(u8::from(failed))
}

fn cmd_mcgarvey(args: &InputArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let text = read_text(&args.input)?;
    let p = PreferenceProfile::parse(&text).map_err(|e| Failure {
        message: format!("{}: {e}", args.input),
        ..Failure::from(e)
    })?;
    let t = profile::mcgarvey(&p)?;
    out.write_all(t.to_matrix_string().as_bytes()).map_err(io_failure)?;
    Ok(0)
}

fn cmd_banks_element(args: &BanksElementArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let t = load_tournament(&args.input.input)?;
    let a = qualified::banks_element(&t, args.seed);
    writeln!(out, "BA element: {}", a + 1).map_err(io_failure)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a, &mut out),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Mcgarvey(a) => cmd_mcgarvey(a, &mut out),
        Command::BanksElement(a) => cmd_banks_element(a, &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
