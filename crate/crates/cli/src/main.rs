use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hitcalc_core::harness::{
    parse_relation_file, verify_basis, verify_relation, verify_table_with, BasisFixture, BasisOutcome, RelationOutcome,
    RowStatus, TableFixture, TableOutcome, TierSelection,
};
use hitcalc_core::{Error, FilterVerdict, HitSolver, KamekoOutcome, Polynomial, SolverConfig};

#[derive(Parser)]
#[command(name = "hitcalc", version, about = "Hit problem calculator for F2[x1..xk] over the Steenrod algebra")]
#[command(after_help = "Exit codes: 0 all pass, 1 any failure, 2 usage or capacity error.\n\
                        HITCALC_COLUMN_CAP overrides the column limit.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohit dimension and admissible basis in one degree.
    Cohit {
        #[arg(long = "vars")]
        k: usize,
        #[arg(long)]
        degree: u64,
        /// Write the report as JSON to PATH (`-` for stdout).
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Also report the dimensions of the Q and R summands.
        #[arg(long = "q-r")]
        q_r: bool,
        /// Skip elimination for monomials the Wood and Singer filters prove hit.
        #[arg(long)]
        accelerated: bool,
    },
    /// Decide whether a homogeneous polynomial is hit. Exit 0 when hit, 1 when not.
    IsHit {
        #[arg(long = "vars")]
        k: usize,
        /// Sum of exponent tuples, e.g. "(2,1,1,1)+(1,2,1,1)".
        #[arg(long)]
        poly: String,
    },
    /// Check relation files against the square action.
    VerifyRelations {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Compare a dimension table with computed cohit dimensions in four variables.
    VerifyTable {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = TierArg::Required)]
        tier: TierArg,
    },
    /// Compare basis fixtures with computed admissible sets.
    VerifyBasis {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Check Kameko's reduction in one degree.
    Kameko {
        #[arg(long = "vars")]
        k: usize,
        #[arg(long)]
        degree: u64,
    },
    /// Wood and Singer verdicts for every monomial of a degree, next to the exact answer.
    Filters {
        #[arg(long = "vars")]
        k: usize,
        #[arg(long)]
        degree: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Required,
    All,
}

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            USAGE
        }
    };
    ExitCode::from(code)
}

fn solver(accelerated: bool) -> Result<HitSolver, Error> {
    let mut config = SolverConfig::from_env()?;
    config.accelerated = accelerated;
    Ok(HitSolver::new(config))
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Fixture { path: path.display().to_string(), message: e.to_string() })
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Cohit { k, degree, json, q_r, accelerated } => {
            let solver = solver(accelerated)?;
            let report = solver.cohit(k, degree)?;
            println!(
                "k={} degree={} monomials={} hit_rank={} dimension={}",
                report.k, report.degree, report.monomial_count, report.hit_rank, report.cohit_dimension
            );
            if q_r {
                let (q, r) = solver.qr_split(k, degree)?;
                println!("Q={q} R={r}");
            }
            match json.as_deref() {
                Some(p) if p == Path::new("-") => {
                    println!("{}", serde_json::to_string(&*report).expect("report serializes"));
                }
                Some(p) => {
                    let text = serde_json::to_string_pretty(&*report).expect("report serializes");
                    std::fs::write(p, text + "\n")
                        .map_err(|e| Error::Fixture { path: p.display().to_string(), message: e.to_string() })?;
                }
                None => {
                    for m in &report.admissible {
                        println!("{m}");
                    }
                }
            }
            Ok(PASS)
        }
        Command::IsHit { k, poly } => {
            let f: Polynomial = poly.parse()?;
            if let Some(a) = f.arity().filter(|&a| a != k) {
                return Err(Error::DegreeArityMismatch(format!("--vars {k} but the polynomial has {a} variables")));
            }
            if solver(false)?.is_hit(&f)? {
                println!("hit");
                Ok(PASS)
            } else {
                println!("not hit");
                Ok(FAIL)
            }
        }
        Command::VerifyRelations { paths } => {
            let (mut ok, mut failed) = (0, 0);
            for path in &paths {
                let entries = parse_relation_file(&read(path)?)
                    .map_err(|e| Error::Fixture { path: path.display().to_string(), message: e.to_string() })?;
                for e in entries {
                    let at = format!("{}:{}", path.display(), e.line);
                    for w in &e.warnings {
                        eprintln!("warning: {at}: {w}");
                    }
                    match verify_relation(&e.relation) {
                        RelationOutcome::Exact => {
                            ok += 1;
                            println!("ok    {at} exact");
                        }
                        RelationOutcome::HoldsModL => {
                            ok += 1;
                            println!("ok    {at} holds mod L");
                        }
                        RelationOutcome::Fails(residual) => {
                            failed += 1;
                            println!("FAIL  {at} residual {residual}");
                        }
                    }
                }
            }
            println!("{ok} verified, {failed} failed");
            Ok(if failed == 0 { PASS } else { FAIL })
        }
        Command::VerifyTable { path, tier } => {
            let fix = TableFixture::load(&path)?;
            let tier = match tier {
                TierArg::Required => TierSelection::Required,
                TierArg::All => TierSelection::All,
            };
            let solver = solver(false)?;
            let report = verify_table_with(&fix, tier, &solver, |row, status| {
                let label = format!("{} (s={:?} t={:?} u={:?})", row.family, row.s, row.t, row.u);
                match status {
                    RowStatus::Pass { computed } => println!("ok    n={} dim={computed} {label}", row.degree),
                    RowStatus::Fail { computed } => {
                        println!("FAIL  n={} expected {} computed {computed} {label}", row.degree, row.expected_dim)
                    }
                    RowStatus::Skipped { reason } => println!("skip  n={} {reason}", row.degree),
                }
            });
            println!("{} passed, {} failed, {} skipped", report.passed(), report.failed(), report.skipped());
            Ok(match report.outcome() {
                TableOutcome::AllPassed => PASS,
                TableOutcome::Failed => FAIL,
                TableOutcome::PassedWithSkips => USAGE,
            })
        }
        Command::VerifyBasis { paths } => {
            let solver = solver(false)?;
            let mut failed = 0;
            for path in &paths {
                let fix = BasisFixture::load(path)?;
                match verify_basis(&fix, &solver)? {
                    BasisOutcome::Match => {
                        println!(
                            "ok    {} k={} degree={} ({} monomials)",
                            path.display(),
                            fix.k,
                            fix.degree,
                            fix.expected.len()
                        )
                    }
                    BasisOutcome::Mismatch { missing, extra } => {
                        failed += 1;
                        println!("FAIL  {} k={} degree={}", path.display(), fix.k, fix.degree);
                        for m in missing {
                            println!("      not computed  {m}");
                        }
                        for m in extra {
                            println!("      not in file   {m}");
                        }
                    }
                }
            }
            Ok(if failed == 0 { PASS } else { FAIL })
        }
        Command::Kameko { k, degree } => match solver(false)?.kameko_check(k, degree)? {
            KamekoOutcome::NotApplicable { beta } => {
                println!("not applicable: beta({degree}) = {beta}, k = {k}");
                Ok(PASS)
            }
            KamekoOutcome::Pass { dimension, lower_degree } => {
                println!("pass: dimension {dimension} at degrees {degree} and {lower_degree}");
                Ok(PASS)
            }
            KamekoOutcome::Fail { upper, lower, image_rank, lower_degree } => {
                println!("fail: dimension {upper} at {degree}, {lower} at {lower_degree}, image rank {image_rank}");
                Ok(FAIL)
            }
        },
        Command::Filters { k, degree } => {
            let audit = solver(false)?.filter_audit(k, degree)?;
            let verdict = |v: FilterVerdict| match v {
                FilterVerdict::Hit => "hit",
                FilterVerdict::Unknown => "-",
            };
            let mut contradictions = 0;
            for a in &audit {
                let flag = if a.contradiction() {
                    contradictions += 1;
                    "  CONTRADICTION"
                } else {
                    ""
                };
                println!(
                    "{:<24} wood={:<3} singer={:<3} oracle={}{flag}",
                    a.monomial.to_string(),
                    verdict(a.wood),
                    verdict(a.singer),
                    if a.hit { "hit" } else { "not-hit" }
                );
            }
            let wood = audit.iter().filter(|a| a.wood == FilterVerdict::Hit).count();
            let singer = audit.iter().filter(|a| a.singer == FilterVerdict::Hit).count();
            let hit = audit.iter().filter(|a| a.hit).count();
            println!(
                "{} monomials: {hit} hit, wood flags {wood}, singer flags {singer}, {contradictions} contradictions",
                audit.len()
            );
            Ok(if contradictions == 0 { PASS } else { FAIL })
        }
    }
}
