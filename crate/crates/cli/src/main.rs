use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cartier_cli::commands::{
    cmd_anumber, cmd_bounds, cmd_certify, cmd_paper_example, cmd_scan, CliError,
};

/// Exact a-numbers of Artin-Schreier curves y^p - y = f(x), the generic
/// bounds L(d) / L_J(d), and symbolic certificates for genericity.
#[derive(Parser)]
#[command(name = "cartier", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute genus, a-number, L(d) and the filtration kernel table
    /// for one curve.
    Anumber {
        /// Odd prime characteristic.
        #[arg(long)]
        p: u64,
        /// Degree of f, prime to p.
        #[arg(long)]
        d: u64,
        /// Coefficients a_0..a_d. Prime field: `0,0,1`. Extension:
        /// per-coefficient vectors separated by `;`, e.g. `1,0;2,1;0,1`.
        #[arg(long)]
        coeffs: String,
        /// Extension degree of the coefficient field.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Seed for the deterministic modulus search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print L(d), L_J(d) and the index-set sizes for a parameter pair.
    Bounds {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
    },
    /// Build the greedy determinant certificate for the minors of M_J.
    Certify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        /// Certify a single J (2..p-1).
        #[arg(long, conflicts_with = "all_j")]
        j: Option<u64>,
        /// Certify every J in 2..p-1.
        #[arg(long)]
        all_j: bool,
        /// Also evaluate det(N) at random points: extension degree M of
        /// the evaluation field and the number of trials.
        #[arg(long, num_args = 2, value_names = ["M", "TRIALS"])]
        check: Option<Vec<u64>>,
        /// Seed for modulus search and random evaluations.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample random coefficient tuples over F_{p^m} for a range of
    /// degrees, recording a-numbers and witnesses.
    Scan {
        #[arg(long)]
        p: u64,
        /// Degree or inclusive range, e.g. `18` or `2..40`. Degrees
        /// divisible by p are skipped.
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Random coefficient tuples per degree.
        #[arg(long)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV output path; a JSON sidecar with witnesses is written
        /// next to it.
        #[arg(long)]
        out: PathBuf,
        /// Size of the worker pool for trials (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Re-derive the embedded worked example (p=5, d=18, J=3) and
    /// compare every table against the stored reference values.
    PaperExample,
}

fn emit<T: serde::Serialize>(json: bool, report: &T, human: String) {
    if json {
        println!("{}", serde_json::to_string(report).expect("serializable"));
    } else {
        print!("{human}");
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.cmd {
        Cmd::Anumber {
            p,
            d,
            coeffs,
            m,
            seed,
        } => {
            let report = cmd_anumber(p, d, &coeffs, m, seed)?;
            let human = report.render_human();
            emit(cli.json, &report, human);
            Ok(true)
        }
        Cmd::Bounds { p, d } => {
            let report = cmd_bounds(p, d)?;
            let human = report.render_human();
            emit(cli.json, &report, human);
            Ok(true)
        }
        Cmd::Certify {
            p,
            d,
            j,
            all_j,
            check,
            seed,
        } => {
            let js: Vec<u64> = match (j, all_j) {
                (Some(j), false) => vec![j],
                (None, true) => (2..p).collect(),
                (None, false) => {
                    return Err(CliError::Usage(
                        "pass either --j <J> or --all-j".to_string(),
                    ))
                }
                (Some(_), true) => unreachable!("clap conflicts_with"),
            };
            let check = check.map(|v| (v[0] as usize, v[1] as u32));
            let report = cmd_certify(p, d, &js, check, seed)?;
            let ok = report.all_succeeded();
            let human = report.render_human();
            emit(cli.json, &report, human);
            Ok(ok)
        }
        Cmd::Scan {
            p,
            d,
            m,
            trials,
            seed,
            out,
            threads,
        } => {
            let output = cmd_scan(p, &d, m, trials, seed, &out, threads)?;
            if cli.json {
                for record in &output.sidecar.records {
                    println!("{}", serde_json::to_string(record).expect("serializable"));
                }
            } else {
                print!("{}", output.sidecar.render_human());
                println!(
                    "wrote {} ({} rows) and {}",
                    output.csv_path.display(),
                    output.csv_rows,
                    output.json_path.display()
                );
            }
            Ok(true)
        }
        Cmd::PaperExample => {
            let report = cmd_paper_example();
            let ok = report.all_passed;
            let human = report.render_human();
            emit(cli.json, &report, human);
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
