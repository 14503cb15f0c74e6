use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use edge_ideal::oracle::DEFAULT_ORACLE_CAP;
use edge_ideal_cli::analyze::{analyze_path, AnalyzeOptions, OracleMode, Status};
use edge_ideal_cli::generate::{file_name, generate, Family, Params};
use edge_ideal_cli::verify::{verify_dir, Outcome};
use edge_ideal_cli::{exit, text, CliError};

#[derive(Parser)]
#[command(
    name = "edge-ideal",
    version,
    about = "Betti numbers of edge ideals with linear resolutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph or hypergraph file.
    Analyze {
        path: PathBuf,
        /// Also compute graded Betti numbers by Hochster's formula.
        #[arg(long)]
        oracle: bool,
        /// Take the resolution to be M-linear without checking.
        #[arg(long, value_name = "M")]
        assert_linear: Option<usize>,
        /// Largest vertex count the oracle accepts (at most 14).
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_n: usize,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Human-readable output (the default).
        #[arg(long)]
        text: bool,
    },
    /// Write graphs from a named family.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Second part size for bipartite, uniformity for hypergraph families.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for random-graph and random-uniform.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Number of edges dropped by complete-uniform-minus.
        #[arg(long, default_value_t = 0)]
        removed: usize,
        /// Number of files, with consecutive seeds starting at --seed.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, conflicts_with = "out_dir")]
        out: Option<PathBuf>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Analyze every file in a directory and summarize.
    Verify {
        dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_n: usize,
        /// Skip the oracle cross-check.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long)]
        json: bool,
    },
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze {
            path,
            oracle,
            assert_linear,
            max_n,
            json,
            text: _,
        } => {
            let opts = AnalyzeOptions {
                oracle: if oracle {
                    OracleMode::Required
                } else {
                    OracleMode::Off
                },
                assert_linear,
                max_n,
            };
            let report = analyze_path(&path, &opts)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", text::render(&report));
            }
            Ok(match report.status {
                Status::Pass => exit::PASS,
                Status::Fail | Status::NotLinear => exit::VERIFICATION_FAILURE,
            })
        }
        Command::Generate {
            family,
            n,
            m,
            seed,
            p,
            removed,
            count,
            out,
            out_dir,
        } => {
            if count > 1 && out_dir.is_none() {
                return Err(
                    edge_ideal::Error::BadParams("--count above 1 needs --out-dir".into()).into(),
                );
            }
            for k in 0..count {
                let params = Params {
                    n,
                    m,
                    seed: seed + k,
                    p,
                    removed,
                };
                let contents = generate(family, &params)?;
                match (&out, &out_dir) {
                    (Some(path), _) => write_file(path, &contents)?,
                    (None, Some(dir)) => {
                        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
                            path: dir.clone(),
                            source,
                        })?;
                        write_file(&dir.join(file_name(family, &params)), &contents)?;
                    }
                    (None, None) => print!("{contents}"),
                }
            }
            Ok(exit::PASS)
        }
        Command::Verify {
            dir,
            max_n,
            no_oracle,
            json,
        } => {
            let opts = AnalyzeOptions {
                oracle: if no_oracle {
                    OracleMode::Off
                } else {
                    OracleMode::WithinCap
                },
                assert_linear: None,
                max_n,
            };
            let summary = verify_dir(&dir, &opts)?;
            if summary.entries.is_empty() {
                eprintln!("warning: no input files in {}", dir.display());
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&summary).expect("summary serializes")
                );
            } else {
                for e in &summary.entries {
                    let tag = match e.outcome {
                        Outcome::Pass => "PASS",
                        Outcome::Fail => "FAIL",
                        Outcome::NotLinear => "NOT-LINEAR",
                        Outcome::Error => "ERROR",
                    };
                    println!("{tag:<10} {}", e.file);
                    for msg in &e.messages {
                        println!("           {msg}");
                    }
                }
                println!(
                    "{} passed, {} failed, {} not linear, {} errors",
                    summary.passed, summary.failed, summary.not_linear, summary.errors
                );
            }
            Ok(if summary.all_pass() {
                exit::PASS
            } else {
                exit::VERIFICATION_FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
