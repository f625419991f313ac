//! Command-line front end: weight sets, fusion tables, traces, modular
//! matrices, the invariant suite, and tensor decompositions, serialized as
//! JSON (or CSV for tables).  Pure JSON/CSV on stdout; diagnostics on
//! stderr.
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 invalid type / level
//! / weight, 3 enumeration cap exceeded, 4 integrality violation, 5
//! invariant-suite failure.

use clap::{Args, Parser, Subcommand};
use fusionring::affine::AffineType;
use fusionring::characters::CharacterTable;
use fusionring::config::Config;
use fusionring::error::Error;
use fusionring::fusion::{
    kac_walton_product, verlinde_trace, AlcoveFolder, FusionTable,
};
use fusionring::level::LevelData;
use fusionring::modular::{check_transpose, verlinde_diagonalization_residual, SMatrix};
use fusionring::report::{
    check_doc, decompose_doc, fuse_csv, fuse_doc, smatrix_doc, verify_fuse,
    verlinde_doc, weights_doc, CheckOutcome,
};
use fusionring::root_system::{RootSystem, Weight};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fusionring",
    about = "Fusion rings of affine Kac-Moody types: weights, coefficients, traces, modular matrices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Level-truncated weights and exact evaluation phases
    Weights(Job),
    /// Full table of fusion coefficients, with verification summary
    Fuse(Job),
    /// Integer trace of genus g with weight insertions
    Verlinde(Job),
    /// Modular matrix against the adjacent type
    Smatrix(Job),
    /// Run the invariant suite for one type and level
    Check(Job),
    /// Tensor decomposition of two weights with their alcove folds
    Decompose(Job),
}

#[derive(Args)]
struct Job {
    /// Affine type, e.g. A1~1, C2~1, A4~2, E6~2, D4~3 (also accepts A_4^(2))
    #[arg(value_name = "TYPE")]
    type_name: String,
    /// Level k (nonnegative integer)
    #[arg(short = 'k', long = "level", allow_negative_numbers = true)]
    level: i64,
    /// Genus for the trace command
    #[arg(long, default_value_t = 0)]
    genus: i64,
    /// Semicolon-separated weights in omega-coordinates, e.g. "1,0;0,1"
    #[arg(long)]
    weights: Option<String>,
    /// Output format: json or csv (csv only for `fuse`)
    #[arg(long, default_value = "json")]
    format: String,
    /// Override the integrality tolerance
    #[arg(long = "tol-int")]
    tol_int: Option<f64>,
    /// Check Kac-Walton agreement on every pair instead of a sample
    #[arg(long)]
    exhaustive: bool,
    /// Worker threads for parallel fills (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

struct Stack {
    rs: RootSystem,
    ld: LevelData,
    cfg: Config,
}

impl Job {
    fn config(&self) -> Config {
        let mut cfg = Config::default();
        if let Some(t) = self.tol_int {
            cfg.tol_integrality = t;
        }
        cfg
    }

    fn stack(&self) -> Result<Stack, Error> {
        let t = AffineType::parse(&self.type_name)?;
        let rs = RootSystem::new(t)?;
        let cfg = self.config();
        let ld = LevelData::new(&rs, self.level, &cfg)?;
        Ok(Stack { rs, ld, cfg })
    }

    fn parse_weights(&self) -> Result<Vec<Weight>, Error> {
        let text = match &self.weights {
            None => return Ok(Vec::new()),
            Some(t) => t,
        };
        text.split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::ParseWeight(s.trim().to_string()))
                    })
                    .collect()
            })
            .collect()
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ParseType(_)
        | Error::UnsupportedType(_, _)
        | Error::ParseWeight(_)
        | Error::NotDominant(_)
        | Error::NotInLevel(_, _)
        | Error::IndexOutOfRange { .. }
        | Error::LengthMismatch(_)
        | Error::InvalidInput(_) => 2,
        Error::WeylCapExceeded { .. } | Error::GroupCapExceeded { .. } => 3,
        Error::IntegralityViolation(_, _, _, _, _) => 4,
        _ => 1,
    }
}

fn emit(doc: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("serializable document"));
}

fn require_json(job: &Job) -> Result<(), Error> {
    match job.format.as_str() {
        "json" => Ok(()),
        "csv" => Err(Error::InvalidInput(
            "csv output is only defined for `fuse`".into(),
        )),
        other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
    }
}

fn cmd_weights(job: &Job) -> Result<(), Error> {
    require_json(job)?;
    let s = job.stack()?;
    emit(&weights_doc(&s.rs, &s.ld));
    Ok(())
}

fn cmd_fuse(job: &Job) -> Result<(), Error> {
    let s = job.stack()?;
    let ct = CharacterTable::new(&s.rs, &s.ld, &s.cfg)?;
    let table = FusionTable::new(&s.rs, &s.ld, &ct, &s.cfg)?;
    match job.format.as_str() {
        "csv" => print!("{}", fuse_csv(&s.ld, &table)),
        "json" => {
            let v = verify_fuse(&s.rs, &s.ld, &ct, &table, &s.cfg, job.exhaustive)?;
            if !v.kac_walton_agrees {
                return Err(Error::Inconsistency(
                    "spectral table disagrees with the Kac-Walton computation".into(),
                ));
            }
            emit(&fuse_doc(&s.rs, &s.ld, &table, &v));
        }
        other => {
            return Err(Error::InvalidInput(format!("unknown format {other:?}")));
        }
    }
    Ok(())
}

fn cmd_verlinde(job: &Job) -> Result<(), Error> {
    require_json(job)?;
    let s = job.stack()?;
    let ct = CharacterTable::new(&s.rs, &s.ld, &s.cfg)?;
    let insertions = job.parse_weights()?;
    let (value, raw, residual) =
        verlinde_trace(&s.rs, &s.ld, &ct, job.genus, &insertions)?;
    if residual > s.cfg.tol_integrality {
        return Err(Error::IntegralityViolation(
            0,
            0,
            0,
            format!("{raw}"),
            residual,
        ));
    }
    emit(&verlinde_doc(&s.rs, &s.ld, job.genus, &insertions, value, raw, residual));
    Ok(())
}

fn cmd_smatrix(job: &Job) -> Result<(), Error> {
    require_json(job)?;
    let s = job.stack()?;
    let ct = CharacterTable::new(&s.rs, &s.ld, &s.cfg)?;
    let sm = SMatrix::new(&s.rs, &s.ld, &ct, &s.cfg)?;
    emit(&smatrix_doc(&sm, &s.ld.weights, s.cfg.tol_unitarity));
    Ok(())
}

fn cmd_decompose(job: &Job) -> Result<(), Error> {
    require_json(job)?;
    let s = job.stack()?;
    let ct = CharacterTable::new(&s.rs, &s.ld, &s.cfg)?;
    let ws = job.parse_weights()?;
    if ws.len() != 2 {
        return Err(Error::InvalidInput(
            "decompose needs exactly two weights, e.g. --weights \"1,0;0,1\"".into(),
        ));
    }
    s.ld.index_of(&s.rs, &ws[0])?;
    s.ld.index_of(&s.rs, &ws[1])?;
    let tensor = s.rs.tensor_decompose(&ws[0], &ws[1], s.cfg.group_cap)?;
    let mut folder = AlcoveFolder::new(&s.rs, &s.ld, &ct, &s.cfg);
    let mut constituents = Vec::with_capacity(tensor.len());
    for (w, mult) in tensor {
        let fold = folder.fold(&w)?;
        constituents.push((w, mult, fold));
    }
    let fused = kac_walton_product(&s.rs, &mut folder, &s.cfg, &ws[0], &ws[1])?;
    emit(&decompose_doc(&s.rs, &s.ld, &ws[0], &ws[1], &constituents, &fused));
    Ok(())
}

/// The invariant suite: construction identities, orthonormality, fusion
/// integrality and ring axioms, Kac-Walton agreement, and the modular
/// matrix checks.  Prints the report and fails (exit 5) if any check fails.
fn cmd_check(job: &Job) -> Result<bool, Error> {
    require_json(job)?;
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut record = |name: &'static str, result: Result<String, Error>| -> bool {
        match result {
            Ok(detail) => {
                checks.push(CheckOutcome { name, passed: true, detail });
                true
            }
            Err(e) => {
                checks.push(CheckOutcome { name, passed: false, detail: e.to_string() });
                false
            }
        }
    };

    let t = AffineType::parse(&job.type_name)?;
    let cfg = job.config();
    let built: Result<(Stack, CharacterTable), Error> = (|| {
        let s = job.stack()?;
        let ct = CharacterTable::new(&s.rs, &s.ld, &s.cfg)?;
        Ok((s, ct))
    })();
    match built {
        Err(e) => {
            record("construction", Err(e));
        }
        Ok((s, ct)) => {
            record(
                "construction",
                Ok(format!(
                    "{} level {}: {} weights, torus order {}",
                    s.rs.data.affine_type,
                    s.ld.level,
                    s.ld.weights.len(),
                    s.ld.norm_const
                )),
            );
            record(
                "alcove_count",
                if s.ld.points.len() == s.ld.weights.len() {
                    Ok(format!("{} evaluation points", s.ld.points.len()))
                } else {
                    Err(Error::Inconsistency(format!(
                        "{} points for {} weights",
                        s.ld.points.len(),
                        s.ld.weights.len()
                    )))
                },
            );
            let gram = ct.gram_residual();
            record(
                "orthonormality",
                if gram < cfg.tol_orthonormality {
                    Ok(format!("Gram residual {gram:.3e}"))
                } else {
                    Err(Error::Inconsistency(format!("Gram residual {gram:.3e}")))
                },
            );
            record(
                "measure_positive",
                if ct.delta.iter().all(|&d| d > 0.0) {
                    Ok("weight of every evaluation point is positive".into())
                } else {
                    Err(Error::Inconsistency("nonpositive evaluation weight".into()))
                },
            );
            let table = FusionTable::new(&s.rs, &s.ld, &ct, &cfg);
            match table {
                Err(e) => {
                    record("fusion_table", Err(e));
                }
                Ok(table) => {
                    record(
                        "fusion_table",
                        Ok(format!(
                            "integrality residual {:.3e}; unit, commutativity, \
                             full symmetry and associativity verified",
                            table.max_residual
                        )),
                    );
                    record(
                        "kac_walton",
                        verify_fuse(&s.rs, &s.ld, &ct, &table, &cfg, job.exhaustive)
                            .and_then(|v| {
                                if v.kac_walton_agrees {
                                    Ok(format!(
                                        "{} pairs agree ({})",
                                        v.kac_walton_pairs, v.kac_walton_mode
                                    ))
                                } else {
                                    Err(Error::Inconsistency(
                                        "Kac-Walton disagreement".into(),
                                    ))
                                }
                            }),
                    );
                    match SMatrix::new(&s.rs, &s.ld, &ct, &cfg) {
                        Err(e) => {
                            record("modular_matrix", Err(e));
                        }
                        Ok(sm) => {
                            let u = sm.unitarity_residual();
                            record(
                                "unitarity",
                                if u < cfg.tol_unitarity {
                                    Ok(format!("residual {u:.3e}"))
                                } else {
                                    Err(Error::Inconsistency(format!("residual {u:.3e}")))
                                },
                            );
                            record(
                                "transpose",
                                check_transpose(t, job.level, &cfg)
                                    .map(|d| format!("deviation {d:.3e}")),
                            );
                            record(
                                "diagonalization",
                                verlinde_diagonalization_residual(&s.ld, &table, &sm)
                                    .and_then(|r| {
                                        if r < 1e-6 {
                                            Ok(format!("residual {r:.3e}"))
                                        } else {
                                            Err(Error::Inconsistency(format!(
                                                "residual {r:.3e}"
                                            )))
                                        }
                                    }),
                            );
                        }
                    }
                }
            }
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    emit(&check_doc(&job.type_name, job.level, &checks));
    Ok(passed)
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let job = match &cli.command {
        Command::Weights(j)
        | Command::Fuse(j)
        | Command::Verlinde(j)
        | Command::Smatrix(j)
        | Command::Check(j)
        | Command::Decompose(j) => j,
    };
    if let Some(n) = job.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Weights(j) => cmd_weights(j).map(|()| true),
        Command::Fuse(j) => cmd_fuse(j).map(|()| true),
        Command::Verlinde(j) => cmd_verlinde(j).map(|()| true),
        Command::Smatrix(j) => cmd_smatrix(j).map(|()| true),
        Command::Decompose(j) => cmd_decompose(j).map(|()| true),
        Command::Check(j) => cmd_check(j),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("invariant suite failed");
            ExitCode::from(5)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
