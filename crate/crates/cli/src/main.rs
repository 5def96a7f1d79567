use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use supertensor::bounds::claims::published_claims;
use supertensor::bounds::{check_bound, family_sweep_with, SweepConfig, DEFAULT_CEILING};
use supertensor::gamma::{gamma_dim, gamma_of_abelianization};
use supertensor::superalg::{
    abelian, center, derived_subalgebra, heisenberg_even, heisenberg_odd, nilpotency, recognize_heisenberg_plus_abelian,
};
use supertensor::tensor::{exterior_square, multiplier_dim, square_ideal, tensor_square};
use supertensor::{Execution, Field, LieSuperAlgebra, SuperDim};
use supertensor_cli::lsa::{parse_algebra, render};
use supertensor_cli::report::Report;

#[derive(Parser)]
#[command(
    name = "supertensor",
    version,
    about = "Tensor squares and multipliers of nilpotent Lie superalgebras"
)]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Work over GF(p) instead of the file's field; 0 means the rationals
    #[arg(long, global = true, value_name = "p|0")]
    field: Option<u64>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    HeisenbergEven,
    HeisenbergOdd,
    Abelian,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in algebra as a .lsa file
    New {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Check the structure constants against the axioms
    Validate { file: PathBuf },
    /// Dimension, derived algebra, center, nilpotency class and Heisenberg tag
    Invariants { file: PathBuf },
    /// Dimension of L⊗L
    TensorSquare { file: PathBuf },
    /// Dimension of L∧L
    ExteriorSquare { file: PathBuf },
    /// Dimension of the square ideal L□L
    Square { file: PathBuf },
    /// Dimension of Γ(L/L²), or of Γ on a free module of the given dimension
    Gamma {
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["EVEN", "ODD"], conflicts_with = "file")]
        dim: Option<Vec<usize>>,
    },
    /// Schur multiplier dimension dim(L∧L) − dim L²
    MultiplierDim { file: PathBuf },
    /// Compare dim(L⊗L) with the upper bound
    BoundCheck { file: PathBuf },
    /// Check the bound on every H(m,n)⊕A and H_m⊕A up to a total dimension
    Sweep {
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        max_dim: usize,
    },
    /// Recompute the table of published values
    PaperReport,
}

/// Text for stdout (or `--out`) plus whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn pass(text: impl Into<String>) -> Self {
        Outcome {
            text: text.into(),
            ok: true,
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn field_override(cli: &Cli) -> Result<Option<Field>> {
    cli.field
        .map(|p| Field::from_characteristic(p).context("--field"))
        .transpose()
}

fn load(cli: &Cli, path: &Path) -> Result<LieSuperAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("L");
    let alg = parse_algebra(&text, stem).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    match field_override(cli)? {
        Some(f) => Ok(alg.change_field(f)?),
        None => Ok(alg),
    }
}

fn report(alg: &LieSuperAlgebra) -> Result<String> {
    json(&Report::build(alg, Execution::default())?)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::New { family, m, n } => {
            let alg = match family {
                Family::HeisenbergEven => heisenberg_even(*m, *n)?,
                Family::HeisenbergOdd => heisenberg_odd(*m)?,
                Family::Abelian => abelian(*m, *n),
            };
            let alg = match field_override(cli)? {
                Some(f) => alg.change_field(f)?,
                None => alg,
            };
            Ok(Outcome::pass(render(&alg)))
        }
        Command::Validate { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(json(&serde_json::json!({
                    "name": alg.name(),
                    "dim": alg.dim().pair(),
                    "field": alg.field().to_string(),
                    "valid": true,
                }))?));
            }
            Ok(Outcome::pass(format!(
                "valid: {} of dimension {} over {}",
                alg.name(),
                alg.dim(),
                alg.field()
            )))
        }
        Command::Invariants { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(report(&alg)?));
            }
            let class = nilpotency(&alg)
                .class
                .map_or_else(|| "not nilpotent".to_string(), |c| c.to_string());
            let tag = recognize_heisenberg_plus_abelian(&alg).map_or_else(|| "unclassified".into(), |t| t.to_string());
            Ok(Outcome::pass(format!(
                "name: {}\nfield: {}\ndim: {}\nderived: {}\ncenter: {}\nnilpotency class: {class}\nheisenberg: {tag}",
                alg.name(),
                alg.field(),
                alg.dim(),
                derived_subalgebra(&alg).dim(),
                center(&alg).dim(),
            )))
        }
        Command::TensorSquare { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(report(&alg)?));
            }
            let t = tensor_square(&alg)?;
            Ok(Outcome::pass(format!(
                "dim L⊗L = {}, abelian: {}",
                t.dim(),
                yes_no(t.is_abelian())
            )))
        }
        Command::ExteriorSquare { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(report(&alg)?));
            }
            let t = exterior_square(&alg)?;
            Ok(Outcome::pass(format!(
                "dim L∧L = {}, abelian: {}",
                t.dim(),
                yes_no(t.is_abelian())
            )))
        }
        Command::Square { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(report(&alg)?));
            }
            Ok(Outcome::pass(format!("dim L□L = {}", square_ideal(&alg)?.dim)))
        }
        Command::Gamma { file, dim } => {
            let d = match (file, dim) {
                (Some(path), None) => gamma_of_abelianization(&load(cli, path)?),
                (None, Some(d)) => gamma_dim(SuperDim::new(d[0], d[1])),
                _ => bail!("give either a file or --dim EVEN ODD"),
            };
            Ok(Outcome::pass(if cli.json { json(&d.pair())? } else { d.to_string() }))
        }
        Command::MultiplierDim { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(report(&alg)?));
            }
            Ok(Outcome::pass(multiplier_dim(&alg)?.to_string()))
        }
        Command::BoundCheck { file } => {
            let alg = load(cli, file)?;
            if cli.json {
                return Ok(Outcome::pass(report(&alg)?));
            }
            let r = check_bound(&alg)?;
            Ok(Outcome::pass(format!(
                "bound {}, actual {}, {}",
                r.bound,
                r.actual,
                r.verdict()
            )))
        }
        Command::Sweep { max_dim } => {
            let reports = family_sweep_with(
                *max_dim,
                SweepConfig {
                    ceiling: DEFAULT_CEILING,
                    exec: Execution::default(),
                },
            )?;
            if cli.json {
                return Ok(Outcome::pass(json(&reports)?));
            }
            let mut text = format!(
                "{:<20} {:>7} {:>6} {:>6} {:>6}  {}\n",
                "algebra", "dim", "bound", "actual", "slack", "tag"
            );
            for r in &reports {
                let dim = format!("({}|{})", r.k, r.l);
                text += &format!(
                    "{:<20} {:>7} {:>6} {:>6} {:>6}  {}\n",
                    r.name,
                    dim,
                    r.bound,
                    r.actual,
                    r.slack,
                    r.tag()
                );
            }
            let eq = reports.iter().filter(|r| r.equality).count();
            text += &format!("{} algebras, {eq} equality cases, all within the bound", reports.len());
            Ok(Outcome::pass(text))
        }
        Command::PaperReport => {
            let claims = published_claims(Execution::default());
            let ok = claims.iter().all(|c| c.pass);
            if cli.json {
                return Ok(Outcome {
                    text: json(&claims)?,
                    ok,
                });
            }
            let mut lines: Vec<String> = claims
                .iter()
                .map(|c| {
                    let mark = if c.pass { "PASS" } else { "FAIL" };
                    if c.detail.is_empty() {
                        format!("{mark}  {:>2}  {}", c.id, c.title)
                    } else {
                        format!("{mark}  {:>2}  {}: {}", c.id, c.title, c.detail)
                    }
                })
                .collect();
            let passed = claims.iter().filter(|c| c.pass).count();
            lines.push(format!("{passed} of {} claims reproduced", claims.len()));
            Ok(Outcome {
                text: lines.join("\n"),
                ok,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
