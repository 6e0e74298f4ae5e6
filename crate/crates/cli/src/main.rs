//! Command-line surface for the ideal-lattice toolkit.
//!
//! Exit codes separate mathematical outcomes so pipelines can branch on
//! them: 0 success, 2 invalid input, 3 infinite ideal lattice detected,
//! 4 enumeration budget exceeded (1 is reserved for failed verification).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lielat::distributive::enumerate_distributive;
use lielat::families::FamilySpec;
use lielat::ideals::{enumerate_ideals, Status};
use lielat::io;
use lielat::lattice::{lattice_of, FiniteLattice};
use lielat::lie::analyze;
use lielat::rat::format_rat;
use lielat::verify;

#[derive(Parser)]
#[command(
    name = "lielat",
    about = "Exact ideal lattices of finite-dimensional Lie algebras over the rationals",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an algebra file from a family spec (JSON).
    Build {
        spec: PathBuf,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural invariants of an algebra file.
    Analyze {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate the ideals of an algebra file.
    Ideals {
        algebra: PathBuf,
        /// Abort once more than this many ideals accumulate.
        #[arg(long, default_value_t = verify::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify a completed ideal set and emit its lattice file.
    Lattice {
        idealset: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hasse diagram of a lattice file, as DOT.
    Hasse {
        lattice: PathBuf,
        /// Annotate nodes with their labels instead of drawing points.
        #[arg(long)]
        labels: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All distributive lattices with exactly n nodes, as files dN.k.json
    /// plus a DOT sheet.
    EnumDistributive {
        n: usize,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Direct product of two lattice files.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Order-reversed lattice.
    Dual {
        lattice: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the full verification suite.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum CliError {
    Core(lielat::Error),
    Io(PathBuf, std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

impl From<lielat::Error> for CliError {
    fn from(e: lielat::Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn emit(output: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| CliError::Io(path.clone(), e))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Build { spec, output } => {
            let spec: FamilySpec = io::from_json_str(&read(&spec)?)?;
            for warning in spec.validate()? {
                eprintln!("warning: {warning}");
            }
            let algebra = spec.build()?;
            emit(output.as_ref(), &io::to_json_string(&io::algebra_to_file(&algebra)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Analyze { algebra, format } => {
            let file: io::AlgebraFile = io::from_json_str(&read(&algebra)?)?;
            let l = io::algebra_from_file(&file)?;
            let report = analyze(&l);
            match format {
                Format::Text => {
                    println!("dim: {}", l.dim());
                    println!(
                        "derived series dims: {}",
                        dims(&report.derived_series)
                    );
                    println!("lower central dims: {}", dims(&report.lower_central));
                    println!("center dim: {}", report.center.dim());
                    println!("radical dim: {}", report.rad.dim());
                    println!("jacobson radical dim: {}", report.jac.dim());
                    println!("solvable: {}", report.is_solvable);
                    println!("nilpotent: {}", report.is_nilpotent);
                    println!("semisimple: {}", report.is_semisimple);
                    println!("type: {}", report.general_type);
                }
                Format::Json => {
                    let json = serde_json::json!({
                        "dim": l.dim(),
                        "derived_series_dims":
                            report.derived_series.iter().map(|s| s.dim()).collect::<Vec<_>>(),
                        "lower_central_dims":
                            report.lower_central.iter().map(|s| s.dim()).collect::<Vec<_>>(),
                        "center_dim": report.center.dim(),
                        "radical_dim": report.rad.dim(),
                        "jacobson_dim": report.jac.dim(),
                        "solvable": report.is_solvable,
                        "nilpotent": report.is_nilpotent,
                        "semisimple": report.is_semisimple,
                        "type": report.general_type.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Ideals { algebra, budget, output } => {
            let file: io::AlgebraFile = io::from_json_str(&read(&algebra)?)?;
            let l = io::algebra_from_file(&file)?;
            let ids = enumerate_ideals(&l, budget)?;
            emit(output.as_ref(), &io::to_json_string(&io::idealset_to_file(l.dim(), &ids)))?;
            match &ids.status {
                Status::Complete => Ok(ExitCode::SUCCESS),
                Status::InfiniteDetected(w) => {
                    eprintln!(
                        "infinite ideal lattice: modulo a {}-dim ideal, two {}-dim abelian atoms \
                         carry a commuting isomorphism; the graphs of alpha*phi form an infinite \
                         pencil of ideals",
                        w.modulus.dim(),
                        w.p.dim() - w.modulus.dim(),
                    );
                    eprintln!(
                        "witness phi (atom coordinates): {}",
                        (0..w.phi.rows())
                            .map(|i| {
                                let row: Vec<String> =
                                    w.phi.row(i).iter().map(format_rat).collect();
                                format!("[{}]", row.join(", "))
                            })
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    Ok(ExitCode::from(3))
                }
                Status::BudgetExceeded => {
                    eprintln!("budget of {budget} ideals exceeded before the family closed");
                    Ok(ExitCode::from(4))
                }
            }
        }
        Cmd::Lattice { idealset, output } => {
            let file: io::IdealSetFile = io::from_json_str(&read(&idealset)?)?;
            let ids = io::idealset_from_file(&file)?;
            let lat = lattice_of(&ids)?;
            println!("{}", classification_line(&lat));
            emit(output.as_ref(), &io::to_json_string(&io::lattice_to_file(&lat)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hasse { lattice, labels, output } => {
            let file: io::LatticeFile = io::from_json_str(&read(&lattice)?)?;
            let lat = io::lattice_from_file(&file)?;
            emit(output.as_ref(), &io::hasse_dot(&lat, labels))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::EnumDistributive { n, out_dir } => {
            let lattices = enumerate_distributive(n)?;
            std::fs::create_dir_all(&out_dir).map_err(|e| CliError::Io(out_dir.clone(), e))?;
            let mut sheet = Vec::new();
            for (k, lat) in lattices.iter().enumerate() {
                let name = format!("d{}.{}", n, k + 1);
                let path = out_dir.join(format!("{name}.json"));
                emit(Some(&path), &io::to_json_string(&io::lattice_to_file(lat)))?;
                sheet.push((name, lat));
            }
            let sheet_path = out_dir.join(format!("d{n}_all.dot"));
            let items: Vec<(String, &FiniteLattice)> =
                sheet.iter().map(|(n, l)| (n.clone(), *l)).collect();
            emit(Some(&sheet_path), &io::hasse_dot_sheet(&items, false))?;
            println!("{} distributive lattices with {n} nodes", lattices.len());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Product { a, b, output } => {
            let fa: io::LatticeFile = io::from_json_str(&read(&a)?)?;
            let fb: io::LatticeFile = io::from_json_str(&read(&b)?)?;
            let prod = io::lattice_from_file(&fa)?.product(&io::lattice_from_file(&fb)?);
            emit(output.as_ref(), &io::to_json_string(&io::lattice_to_file(&prod)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dual { lattice, output } => {
            let file: io::LatticeFile = io::from_json_str(&read(&lattice)?)?;
            let dual = io::lattice_from_file(&file)?.dual();
            emit(output.as_ref(), &io::to_json_string(&io::lattice_to_file(&dual)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify => {
            let results = verify::run_all();
            for r in &results {
                println!("{}", r.line());
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                println!("all {} checks passed", results.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{failed} of {} checks failed", results.len());
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn dims(spaces: &[lielat::Subspace]) -> String {
    spaces.iter().map(|s| s.dim().to_string()).collect::<Vec<_>>().join(" ")
}

fn classification_line(lat: &FiniteLattice) -> String {
    format!(
        "size={} length={} atoms={} modular={} distributive={} complemented={} boolean={} dp={}",
        lat.size(),
        lat.length(),
        lat.atoms().len(),
        lat.is_modular(),
        lat.is_distributive(),
        lat.is_complemented(),
        lat.is_boolean(),
        lat.has_dp()
    )
}
