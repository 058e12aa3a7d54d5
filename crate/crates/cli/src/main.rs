//! `latpath`: exact lattice-path tables, single values, identity
//! verification, matrix decompositions, path enumeration and the errata
//! report.
//!
//! Exit codes: 0 success (including expected errata failures), 1 an
//! identity failed against its registry expectation, 2 usage error,
//! 3 enumeration budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use lattice_core::error::Error;
use lattice_core::family::{family_value, Family, ValueMethod};
use lattice_core::format::{
    self, enumeration_doc, errata_doc, report_json, report_text, reports_json, table_doc,
};
use lattice_core::identities::{self, Decomposition, Status};
use lattice_core::oracle::{Constraint, StepSet, DEFAULT_BUDGET};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "latpath",
    version,
    about = "Exact counting of rectangular, Catalan, Delannoy and Schroder lattice paths"
)]
struct Cli {
    /// Write primary output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyArg {
    Rect,
    Catalan,
    Delannoy,
    Schroder,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::Rect => Family::Rect,
            FamilyArg::Catalan => Family::Catalan,
            FamilyArg::Delannoy => Family::Delannoy,
            FamilyArg::Schroder => Family::Schroder,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Md,
}

#[derive(Copy, Clone, ValueEnum)]
enum MethodArg {
    Recurrence,
    Closed,
    Oracle,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Copy, Clone, ValueEnum)]
enum ErrataFormat {
    Json,
    Md,
}

#[derive(Copy, Clone, ValueEnum)]
enum MatrixArg {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "K", alias = "k")]
    K,
}

#[derive(Copy, Clone, ValueEnum)]
enum StepsArg {
    Hv,
    Hvd,
}

#[derive(Copy, Clone, ValueEnum)]
enum ConstraintArg {
    None,
    Subdiagonal,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family's number table.
    Table {
        #[arg(long)]
        family: FamilyArg,
        /// Rows (and columns, for the square families).
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
    /// Print a single count as an exact decimal.
    Value {
        #[arg(long)]
        family: FamilyArg,
        #[arg(short)]
        p: u32,
        #[arg(short)]
        q: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
    },
    /// Verify one identity (or all of them) over a bounded domain.
    Verify {
        /// Registry key, or "all".
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 20)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Rebuild a matrix from its factors and compare against the table.
    Decompose {
        #[arg(long)]
        matrix: MatrixArg,
        #[arg(long)]
        n: usize,
    },
    /// List paths explicitly and print the exact total count.
    Enumerate {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        q: u32,
        #[arg(long, value_enum)]
        steps: StepsArg,
        #[arg(long, value_enum)]
        constraint: ConstraintArg,
        /// Maximum number of paths to list.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Report the identities that fail as printed.
    Errata {
        #[arg(long, value_enum, default_value_t = ErrataFormat::Md)]
        format: ErrataFormat,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::Domain(_) | Error::UnknownIdentity(_) => 2,
            Error::BudgetExceeded { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("latpath: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Table {
            family,
            size,
            format,
        } => {
            if size == 0 {
                return Err(Failure::usage("size must be at least 1"));
            }
            let doc = table_doc(family.into(), size)?;
            let rendered = match format {
                TableFormat::Csv => doc.to_csv(),
                TableFormat::Json => {
                    let mut s = doc.to_json();
                    s.push('\n');
                    s
                }
                TableFormat::Md => doc.to_md(),
            };
            emit(&cli.out, &rendered)?;
            Ok(0)
        }
        Command::Value {
            family,
            p,
            q,
            method,
        } => {
            let method = match method {
                MethodArg::Recurrence => ValueMethod::Recurrence,
                MethodArg::Closed => ValueMethod::Closed,
                MethodArg::Oracle => ValueMethod::Oracle { budget: budget()? },
            };
            let value = family_value(family.into(), p, q, method)?;
            emit(&cli.out, &format!("{value}\n"))?;
            Ok(0)
        }
        Command::Verify {
            identity,
            bound,
            format,
        } => {
            if bound == 0 {
                return Err(Failure::usage("bound must be at least 1"));
            }
            let reports = if identity == "all" {
                identities::verify_all(bound)
            } else {
                vec![identities::verify(&identity, bound)?]
            };
            let rendered = match format {
                ReportFormat::Json => {
                    let mut s = if identity == "all" {
                        reports_json(&reports)
                    } else {
                        report_json(&reports[0])
                    };
                    s.push('\n');
                    s
                }
                ReportFormat::Text => {
                    let mut s = String::new();
                    for report in &reports {
                        s.push_str(&report_text(report));
                        s.push('\n');
                    }
                    s
                }
            };
            emit(&cli.out, &rendered)?;
            Ok(if identities::expectation_met(&reports) {
                0
            } else {
                1
            })
        }
        Command::Decompose { matrix, n } => {
            if n == 0 {
                return Err(Failure::usage("n must be at least 1"));
            }
            let which = match matrix {
                MatrixArg::Q => Decomposition::Q,
                MatrixArg::K => Decomposition::K,
            };
            let (_, table, product) = identities::decomposition_sides(which, n)?;
            let report = identities::verify_decomposition(which, n)?;
            let mut s = String::new();
            s.push_str("pascal factor =\n");
            s.push_str(&lattice_core::matrix::pascal_matrix(n)?.to_string());
            if matches!(which, Decomposition::K) {
                s.push_str("diagonal factor =\n");
                s.push_str(&lattice_core::matrix::diag_pow2(n)?.to_string());
            }
            s.push_str("reconstructed product =\n");
            s.push_str(&product.to_string());
            s.push_str("recurrence table =\n");
            s.push_str(&table.to_string());
            s.push_str(match report.status {
                Status::Verified => "Verified\n",
                Status::Refuted => "Refuted\n",
            });
            emit(&cli.out, &s)?;
            Ok(if report.status == Status::Verified { 0 } else { 1 })
        }
        Command::Enumerate {
            p,
            q,
            steps,
            constraint,
            limit,
        } => {
            if limit == 0 {
                return Err(Failure::usage("limit must be at least 1"));
            }
            let steps = match steps {
                StepsArg::Hv => StepSet::RightDown,
                StepsArg::Hvd => StepSet::RightDownDiagonal,
            };
            let constraint = match constraint {
                ConstraintArg::None => Constraint::Unrestricted,
                ConstraintArg::Subdiagonal => Constraint::Subdiagonal,
            };
            let doc = enumeration_doc(
                lattice_core::oracle::LatticePoint::new(p, q),
                steps,
                constraint,
                limit,
                budget()?,
            )?;
            let mut s = String::new();
            for path in &doc.paths {
                s.push_str(path);
                s.push('\n');
            }
            if doc.truncated {
                s.push_str(&format!("(listing truncated at {limit})\n"));
            }
            s.push_str(&format!("count = {}\n", doc.count));
            emit(&cli.out, &s)?;
            Ok(0)
        }
        Command::Errata { format } => {
            let doc = errata_doc(format::ERRATA_DEFAULT_BOUND);
            let rendered = match format {
                ErrataFormat::Json => {
                    let mut s = doc.to_json();
                    s.push('\n');
                    s
                }
                ErrataFormat::Md => doc.to_md(),
            };
            emit(&cli.out, &rendered)?;
            Ok(0)
        }
    }
}

/// DFS node-expansion budget, overridable via LATTICE_ORACLE_BUDGET.
fn budget() -> Result<u64, Failure> {
    match std::env::var("LATTICE_ORACLE_BUDGET") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "LATTICE_ORACLE_BUDGET must be a decimal integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
