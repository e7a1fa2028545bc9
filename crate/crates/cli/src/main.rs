//! `meanspin` command line: JSON state documents in, JSON reports out.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors. Every
//! successful invocation writes exactly one JSON object to standard output;
//! every domain failure writes exactly one JSON error object
//! `{code, message}` instead.

mod doc;
mod report;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use meanspin::qcore::SigmaTriple;
use meanspin::{
    end_to_end_experiment, estimate_means, simulate_shots, superpose_checked, superpose_closed,
    superpose_oracle, Error,
};

use doc::{to_json, Kind, StateDocument};
use report::{ErrorReport, ExperimentOut, SimulateReport, SuperposeReport};

#[derive(Parser)]
#[command(
    name = "meanspin",
    version,
    about = "Qubit states as mean spin projections: convert representations, \
             superpose two pure states, and simulate projective measurements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a state document to another representation.
    Convert {
        /// Input document path, or '-' for standard input.
        input: PathBuf,
        /// Target representation.
        #[arg(long = "to", value_enum)]
        to: KindArg,
    },
    /// Superpose two pure states with coefficients encoded as a sigma triple.
    Superpose {
        /// First state document path, or '-' for standard input.
        a: PathBuf,
        /// Second state document path, or '-' for standard input.
        b: PathBuf,
        /// Sigma triple S1,S2,S3 encoding the coefficients (c1, c2).
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            value_name = "S1,S2,S3"
        )]
        sigma: Vec<f64>,
        /// Computation route.
        #[arg(long, value_enum, default_value_t = MethodArg::Checked)]
        method: MethodArg,
    },
    /// Simulate projective measurements of a pure state along x, y, z.
    Simulate {
        /// State document path, or '-' for standard input.
        state: PathBuf,
        /// Shots per axis.
        #[arg(long, default_value_t = 10_000)]
        shots: u64,
        /// Seed of the pinned generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the full pipeline: simulate both states, estimate, project,
    /// superpose, and compare against the noiseless result.
    Experiment {
        /// First state document path, or '-' for standard input.
        a: PathBuf,
        /// Second state document path, or '-' for standard input.
        b: PathBuf,
        /// Sigma triple S1,S2,S3 encoding the coefficients (c1, c2).
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            value_name = "S1,S2,S3"
        )]
        sigma: Vec<f64>,
        /// Shots per axis and state.
        #[arg(long, default_value_t = 10_000)]
        shots: u64,
        /// Seed of the pinned generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Means,
    Probabilities,
    Spinor,
    Density,
}

impl From<KindArg> for Kind {
    fn from(value: KindArg) -> Self {
        match value {
            KindArg::Means => Kind::Means,
            KindArg::Probabilities => Kind::Probabilities,
            KindArg::Spinor => Kind::Spinor,
            KindArg::Density => Kind::Density,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Oracle,
    Checked,
}

struct CliError {
    code: &'static str,
    message: String,
}

impl CliError {
    fn to_json(&self) -> String {
        to_json(&ErrorReport {
            code: self.code,
            message: self.message.clone(),
        })
    }
}

fn error_code(err: &Error) -> &'static str {
    match err {
        Error::NonFinite(_) => "NonFinite",
        Error::ConstraintViolation(_) => "ConstraintViolation",
        Error::InvalidDensity(_) => "InvalidDensity",
        Error::NotPure { .. } => "NotPure",
        Error::ZeroSpinor(_) => "ZeroSpinor",
        Error::NotNormalized(_) => "NotNormalized",
        Error::NonzeroC1Phase(_) => "NonzeroC1Phase",
        Error::PoleError { .. } => "PoleError",
        Error::DegenerateSuperposition(_) => "DegenerateSuperposition",
        Error::CrossCheckMismatch { .. } => "CrossCheckMismatch",
        Error::MissingAxis => "MissingAxis",
        Error::ShotCountMismatch => "ShotCountMismatch",
        Error::ZeroVector => "ZeroVector",
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        Self {
            code: error_code(&err),
            message: err.to_string(),
        }
    }
}

fn load_document(path: &PathBuf) -> Result<StateDocument, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|err| CliError {
                code: "Io",
                message: format!("failed to read standard input: {err}"),
            })?;
        buffer
    } else {
        fs::read_to_string(path).map_err(|err| CliError {
            code: "Io",
            message: format!("failed to read {}: {err}", path.display()),
        })?
    };
    serde_json::from_str(&text).map_err(|err| CliError {
        code: "InvalidDocument",
        message: format!("failed to parse state document: {err}"),
    })
}

fn parse_sigma(values: &[f64]) -> Result<SigmaTriple, CliError> {
    if values.len() != 3 {
        return Err(CliError {
            code: "InvalidDocument",
            message: format!(
                "--sigma needs exactly three comma-separated values, got {}",
                values.len()
            ),
        });
    }
    SigmaTriple::new(values[0], values[1], values[2]).map_err(CliError::from)
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Convert { input, to } => {
            let document = load_document(&input)?;
            let converted = document.convert(to.into())?;
            Ok(to_json(&converted))
        }
        Command::Superpose {
            a,
            b,
            sigma,
            method,
        } => {
            let a = load_document(&a)?.to_means()?;
            let b = load_document(&b)?.to_means()?;
            let sigma = parse_sigma(&sigma)?;
            let report = match method {
                MethodArg::Closed => {
                    SuperposeReport::from_result(&superpose_closed(&a, &b, &sigma)?, "closed_form")
                }
                MethodArg::Oracle => {
                    SuperposeReport::from_result(&superpose_oracle(&a, &b, &sigma)?, "oracle")
                }
                MethodArg::Checked => {
                    let checked = superpose_checked(&a, &b, &sigma)?;
                    let mut report = SuperposeReport::from_result(&checked.result, "checked");
                    report.cross_deviation =
                        Some(checked.means_deviation.max(checked.normalization_deviation));
                    report
                }
            };
            Ok(to_json(&report))
        }
        Command::Simulate { state, shots, seed } => {
            let means = load_document(&state)?.to_means()?;
            if !means.is_pure() {
                return Err(Error::NotPure {
                    norm_sqr: means.norm_sqr(),
                    tolerance: meanspin::qcore::PURITY_TOLERANCE,
                }
                .into());
            }
            let records = simulate_shots(&means, shots, seed)?;
            let estimate = estimate_means(&records)?;
            Ok(to_json(&SimulateReport::new(&records, &estimate, seed)))
        }
        Command::Experiment {
            a,
            b,
            sigma,
            shots,
            seed,
        } => {
            let a = load_document(&a)?.to_means()?;
            let b = load_document(&b)?.to_means()?;
            let sigma = parse_sigma(&sigma)?;
            let report = end_to_end_experiment(&a, &b, &sigma, shots, seed)?;
            Ok(to_json(&ExperimentOut::new(&report, shots, seed)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are not failures.
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            println!("{}", err.to_json());
            ExitCode::from(2)
        }
    }
}
