use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use membound::cli::{
    bound_report, devices_csv, estimate_report, scan_csv, verify_lemma, DeviceScales, EntropyUnits,
    SpectrumSource, EXIT_USAGE, EXIT_VIOLATION,
};
use membound::scenario::Scenario;

#[derive(Parser)]
#[command(
    name = "membound",
    version,
    about = "Energy x surface bounds for quantum memories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Units {
    Bits,
    Nats,
}

impl From<Units> for EntropyUnits {
    fn from(u: Units) -> Self {
        match u {
            Units::Bits => EntropyUnits::Bits,
            Units::Nats => EntropyUnits::Nats,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound on <E><r^2> for S units of information.
    Bound {
        #[arg(long)]
        entropy: f64,
        /// Degrees of freedom.
        #[arg(long)]
        dof: f64,
        /// Particle mass in kg.
        #[arg(long)]
        mass: f64,
        #[arg(long, value_enum, default_value = "nats")]
        units: Units,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Direct vs steepest-descent ln Z_l over a log-spaced beta grid (CSV).
    Scan {
        #[arg(long, default_value_t = 10)]
        dof: u64,
        #[arg(long, default_value_t = 0.05)]
        beta_min: f64,
        #[arg(long, default_value_t = 0.5)]
        beta_max: f64,
        #[arg(long, default_value_t = 40)]
        steps: usize,
        #[arg(long, default_value_t = 1600)]
        max_terms: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Random-search challenge of Boltzmann minimality at fixed entropy.
    VerifyLemma {
        /// Spectrum file, one `energy[,degeneracy]` per line.
        #[arg(long, conflicts_with_all = ["hopt_dof", "cap"])]
        spectrum_file: Option<PathBuf>,
        /// Use the truncated optimal-Hamiltonian spectrum in this dimension.
        #[arg(long, requires = "cap")]
        hopt_dof: Option<u64>,
        /// Energy cap for the truncated optimal-Hamiltonian spectrum.
        #[arg(long)]
        cap: Option<f64>,
        #[arg(long, conflicts_with = "entropy_per_dof")]
        entropy: Option<f64>,
        /// Entropy per degree of freedom (optimal-Hamiltonian source only).
        #[arg(long, requires = "hopt_dof")]
        entropy_per_dof: Option<f64>,
        #[arg(long, value_enum, default_value = "nats")]
        units: Units,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Energy, surface and product for the textbook devices (CSV, nats).
    Devices {
        #[arg(long, value_delimiter = ',', default_value = "0.5,1.0,1.5,2.0")]
        entropies: Vec<f64>,
        /// Particle mass in kg (default: electron).
        #[arg(long)]
        mass: Option<f64>,
        /// Box width in m.
        #[arg(long)]
        box_width: Option<f64>,
        /// Oscillator angular frequency in 1/s.
        #[arg(long)]
        omega: Option<f64>,
        /// Coulomb coupling e^2/(4 pi eps0) in J m.
        #[arg(long)]
        coulomb: Option<f64>,
        #[arg(long)]
        level_cap: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Storage capacity of a macroscopic device from a scenario file.
    Estimate {
        /// `key=value` scenario; the bundled default is used when omitted.
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<membound::Error> for Failure {
    fn from(e: membound::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Bound {
            entropy,
            dof,
            mass,
            units,
            output,
        } => emit(
            &bound_report(entropy, dof, mass, units.into())?,
            output.as_deref(),
        ),
        Command::Scan {
            dof,
            beta_min,
            beta_max,
            steps,
            max_terms,
            output,
        } => emit(
            &scan_csv(dof, beta_min, beta_max, steps, max_terms)?,
            output.as_deref(),
        ),
        Command::VerifyLemma {
            spectrum_file,
            hopt_dof,
            cap,
            entropy,
            entropy_per_dof,
            units,
            trials,
            seed,
            output,
        } => {
            let source = match (spectrum_file, hopt_dof, cap) {
                (Some(path), None, None) => SpectrumSource::Text(read(&path)?),
                (None, Some(d), Some(cap)) => SpectrumSource::OptimalHamiltonian { d, cap },
                _ => {
                    return Err(Failure::Usage(
                        "give either --spectrum-file or --hopt-dof with --cap".into(),
                    ))
                }
            };
            let entropy = match (entropy, entropy_per_dof, hopt_dof) {
                (Some(s), None, _) => s,
                (None, Some(x), Some(d)) => x * d as f64,
                _ => return Err(Failure::Usage("give --entropy or --entropy-per-dof".into())),
            };
            let outcome = verify_lemma(&source, entropy, units.into(), trials, seed)?;
            emit(&outcome.report, output.as_deref())?;
            if outcome.passed {
                Ok(())
            } else {
                Err(Failure::Violation(
                    "a challenger beat the Boltzmann distribution".into(),
                ))
            }
        }
        Command::Devices {
            entropies,
            mass,
            box_width,
            omega,
            coulomb,
            level_cap,
            output,
        } => {
            let d = DeviceScales::default();
            let scales = DeviceScales {
                mass: mass.unwrap_or(d.mass),
                box_width: box_width.unwrap_or(d.box_width),
                omega: omega.unwrap_or(d.omega),
                coulomb: coulomb.unwrap_or(d.coulomb),
                level_cap: level_cap.unwrap_or(d.level_cap),
            };
            emit(&devices_csv(&entropies, &scales)?, output.as_deref())
        }
        Command::Estimate { scenario, output } => {
            let scenario = match scenario {
                Some(p) => Scenario::parse(&read(&p)?)?,
                None => Scenario::default_scenario(),
            };
            emit(&estimate_report(&scenario)?, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(EXIT_VIOLATION as u8)
        }
    }
}
