use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use legendre_ladder::electrostatics::{FieldPoint, SourceDescription, Units, DEFAULT_QUAD_POINTS};
use legendre_ladder_cli::figure::{FigureData, Panel, DEFAULT_SAMPLES};
use legendre_ladder_cli::verify::Suite;
use legendre_ladder_cli::{
    build, fields, render, verify, CliError, Format, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED,
};

/// Exact ladder construction of associated Legendre functions, with
/// verification suites, plot data and multipole potentials.
#[derive(Debug, Parser)]
#[command(name = "legendre-ladder", version)]
struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Use units with 1/(4 pi eps0) = mu0/(4 pi) = 1.
    #[arg(long, global = true)]
    dimensionless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one function from the nodeless member of its degree.
    Build {
        #[arg(long)]
        ell: u32,
        /// Number of interior zeros.
        #[arg(long, allow_hyphen_values = true)]
        nx: i64,
    },
    /// Run exact verification suites up to a degree.
    Verify {
        #[arg(long)]
        lmax: u32,
        /// Suite to run; repeat for several. Defaults to all suites.
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
    },
    /// Emit CSV plot data for one panel (oscillator, mode-0 .. mode-4).
    Figure {
        #[arg(long, value_parser = clap::value_parser!(Panel))]
        panel: Panel,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Evaluate the multipole expansion of a source file at a field point.
    Multipole {
        /// Text file with `charge q x y z` and `loop a I` records.
        source: PathBuf,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        lmax: u32,
        #[arg(long, default_value_t = DEFAULT_QUAD_POINTS)]
        quad_points: usize,
    },
    /// Potential of a charged conducting sphere in a uniform field along z.
    Sphere {
        /// Charge on the sphere.
        #[arg(long = "Q", allow_hyphen_values = true)]
        q: f64,
        /// Sphere radius.
        #[arg(long = "R")]
        radius: f64,
        /// Applied field strength.
        #[arg(long = "E0", allow_hyphen_values = true)]
        e0: f64,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        theta: f64,
    },
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long)]
    r: f64,
    #[arg(long)]
    theta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    phi: f64,
}

impl PointArgs {
    fn point(&self) -> Result<FieldPoint, CliError> {
        Ok(FieldPoint::new(self.r, self.theta, self.phi)?)
    }
}

fn execute(cli: Cli) -> Result<(String, u8), CliError> {
    let format = cli.format;
    let units = if cli.dimensionless {
        Units::Dimensionless
    } else {
        Units::Si
    };
    match cli.command {
        Command::Build { ell, nx } => {
            let out = build::run(ell, nx)?;
            Ok((render(format, &out, |o| o.text()), EXIT_OK))
        }
        Command::Verify { lmax, suites } => {
            let report = verify::run(lmax, &suites);
            eprintln!("verification finished in {:.3} s", report.duration.as_secs_f64());
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            Ok((render(format, &report, |r| r.text()), code))
        }
        Command::Figure { panel, samples } => {
            let data = FigureData::new(panel, samples).map_err(CliError::Usage)?;
            Ok((data.csv(), EXIT_OK))
        }
        Command::Multipole {
            source,
            point,
            lmax,
            quad_points,
        } => {
            let text = std::fs::read_to_string(&source).map_err(|e| CliError::Io {
                path: source.display().to_string(),
                source: e,
            })?;
            let sources = SourceDescription::parse(&text)?;
            let out = fields::multipole(&sources, &point.point()?, lmax, quad_points, units)?;
            Ok((render(format, &out, |o| o.text()), EXIT_OK))
        }
        Command::Sphere {
            q,
            radius,
            e0,
            r,
            theta,
        } => {
            let p = FieldPoint::new(r, theta, 0.0)?;
            let out = fields::sphere(q, radius, e0, &p, units)?;
            Ok((render(format, &out, |o| o.text()), EXIT_OK))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
