//! `circwin` — window coefficients, spectra, validation, taper metrics and
//! window-method FIR design from the command line.
//!
//! Exit codes: 0 success, 1 validation-suite failure, 2 usage error.

mod commands;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Direct-sum DTFT or quadrature continuous transform.
    Numeric,
    /// Closed form / kernel combination in the DTFT domain.
    Analytic,
    /// Truncated cosine-expansion series (vonmises).
    Series,
    /// Continuous-domain closed forms (vonmises, kaiser).
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    Dtft,
    Continuous,
}

#[derive(Debug, Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write the table to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FamilyOpts {
    /// Window family: rect, hann, hamming, cosine, kaiser or vonmises.
    #[arg(long)]
    family: String,
    /// Cosine-family parameter in [0, 1] (cosine only).
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Concentration parameter >= 0 (kaiser and vonmises only).
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
}

#[derive(Debug, Parser)]
#[command(name = "circwin", version, about = "Window tapers, their spectra and figures of merit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit window coefficients as an index,value table.
    Window {
        #[command(flatten)]
        family: FamilyOpts,
        /// Support length N (even, >= 2); the window has N+1 taps.
        #[arg(long)]
        n: u32,
        /// Shift the support to [0, N] instead of [-N/2, N/2].
        #[arg(long)]
        causal: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate a window spectrum on a frequency grid.
    Spectrum {
        #[command(flatten)]
        family: FamilyOpts,
        /// Support length N (even, >= 2).
        #[arg(long)]
        n: u32,
        /// Shift the support to [0, N] instead of [-N/2, N/2].
        #[arg(long)]
        causal: bool,
        /// Evaluation method.
        #[arg(long, value_enum)]
        method: Method,
        /// Frequency domain of the grid.
        #[arg(long, value_enum, default_value_t = DomainArg::Dtft)]
        domain: DomainArg,
        /// Grid size (default 4097 for dtft, 2049 for continuous).
        #[arg(long)]
        points: Option<usize>,
        /// Series truncation threshold.
        #[arg(long, default_value_t = 1e-14)]
        eps: f64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate the von Mises circular density on [-pi, pi].
    Dist {
        /// Mean direction, radians (wrapped into [-pi, pi]).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        mu: f64,
        /// Concentration parameter >= 0.
        #[arg(long, allow_negative_numbers = true)]
        kappa: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 401)]
        points: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Check every analytic spectrum against its numeric oracle.
    Validate {
        /// Treat informational (closed-form deviation) rows as failures.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Tabulate figures of merit for a list of windows.
    Compare {
        /// Window descriptions `family[:param]:N`, e.g. rect:64 kaiser:5:64.
        #[arg(long, num_args = 1.., required = true)]
        specs: Vec<String>,
        /// Spectral grid density multiplier (>= 16).
        #[arg(long, default_value_t = 64)]
        oversample: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Design a window-method low-pass FIR filter and measure its response.
    Fir {
        /// Cutoff frequency in rad/sample, 0 < wc < pi.
        #[arg(long, allow_negative_numbers = true)]
        wc: f64,
        /// Filter order N (even); the filter has N+1 taps.
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        family: FamilyOpts,
        /// Response measurement grid size (>= 1024).
        #[arg(long, default_value_t = 2048)]
        points: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn generated_by() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("circwin {} {}", env!("CARGO_PKG_VERSION"), args.join(" "))
}

fn run(cli: Cli) -> Result<(table::Table, OutputFormat, Option<PathBuf>, i32), String> {
    let stamp = generated_by();
    match cli.command {
        Command::Window {
            family,
            n,
            causal,
            out,
        } => {
            let spec = commands::build_spec(&family.family, family.alpha, family.beta, n, causal)?;
            let (t, code) = commands::cmd_window(stamp, &spec)?;
            Ok((t, out.format, out.output, code))
        }
        Command::Spectrum {
            family,
            n,
            causal,
            method,
            domain,
            points,
            eps,
            out,
        } => {
            let spec = commands::build_spec(&family.family, family.alpha, family.beta, n, causal)?;
            let (t, code) = commands::cmd_spectrum(stamp, &spec, method, domain, points, eps)?;
            Ok((t, out.format, out.output, code))
        }
        Command::Dist {
            mu,
            kappa,
            points,
            out,
        } => {
            let (t, code) = commands::cmd_dist(stamp, mu, kappa, points)?;
            Ok((t, out.format, out.output, code))
        }
        Command::Validate { strict, out } => {
            let (t, code) = commands::cmd_validate(stamp, strict)?;
            Ok((t, out.format, out.output, code))
        }
        Command::Compare {
            specs,
            oversample,
            out,
        } => {
            let (t, code) = commands::cmd_compare(stamp, &specs, oversample)?;
            Ok((t, out.format, out.output, code))
        }
        Command::Fir {
            wc,
            n,
            family,
            points,
            out,
        } => {
            let (t, code) = commands::cmd_fir(
                stamp,
                wc,
                n,
                &family.family,
                family.alpha,
                family.beta,
                points,
            )?;
            Ok((t, out.format, out.output, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((table, format, output, code)) => {
            let rendered = table.render(format);
            let result = match output {
                Some(path) => std::fs::write(&path, rendered)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(rendered.as_bytes())
                    .map_err(|e| format!("cannot write to stdout: {e}")),
            };
            if let Err(message) = result {
                eprintln!("error: {message}");
                return ExitCode::from(2);
            }
            ExitCode::from(code as u8)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
