use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use multifold_cli::commands::{
    cmd_bound, cmd_compile, cmd_reduce, cmd_render, cmd_simulate, cmd_solve, Output,
};
use multifold_cli::config::{RunConfig, TOLERANCE_ENV};
use multifold_cli::{exit, CliError, CliResult};

/// Compile polynomials into fold scripts, simulate them, and solve the
/// alignment condition p(x) = 0.
#[derive(Debug, Parser)]
#[command(name = "multifold", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Solver tolerance as a decimal or fraction [default: 1e-12, or $MULTIFOLD_DEFAULT_TOL]
    #[arg(long, global = true, allow_hyphen_values = true)]
    tolerance: Option<String>,

    /// Sliding range bound; raised to the Cauchy bound if smaller
    #[arg(long, global = true, allow_hyphen_values = true)]
    bound: Option<String>,

    /// Output format: text, json, or svg
    #[arg(long, global = true)]
    format: Option<String>,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compile a polynomial into a fold script
    Compile {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Evaluate a script (JSON document path or polynomial) at sheet position x
    Simulate {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Find the real roots, and with --complex the complex roots
    Solve {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
        #[arg(long)]
        complex: bool,
    },
    /// Print the real-part and imaginary-part polynomials
    Reduce {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Print the root bound and the sheet extents
    Bound {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Render a script as SVG, by default at its first alignment
    Render {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
}

fn run(cli: Cli) -> CliResult<Output> {
    let env_tolerance = std::env::var(TOLERANCE_ENV).ok();
    let x = match &cli.command {
        Command::Simulate { x, .. } | Command::Render { x, .. } => x.as_deref(),
        _ => None,
    };
    let format = match (&cli.command, cli.format.as_deref()) {
        (Command::Render { .. }, None) => Some("svg"),
        (_, f) => f,
    };
    let config = RunConfig::from_flags(
        cli.tolerance.as_deref(),
        env_tolerance.as_deref(),
        cli.bound.as_deref(),
        format,
        x,
    )?;
    match &cli.command {
        Command::Compile { polynomial } => cmd_compile(polynomial, &config),
        Command::Simulate { input, .. } => cmd_simulate(input, &config),
        Command::Solve {
            polynomial,
            complex,
        } => cmd_solve(polynomial, *complex, &config),
        Command::Reduce { polynomial } => cmd_reduce(polynomial, &config),
        Command::Bound { polynomial } => cmd_bound(polynomial, &config),
        Command::Render { input, .. } => cmd_render(input, &config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out_path = cli.out.clone();
    let result = run(cli).and_then(|output| {
        for w in &output.warnings {
            eprintln!("{w}");
        }
        match &out_path {
            Some(path) => std::fs::write(path, &output.body)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{}", output.body);
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
