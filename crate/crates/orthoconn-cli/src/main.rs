//! `orthoconn` command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

mod cli;
mod discrete;
mod geometry;
mod io;
mod simplex;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command, Family};
use io::{Artifact, CliError, CliResult};

fn run(cli: &Cli) -> CliResult<()> {
    let (artifact, output): (Artifact, _) = match &cli.command {
        Command::Basis(a) => {
            if a.tau.is_some() && a.family != Family::Simplex {
                return Err(io::usage("--tau applies to --family simplex only"));
            }
            let art = match a.family {
                Family::Simplex => simplex::basis(a.d, a.n, &a.kappa, a.tau.as_deref())?,
                Family::Ball => {
                    let k = io::kappa(&a.kappa, a.d)?;
                    geometry::ball_basis(&orthoconn::ball_sphere::BallKappa { kappa: k }, a.n)?
                }
                Family::Sphere => geometry::sphere_basis(&io::kappa(&a.kappa, a.d)?, a.n)?,
            };
            (art, &a.output)
        }
        Command::Connect(a) => (simplex::connect(a)?, &a.output),
        Command::Racah(a) => (discrete::racah(a)?, &a.output),
        Command::Hahn(a) => (discrete::hahn(a)?, &a.output),
        Command::Kraw(a) => (discrete::kraw(a)?, &a.output),
        Command::Ball(a) => (geometry::ball(a)?, &a.output),
        Command::Sphere(a) => (geometry::sphere(a)?, &a.output),
        Command::Verify(a) => (verify::verify(a)?, &a.output),
    };
    io::emit(&artifact, output)?;
    match artifact.failure {
        Some(msg) => Err(CliError::Failed(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
