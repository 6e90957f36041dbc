mod cli;
mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use commands::{Report, UsageError};
use output::{AngleUnit, Format};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<UsageError>().is_some() || e.downcast_ref::<kcbs_core::Error>().is_some();
            ExitCode::from(if usage { EXIT_USAGE } else { EXIT_CHECK_FAILED })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let unit = if cli.degrees { AngleUnit::Degrees } else { AngleUnit::Radians };
    let report = commands::run(&cli.command, unit)?;

    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    emit(&mut out, cli, &report, unit)?;
    out.flush()?;

    Ok(if report.failed { ExitCode::from(EXIT_CHECK_FAILED) } else { ExitCode::SUCCESS })
}

fn emit(out: &mut dyn Write, cli: &Cli, report: &Report, unit: AngleUnit) -> anyhow::Result<()> {
    match (cli.format, &cli.command) {
        (None, Command::Verify) => out.write_all(commands::verify_lines(&report.table).as_bytes())?,
        (format, _) => match format.unwrap_or(report.default_format) {
            Format::Csv => output::write_csv(out, &report.table, unit)?,
            Format::Json => output::write_json(out, &report.meta, &report.table, unit)?,
        },
    }
    Ok(())
}
