mod config;
mod report;
mod suites;

use clap::Parser;
use config::{Cli, Command, RunConfig};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, verify) = match &cli.command {
        Command::Verify(a) => (a, true),
        Command::EpsilonTable(a) => (a, false),
    };
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = if verify { run_verify(&config) } else { run_epsilon_table(&config, args.out_dir.is_some()) };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run_verify(config: &RunConfig) -> Result<ExitCode, String> {
    let mut records = Vec::new();
    let mut tables = Vec::new();
    for &suite in &config.suites {
        let out = suites::run(config, suite)?;
        let passed = out.records.iter().filter(|r| r.pass).count();
        println!("{:<18} {passed}/{} passed", suite.name(), out.records.len());
        records.extend(out.records);
        tables.extend(out.tables);
    }
    report::write_report(&config.out_dir, config.format, &records).map_err(|e| e.to_string())?;
    for t in &tables {
        report::write_table(&config.out_dir, t).map_err(|e| e.to_string())?;
    }
    let failures: Vec<_> = records.iter().filter(|r| !r.pass).collect();
    for r in &failures {
        eprintln!("FAIL {}/{}: expected {}, got {}", r.suite, r.case_id, r.expected, r.got);
    }
    println!("report written to {}", config.out_dir.display());
    Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run_epsilon_table(config: &RunConfig, to_file: bool) -> Result<ExitCode, String> {
    let table = suites::epsilon_table(config)?;
    let mut w = csv::Writer::from_writer(std::io::stdout());
    report::write_rows(&mut w, &table).map_err(|e| e.to_string())?;
    w.flush().map_err(|e| e.to_string())?;
    if to_file {
        report::write_table(&config.out_dir, &table).map_err(|e| e.to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}
