mod args;
mod commands;
mod experiments;
mod table;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use sha2::{Digest, Sha256};

use args::{Cli, Family, Format};
use commands::Output;
use seqforge_core::{Error, Exec};
use table::Provenance;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Argument(_) | Error::Range { .. } | Error::Overflow(_) => 2,
        Error::Resource { .. } => 3,
        Error::NotFound(_) => 1,
    }
}

fn config_hash(family: &Family) -> String {
    let digest = Sha256::digest(format!("{family:?}").as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn dispatch(family: &Family, exec: Exec) -> Result<(Output, bool), Error> {
    Ok(match family {
        Family::Practical(cmd) => (commands::practical(cmd, exec)?, false),
        Family::Sumfree(cmd) => (commands::sumfree(cmd)?, false),
        Family::Powsum(cmd) => (commands::powsum(cmd)?, false),
        Family::Klm(cmd) => (commands::klm(cmd, exec)?, false),
        Family::Experiment(a) => {
            let r = experiments::run(a, exec)?;
            let partial = r.table.partial;
            (Output::Table(r.table), partial)
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let started = Instant::now();
    let workers = cli.global.workers.unwrap_or_else(|| {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    });
    let exec = Exec::from_workers(workers);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build()?;
    let result = pool.install(|| dispatch(&cli.family, exec));
    let (output, partial) = match result {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(exit_code_for(&e)));
        }
    };
    let text = match output {
        Output::Lines(lines) => lines.iter().map(|l| format!("{l}\n")).collect::<String>(),
        Output::Table(mut t) => {
            if !cli.global.no_provenance {
                t.provenance = Some(Provenance {
                    tool_version: env!("CARGO_PKG_VERSION").to_string(),
                    config_hash: config_hash(&cli.family),
                    wall_time_s: started.elapsed().as_secs_f64(),
                });
            }
            match cli.global.format {
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json(),
            }
        }
    };
    match &cli.global.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    if partial {
        eprintln!("error: resource cap reached; partial results written");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
