use std::process::ExitCode;

use clap::Parser;

use delcode::cli::Format;
use delcode::{run, Cli, Exit, Report};

fn finish(exit: Exit) -> ExitCode {
    ExitCode::from(exit.code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("delcode: {e}");
            if cli.format == Format::Structured {
                let mut report = Report::new("error", serde_json::json!({}));
                report.results.push(serde_json::json!({"error": e.to_string()}));
                report.status = delcode::Status::Failed;
                if let Ok(text) = report.to_json() {
                    println!("{text}");
                }
            }
            return finish(e.exit());
        }
    };
    for line in &rendered.diagnostics {
        eprintln!("{line}");
    }
    match cli.format {
        Format::Plain => {
            for line in &rendered.plain {
                println!("{line}");
            }
        }
        Format::Structured => match rendered.report.to_json() {
            Ok(text) => println!("{text}"),
            Err(e) => {
                eprintln!("delcode: {e}");
                return finish(Exit::Failure);
            }
        },
    }
    finish(rendered.exit())
}
