use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use octoverify::suite::{run, Format, Suite, SuiteConfig};

/// Exact verification of octonion and Clifford-algebra identities.
#[derive(Debug, Parser)]
#[command(name = "octoverify", version)]
struct Args {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Size of each randomized smoke layer.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let args = Args::parse();
    let config = SuiteConfig {
        suite: args.suite,
        seed: args.seed,
        trials: args.trials as usize,
        format: args.format,
        out: args.out,
    };
    let report = run(&config);
    let rendered = report.render(config.format);
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("octoverify: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
