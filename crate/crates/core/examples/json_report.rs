//! Runs a suite in-process and prints the JSON report the CLI would emit.
//!
//! Usage: cargo run --example json_report -- [SUITE] [SEED]

use octoverify::suite::{run, Format, Suite, SuiteConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let suite: Suite = args
        .next()
        .map(|s| s.parse().expect("known suite"))
        .unwrap_or(Suite::Table);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let config = SuiteConfig {
        suite,
        seed,
        trials: 32,
        format: Format::Json,
        out: None,
    };
    let report = run(&config);
    print!("{}", report.render(config.format));
    eprintln!("exit code would be {}", report.exit_code());
}
