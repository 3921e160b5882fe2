//! Run the full reproduction report on the small budget.

use cutlattice::atlas::Atlas;
use cutlattice::cli::{run_report, Budget, Config, ReportOptions};

pub fn main() {
    let config = Config { budget: Budget::Tiny, ..Config::default() };
    let report = run_report(&ReportOptions { config, atlas: Atlas::builtin(), expected: Default::default() }).unwrap();
    print!("{}", report.to_text());
    println!("exit code {}", report.exit_code());
}
