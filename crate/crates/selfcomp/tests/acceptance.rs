//! One line per acceptance criterion; exits nonzero if any criterion fails.

use selfcomp::config::Config;
use selfcomp::suite::{run_suite, suite_exit_code};

fn main() {
    let outcomes = run_suite(&Config::default(), &[]);
    for o in &outcomes {
        println!("{o}");
    }
    assert_eq!(outcomes.len(), 8, "every criterion reports");
    std::process::exit(suite_exit_code(&outcomes));
}
