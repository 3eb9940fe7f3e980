//! Check a golden fixture file (bundled set by default).

use malmsten::cli::DEFAULT_FIXTURES;
use malmsten::verify::check_fixtures;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| DEFAULT_FIXTURES.into());
    let check = check_fixtures(&path).unwrap_or_else(|e| panic!("{e}"));
    for m in &check.mismatches {
        println!("mismatch {}: {}", m.key, m.detail);
    }
    println!("{path}: {} checked, {} mismatches", check.checked, check.mismatches.len());
}
