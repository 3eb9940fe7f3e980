//! Seeded sweep of the main theorem over the open unit strip.

use malmsten::verify::{sweep, Grid, Tally, DEFAULT_SEED};
use std::time::Instant;

fn main() {
    let seed = std::env::args().nth(1).map_or(DEFAULT_SEED, |s| s.parse().expect("seed"));
    let t0 = Instant::now();
    let reports = sweep("THM", &Grid::default_for("THM").unwrap(), seed).unwrap();
    for r in &reports {
        println!("{:<60} rel {:.1e}", r.params, r.rel_err.unwrap_or(f64::NAN));
    }
    let t = Tally::of(&reports);
    println!("{} pass, {} fail in {:.2} s", t.pass, t.fail, t0.elapsed().as_secs_f64());
}
