//! Verify one entry at its default point and at a user-chosen point.
//!
//! `cargo run --example verify_entry -- THM m=0.3+0.4I k=2`

use malmsten::identities::entry;
use malmsten::verify::{to_table, verify_entry};

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "E4".into());
    let mut p = entry(&id).expect("unknown id").defaults;
    for a in args {
        p.assign(&a).expect("bad parameter");
    }
    let report = verify_entry(&id, &p, None).unwrap();
    print!("{}", to_table(std::slice::from_ref(&report)));
    for c in &report.checks {
        println!("  {:<40} {}  abs {:.2e}", c.route, c.value, c.abs_err);
    }
}
