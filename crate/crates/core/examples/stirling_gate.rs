//! Run the theorem sweep under each reading of the Stirling coefficients.

use malmsten::verify::{stirling_gate, DEFAULT_SEED};

fn main() {
    let gate = stirling_gate(DEFAULT_SEED);
    for (kind, t) in &gate.tallies {
        println!("{kind:?}: {} pass, {} fail", t.pass, t.fail);
    }
    println!("winner {:?}, manifest {:?}, holds: {}", gate.winner, gate.manifest, gate.holds());
}
