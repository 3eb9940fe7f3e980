//! Print every catalog entry with its class and active parameters.

use malmsten::identities::catalog_list;

fn main() {
    for e in catalog_list() {
        let star = if e.experimental { "*" } else { "" };
        println!("{:<4}{star:<2}{:<15}{}", e.id, e.klass.name(), e.active_params.join(","));
    }
}
