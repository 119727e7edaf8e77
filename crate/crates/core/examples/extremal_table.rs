// examples/extremal_table.rs
//
// The extremal-status table for δ ∈ {2, 3} and orders up to 24.

use evenfactor::harness::{extremal, ExtremalTableConfig};

fn main() {
    let cfg = ExtremalTableConfig { deltas: 2..=3, n_max: 24, ..ExtremalTableConfig::default() };
    let report = extremal(&cfg);
    print!("{}", report.to_table());
}
