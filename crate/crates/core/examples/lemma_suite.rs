// examples/lemma_suite.rs
//
// A reduced grid of the supporting inequality checks with per-check minimum margins.

use evenfactor::lemmas::{lemma_suite, LemmaGrid};

fn main() {
    let grid = LemmaGrid { deltas: 2..=4, max_n: 40, random_samples: 200, ..LemmaGrid::default() };
    let report = lemma_suite(&grid);
    for s in report.summary() {
        println!("{s:?}");
    }
    let failures: Vec<_> = report.failures().collect();
    println!("{} failures", failures.len());
    for f in failures.iter().take(5) {
        println!("  {} at {}: margin {:e}", f.lemma.label(), f.point, f.margin);
    }
}
