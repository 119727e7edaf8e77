// examples/exhaustive_scan.rs
//
// Scans every connected graph on 6 vertices under both theorems and then a
// seeded sample on 10 vertices.

use evenfactor::graph6::parse_corpus;
use evenfactor::harness::{scan, CertifyConfig, ScanSource};
use evenfactor::theorem::TheoremId;

const N6: &str = include_str!("../data/connected_n6.g6");

fn main() {
    for id in [TheoremId::T1, TheoremId::T2] {
        let report = scan(6, ScanSource::Corpus(parse_corpus(N6)), &CertifyConfig::new(id));
        println!("n=6 theorem {}: {:?} violations={}", id.number(), report.counts, report.violations.len());
    }

    let source = ScanSource::Sampler { sample_size: 2000, seed: 7, p_range: (0.25, 0.95) };
    let report = scan(10, source, &CertifyConfig::new(TheoremId::T2));
    println!("n=10 sampled theorem 2: {:?} violations={}", report.counts, report.violations.len());
}
