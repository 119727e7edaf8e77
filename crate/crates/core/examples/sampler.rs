// examples/sampler.rs
//
// Seeded connected samples with minimum degree at least 2.

use evenfactor::graph6::to_graph6;
use evenfactor::sampler::{Sampler, SamplerConfig};

fn main() {
    let mut sampler = Sampler::new(SamplerConfig::new(10, 42));
    for g in sampler.by_ref().take(5) {
        println!("{} m={} δ={}", to_graph6(&g).unwrap(), g.edge_count(), g.min_degree());
    }
    println!("{} draws for 5 accepted graphs", sampler.attempts());
}
