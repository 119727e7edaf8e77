// examples/certify.rs
//
// Theorem verdicts for the extremal graph, a perturbation of it and a
// graph that fails the hypotheses.

use evenfactor::theorem::{
    check_theorem, extremal_graph, threshold_rho_d, threshold_rho_q, ExtremalParams, OracleMode, TheoremId,
    VerdictConfig,
};
use evenfactor::Graph;

fn main() {
    let p = ExtremalParams::new(16, 3).unwrap();
    println!("ρ_Q threshold {:.10}", threshold_rho_q(p).unwrap().value);
    println!("ρ_D threshold {:.10}", threshold_rho_d(p).unwrap().value);

    let star = extremal_graph(p);
    // Moving one pendant edge changes the graph but keeps n and δ.
    let moved = star.without_edge(0, 15).unwrap().with_edge(15, 4).unwrap();
    let cases = [("G*", star), ("G* with a moved edge", moved), ("C16", Graph::cycle(16).unwrap())];

    let cfg = VerdictConfig { oracle: OracleMode::Always, ..VerdictConfig::default() };
    for (name, g) in &cases {
        for id in [TheoremId::T1, TheoremId::T2] {
            let v = check_theorem(g, id, &cfg);
            println!(
                "{name:22} theorem {} δ={} value={:?} margin={:?} -> {} (oracle {:?})",
                id.number(),
                v.delta,
                v.spectral_value,
                v.margin,
                v.conclusion.as_str(),
                v.oracle_status.map(|s| s.as_str())
            );
        }
    }
}
