// examples/spectra.rs
//
// Signless Laplacian and distance spectral radii of small named graphs.

use evenfactor::spectral::{distance_matrix, largest_eigenvalue, rho_d, rho_q, signless_laplacian, wiener_index};
use evenfactor::Graph;

fn main() {
    let graphs = [
        ("K5", Graph::complete(5)),
        ("C6", Graph::cycle(6).unwrap()),
        ("P5", Graph::path(5)),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)),
        ("K2 ∨ (K3 ∪ K1)", Graph::complete(2).join(&Graph::complete(3).disjoint_union(&Graph::complete(1)))),
    ];

    println!("{:16} {:>10} {:>10} {:>6} {:>10}", "graph", "ρ_Q", "ρ_D", "W", "2W/n");
    for (name, g) in &graphs {
        let q = rho_q(g).unwrap();
        let d = rho_d(g).unwrap();
        let w = wiener_index(g).unwrap();
        println!("{name:16} {q:>10.6} {d:>10.6} {w:>6} {:>10.6}", 2.0 * w as f64 / g.n() as f64);
    }

    // The eigensolver also returns the Perron vector and its residual.
    let g = Graph::cycle(5).unwrap();
    let q = largest_eigenvalue(&signless_laplacian(&g)).unwrap();
    let d = largest_eigenvalue(&distance_matrix(&g).unwrap()).unwrap();
    println!("\nC5: ρ_Q = {:.12} after {} iterations (residual {:.1e})", q.value, q.iterations, q.residual);
    println!("C5: ρ_D = {:.12}, Perron vector {:?}", d.value, d.vector);
}
