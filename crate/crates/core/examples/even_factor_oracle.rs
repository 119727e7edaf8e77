// examples/even_factor_oracle.rs
//
// Exact even-factor search and the Yan–Kano odd-component condition.

use evenfactor::oracle::{find_even_factor, is_even_factor, yan_kano};
use evenfactor::Graph;

fn main() {
    let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    let graphs = [
        ("C6", Graph::cycle(6).unwrap()),
        ("bowtie", bowtie),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)),
        ("K_{3,3}", Graph::complete_bipartite(3, 3)),
        ("K_{2,4}", Graph::complete_bipartite(2, 4)),
        ("P4", Graph::path(4)),
    ];

    for (name, g) in &graphs {
        let cert = find_even_factor(g);
        let yk = yan_kano(g);
        print!("{name:8} {:18} nodes={:<4}", cert.status.as_str(), cert.nodes_explored);
        match &yk.witness {
            Some(s) => print!(" Yan–Kano fails at S={:?}", s.members()),
            None => print!(" Yan–Kano holds"),
        }
        println!();
        if let Some(edges) = &cert.edges {
            assert!(is_even_factor(g, edges).unwrap());
            println!("         factor: {edges:?}");
        }
    }
}
