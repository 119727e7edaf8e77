// examples/graph6_roundtrip.rs
//
// Decode a few graph6 strings, print basic invariants and re-encode them.

use evenfactor::graph6::{from_graph6, parse_corpus, to_graph6};

fn main() {
    for line in ["C~", "DQw", "E?Bw", "Gr`HOk"] {
        let g = from_graph6(line).expect("valid graph6");
        println!(
            "{line:8} n={} m={} δ={} connected={} -> {}",
            g.n(),
            g.edge_count(),
            g.min_degree(),
            g.is_connected(),
            to_graph6(&g).unwrap()
        );
    }

    // Corpora keep line numbers and report malformed lines instead of failing.
    let corpus = parse_corpus("A_\n\nB?\n!!bad\nBw\n");
    for entry in &corpus {
        match &entry.graph {
            Ok(g) => println!("line {}: {} vertices", entry.line_no, g.n()),
            Err(e) => println!("line {}: malformed ({e})", entry.line_no),
        }
    }
}
