//! Exact even-factor search and the Yan–Kano odd-component condition.
//!
//! An even factor is a spanning subgraph in which every vertex has nonzero
//! even degree. Bridges never lie on a cycle, so they are discarded first;
//! the remaining graph splits into 2-edge-connected pieces that are searched
//! independently by depth-first backtracking with parity pruning.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Outcome of [`find_even_factor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SearchStatus {
    Found,
    NoneExists,
    SearchCapExceeded,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Found => "Found",
            SearchStatus::NoneExists => "NoneExists",
            SearchStatus::SearchCapExceeded => "SearchCapExceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenFactorCertificate {
    pub status: SearchStatus,
    /// Edges of the factor (`u < v`, sorted) when `status` is `Found`.
    pub edges: Option<Vec<(usize, usize)>>,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of backtracking nodes before giving up.
    pub node_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { node_cap: 100_000_000 }
    }
}

/// True iff every vertex of `g` has even degree at least 2 in `edges`.
///
/// Fails when an edge is absent from `g` or listed twice.
pub fn is_even_factor(g: &Graph, edges: &[(usize, usize)]) -> Result<bool> {
    let mut degree = vec![0usize; g.n()];
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u, v));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    Ok(degree.iter().all(|&d| d >= 2 && d % 2 == 0))
}

pub fn find_even_factor(g: &Graph) -> EvenFactorCertificate {
    find_even_factor_with(g, &OracleConfig::default())
}

pub fn find_even_factor_with(g: &Graph, cfg: &OracleConfig) -> EvenFactorCertificate {
    let none = |nodes| EvenFactorCertificate { status: SearchStatus::NoneExists, edges: None, nodes_explored: nodes };
    if g.n() == 0 {
        return EvenFactorCertificate { status: SearchStatus::Found, edges: Some(Vec::new()), nodes_explored: 0 };
    }
    if g.min_degree() < 2 {
        return none(0);
    }
    let bridges = g.bridges();
    let mut core = g.clone();
    for &(u, v) in &bridges {
        core = core.without_edge(u, v).expect("bridge is an edge");
    }
    if core.min_degree() < 2 {
        return none(0);
    }

    let mut factor = Vec::new();
    let mut nodes = 0u64;
    for piece in core.components(&VertexSet::empty()).expect("empty set is valid").components {
        let edges: Vec<(usize, usize)> = piece
            .iter()
            .flat_map(|u| core.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        let mut search = Search::new(&core, piece.members(), edges, cfg.node_cap.saturating_sub(nodes));
        let outcome = search.run();
        nodes += search.nodes;
        match outcome {
            Some(true) => factor.extend(search.chosen_edges()),
            Some(false) => return none(nodes),
            None => {
                return EvenFactorCertificate {
                    status: SearchStatus::SearchCapExceeded,
                    edges: None,
                    nodes_explored: nodes,
                }
            }
        }
    }
    factor.sort_unstable();
    EvenFactorCertificate { status: SearchStatus::Found, edges: Some(factor), nodes_explored: nodes }
}

struct Search {
    edges: Vec<(usize, usize)>,
    chosen: Vec<bool>,
    degree: Vec<usize>,
    open: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl Search {
    /// Edges are ordered by visiting vertices from lowest to highest degree
    /// and emitting each vertex's edges not yet emitted.
    fn new(g: &Graph, vertices: &[usize], edges: Vec<(usize, usize)>, cap: u64) -> Self {
        let mut by_degree = vertices.to_vec();
        by_degree.sort_by_key(|&v| (g.degree(v), v));
        let mut ordered = Vec::with_capacity(edges.len());
        let mut done = std::collections::HashSet::with_capacity(edges.len());
        for &v in &by_degree {
            for &w in g.neighbors(v) {
                let e = (v.min(w), v.max(w));
                if done.insert(e) {
                    ordered.push(e);
                }
            }
        }
        debug_assert_eq!(ordered.len(), edges.len());
        let mut open = vec![0; g.n()];
        for &(u, v) in &ordered {
            open[u] += 1;
            open[v] += 1;
        }
        Search {
            chosen: vec![false; ordered.len()],
            edges: ordered,
            degree: vec![0; g.n()],
            open,
            nodes: 0,
            cap,
        }
    }

    fn feasible(&self, v: usize) -> bool {
        let (d, r) = (self.degree[v], self.open[v]);
        if r == 0 {
            d >= 2 && d % 2 == 0
        } else {
            d + r >= 2
        }
    }

    /// `Some(true)` on success, `Some(false)` when exhausted, `None` at the cap.
    fn run(&mut self) -> Option<bool> {
        // explicit stack of (edge index, next choice to try)
        let mut stack: Vec<(usize, u8)> = vec![(0, 0)];
        while let Some(&mut (i, ref mut next)) = stack.last_mut() {
            if i == self.edges.len() {
                return Some(true);
            }
            let (u, v) = self.edges[i];
            if *next > 0 {
                // undo the previous choice for this edge
                self.open[u] += 1;
                self.open[v] += 1;
                if self.chosen[i] {
                    self.chosen[i] = false;
                    self.degree[u] -= 1;
                    self.degree[v] -= 1;
                }
            }
            if *next == 2 {
                stack.pop();
                continue;
            }
            // try "take" first, then "skip"
            let take = *next == 0;
            *next += 1;
            if self.nodes == self.cap {
                return None;
            }
            self.nodes += 1;
            self.open[u] -= 1;
            self.open[v] -= 1;
            if take {
                self.chosen[i] = true;
                self.degree[u] += 1;
                self.degree[v] += 1;
            }
            if self.feasible(u) && self.feasible(v) {
                stack.push((i + 1, 0));
            }
        }
        Some(false)
    }

    fn chosen_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().zip(&self.chosen).filter(|(_, &c)| c).map(|(&e, _)| e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YanKanoReport {
    /// `o(G − S) < |S|` for every `S` with `|S| ≥ 2`.
    pub holds: bool,
    /// A set with `|S| ≥ 2` and `o(G − S) ≥ |S|`, when the condition fails.
    pub witness: Option<VertexSet>,
    pub subsets_checked: u64,
}

/// Checks the Yan–Kano condition by enumerating `S` in increasing size,
/// stopping at the first witness.
///
/// Only `|S| ≤ n/2` is enumerated: `G − S` has at most `n − |S|` components.
pub fn yan_kano(g: &Graph) -> YanKanoReport {
    let n = g.n();
    let mut checked = 0u64;
    for size in 2..=n / 2 {
        let mut witness = None;
        for_each_subset(n, size, |members| {
            checked += 1;
            if odd_components_without(g, members) >= size {
                witness = Some(VertexSet::new(members.iter().copied()));
                false
            } else {
                true
            }
        });
        if witness.is_some() {
            return YanKanoReport { holds: false, witness, subsets_checked: checked };
        }
    }
    YanKanoReport { holds: true, witness: None, subsets_checked: checked }
}

/// Visits the `size`-subsets of `0..n` in lexicographic order while `visit`
/// returns true.
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn odd_components_without(g: &Graph, removed: &[usize]) -> usize {
    if g.n() <= 64 {
        let mut remaining: u64 = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
        for &v in removed {
            remaining &= !(1u64 << v);
        }
        let mut odd = 0;
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = g.neighbor_bits(v).expect("order at most 64") & remaining & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            remaining &= !comp;
            odd += (comp.count_ones() % 2) as usize;
        }
        odd
    } else {
        let s = VertexSet::new(removed.iter().copied());
        g.components(&s).expect("subset within range").odd_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn even_factor_validity() {
        let c5 = Graph::cycle(5).unwrap();
        let all: Vec<_> = c5.edges().collect();
        assert!(is_even_factor(&c5, &all).unwrap());
        assert!(!is_even_factor(&c5, &all[..4]).unwrap());
        let b = bowtie();
        assert!(is_even_factor(&b, &b.edges().collect::<Vec<_>>()).unwrap());
        assert_eq!(is_even_factor(&c5, &[(0, 2)]), Err(Error::EdgeNotInGraph(0, 2)));
    }

    #[test]
    fn search_examples() {
        let c7 = Graph::cycle(7).unwrap();
        let cert = find_even_factor(&c7);
        assert_eq!(cert.status, SearchStatus::Found);
        assert_eq!(cert.edges.as_ref().unwrap().len(), 7);

        let star = Graph::complete_bipartite(1, 3);
        let cert = find_even_factor(&star);
        assert_eq!(cert.status, SearchStatus::NoneExists);
        assert_eq!(cert.nodes_explored, 0);

        assert_eq!(find_even_factor(&Graph::complete_bipartite(2, 3)).status, SearchStatus::NoneExists);
        let k33 = Graph::complete_bipartite(3, 3);
        let cert = find_even_factor(&k33);
        assert!(is_even_factor(&k33, cert.edges.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn bridges_are_skipped() {
        // two triangles joined by a bridge
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let cert = find_even_factor(&g);
        assert_eq!(cert.status, SearchStatus::Found);
        assert!(!cert.edges.unwrap().contains(&(2, 3)));
        // a pendant path of length 2 leaves a degree-1 vertex once the bridge goes
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(find_even_factor(&g).status, SearchStatus::Found);
    }

    #[test]
    fn extremal_8_2_has_an_even_factor() {
        let g = Graph::complete(2).join(&Graph::complete(5).disjoint_union(&Graph::complete(1)));
        let cert = find_even_factor(&g);
        assert_eq!(cert.status, SearchStatus::Found);
        assert!(is_even_factor(&g, cert.edges.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn cap_is_a_status() {
        let g = Graph::complete(9);
        let cert = find_even_factor_with(&g, &OracleConfig { node_cap: 3 });
        assert_eq!(cert.status, SearchStatus::SearchCapExceeded);
        assert!(cert.nodes_explored <= 3);
    }

    #[test]
    fn deterministic() {
        let g = Graph::complete(7);
        assert_eq!(find_even_factor(&g), find_even_factor(&g));
    }

    #[test]
    fn yan_kano_examples() {
        assert!(yan_kano(&Graph::complete(6)).holds);
        let r = yan_kano(&Graph::complete_bipartite(2, 3));
        assert!(!r.holds);
        assert_eq!(r.witness, Some(VertexSet::new([0, 1])));
        let g = Graph::complete(2).join(&Graph::complete(7).disjoint_union(&Graph::complete(1)));
        let r = yan_kano(&g);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(VertexSet::new([0, 1])));
        assert_eq!(r.subsets_checked, 1);
    }

    #[test]
    fn subset_enumeration() {
        let mut all = Vec::new();
        for_each_subset(4, 2, |s| {
            all.push(s.to_vec());
            true
        });
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
