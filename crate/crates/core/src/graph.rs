//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Every constructor documents how it
//! labels vertices so fixtures and graph6 output are reproducible; in
//! particular [`Graph::join`] and [`Graph::disjoint_union`] place the left
//! operand's vertices first.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order for which the per-vertex membership bitset is kept.
const BITSET_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    /// `bits[v]` has bit `u` set iff `u ~ v`; empty when `n > 64`.
    bits: Vec<u64>,
    edge_count: usize,
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut members: Vec<usize> = vertices.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    fn check_within(&self, order: usize) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= order => Err(Error::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Connected components of `G - S` together with the number of odd-order ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub components: Vec<VertexSet>,
    pub odd_count: usize,
}

impl ComponentReport {
    pub fn even_count(&self) -> usize {
        self.components.len() - self.odd_count
    }

    /// Component orders in nonincreasing order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.components.iter().map(VertexSet::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            bits: if n <= BITSET_LIMIT { vec![0; n] } else { Vec::new() },
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        if !self.bits.is_empty() {
            self.bits[u] |= 1 << v;
            self.bits[v] |= 1 << u;
        }
        self.edge_count += 1;
        Ok(())
    }

    // Sort neighbor lists; `has_edge` relies on this when no bitset is kept.
    fn finish(&mut self) {
        for nb in &mut self.adjacency {
            nb.sort_unstable();
        }
    }

    /// `K_k` on vertices `0..k`.
    pub fn complete(k: usize) -> Self {
        let edges = (0..k).flat_map(|v| (0..v).map(move |u| (u, v)));
        Graph::from_edges(k, edges).expect("complete graph edges are valid")
    }

    /// `C_k` with edges `i ~ i+1 (mod k)`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::CycleTooShort(k));
        }
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// Path `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> Self {
        Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// `K_{a,b}` with the `a`-side labeled `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("bipartite edges are valid")
    }

    /// `self ∪ other`, with `other` relabeled by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)));
        Graph::from_edges(offset + other.n(), edges).expect("union of valid graphs is valid")
    }

    /// Disjoint union of several graphs, in order.
    pub fn union_all<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> Graph {
        graphs
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
    }

    /// `self ∨ other`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n1, v + n1)))
            .chain((0..n1).flat_map(|u| (n1..n1 + n2).map(move |v| (u, v))));
        Graph::from_edges(n1 + n2, edges).expect("join of valid graphs is valid")
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        if self.bits.is_empty() {
            self.adjacency[u].binary_search(&v).is_ok()
        } else {
            self.bits[u] >> v & 1 == 1
        }
    }

    /// Neighborhood bitmask; `None` for graphs above 64 vertices.
    pub fn neighbor_bits(&self, v: usize) -> Option<u64> {
        self.bits.get(v).copied()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `δ(G)`; the 0-vertex graph has minimum degree 0.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Breadth-first connectivity test. The 0-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_order(0, &vec![false; self.n()]).len() == self.n()
    }

    fn bfs_order(&self, start: usize, removed: &[bool]) -> Vec<usize> {
        let mut seen = removed.to_vec();
        let mut order = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// `G - S`, with the retained vertices relabeled consecutively in
    /// increasing order. The second value maps new labels to old ones.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        s.check_within(self.n())?;
        let kept: Vec<usize> = (0..self.n()).filter(|&v| !s.contains(v)).collect();
        let mut new_label = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|(u, v)| (new_label[u], new_label[v]));
        let g = Graph::from_edges(kept.len(), edges)?;
        Ok((g, kept))
    }

    /// Connected components of `G - S`, reported in original labels, and the
    /// number of components of odd order.
    pub fn components(&self, s: &VertexSet) -> Result<ComponentReport> {
        s.check_within(self.n())?;
        let mut removed = vec![false; self.n()];
        for v in s.iter() {
            removed[v] = true;
        }
        let mut components = Vec::new();
        for v in 0..self.n() {
            if removed[v] {
                continue;
            }
            let comp = self.bfs_order(v, &removed);
            for &w in &comp {
                removed[w] = true;
            }
            components.push(VertexSet::new(comp));
        }
        let odd_count = components.iter().filter(|c| c.len() % 2 == 1).count();
        Ok(ComponentReport { components, odd_count })
    }

    /// Copy of the graph with `u ~ v` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Copy of the graph with `u ~ v` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        let key = (u.min(v), u.max(v));
        Graph::from_edges(self.n(), self.edges().filter(|&e| e != key))
    }

    /// Unordered pairs that are not edges, `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect()
    }

    /// Bridges (cut edges), `u < v`, found with a lowpoint DFS.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if top.2 < self.adjacency[v].len() {
                    let w = self.adjacency[v][top.2];
                    top.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }
}
