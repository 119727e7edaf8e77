//! Dense matrices of a graph and their Perron roots.
//!
//! Only the largest eigenvalue is ever needed, so the eigensolver is a
//! shifted power iteration started from the all-ones vector. For a
//! nonnegative irreducible matrix that vector has a positive component along
//! the Perron vector, every iterate stays positive, and the Perron root is
//! simple.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn new(order: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch { expected: order * order, found: entries.len() });
        }
        for row in 0..order {
            for col in 0..order {
                let x = entries[row * order + col];
                if !x.is_finite() {
                    return Err(Error::NonFinite { row, col });
                }
                if col > row && x != entries[col * order + row] {
                    return Err(Error::NotSymmetric { row, col });
                }
            }
        }
        Ok(SymMatrix { order, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let entries: Vec<f64> = rows.iter().flatten().copied().collect();
        SymMatrix::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        inf_norm(self.order, &self.entries)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        mul_vec(self.order, &self.entries, x)
    }

    /// `x^T M y`.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        x.iter().zip(self.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// Entries as integers, if every entry is integral.
    pub fn to_integer(&self) -> Result<Vec<i64>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                if x.fract() == 0.0 && x.abs() < 2f64.powi(53) {
                    Ok(x as i64)
                } else {
                    Err(Error::NonIntegralEntry { row: k / self.order, col: k % self.order })
                }
            })
            .collect()
    }

    /// Entrywise `self - other`.
    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.order != other.order {
            return Err(Error::WrongOrder { expected: self.order, found: other.order });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(SymMatrix { order: self.order, entries })
    }
}

/// Largest eigenvalue with its eigenvector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronResult {
    pub value: f64,
    /// Unit vector (Euclidean norm 1); entrywise positive for nonnegative
    /// irreducible input.
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// `max_i |(M x)_i - value * x_i|`.
    pub residual: f64,
}

/// Stopping rule for [`power_iteration`]. Both tolerances are scaled by
/// `1 + ||M||_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PowerConfig {
    pub value_tol: f64,
    pub residual_tol: f64,
    pub max_iterations: usize,
    /// Added to the diagonal during iteration; removes the `±λ` stall on
    /// periodic matrices. Not reflected in the returned value.
    pub shift: f64,
}

impl Default for PowerConfig {
    fn default() -> Self {
        PowerConfig { value_tol: 1e-12, residual_tol: 1e-10, max_iterations: 200_000, shift: 1.0 }
    }
}

fn inf_norm(order: usize, entries: &[f64]) -> f64 {
    (0..order)
        .map(|i| entries[i * order..(i + 1) * order].iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn mul_vec(order: usize, entries: &[f64], x: &[f64]) -> Vec<f64> {
    (0..order)
        .map(|i| entries[i * order..(i + 1) * order].iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}

/// Power iteration on a square row-major matrix, which need not be
/// symmetric. The value estimate is `x^T M x` for the current unit iterate.
pub fn power_iteration(order: usize, entries: &[f64], cfg: &PowerConfig) -> Result<PerronResult> {
    if order == 0 {
        return Err(Error::EmptyMatrix);
    }
    if entries.len() != order * order {
        return Err(Error::DimensionMismatch { expected: order * order, found: entries.len() });
    }
    let scale = 1.0 + inf_norm(order, entries);
    let mut x = vec![1.0; order];
    normalize(&mut x);
    let mut previous = f64::NAN;
    let mut residual = f64::INFINITY;
    for iteration in 1..=cfg.max_iterations {
        let y = mul_vec(order, entries, &x);
        let value: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - value * xi).abs())
            .fold(0.0, f64::max);
        if (value - previous).abs() < cfg.value_tol * scale && residual <= cfg.residual_tol * scale {
            return Ok(PerronResult { value, vector: x, iterations: iteration, residual });
        }
        previous = value;
        let mut next: Vec<f64> = y.iter().zip(&x).map(|(yi, xi)| yi + cfg.shift * xi).collect();
        if normalize(&mut next) == 0.0 {
            // M + shift*I annihilated x; x is an eigenvector for -shift.
            return Ok(PerronResult { value, vector: x, iterations: iteration, residual });
        }
        x = next;
    }
    Err(Error::NonConvergence { iterations: cfg.max_iterations, residual })
}

/// Largest eigenvalue of a nonnegative symmetric matrix.
pub fn largest_eigenvalue(m: &SymMatrix) -> Result<PerronResult> {
    largest_eigenvalue_with(m, &PowerConfig::default())
}

pub fn largest_eigenvalue_with(m: &SymMatrix, cfg: &PowerConfig) -> Result<PerronResult> {
    power_iteration(m.order, &m.entries, cfg)
}

/// Adjacency matrix `A(G)`.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let n = g.n();
    let mut entries = vec![0.0; n * n];
    for (u, v) in g.edges() {
        entries[u * n + v] = 1.0;
        entries[v * n + u] = 1.0;
    }
    SymMatrix { order: n, entries }
}

/// `Q(G) = A(G) + D(G)`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let mut q = adjacency_matrix(g);
    let n = g.n();
    for v in 0..n {
        q.entries[v * n + v] = g.degree(v) as f64;
    }
    q
}

/// All-pairs shortest-path lengths by one breadth-first search per vertex.
pub fn distance_table(g: &Graph) -> Result<Vec<Vec<u32>>> {
    let n = g.n();
    let mut table = Vec::with_capacity(n);
    for source in 0..n {
        let mut dist = vec![u32::MAX; n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist.contains(&u32::MAX) {
            return Err(Error::DisconnectedGraph);
        }
        table.push(dist);
    }
    Ok(table)
}

/// Distance matrix `𝒟(G)` of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<SymMatrix> {
    if g.n() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let table = distance_table(g)?;
    let entries = table.into_iter().flatten().map(f64::from).collect();
    Ok(SymMatrix { order: g.n(), entries })
}

/// Signless Laplacian spectral radius `ρ_Q(G)`.
pub fn rho_q(g: &Graph) -> Result<f64> {
    Ok(largest_eigenvalue(&signless_laplacian(g))?.value)
}

/// Distance spectral radius `ρ_𝒟(G)` of a connected graph.
pub fn rho_d(g: &Graph) -> Result<f64> {
    Ok(largest_eigenvalue(&distance_matrix(g)?)?.value)
}

/// Wiener index: sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let table = distance_table(g)?;
    let total: u64 = table.iter().flatten().map(|&d| u64::from(d)).sum();
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn signless_laplacian_small() {
        let q = signless_laplacian(&Graph::complete(2));
        assert_eq!(q.entries(), &[1.0, 1.0, 1.0, 1.0]);
        let q = signless_laplacian(&Graph::cycle(3).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
        assert_eq!(signless_laplacian(&Graph::complete(1)).entries(), &[0.0]);
    }

    #[test]
    fn distance_matrices() {
        let d = distance_matrix(&Graph::complete(5)).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(d.get(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
        let d = distance_matrix(&Graph::path(3)).unwrap();
        assert_eq!(d.get(0, 2), 2.0);
        assert_eq!(d.get(0, 1), 1.0);
        assert_eq!(d.get(1, 2), 1.0);
        let d = distance_matrix(&Graph::cycle(4).unwrap()).unwrap();
        for i in 0..4 {
            let mut row = d.row(i).to_vec();
            row.sort_by(f64::total_cmp);
            assert_eq!(row, vec![0.0, 1.0, 1.0, 2.0]);
        }
        let split = Graph::complete(3).disjoint_union(&Graph::complete(1));
        assert_eq!(distance_matrix(&split), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn regular_graph_radii() {
        for n in 2..10 {
            let r = rho_q(&Graph::complete(n)).unwrap();
            assert!(close(r, 2.0 * (n as f64 - 1.0), 1e-9), "K_{n}: {r}");
        }
        for n in 3..12 {
            let r = rho_q(&Graph::cycle(n).unwrap()).unwrap();
            assert!(close(r, 4.0, 1e-9));
        }
        let r = largest_eigenvalue(&distance_matrix(&Graph::cycle(4).unwrap()).unwrap()).unwrap();
        assert!(close(r.value, 4.0, 1e-9));
        assert!(close(rho_q(&Graph::complete(8)).unwrap(), 14.0, 1e-9));
        assert!(close(rho_d(&Graph::complete(8)).unwrap(), 7.0, 1e-9));
    }

    #[test]
    fn perron_vector_is_positive_unit() {
        let g = Graph::complete(2).join(&Graph::complete(5).disjoint_union(&Graph::complete(1)));
        let r = largest_eigenvalue(&signless_laplacian(&g)).unwrap();
        assert!(r.vector.iter().all(|&x| x > 0.0));
        let norm: f64 = r.vector.iter().map(|x| x * x).sum();
        assert!(close(norm, 1.0, 1e-12));
        assert!(r.value > 12.0 && r.value < 13.0);
    }

    #[test]
    fn wiener_small() {
        for n in 1..8 {
            assert_eq!(wiener_index(&Graph::complete(n)).unwrap(), (n * (n - 1) / 2) as u64);
        }
        assert_eq!(wiener_index(&Graph::path(3)).unwrap(), 4);
        assert_eq!(wiener_index(&Graph::path(4)).unwrap(), 10);
        let g = Graph::complete(2).join(&Graph::complete(5).disjoint_union(&Graph::complete(1)));
        assert_eq!(wiener_index(&g).unwrap(), 33);
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(SymMatrix::new(2, vec![0.0; 3]), Err(Error::DimensionMismatch { .. })));
        assert_eq!(
            SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
        assert_eq!(
            SymMatrix::new(1, vec![f64::NAN]),
            Err(Error::NonFinite { row: 0, col: 0 })
        );
        assert_eq!(largest_eigenvalue(&SymMatrix::new(0, vec![]).unwrap()), Err(Error::EmptyMatrix));
    }

    #[test]
    fn iteration_cap_reports_nonconvergence() {
        let cfg = PowerConfig { max_iterations: 1, ..PowerConfig::default() };
        let m = distance_matrix(&Graph::path(5)).unwrap();
        assert!(matches!(largest_eigenvalue_with(&m, &cfg), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn periodic_matrix_converges() {
        // D(K_2) has eigenvalues +1 and -1; the all-ones start is already the Perron vector
        let r = rho_d(&Graph::complete(2)).unwrap();
        assert!(close(r, 1.0, 1e-12));
        // adjacency of a star is bipartite; the shift keeps iteration from oscillating
        let a = adjacency_matrix(&Graph::complete_bipartite(1, 4));
        let r = largest_eigenvalue(&a).unwrap();
        assert!(close(r.value, 2.0, 1e-9));
    }
}
