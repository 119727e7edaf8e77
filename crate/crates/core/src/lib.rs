//! Spectral sufficient conditions for even factors.
//!
//! An *even factor* of a graph is a spanning subgraph in which every vertex
//! has nonzero even degree. For a connected graph `G` of even order with
//! minimum degree `δ ≥ 2` and `n` large enough relative to `δ`, either of
//!
//! * `ρ_Q(G) ≥ ρ_Q(G*)` (signless Laplacian spectral radius), or
//! * `ρ_D(G) ≤ ρ_D(G*)` (distance spectral radius)
//!
//! guarantees an even factor unless `G ≅ G*`, where
//! `G* = K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
//!
//! The crate provides the pieces needed to evaluate and test these
//! statements numerically:
//!
//! * [`graph`] and [`graph6`]: immutable simple graphs and the graph6 format.
//! * [`spectral`]: signless Laplacian and distance matrices, Wiener index and
//!   a power-iteration eigensolver.
//! * [`quotient`]: exact quotient matrices, their cubic characteristic
//!   polynomials and the factorization identities comparing join families.
//! * [`oracle`]: exact even-factor search and the Yan–Kano condition.
//! * [`theorem`]: extremal graphs, thresholds and verdicts.
//! * [`lemmas`]: grid checks of the supporting inequalities.
//! * [`harness`] and [`sampler`]: batch commands with JSON/CSV reports.
//!
//! ```
//! use evenfactor::theorem::{check_theorem_1, extremal_graph, Conclusion, ExtremalParams};
//!
//! let g = extremal_graph(ExtremalParams::new(8, 2).unwrap());
//! assert_eq!(check_theorem_1(&g).conclusion, Conclusion::ExtremalException);
//! ```

pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod lemmas;
pub mod oracle;
pub mod quotient;
pub mod sampler;
pub mod spectral;
pub mod theorem;

pub use error::{Error, Graph6Error, Result};
pub use graph::{Graph, VertexSet};
