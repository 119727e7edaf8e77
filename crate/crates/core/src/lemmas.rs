//! Numerical checks of the supporting lemmas on finite grids.
//!
//! Every check produces one [`LemmaOutcome`] per grid point with a signed
//! margin: positive means the inequality holds with room to spare.

use std::ops::RangeInclusive;

use rand::seq::IndexedRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::quotient::{auxiliary, charpoly3, quotient_matrix, template_matrix, CubicFamily, Partition};
use crate::sampler::{Sampler, SamplerConfig};
use crate::spectral::{distance_matrix, largest_eigenvalue, rho_d, rho_q, signless_laplacian, wiener_index};
use crate::theorem::{
    clique_join, extremal_graph, g3_graph, min_even_order, threshold_rho_q, ExtremalParams, TheoremId,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LemmaId {
    /// Adding an edge to a connected graph strictly raises `ρ_Q`.
    EdgeAdditionRaisesRhoQ,
    /// Deleting a non-bridge edge strictly raises `ρ_D`.
    EdgeDeletionRaisesRhoD,
    /// Concentrating the parts of a clique join raises `ρ_Q`.
    JoinComparisonRhoQ,
    /// Concentrating the parts of a clique join lowers `ρ_D`.
    JoinComparisonRhoD,
    /// Equitable quotients share the largest eigenvalue.
    EquitableQuotient,
    /// `ρ_D(G) ≥ 2W(G)/n`.
    WienerLowerBound,
    /// `2n − 2δ < ρ_Q(G*) < 2n − δ` for `n ≥ 7δ − 7`.
    ExtremalBracket,
    /// `ρ_D(G₃) − ρ_D(G*) ≥ (δ−1)(δ−2)a(2b−a)` at `s = 2`.
    PerturbationBound,
    /// `η₂(2n − 2δ) > 0` and `f(n) > 0` for `3 ≤ s ≤ δ − 1`.
    SignlessCaseBound,
    /// `φ₂(n + δ − 3) > 0` for `4 ≤ s ≤ δ − 1`.
    DistanceCaseBound,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::EdgeAdditionRaisesRhoQ,
        LemmaId::EdgeDeletionRaisesRhoD,
        LemmaId::JoinComparisonRhoQ,
        LemmaId::JoinComparisonRhoD,
        LemmaId::EquitableQuotient,
        LemmaId::WienerLowerBound,
        LemmaId::ExtremalBracket,
        LemmaId::PerturbationBound,
        LemmaId::SignlessCaseBound,
        LemmaId::DistanceCaseBound,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LemmaId::EdgeAdditionRaisesRhoQ => "edge-addition",
            LemmaId::EdgeDeletionRaisesRhoD => "edge-deletion",
            LemmaId::JoinComparisonRhoQ => "join-rho-q",
            LemmaId::JoinComparisonRhoD => "join-rho-d",
            LemmaId::EquitableQuotient => "equitable-quotient",
            LemmaId::WienerLowerBound => "wiener-bound",
            LemmaId::ExtremalBracket => "extremal-bracket",
            LemmaId::PerturbationBound => "perturbation",
            LemmaId::SignlessCaseBound => "bound-f",
            LemmaId::DistanceCaseBound => "bound-g",
        }
    }

    pub fn from_label(label: &str) -> Option<LemmaId> {
        LemmaId::ALL.into_iter().find(|l| l.label() == label)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaOutcome {
    pub lemma: LemmaId,
    /// Human-readable description of the grid point.
    pub point: String,
    pub margin: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl LemmaOutcome {
    /// Strict inequality: passes when `margin > 0`.
    fn strict(lemma: LemmaId, point: String, margin: f64) -> Self {
        LemmaOutcome { lemma, point, margin, tolerance: 0.0, pass: margin > 0.0 }
    }

    /// Non-strict inequality: passes when `margin ≥ −tolerance`.
    fn weak(lemma: LemmaId, point: String, margin: f64, tolerance: f64) -> Self {
        LemmaOutcome { lemma, point, margin, tolerance, pass: margin >= -tolerance }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaSummary {
    pub lemma: LemmaId,
    pub checked: usize,
    pub failed: usize,
    pub min_margin: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct LemmaReport {
    pub outcomes: Vec<LemmaOutcome>,
}

impl LemmaReport {
    pub fn failures(&self) -> impl Iterator<Item = &LemmaOutcome> {
        self.outcomes.iter().filter(|o| !o.pass)
    }

    pub fn summary(&self) -> Vec<LemmaSummary> {
        LemmaId::ALL
            .into_iter()
            .filter_map(|lemma| {
                let rows: Vec<&LemmaOutcome> = self.outcomes.iter().filter(|o| o.lemma == lemma).collect();
                (!rows.is_empty()).then(|| LemmaSummary {
                    lemma,
                    checked: rows.len(),
                    failed: rows.iter().filter(|o| !o.pass).count(),
                    min_margin: rows.iter().map(|o| o.margin).min_by(f64::total_cmp),
                })
            })
            .collect()
    }
}

/// Parameter grid for [`lemma_suite`].
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaGrid {
    pub lemmas: Vec<LemmaId>,
    pub deltas: RangeInclusive<usize>,
    /// Largest order used by the extremal-family checks.
    pub max_n: usize,
    /// Largest order used by the clique-join comparisons.
    pub join_max_n: usize,
    /// Number of random graphs for each monotonicity check.
    pub random_samples: usize,
    pub random_orders: RangeInclusive<usize>,
    pub seed: u64,
    /// Graphs for the Wiener bound.
    pub corpus: Vec<Graph>,
}

impl Default for LemmaGrid {
    fn default() -> Self {
        LemmaGrid {
            lemmas: LemmaId::ALL.to_vec(),
            deltas: 2..=6,
            max_n: 60,
            join_max_n: 12,
            random_samples: 1000,
            random_orders: 5..=12,
            seed: 42,
            corpus: Vec::new(),
        }
    }
}

pub fn lemma_suite(grid: &LemmaGrid) -> LemmaReport {
    let mut outcomes = Vec::new();
    for &lemma in &grid.lemmas {
        outcomes.extend(match lemma {
            LemmaId::EdgeAdditionRaisesRhoQ => edge_additions(grid.random_samples, grid.random_orders.clone(), grid.seed),
            LemmaId::EdgeDeletionRaisesRhoD => edge_deletions(grid.random_samples, grid.random_orders.clone(), grid.seed),
            LemmaId::JoinComparisonRhoQ => join_comparisons(grid.join_max_n, false),
            LemmaId::JoinComparisonRhoD => join_comparisons(grid.join_max_n, true),
            LemmaId::EquitableQuotient => equitable_quotients(grid.deltas.clone(), grid.max_n),
            LemmaId::WienerLowerBound => wiener_bound(&grid.corpus),
            LemmaId::ExtremalBracket => extremal_bracket(grid.deltas.clone(), grid.max_n),
            LemmaId::PerturbationBound => perturbation_bound(grid.deltas.clone(), grid.max_n),
            LemmaId::SignlessCaseBound => signless_case_bound(grid.deltas.clone(), grid.max_n),
            LemmaId::DistanceCaseBound => distance_case_bound(grid.deltas.clone(), grid.max_n),
        });
    }
    LemmaReport { outcomes }
}

/// Random connected graphs with orders drawn from `orders`, one sampler
/// stream per order so the draw is reproducible.
fn random_connected(count: usize, orders: RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let orders: Vec<usize> = orders.collect();
    let mut picker = Sampler::new(SamplerConfig::new(1, seed));
    let mut samplers: Vec<Sampler> = orders
        .iter()
        .map(|&n| Sampler::new(SamplerConfig { min_degree: 1, ..SamplerConfig::new(n, seed ^ n as u64) }))
        .collect();
    (0..count)
        .map(|_| {
            let k = picker.rng().random_range(0..orders.len());
            samplers[k].next().expect("sampler is infinite")
        })
        .collect()
}

fn describe(g: &Graph) -> String {
    crate::graph6::to_graph6(g).unwrap_or_else(|_| format!("n={}", g.n()))
}

pub fn edge_additions(count: usize, orders: RangeInclusive<usize>, seed: u64) -> Vec<LemmaOutcome> {
    let mut picker = Sampler::new(SamplerConfig::new(1, seed.wrapping_add(1)));
    let mut cases = Vec::with_capacity(count);
    let mut pool = random_connected(count * 2, orders.clone(), seed).into_iter();
    while cases.len() < count {
        let g = match pool.next() {
            Some(g) => g,
            None => {
                pool = random_connected(count, orders.clone(), seed.wrapping_add(cases.len() as u64 + 7)).into_iter();
                continue;
            }
        };
        let missing = g.non_edges();
        if let Some(&(u, v)) = missing.choose(picker.rng()) {
            cases.push((g, (u, v)));
        }
    }
    cases
        .into_par_iter()
        .map(|(g, (u, v))| {
            let h = g.with_edge(u, v).expect("non-edge");
            let margin = rho_q(&h).expect("ρ_Q") - rho_q(&g).expect("ρ_Q");
            LemmaOutcome::strict(LemmaId::EdgeAdditionRaisesRhoQ, format!("{} + {u}{v}", describe(&g)), margin)
        })
        .collect()
}

pub fn edge_deletions(count: usize, orders: RangeInclusive<usize>, seed: u64) -> Vec<LemmaOutcome> {
    let mut picker = Sampler::new(SamplerConfig::new(1, seed.wrapping_add(2)));
    let mut cases = Vec::with_capacity(count);
    let mut pool = random_connected(count * 2, orders.clone(), seed.wrapping_add(3)).into_iter();
    while cases.len() < count {
        let g = match pool.next() {
            Some(g) => g,
            None => {
                pool = random_connected(count, orders.clone(), seed.wrapping_add(cases.len() as u64 + 11)).into_iter();
                continue;
            }
        };
        let bridges = g.bridges();
        let candidates: Vec<(usize, usize)> = g.edges().filter(|e| !bridges.contains(e)).collect();
        if let Some(&(u, v)) = candidates.choose(picker.rng()) {
            cases.push((g, (u, v)));
        }
    }
    cases
        .into_par_iter()
        .map(|(g, (u, v))| {
            let h = g.without_edge(u, v).expect("edge");
            let margin = rho_d(&h).expect("G − e is connected") - rho_d(&g).expect("ρ_D");
            LemmaOutcome::strict(LemmaId::EdgeDeletionRaisesRhoD, format!("{} - {u}{v}", describe(&g)), margin)
        })
        .collect()
}

/// Nonincreasing sequences of `t` integers, each at least `min`, summing to `total`.
fn partitions(total: usize, t: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, slots: usize, max: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let upper = max.min(remaining.saturating_sub(min * (slots - 1)));
        for part in (min..=upper).rev() {
            prefix.push(part);
            go(remaining - part, slots - 1, part, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, t, total, min, &mut Vec::new(), &mut out);
    out
}

/// Every admissible `(n, s, t, p, n_1..n_t)` with `n ≤ max_n`: parts
/// `n_1 ≥ ⋯ ≥ n_t ≥ p ≥ 1` and `n_1 < n − s − p(t − 1)`.
pub fn join_cases(max_n: usize) -> Vec<(usize, usize, usize, Vec<usize>)> {
    let mut cases = Vec::new();
    for n in 4..=max_n {
        for s in 1..n {
            let rest = n - s;
            for t in 2..=rest {
                for p in 1..=rest / t {
                    let big = rest - p * (t - 1);
                    for parts in partitions(rest, t, p) {
                        if parts[0] < big {
                            cases.push((n, s, p, parts));
                        }
                    }
                }
            }
        }
    }
    cases
}

pub fn join_comparisons(max_n: usize, distance: bool) -> Vec<LemmaOutcome> {
    join_cases(max_n)
        .into_par_iter()
        .map(|(n, s, p, parts)| {
            let t = parts.len();
            let spread = clique_join(s, &parts);
            let mut packed = vec![n - s - p * (t - 1)];
            packed.extend(std::iter::repeat_n(p, t - 1));
            let packed = clique_join(s, &packed);
            let point = format!("n={n} s={s} p={p} parts={parts:?}");
            if distance {
                let margin = rho_d(&spread).expect("join is connected") - rho_d(&packed).expect("join is connected");
                LemmaOutcome::strict(LemmaId::JoinComparisonRhoD, point, margin)
            } else {
                let margin = rho_q(&packed).expect("ρ_Q") - rho_q(&spread).expect("ρ_Q");
                LemmaOutcome::strict(LemmaId::JoinComparisonRhoQ, point, margin)
            }
        })
        .collect()
}

/// Quotient of a join family graph against its full matrix. `parts` are the
/// block sizes in label order `(K_s, large clique, rest)`.
fn quotient_agreement(g: &Graph, sizes: [usize; 3], point: String) -> Vec<LemmaOutcome> {
    let tol = 1e-8;
    let mut out = Vec::new();
    let a_order = Partition::consecutive(&sizes).expect("sizes cover the graph");
    let [ks, big, rest] = sizes;
    let b_order = Partition::new(
        vec![
            VertexSet::new(ks..ks + big),
            VertexSet::new(0..ks),
            VertexSet::new(ks + big..ks + big + rest),
        ],
        g.n(),
    )
    .expect("blocks cover the graph");
    for (label, matrix, partition) in [
        ("Q", signless_laplacian(g), &a_order),
        ("D", distance_matrix(g).expect("join is connected"), &b_order),
    ] {
        let q = quotient_matrix(&matrix, partition).expect("matching order");
        let full = largest_eigenvalue(&matrix).expect("power iteration").value;
        let root = charpoly3(&q).expect("3×3").largest_real_root();
        let diff = if q.is_equitable() { (root - full).abs() } else { f64::INFINITY };
        out.push(LemmaOutcome::weak(LemmaId::EquitableQuotient, format!("{point} {label}"), tol - diff, 0.0));
    }
    out
}

pub fn equitable_quotients(deltas: RangeInclusive<usize>, max_n: usize) -> Vec<LemmaOutcome> {
    let mut cases = Vec::new();
    for d in deltas {
        for n in 2 * d..=max_n {
            cases.push((n, d, None));
            for s in 2..d {
                if CubicFamily::Aq3.validate(n as i64, s as i64, d as i64).is_ok() {
                    cases.push((n, d, Some(s)));
                }
            }
        }
    }
    cases
        .into_par_iter()
        .flat_map(|(n, d, s)| match s {
            None => {
                let g = extremal_graph(ExtremalParams::new(n, d).expect("n ≥ 2δ"));
                quotient_agreement(&g, [d, n - 2 * d + 1, d - 1], format!("G* n={n} δ={d}"))
            }
            Some(s) => {
                let g = g3_graph(n, s, d).expect("validated");
                let q = d + 1 - s;
                let big = n - s - q * (s - 1);
                quotient_agreement(&g, [s, big, q * (s - 1)], format!("G3 n={n} s={s} δ={d}"))
            }
        })
        .collect()
}

pub fn wiener_bound(corpus: &[Graph]) -> Vec<LemmaOutcome> {
    corpus
        .par_iter()
        .filter(|g| g.n() > 0 && g.is_connected())
        .map(|g| {
            let rho = rho_d(g).expect("connected");
            let bound = 2.0 * wiener_index(g).expect("connected") as f64 / g.n() as f64;
            LemmaOutcome::weak(LemmaId::WienerLowerBound, describe(g), rho - bound, 1e-9 * (1.0 + rho))
        })
        .collect()
}

pub fn extremal_bracket(deltas: RangeInclusive<usize>, max_n: usize) -> Vec<LemmaOutcome> {
    let mut out = Vec::new();
    for d in deltas {
        let start = (7 * d - 7).max(2 * d);
        for n in start..=max_n {
            let p = ExtremalParams::new(n, d).expect("n ≥ 2δ");
            let value = threshold_rho_q(p).expect("bracketed root").value;
            let (nf, df) = (n as f64, d as f64);
            let margin = (value - (2.0 * nf - 2.0 * df)).min(2.0 * nf - df - value);
            out.push(LemmaOutcome::strict(LemmaId::ExtremalBracket, format!("n={n} δ={d}"), margin));
        }
    }
    out
}

/// Checks `ρ_D(G₃) − ρ_D(G*) ≥ (δ−1)(δ−2)a(2b−a)` where `a` and `b` are the
/// unit Perron vector entries of `𝒟(G*)` on a pendant vertex and on `K_δ`.
pub fn perturbation_bound(deltas: RangeInclusive<usize>, max_n: usize) -> Vec<LemmaOutcome> {
    let mut cases = Vec::new();
    for d in deltas.filter(|&d| d >= 3) {
        for n in (min_even_order(TheoremId::T2, d)..=max_n).step_by(2) {
            cases.push((n, d));
        }
    }
    cases
        .into_par_iter()
        .map(|(n, d)| {
            let star = extremal_graph(ExtremalParams::new(n, d).expect("n ≥ 2δ"));
            let perron = largest_eigenvalue(&distance_matrix(&star).expect("connected")).expect("power iteration");
            let (a, b) = (perron.vector[n - 1], perron.vector[0]);
            let g3 = g3_graph(n, 2, d).expect("s = 2 < δ");
            let gap = rho_d(&g3).expect("connected") - perron.value;
            let bound = ((d - 1) * (d - 2)) as f64 * a * (2.0 * b - a);
            LemmaOutcome::weak(LemmaId::PerturbationBound, format!("n={n} δ={d}"), gap - bound, 1e-9)
        })
        .collect()
}

/// `η₂(2n − 2δ)`, the value the signless Laplacian `3 ≤ s ≤ δ − 1` case
/// needs positive, together with `f(n) > 0`.
pub fn signless_case_bound(deltas: RangeInclusive<usize>, max_n: usize) -> Vec<LemmaOutcome> {
    let mut out = Vec::new();
    for d in deltas {
        for s in 3..d {
            for n in (min_even_order(TheoremId::T1, d)..=max_n).step_by(2) {
                let (nf, sf, df) = (n as f64, s as f64, d as f64);
                let eta = auxiliary::eta2(nf, sf, df, 2.0 * nf - 2.0 * df);
                let f = auxiliary::f_case3(nf, sf, df);
                out.push(LemmaOutcome::strict(
                    LemmaId::SignlessCaseBound,
                    format!("n={n} s={s} δ={d} f={f}"),
                    eta.min(f),
                ));
            }
        }
    }
    out
}

/// `φ₂(n + δ − 3)`, the value the distance `4 ≤ s ≤ δ − 1` case needs positive.
pub fn distance_case_bound(deltas: RangeInclusive<usize>, max_n: usize) -> Vec<LemmaOutcome> {
    let mut out = Vec::new();
    for d in deltas {
        for s in 4..d {
            for n in (min_even_order(TheoremId::T2, d)..=max_n).step_by(2) {
                let (nf, sf, df) = (n as f64, s as f64, d as f64);
                let phi = auxiliary::phi2(nf, sf, df, nf + df - 3.0);
                let g = auxiliary::g_case3(nf, sf, df);
                out.push(LemmaOutcome::strict(
                    LemmaId::DistanceCaseBound,
                    format!("n={n} s={s} δ={d} g={g}"),
                    phi,
                ));
            }
        }
    }
    out
}

/// Template quotient agreement used by the harness: the closed-form
/// matrix must equal the quotient computed from the built graph.
pub fn template_matches(n: usize, d: usize) -> bool {
    let g = extremal_graph(ExtremalParams::new(n, d).expect("n ≥ 2δ"));
    let p = Partition::consecutive(&[d, n - 2 * d + 1, d - 1]).expect("sizes");
    quotient_matrix(&signless_laplacian(&g), &p).ok()
        == template_matrix(CubicFamily::AqStar, n as i64, 0, d as i64).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(5, 2, 1), vec![vec![4, 1], vec![3, 2]]);
        assert_eq!(partitions(6, 3, 2), vec![vec![2, 2, 2]]);
        assert!(partitions(3, 2, 2).is_empty());
    }

    #[test]
    fn join_instance() {
        let spread = clique_join(2, &[5, 5]);
        let packed = clique_join(2, &[9, 1]);
        assert!(rho_q(&spread).unwrap() < rho_q(&packed).unwrap());
        assert!(rho_d(&spread).unwrap() > rho_d(&packed).unwrap());
        assert!(join_cases(12).iter().any(|(n, s, p, parts)| (*n, *s, *p) == (12, 2, 1) && parts == &vec![5, 5]));
    }

    #[test]
    fn wiener_equality_on_complete_graphs() {
        let out = wiener_bound(&[Graph::complete(6), Graph::cycle(7).unwrap()]);
        assert_eq!(out.len(), 2);
        assert!(out.iter().all(|o| o.pass && o.margin.abs() < 1e-8));
        assert!((rho_d(&Graph::complete(6)).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn small_suite_passes() {
        let grid = LemmaGrid {
            deltas: 2..=5,
            max_n: 40,
            join_max_n: 9,
            random_samples: 40,
            corpus: vec![Graph::path(5), Graph::complete(4)],
            ..LemmaGrid::default()
        };
        let report = lemma_suite(&grid);
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:?}");
        let summary = report.summary();
        assert_eq!(summary.len(), LemmaId::ALL.len());
        assert!(summary.iter().all(|s| s.checked > 0));
        assert!(template_matches(12, 3));
    }

    #[test]
    fn labels_round_trip() {
        for l in LemmaId::ALL {
            assert_eq!(LemmaId::from_label(l.label()), Some(l));
        }
    }
}
