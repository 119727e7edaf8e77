//! Extremal graphs, spectral thresholds and the two even-factor verdicts.
//!
//! The extremal graph `G* = K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)` fixes both
//! thresholds: a connected graph of even order `n ≥ N(δ)` whose signless
//! Laplacian spectral radius is at least `ρ_Q(G*)`, or whose distance
//! spectral radius is at most `ρ_D(G*)`, has an even factor unless it is
//! `G*` itself. [`check_theorem_1`] and [`check_theorem_2`] evaluate these
//! statements on concrete graphs and optionally consult the exact oracle.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{find_even_factor_with, OracleConfig, SearchStatus};
use crate::quotient::{largest_root_widening, family_cubic, template_matrix, Cubic, CubicFamily, Rational};
use crate::spectral::{rho_d, rho_q};

/// Order and minimum degree of an extremal graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalParams {
    pub n: usize,
    pub delta: usize,
}

impl ExtremalParams {
    /// Requires `δ ≥ 2` and `n ≥ 2δ`. Parity of `n` is not enforced so odd
    /// orders can still be constructed; the theorem checks test it.
    pub fn new(n: usize, delta: usize) -> Result<Self> {
        if delta < 2 || n < 2 * delta {
            return Err(Error::ParameterOutOfRange(format!(
                "extremal graph needs δ ≥ 2 and n ≥ 2δ (n={n}, δ={delta})"
            )));
        }
        Ok(ExtremalParams { n, delta })
    }

    /// Size of the large clique, `n − 2δ + 1`.
    pub fn big_clique(&self) -> usize {
        self.n - 2 * self.delta + 1
    }

    pub fn meets_theorem_1_bound(&self) -> bool {
        self.n as i64 >= theorem_1_min_order(self.delta)
    }

    pub fn meets_theorem_2_bound(&self) -> bool {
        self.n as i64 >= theorem_2_min_order(self.delta)
    }
}

fn ceil(r: Rational) -> i64 {
    r.ceil().to_integer()
}

/// Smallest integer `n` with `n ≥ max(7δ − 7, δ²/4 + δ/2 + 6)`.
pub fn theorem_1_min_order(delta: usize) -> i64 {
    let d = delta as i64;
    let quad = Rational::new(d * d, 4) + Rational::new(d, 2) + Rational::from(6);
    (7 * d - 7).max(ceil(quad))
}

/// Smallest integer `n` with `n ≥ max(8δ − 7, δ²/3 + 3)`.
pub fn theorem_2_min_order(delta: usize) -> i64 {
    let d = delta as i64;
    let quad = Rational::new(d * d, 3) + Rational::from(3);
    (8 * d - 7).max(ceil(quad))
}

/// Smallest even `n` admitted by the bound of `theorem`.
pub fn min_even_order(theorem: TheoremId, delta: usize) -> usize {
    let n = match theorem {
        TheoremId::T1 => theorem_1_min_order(delta),
        TheoremId::T2 => theorem_2_min_order(delta),
    } as usize;
    n + n % 2
}

/// `K_s ∨ (K_{n_1} ∪ ⋯ ∪ K_{n_k})`, with the `K_s` vertices first and the
/// parts following in the given order.
pub fn clique_join(s: usize, parts: &[usize]) -> Graph {
    let cliques: Vec<Graph> = parts.iter().map(|&p| Graph::complete(p)).collect();
    Graph::complete(s).join(&Graph::union_all(&cliques))
}

/// `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`. Labels: `K_δ` is `0..δ`, the large
/// clique comes next and the `δ − 1` pendant-to-`K_δ` vertices are last.
pub fn extremal_graph(p: ExtremalParams) -> Graph {
    let mut parts = vec![p.big_clique()];
    parts.extend(std::iter::repeat_n(1, p.delta - 1));
    clique_join(p.delta, &parts)
}

/// Parameters of the comparison graphs `G₁`, `G₂`, `G₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    pub s: usize,
    pub delta: usize,
    /// Odd part sizes `n_1 ≥ ⋯ ≥ n_s` summing to `n − s`.
    pub parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    G1,
    G2,
    G3,
}

impl FamilyParams {
    pub fn new(n: usize, s: usize, delta: usize, parts: Vec<usize>) -> Result<Self> {
        let bad = |why: String| Err(Error::ParameterOutOfRange(why));
        if parts.len() != s {
            return bad(format!("expected {s} parts, got {}", parts.len()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return bad(format!("parts {parts:?} are not nonincreasing"));
        }
        if parts.iter().any(|&p| p % 2 == 0) {
            return bad(format!("parts {parts:?} must all be odd"));
        }
        if parts.iter().sum::<usize>() + s != n {
            return bad(format!("parts {parts:?} must sum to n − s = {}", n as i64 - s as i64));
        }
        Ok(FamilyParams { n, s, delta, parts })
    }
}

/// `G₂ = K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)`.
pub fn g2_graph(n: usize, s: usize) -> Result<Graph> {
    if s < 1 || n < 2 * s {
        return Err(Error::ParameterOutOfRange(format!("G₂ needs s ≥ 1 and n ≥ 2s (n={n}, s={s})")));
    }
    let mut parts = vec![n - 2 * s + 1];
    parts.extend(std::iter::repeat_n(1, s - 1));
    Ok(clique_join(s, &parts))
}

/// `G₃ = K_s ∨ (K_{n−s−(δ+1−s)(s−1)} ∪ (s−1)K_{δ+1−s})`.
pub fn g3_graph(n: usize, s: usize, delta: usize) -> Result<Graph> {
    CubicFamily::Aq3.validate(n as i64, s as i64, delta as i64)?;
    let q = delta + 1 - s;
    let mut parts = vec![n - s - q * (s - 1)];
    parts.extend(std::iter::repeat_n(q, s - 1));
    Ok(clique_join(s, &parts))
}

pub fn family_graph(f: &FamilyParams, which: Family) -> Result<Graph> {
    match which {
        Family::G1 => Ok(clique_join(f.s, &f.parts)),
        Family::G2 => g2_graph(f.n, f.s),
        Family::G3 => {
            let q = (f.delta + 1).saturating_sub(f.s);
            if let Some(&last) = f.parts.last() {
                if last < q {
                    return Err(Error::ParameterOutOfRange(format!(
                        "G₃ needs n_s ≥ δ + 1 − s = {q}, got {last}"
                    )));
                }
            }
            g3_graph(f.n, f.s, f.delta)
        }
    }
}

/// A threshold value with the cubic and bracket that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Threshold {
    pub value: f64,
    pub cubic: Cubic,
    pub bracket: (f64, f64),
}

fn bracketed(cubic: Cubic, lo: f64, hi: f64, limit: f64) -> Result<Threshold> {
    let (value, bracket) = largest_root_widening(&cubic, lo, hi, limit)?;
    let top = cubic.largest_real_root();
    if (top - value).abs() > 1e-9 * top.abs().max(1.0) {
        return Err(Error::SolverFailure(format!(
            "bracket [{}, {}] holds the root {value}, not the largest root {top}",
            bracket.0, bracket.1
        )));
    }
    Ok(Threshold { value, cubic, bracket })
}

/// `ρ_Q(G*)` as the largest root of the extremal signless Laplacian
/// quotient cubic, bracketed by `[2n − 2δ, 2n − δ]` and widened to at most `4n`.
pub fn threshold_rho_q(p: ExtremalParams) -> Result<Threshold> {
    let (n, d) = (p.n as f64, p.delta as f64);
    let cubic = family_cubic(CubicFamily::AqStar, p.n as i64, 0, p.delta as i64)?;
    bracketed(cubic, 2.0 * n - 2.0 * d, 2.0 * n - d, 4.0 * n)
}

/// `ρ_D(G*)` as the largest root of the extremal distance quotient cubic,
/// bracketed by `[n + δ − 3, 3n]` and widened to at most `4n`.
///
/// Small orders can fall below `n + δ − 3`; the bracket then starts at
/// `n − 1 ≤ 2W/n` instead.
pub fn threshold_rho_d(p: ExtremalParams) -> Result<Threshold> {
    let (n, d) = (p.n as f64, p.delta as f64);
    let cubic = family_cubic(CubicFamily::BdStar, p.n as i64, 0, p.delta as i64)?;
    bracketed(cubic, n + d - 3.0, 3.0 * n, 4.0 * n).or_else(|_| bracketed(cubic, n - 1.0, 3.0 * n, 4.0 * n))
}

/// Whether `g` is isomorphic to `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
///
/// The δ vertices of degree `n − 1` must be exactly the join part, and
/// removing them must leave one clique of order `n − 2δ + 1` plus `δ − 1`
/// isolated vertices.
pub fn recognize_extremal(g: &Graph, delta: usize) -> bool {
    let n = g.n();
    if delta < 2 || n < 2 * delta {
        return false;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if universal.len() != delta {
        return false;
    }
    let Ok(report) = g.components(&VertexSet::new(universal)) else {
        return false;
    };
    let mut sizes = report.sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let big = n - 2 * delta + 1;
    let mut expected = vec![big];
    expected.extend(std::iter::repeat_n(1, delta - 1));
    if sizes != expected {
        return false;
    }
    // the largest component must be a clique
    report
        .components
        .iter()
        .find(|c| c.len() == big)
        .is_some_and(|clique| clique.iter().all(|v| g.degree(v) == n - delta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    /// Signless Laplacian condition `ρ_Q(G) ≥ ρ_Q(G*)`.
    T1,
    /// Distance condition `ρ_D(G) ≤ ρ_D(G*)`.
    T2,
}

impl TheoremId {
    pub fn number(self) -> u8 {
        match self {
            TheoremId::T1 => 1,
            TheoremId::T2 => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Conclusion {
    EvenFactorGuaranteed,
    ExtremalException,
    Inconclusive,
    NotApplicable,
}

impl Conclusion {
    pub const ALL: [Conclusion; 4] = [
        Conclusion::EvenFactorGuaranteed,
        Conclusion::ExtremalException,
        Conclusion::Inconclusive,
        Conclusion::NotApplicable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::EvenFactorGuaranteed => "EvenFactorGuaranteed",
            Conclusion::ExtremalException => "ExtremalException",
            Conclusion::Inconclusive => "Inconclusive",
            Conclusion::NotApplicable => "NotApplicable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub connected: bool,
    pub even_order: bool,
    pub min_degree_at_least_2: bool,
    pub order_bound: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.connected && self.even_order && self.min_degree_at_least_2 && self.order_bound
    }
}

/// When to run the exact oracle alongside a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OracleMode {
    Never,
    /// Only for verdicts within the borderline band.
    Borderline,
    /// Borderline verdicts and every graph meeting the spectral condition.
    ConditionMet,
    Always,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerdictConfig {
    /// Slack allowed in the spectral comparison.
    pub eps: f64,
    /// Distance to the threshold below which a verdict is marked borderline.
    pub borderline: f64,
    pub oracle: OracleMode,
    pub oracle_cap: u64,
    /// Diagnostic only: evaluate the threshold at this δ instead of `δ(G)`.
    /// Verdicts computed this way are not theorem verdicts.
    pub delta_override: Option<usize>,
}

impl Default for VerdictConfig {
    fn default() -> Self {
        VerdictConfig {
            eps: 1e-8,
            borderline: 1e-6,
            oracle: OracleMode::Borderline,
            oracle_cap: OracleConfig::default().node_cap,
            delta_override: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub hypotheses: Hypotheses,
    pub hypotheses_met: bool,
    /// δ at which the threshold was evaluated.
    pub delta: usize,
    /// `ρ_Q(G)` or `ρ_D(G)`; `None` for `ρ_D` of a disconnected graph.
    pub spectral_value: Option<f64>,
    pub threshold: Option<f64>,
    /// Signed distance by which the spectral condition holds (negative when it fails).
    pub margin: Option<f64>,
    pub borderline: bool,
    pub conclusion: Conclusion,
    pub oracle_status: Option<SearchStatus>,
    pub non_theorem_mode: bool,
}

impl TheoremVerdict {
    /// A guaranteed even factor that the oracle proved absent.
    pub fn is_violation(&self) -> bool {
        matches!(self.conclusion, Conclusion::EvenFactorGuaranteed)
            && self.oracle_status == Some(SearchStatus::NoneExists)
    }
}

pub fn check_theorem_1(g: &Graph) -> TheoremVerdict {
    check_theorem(g, TheoremId::T1, &VerdictConfig::default())
}

pub fn check_theorem_2(g: &Graph) -> TheoremVerdict {
    check_theorem(g, TheoremId::T2, &VerdictConfig::default())
}

pub fn check_theorem(g: &Graph, theorem: TheoremId, cfg: &VerdictConfig) -> TheoremVerdict {
    let n = g.n();
    let delta = cfg.delta_override.unwrap_or_else(|| g.min_degree());
    let connected = n > 0 && g.is_connected();
    let order_bound = delta >= 2
        && match theorem {
            TheoremId::T1 => n as i64 >= theorem_1_min_order(delta),
            TheoremId::T2 => n as i64 >= theorem_2_min_order(delta),
        };
    let hypotheses = Hypotheses {
        connected,
        even_order: n.is_multiple_of(2),
        min_degree_at_least_2: delta >= 2,
        order_bound,
    };
    let spectral_value = match theorem {
        TheoremId::T1 if n > 0 => rho_q(g).ok(),
        TheoremId::T2 if connected => rho_d(g).ok(),
        _ => None,
    };
    let mut verdict = TheoremVerdict {
        theorem,
        hypotheses,
        hypotheses_met: hypotheses.all(),
        delta,
        spectral_value,
        threshold: None,
        margin: None,
        borderline: false,
        conclusion: Conclusion::NotApplicable,
        oracle_status: None,
        non_theorem_mode: cfg.delta_override.is_some(),
    };

    if verdict.hypotheses_met {
        let params = ExtremalParams::new(n, delta).expect("order bound implies n ≥ 2δ");
        let threshold = match theorem {
            TheoremId::T1 => threshold_rho_q(params),
            TheoremId::T2 => threshold_rho_d(params),
        };
        if let (Ok(t), Some(value)) = (threshold, spectral_value) {
            let margin = match theorem {
                TheoremId::T1 => value - t.value,
                TheoremId::T2 => t.value - value,
            };
            verdict.threshold = Some(t.value);
            verdict.margin = Some(margin);
            verdict.borderline = margin.abs() <= cfg.borderline;
            verdict.conclusion = if margin >= -cfg.eps {
                if recognize_extremal(g, delta) {
                    Conclusion::ExtremalException
                } else {
                    Conclusion::EvenFactorGuaranteed
                }
            } else {
                Conclusion::Inconclusive
            };
        } else {
            verdict.conclusion = Conclusion::Inconclusive;
        }
    }

    let consult = match cfg.oracle {
        OracleMode::Never => false,
        OracleMode::Borderline => verdict.borderline,
        OracleMode::ConditionMet => {
            verdict.borderline
                || matches!(verdict.conclusion, Conclusion::EvenFactorGuaranteed | Conclusion::ExtremalException)
        }
        OracleMode::Always => true,
    };
    if consult {
        let cert = find_even_factor_with(g, &OracleConfig { node_cap: cfg.oracle_cap });
        verdict.oracle_status = Some(cert.status);
    }
    verdict
}

/// Perron vector of the extremal distance quotient, blocks ordered
/// `(large clique, K_δ, pendant vertices)` and scaled so `a = 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronAbc {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub rho: f64,
    /// Residuals of the three eigen-equations, relative to `ρ`.
    pub equation_residuals: [f64; 3],
    /// `(ρ + n − 2δ + 2)/(2ρ + δ − 2)`, the stated closed form for `b/a`.
    pub stated_ratio: f64,
    /// `(ρ + n − 2δ + 2)/(2ρ − δ + 2)`, the ratio obtained by eliminating
    /// `c` from the second and third equations.
    pub derived_ratio: f64,
    /// `|b/a − stated_ratio|`
    pub stated_ratio_residual: f64,
    /// `|b/a − derived_ratio|`
    pub derived_ratio_residual: f64,
    /// `2b − a`
    pub two_b_minus_a: f64,
    /// `(2n − 5δ + 6)/(2ρ + δ − 2)`, the stated closed form for `2b − a`.
    pub stated_two_b_minus_a: f64,
}

pub fn perron_abc(p: ExtremalParams) -> Result<PerronAbc> {
    let (ni, di) = (p.n as i64, p.delta as i64);
    let q = template_matrix(CubicFamily::BdStar, ni, 0, di)?;
    let rho = threshold_rho_d(p)?.value;
    let m: Vec<f64> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| {
            let entry = q.get(i, j).to_f64().expect("finite");
            if i == j {
                entry - rho
            } else {
                entry
            }
        })
        .collect();
    // (M − ρI) is singular of rank 2; any two independent rows span the
    // orthogonal complement of the eigenvector, which is their cross product
    let row = |i: usize| [m[3 * i], m[3 * i + 1], m[3 * i + 2]];
    let cross = |u: [f64; 3], v: [f64; 3]| {
        [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
    };
    let candidates = [cross(row(1), row(2)), cross(row(0), row(2)), cross(row(0), row(1))];
    let x = candidates
        .into_iter()
        .max_by(|u, v| u[0].abs().total_cmp(&v[0].abs()))
        .expect("three candidates");
    if x[0] == 0.0 || !x.iter().all(|v| v.is_finite()) {
        return Err(Error::SolverFailure("degenerate eigenvector for the distance quotient".into()));
    }
    let (a, b, c) = (1.0, x[1] / x[0], x[2] / x[0]);
    if b <= 0.0 || c <= 0.0 {
        return Err(Error::SolverFailure(format!("eigenvector is not positive: ({a}, {b}, {c})")));
    }
    let v = [a, b, c];
    let mut equation_residuals = [0.0; 3];
    for (i, r) in equation_residuals.iter_mut().enumerate() {
        let lhs: f64 = (0..3).map(|j| q.get(i, j).to_f64().expect("finite") * v[j]).sum();
        *r = (lhs - rho * v[i]).abs() / rho;
    }
    let (n, d) = (p.n as f64, p.delta as f64);
    let stated_ratio = (rho + n - 2.0 * d + 2.0) / (2.0 * rho + d - 2.0);
    let derived_ratio = (rho + n - 2.0 * d + 2.0) / (2.0 * rho - d + 2.0);
    Ok(PerronAbc {
        a,
        b,
        c,
        rho,
        equation_residuals,
        stated_ratio,
        derived_ratio,
        stated_ratio_residual: (b / a - stated_ratio).abs(),
        derived_ratio_residual: (b / a - derived_ratio).abs(),
        two_b_minus_a: 2.0 * b - a,
        stated_two_b_minus_a: (2.0 * n - 5.0 * d + 6.0) / (2.0 * rho + d - 2.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, d: usize) -> ExtremalParams {
        ExtremalParams::new(n, d).unwrap()
    }

    #[test]
    fn extremal_construction() {
        let g = extremal_graph(p(8, 2));
        assert_eq!((g.n(), g.edge_count()), (8, 23));
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![7, 7, 6, 6, 6, 6, 6, 2]);
        assert_eq!(extremal_graph(p(14, 3)), Graph::complete(3).join(
            &Graph::complete(9).disjoint_union(&Graph::empty(2))
        ));
        for d in 2..6 {
            let g = extremal_graph(p(2 * d, d));
            assert_eq!(g, Graph::complete(d).join(&Graph::empty(d)));
            assert_eq!(g.min_degree(), d);
            assert!(g.is_connected());
        }
        assert!(ExtremalParams::new(7, 4).is_err());
        assert!(ExtremalParams::new(8, 1).is_err());
    }

    #[test]
    fn order_bounds_are_exact() {
        assert_eq!(theorem_1_min_order(2), 8);
        // δ = 3: 14 vs 9/4 + 3/2 + 6 = 9.75
        assert_eq!(theorem_1_min_order(3), 14);
        // δ = 30: 203 vs 225 + 15 + 6 = 246
        assert_eq!(theorem_1_min_order(30), 246);
        // δ = 25: 168 vs 156.25 + 12.5 + 6 = 174.75
        assert_eq!(theorem_1_min_order(25), 175);
        assert_eq!(theorem_2_min_order(2), 9);
        // δ = 23: 177 vs 529/3 + 3 = 179.33
        assert_eq!(theorem_2_min_order(23), 180);
        assert_eq!(min_even_order(TheoremId::T2, 2), 10);
        assert!(p(8, 2).meets_theorem_1_bound());
        assert!(!p(8, 2).meets_theorem_2_bound());
    }

    #[test]
    fn family_graphs() {
        for d in 2..5 {
            assert_eq!(g2_graph(20, d).unwrap(), extremal_graph(p(20, d)));
        }
        let f = FamilyParams::new(8, 2, 2, vec![5, 1]).unwrap();
        assert_eq!(
            family_graph(&f, Family::G1).unwrap(),
            Graph::complete(2).join(&Graph::complete(5).disjoint_union(&Graph::complete(1)))
        );
        assert_eq!(
            g3_graph(12, 2, 3).unwrap(),
            Graph::complete(2).join(&Graph::complete(8).disjoint_union(&Graph::complete(2)))
        );
        let f = FamilyParams::new(12, 2, 3, vec![7, 3]).unwrap();
        assert_eq!(family_graph(&f, Family::G3).unwrap(), g3_graph(12, 2, 3).unwrap());
        let f = FamilyParams::new(12, 2, 4, vec![9, 1]).unwrap();
        assert!(family_graph(&f, Family::G3).is_err());
        assert!(FamilyParams::new(8, 2, 2, vec![1, 5]).is_err());
        assert!(FamilyParams::new(8, 2, 2, vec![4, 2]).is_err());
        assert!(FamilyParams::new(9, 2, 2, vec![5, 1]).is_err());
        assert!(g3_graph(12, 3, 3).is_err());
    }

    #[test]
    fn thresholds() {
        let t = threshold_rho_q(p(8, 2)).unwrap();
        assert!(t.value > 12.0 && t.value < 13.0);
        assert!((t.value - rho_q(&extremal_graph(p(8, 2))).unwrap()).abs() < 1e-8);
        let t = threshold_rho_d(p(8, 2)).unwrap();
        assert!(t.value > 8.0 && t.value < 9.0 && t.value >= 7.0);
        assert!((t.value - rho_d(&extremal_graph(p(8, 2))).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn recognition() {
        assert!(recognize_extremal(&extremal_graph(p(8, 2)), 2));
        assert!(!recognize_extremal(&extremal_graph(p(8, 2)), 3));
        assert!(!recognize_extremal(&Graph::complete(8), 2));
        assert!(!recognize_extremal(&Graph::cycle(8).unwrap(), 2));
        assert!(recognize_extremal(&extremal_graph(p(6, 3)), 3));
        // relabeling keeps recognition
        let g = extremal_graph(p(10, 3));
        let perm = [9, 3, 7, 1, 0, 5, 2, 8, 4, 6];
        let h = Graph::from_edges(10, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert!(recognize_extremal(&h, 3));
        // the degree sequence of G* has a unique realization, so perturbations
        // necessarily move degrees: relocate one clique edge onto a pendant vertex
        let g = extremal_graph(p(10, 2));
        let h = g.without_edge(2, 3).unwrap().with_edge(2, 9).unwrap();
        assert!(!recognize_extremal(&h, 2));
        assert!(!recognize_extremal(&g.without_edge(4, 5).unwrap(), 2));
    }

    #[test]
    fn verdict_examples() {
        let v = check_theorem_1(&extremal_graph(p(8, 2)));
        assert!(v.hypotheses_met);
        assert_eq!(v.conclusion, Conclusion::ExtremalException);
        assert!(v.borderline);
        assert_eq!(v.oracle_status, Some(SearchStatus::Found));

        let v = check_theorem_1(&Graph::cycle(8).unwrap());
        assert!(v.hypotheses_met);
        assert!((v.spectral_value.unwrap() - 4.0).abs() < 1e-9);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);

        let v = check_theorem_1(&Graph::complete(8));
        assert!(!v.hypotheses_met);
        assert!(!v.hypotheses.order_bound);
        assert_eq!(v.conclusion, Conclusion::NotApplicable);

        let v = check_theorem_2(&extremal_graph(p(10, 2)));
        assert_eq!(v.conclusion, Conclusion::ExtremalException);
        let v = check_theorem_2(&Graph::complete(10).without_edge(0, 1).unwrap());
        assert_eq!(v.delta, 8);
        assert_eq!(v.conclusion, Conclusion::NotApplicable);

        let cfg = VerdictConfig { delta_override: Some(2), ..VerdictConfig::default() };
        let v = check_theorem(&Graph::complete(8), TheoremId::T1, &cfg);
        assert!(v.non_theorem_mode);
        assert_eq!(v.conclusion, Conclusion::EvenFactorGuaranteed);
    }

    #[test]
    fn perron_vector_of_the_distance_quotient() {
        let r = perron_abc(p(8, 2)).unwrap();
        assert!(r.two_b_minus_a > 0.0);
        assert!(r.equation_residuals.iter().all(|&e| e < 1e-12));
        // at δ = 2 the stated and derived ratios coincide
        assert!(r.stated_ratio_residual < 1e-10);
        let r = perron_abc(p(14, 3)).unwrap();
        assert!(r.derived_ratio_residual < 1e-10);
        assert!(r.two_b_minus_a > 0.0);
        assert!((r.b - 0.83327).abs() < 1e-4, "{}", r.b);
        assert!((r.stated_ratio - 0.78353).abs() < 1e-4);
    }
}
