use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{MalformedLine, RunReport, Violation};
use crate::graph::Graph;
use crate::graph6::{to_graph6, CorpusEntry};
use crate::lemmas::{lemma_suite, LemmaGrid};
use crate::oracle::{find_even_factor_with, yan_kano, OracleConfig, SearchStatus};
use crate::sampler::{Sampler, SamplerConfig};
use crate::spectral::{rho_d, rho_q, wiener_index};
use crate::theorem::{
    check_theorem, extremal_graph, min_even_order, threshold_rho_d, threshold_rho_q, Conclusion, ExtremalParams,
    OracleMode, TheoremId, TheoremVerdict, VerdictConfig,
};

/// Largest order for which the `oracle` command also evaluates the
/// Yan–Kano condition.
pub const YAN_KANO_MAX_ORDER: usize = 24;

fn malformed(report: &mut RunReport, entries: &[CorpusEntry]) {
    for e in entries {
        if let Err(err) = &e.graph {
            report.malformed.push(MalformedLine { line_no: e.line_no, text: e.text.clone(), error: err.to_string() });
        }
    }
}

fn valid(entries: &[CorpusEntry]) -> Vec<(usize, &str, &Graph)> {
    entries
        .iter()
        .filter_map(|e| e.graph.as_ref().ok().map(|g| (e.line_no, e.text.as_str(), g)))
        .collect()
}

#[derive(Serialize)]
struct SpectraRow<'a> {
    line: usize,
    graph6: &'a str,
    n: usize,
    m: usize,
    min_degree: usize,
    connected: bool,
    rho_q: Option<f64>,
    wiener: Option<u64>,
    rho_d: Option<f64>,
    tolerance: f64,
}

/// `n, m, δ, ρ_Q, W, ρ_D` per graph; distance quantities are null for
/// disconnected graphs.
pub fn spectra(entries: &[CorpusEntry], tolerance: f64) -> RunReport {
    let mut report = RunReport::new("spectra", serde_json::json!({ "tolerance": tolerance }));
    report.inputs = entries.len();
    malformed(&mut report, entries);
    let rows: Vec<_> = valid(entries)
        .into_par_iter()
        .map(|(line, text, g)| {
            let connected = g.n() > 0 && g.is_connected();
            SpectraRow {
                line,
                graph6: text,
                n: g.n(),
                m: g.edge_count(),
                min_degree: g.min_degree(),
                connected,
                rho_q: (g.n() > 0).then(|| rho_q(g).expect("signless Laplacian converges")),
                wiener: connected.then(|| wiener_index(g).expect("connected")),
                rho_d: connected.then(|| rho_d(g).expect("connected")),
                tolerance,
            }
        })
        .collect();
    for row in rows {
        report.push_row(row);
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CertifyConfig {
    pub theorem: TheoremId,
    pub verdict: VerdictConfig,
}

impl CertifyConfig {
    pub fn new(theorem: TheoremId) -> Self {
        CertifyConfig { theorem, verdict: VerdictConfig::default() }
    }
}

#[derive(Serialize)]
struct VerdictRow<'a> {
    line: usize,
    graph6: &'a str,
    n: usize,
    delta: usize,
    connected: bool,
    even_order: bool,
    order_bound: bool,
    hypotheses_met: bool,
    spectral_value: Option<f64>,
    threshold: Option<f64>,
    margin: Option<f64>,
    borderline: bool,
    conclusion: &'static str,
    oracle_status: Option<&'static str>,
    non_theorem_mode: bool,
    tolerance: f64,
}

fn verdict_row<'a>(line: usize, text: &'a str, g: &Graph, v: &TheoremVerdict, tolerance: f64) -> VerdictRow<'a> {
    VerdictRow {
        line,
        graph6: text,
        n: g.n(),
        delta: v.delta,
        connected: v.hypotheses.connected,
        even_order: v.hypotheses.even_order,
        order_bound: v.hypotheses.order_bound,
        hypotheses_met: v.hypotheses_met,
        spectral_value: v.spectral_value,
        threshold: v.threshold,
        margin: v.margin,
        borderline: v.borderline,
        conclusion: v.conclusion.as_str(),
        oracle_status: v.oracle_status.map(SearchStatus::as_str),
        non_theorem_mode: v.non_theorem_mode,
        tolerance,
    }
}

fn violation_for(line: Option<usize>, text: &str, v: &TheoremVerdict, tolerance: f64) -> Violation {
    Violation {
        line_no: line,
        subject: text.to_string(),
        detail: format!(
            "theorem {} guarantees an even factor (δ={}, threshold {:?}) but the oracle proved none exists",
            v.theorem.number(),
            v.delta,
            v.threshold
        ),
        spectral_value: v.spectral_value,
        oracle_status: v.oracle_status.map(|s| s.as_str().to_string()),
        tolerance,
    }
}

fn tally(report: &mut RunReport, v: &TheoremVerdict) {
    report.bump(v.conclusion.as_str());
    if let Some(status) = v.oracle_status {
        report.bump(format!("oracle_{}", status.as_str()));
    }
    if v.borderline {
        report.bump("borderline");
    }
}

/// Theorem verdict per graph, with oracle cross-checks as configured.
pub fn certify(entries: &[CorpusEntry], cfg: &CertifyConfig) -> RunReport {
    let mut report = RunReport::new("certify", cfg);
    report.inputs = entries.len();
    malformed(&mut report, entries);
    for c in Conclusion::ALL {
        report.counts.insert(c.as_str().to_string(), 0);
    }
    let verdicts: Vec<_> = valid(entries)
        .into_par_iter()
        .map(|(line, text, g)| (line, text, g, check_theorem(g, cfg.theorem, &cfg.verdict)))
        .collect();
    let tol = cfg.verdict.eps;
    for (line, text, g, v) in verdicts {
        tally(&mut report, &v);
        if v.is_violation() {
            report.violations.push(violation_for(Some(line), text, &v, tol));
        }
        report.push_row(verdict_row(line, text, g, &v, tol));
    }
    if cfg.verdict.delta_override.is_some() {
        report.notes.push("delta override active: verdicts are diagnostics, not theorem verdicts".into());
    }
    report
}

/// Where `scan` takes its graphs from.
#[derive(Clone, Debug)]
pub enum ScanSource {
    Corpus(Vec<CorpusEntry>),
    Sampler { sample_size: usize, seed: u64, p_range: (f64, f64) },
}

#[derive(Serialize)]
struct ScanEcho {
    n: usize,
    source: &'static str,
    sample_size: Option<usize>,
    seed: Option<u64>,
    p_range: Option<(f64, f64)>,
    #[serde(flatten)]
    certify: CertifyConfig,
}

/// Verdict counts over a corpus or a seeded sample, with every graph that
/// meets the spectral condition checked by the oracle. Only violations are
/// listed individually.
pub fn scan(n: usize, source: ScanSource, cfg: &CertifyConfig) -> RunReport {
    let mut cfg = *cfg;
    if cfg.verdict.oracle == OracleMode::Borderline {
        cfg.verdict.oracle = OracleMode::ConditionMet;
    }
    let echo = match &source {
        ScanSource::Corpus(_) => {
            ScanEcho { n, source: "corpus", sample_size: None, seed: None, p_range: None, certify: cfg }
        }
        ScanSource::Sampler { sample_size, seed, p_range } => ScanEcho {
            n,
            source: "sampler",
            sample_size: Some(*sample_size),
            seed: Some(*seed),
            p_range: Some(*p_range),
            certify: cfg,
        },
    };
    let mut report = RunReport::new("scan", echo);
    for c in Conclusion::ALL {
        report.counts.insert(c.as_str().to_string(), 0);
    }
    let graphs: Vec<(Option<usize>, Graph)> = match source {
        ScanSource::Corpus(entries) => {
            report.inputs = entries.len();
            malformed(&mut report, &entries);
            let mut kept = Vec::new();
            for e in entries {
                if let Ok(g) = e.graph {
                    if g.n() == n {
                        kept.push((Some(e.line_no), g));
                    } else {
                        report.malformed.push(MalformedLine {
                            line_no: e.line_no,
                            text: e.text,
                            error: format!("graph has order {}, scan expects {n}", g.n()),
                        });
                    }
                }
            }
            kept
        }
        ScanSource::Sampler { sample_size, seed, p_range } => {
            let mut sampler = Sampler::new(SamplerConfig { n, p_range, min_degree: 2, seed });
            let graphs: Vec<_> = sampler.by_ref().take(sample_size).map(|g| (None, g)).collect();
            report.inputs = graphs.len();
            report.counts.insert("sampler_attempts".into(), sampler.attempts());
            graphs
        }
    };
    let verdicts: Vec<_> =
        graphs.into_par_iter().map(|(line, g)| (line, check_theorem(&g, cfg.theorem, &cfg.verdict), g)).collect();
    for (line, v, g) in verdicts {
        tally(&mut report, &v);
        if v.is_violation() {
            let text = to_graph6(&g).unwrap_or_default();
            report.violations.push(violation_for(line, &text, &v, cfg.verdict.eps));
        }
    }
    report
}

/// Lemma suite: one row per lemma with its worst margin; each failing grid
/// point is a violation.
pub fn lemmas(grid: &LemmaGrid) -> RunReport {
    #[derive(Serialize)]
    struct Echo {
        lemmas: Vec<&'static str>,
        deltas: (usize, usize),
        max_n: usize,
        join_max_n: usize,
        random_samples: usize,
        random_orders: (usize, usize),
        seed: u64,
        corpus_graphs: usize,
    }
    let echo = Echo {
        lemmas: grid.lemmas.iter().map(|l| l.label()).collect(),
        deltas: (*grid.deltas.start(), *grid.deltas.end()),
        max_n: grid.max_n,
        join_max_n: grid.join_max_n,
        random_samples: grid.random_samples,
        random_orders: (*grid.random_orders.start(), *grid.random_orders.end()),
        seed: grid.seed,
        corpus_graphs: grid.corpus.len(),
    };
    let mut report = RunReport::new("lemmas", echo);
    let outcome = lemma_suite(grid);
    report.inputs = outcome.outcomes.len();

    #[derive(Serialize)]
    struct Row {
        lemma: &'static str,
        checked: usize,
        failed: usize,
        min_margin: Option<f64>,
    }
    for s in outcome.summary() {
        report.counts.insert(format!("{}_checked", s.lemma.label()), s.checked as u64);
        report.push_row(Row { lemma: s.lemma.label(), checked: s.checked, failed: s.failed, min_margin: s.min_margin });
    }
    for f in outcome.failures() {
        report.violations.push(Violation {
            line_no: None,
            subject: f.point.clone(),
            detail: format!("{} margin {:e}", f.lemma.label(), f.margin),
            spectral_value: None,
            oracle_status: None,
            tolerance: f.tolerance,
        });
    }
    report
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalTableConfig {
    pub deltas: RangeInclusive<usize>,
    /// Smallest order; defaults to the first even order admitted by the
    /// signless Laplacian bound for each δ.
    pub n_min: Option<usize>,
    pub n_max: usize,
    pub oracle_cap: u64,
    pub tolerance: f64,
}

impl Default for ExtremalTableConfig {
    fn default() -> Self {
        ExtremalTableConfig {
            deltas: 2..=4,
            n_min: None,
            n_max: 40,
            oracle_cap: OracleConfig::default().node_cap,
            tolerance: 1e-8,
        }
    }
}

#[derive(Serialize)]
struct ExtremalRow {
    n: usize,
    delta: usize,
    rho_q_threshold: Option<f64>,
    rho_q_graph: f64,
    rho_d_threshold: Option<f64>,
    rho_d_graph: f64,
    theorem_1_bound: bool,
    theorem_2_bound: bool,
    bracket_check: &'static str,
    rho_d_lower_check: &'static str,
    even_factor_status: &'static str,
    nodes_explored: u64,
    tolerance: f64,
}

/// Extremal-graph table: both thresholds, the bracket checks and the
/// oracle's verdict on the extremal graph itself.
pub fn extremal(cfg: &ExtremalTableConfig) -> RunReport {
    let mut report = RunReport::new("extremal", cfg);
    let mut points = Vec::new();
    for d in cfg.deltas.clone() {
        let start = cfg.n_min.unwrap_or_else(|| min_even_order(TheoremId::T1, d)).max(2 * d);
        for n in (start + start % 2..=cfg.n_max).step_by(2) {
            points.push(ExtremalParams::new(n, d).expect("n ≥ 2δ"));
        }
    }
    report.inputs = points.len();
    let tol = cfg.tolerance;
    let results: Vec<_> = points
        .into_par_iter()
        .map(|p| {
            let g = extremal_graph(p);
            let tq = threshold_rho_q(p);
            let td = threshold_rho_d(p);
            let rq = rho_q(&g).expect("converges");
            let rd = rho_d(&g).expect("connected");
            let cert = find_even_factor_with(&g, &OracleConfig { node_cap: cfg.oracle_cap });
            (p, tq, td, rq, rd, cert)
        })
        .collect();
    let mut statuses = [0usize; 3];
    for (p, tq, td, rq, rd, cert) in results {
        let (n, d) = (p.n as f64, p.delta as f64);
        let subject = format!("n={} δ={}", p.n, p.delta);
        let mut fail = |detail: String| {
            report.violations.push(Violation {
                line_no: None,
                subject: subject.clone(),
                detail,
                spectral_value: None,
                oracle_status: Some(cert.status.as_str().to_string()),
                tolerance: tol,
            })
        };
        let tq = match tq {
            Ok(t) => Some(t.value),
            Err(e) => {
                fail(format!("ρ_Q threshold: {e}"));
                None
            }
        };
        let td = match td {
            Ok(t) => Some(t.value),
            Err(e) => {
                fail(format!("ρ_D threshold: {e}"));
                None
            }
        };
        if let Some(t) = tq {
            if (t - rq).abs() > tol {
                fail(format!("ρ_Q threshold {t} differs from the graph's {rq}"));
            }
        }
        if let Some(t) = td {
            if (t - rd).abs() > tol {
                fail(format!("ρ_D threshold {t} differs from the graph's {rd}"));
            }
        }
        let bracket_check = if p.n + 7 < 7 * p.delta {
            "n/a"
        } else if tq.is_some_and(|t| 2.0 * n - 2.0 * d < t && t < 2.0 * n - d) {
            "pass"
        } else {
            fail(format!("ρ_Q threshold {tq:?} outside ({}, {})", 2.0 * n - 2.0 * d, 2.0 * n - d));
            "fail"
        };
        let rho_d_lower_check = if td.is_some_and(|t| t >= n + d - 3.0 - tol) {
            "pass"
        } else {
            fail(format!("ρ_D threshold {td:?} below n + δ − 3 = {}", n + d - 3.0));
            "fail"
        };
        statuses[match cert.status {
            SearchStatus::Found => 0,
            SearchStatus::NoneExists => 1,
            SearchStatus::SearchCapExceeded => 2,
        }] += 1;
        report.bump(format!("even_factor_{}", cert.status.as_str()));
        report.push_row(ExtremalRow {
            n: p.n,
            delta: p.delta,
            rho_q_threshold: tq,
            rho_q_graph: rq,
            rho_d_threshold: td,
            rho_d_graph: rd,
            theorem_1_bound: p.meets_theorem_1_bound(),
            theorem_2_bound: p.meets_theorem_2_bound(),
            bracket_check,
            rho_d_lower_check,
            even_factor_status: cert.status.as_str(),
            nodes_explored: cert.nodes_explored,
            tolerance: tol,
        });
    }
    report.notes.push(
        "Both theorems exclude the extremal graph itself (\"unless G is isomorphic to K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)\"). \
         That wording fits both an extremal graph without an even factor and an exclusion that never bites. \
         The even_factor_status column settles the question at each grid point without assuming either reading."
            .into(),
    );
    report.notes.push(format!(
        "extremal graphs with an even factor: {} of {}; without: {}; undecided at the node cap: {}",
        statuses[0], report.inputs, statuses[1], statuses[2]
    ));
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OracleCommandConfig {
    pub node_cap: u64,
    pub yan_kano_max_order: usize,
}

impl Default for OracleCommandConfig {
    fn default() -> Self {
        OracleCommandConfig { node_cap: OracleConfig::default().node_cap, yan_kano_max_order: YAN_KANO_MAX_ORDER }
    }
}

#[derive(Serialize)]
struct OracleRow<'a> {
    line: usize,
    graph6: &'a str,
    n: usize,
    m: usize,
    min_degree: usize,
    status: &'static str,
    nodes_explored: u64,
    yan_kano: Option<bool>,
    witness: Option<String>,
    factor: Option<String>,
}

fn join_pairs(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

/// Direct even-factor search per graph, alongside the Yan–Kano condition.
/// An even-order graph satisfying the condition without an even factor is a
/// violation; for odd orders the same situation is only counted.
pub fn oracle(entries: &[CorpusEntry], cfg: &OracleCommandConfig) -> RunReport {
    let mut report = RunReport::new("oracle", cfg);
    report.inputs = entries.len();
    malformed(&mut report, entries);
    let results: Vec<_> = valid(entries)
        .into_par_iter()
        .map(|(line, text, g)| {
            let cert = find_even_factor_with(g, &OracleConfig { node_cap: cfg.node_cap });
            let yk = (g.n() <= cfg.yan_kano_max_order).then(|| yan_kano(g));
            (line, text, g, cert, yk)
        })
        .collect();
    for (line, text, g, cert, yk) in results {
        report.bump(cert.status.as_str());
        if let Some(r) = &yk {
            if r.holds && cert.status == SearchStatus::NoneExists {
                if g.n() % 2 == 0 {
                    report.violations.push(Violation {
                        line_no: Some(line),
                        subject: text.to_string(),
                        detail: "Yan–Kano condition holds on an even-order graph without an even factor".into(),
                        spectral_value: None,
                        oracle_status: Some(cert.status.as_str().to_string()),
                        tolerance: 0.0,
                    });
                } else {
                    report.bump("odd_order_condition_holds_without_factor");
                }
            }
        }
        report.push_row(OracleRow {
            line,
            graph6: text,
            n: g.n(),
            m: g.edge_count(),
            min_degree: g.min_degree(),
            status: cert.status.as_str(),
            nodes_explored: cert.nodes_explored,
            yan_kano: yk.as_ref().map(|r| r.holds),
            witness: yk.and_then(|r| r.witness).map(|w| {
                w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            }),
            factor: cert.edges.as_deref().map(join_pairs),
        });
    }
    report
}
