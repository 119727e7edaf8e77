//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Pass criterion numbers as arguments to run a subset, e.g.
//! `cargo test --test acceptance -- 3 7`.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use evenfactor::graph6::load_graphs;
use evenfactor::harness::{extremal, ExtremalTableConfig};
use evenfactor::lemmas::{edge_additions, edge_deletions};
use evenfactor::oracle::{find_even_factor, yan_kano, SearchStatus};
use evenfactor::quotient::{family_cubic, identity_check, CubicFamily, Identity};
use evenfactor::sampler::{sample_graphs, SamplerConfig};
use evenfactor::spectral::{rho_d, rho_q};
use evenfactor::theorem::{
    extremal_graph, perron_abc, recognize_extremal, theorem_1_min_order, theorem_2_min_order, threshold_rho_d,
    threshold_rho_q, ExtremalParams,
};
use evenfactor::Graph;

const THRESHOLD_TOL: f64 = 1e-8;
const IDENTITY_TOL: f64 = 1e-6;
const RATIO_TOL: f64 = 1e-10;
const MAX_N: usize = 60;
const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn corpus(n: usize) -> Vec<Graph> {
    let path = format!("{}/data/connected_n{n}.g6", env!("CARGO_MANIFEST_DIR"));
    load_graphs(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn even_orders(from: i64, to: usize) -> impl Iterator<Item = usize> {
    let start = from.max(0) as usize;
    (start + start % 2..=to).step_by(2)
}

fn grid(min_order: fn(usize) -> i64, deltas: std::ops::RangeInclusive<usize>) -> Vec<ExtremalParams> {
    deltas
        .flat_map(|d| even_orders(min_order(d), MAX_N).map(move |n| ExtremalParams::new(n, d).unwrap()))
        .collect()
}

fn threshold_consistency() -> Outcome {
    let points = grid(theorem_1_min_order, 2..=6);
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for &p in &points {
        let t = threshold_rho_q(p).unwrap().value;
        let full = rho_q(&extremal_graph(p)).unwrap();
        let (n, d) = (p.n as f64, p.delta as f64);
        worst = worst.max((t - full).abs());
        if (t - full).abs() > THRESHOLD_TOL || !(2.0 * n - 2.0 * d < t && t < 2.0 * n - d) {
            bad.push(format!("(n={}, δ={})", p.n, p.delta));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "ρ_Q threshold vs full matrix at {} points: max |Δ| = {worst:.1e} (tol {THRESHOLD_TOL:e}), \
             2n−2δ < ρ_Q < 2n−δ; failing points: {bad:?}",
            points.len()
        ),
    )
}

fn distance_analogue() -> Outcome {
    let points = grid(theorem_2_min_order, 2..=6);
    let mut worst: f64 = 0.0;
    let mut min_gap = f64::INFINITY;
    let mut bad = Vec::new();
    for &p in &points {
        let t = threshold_rho_d(p).unwrap().value;
        let full = rho_d(&extremal_graph(p)).unwrap();
        let gap = t - (p.n + p.delta - 3) as f64;
        worst = worst.max((t - full).abs());
        min_gap = min_gap.min(gap);
        if (t - full).abs() > THRESHOLD_TOL || gap < 0.0 {
            bad.push(format!("(n={}, δ={})", p.n, p.delta));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "ρ_D threshold vs full matrix at {} points: max |Δ| = {worst:.1e} (tol {THRESHOLD_TOL:e}), \
             min ρ_D − (n+δ−3) = {min_gap:.4}; failing points: {bad:?}",
            points.len()
        ),
    )
}

fn yan_kano_exhaustive() -> Outcome {
    let mut parts = Vec::new();
    let mut violations = 0;
    for n in [4, 6, 8] {
        let graphs = corpus(n);
        let (holds, bad) = graphs
            .par_iter()
            .filter(|g| yan_kano(g).holds)
            .map(|g| (1usize, usize::from(find_even_factor(g).status != SearchStatus::Found)))
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        violations += bad;
        parts.push(format!("n={n}: {} graphs, {holds} satisfy the condition, {bad} without a factor", graphs.len()));
    }
    outcome(violations == 0, format!("Yan–Kano ⇒ even factor; {}", parts.join("; ")))
}

fn signless_theorem_exhaustive() -> Outcome {
    let p = ExtremalParams::new(8, 2).unwrap();
    let threshold = threshold_rho_q(p).unwrap().value;
    let graphs: Vec<Graph> = corpus(8).into_iter().filter(|g| g.min_degree() == 2).collect();
    let results: Vec<(bool, bool, bool)> = graphs
        .par_iter()
        .map(|g| {
            let met = rho_q(g).unwrap() >= threshold - THRESHOLD_TOL;
            if !met {
                return (false, false, false);
            }
            let found = find_even_factor(g).status == SearchStatus::Found;
            let extremal = recognize_extremal(g, 2);
            (true, extremal, !(found || extremal))
        })
        .collect();
    let met = results.iter().filter(|r| r.0).count();
    let extremal = results.iter().filter(|r| r.1).count();
    let violations = results.iter().filter(|r| r.2).count();
    outcome(
        violations == 0,
        format!(
            "n=8, δ=2: {} graphs, {met} with ρ_Q ≥ {threshold:.10} − {THRESHOLD_TOL:e} ({extremal} extremal), \
             {violations} violations",
            graphs.len()
        ),
    )
}

fn distance_theorem_sampled() -> Outcome {
    const SAMPLES: usize = 100_000;
    let n = 10;
    let (graphs, attempts) = sample_graphs(SamplerConfig::new(n, SEED), SAMPLES);
    let results: Vec<(bool, bool, bool)> = graphs
        .par_iter()
        .map(|g| {
            let d = g.min_degree();
            let admitted = (n as i64) >= theorem_2_min_order(d);
            if !admitted {
                return (false, false, false);
            }
            let threshold = threshold_rho_d(ExtremalParams::new(n, d).unwrap()).unwrap().value;
            if rho_d(g).unwrap() > threshold + THRESHOLD_TOL {
                return (true, false, false);
            }
            let ok = find_even_factor(g).status == SearchStatus::Found || recognize_extremal(g, d);
            (true, true, !ok)
        })
        .collect();
    let admitted = results.iter().filter(|r| r.0).count();
    let met = results.iter().filter(|r| r.1).count();
    let violations = results.iter().filter(|r| r.2).count();
    outcome(
        graphs.len() == SAMPLES && violations == 0,
        format!(
            "n=10, seed {SEED}: {} samples ({attempts} draws), {admitted} within the order bound, \
             {met} with ρ_D ≤ threshold + {THRESHOLD_TOL:e}, {violations} violations",
            graphs.len()
        ),
    )
}

fn identity_suite() -> Outcome {
    const DRAWS: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut parts = Vec::new();
    let mut pass = true;
    for identity in Identity::ALL {
        let mut worst: f64 = 0.0;
        let mut drawn = 0;
        while drawn < DRAWS {
            let delta: i64 = rng.random_range(2..=6);
            let s: i64 = match identity {
                Identity::SignlessG2 | Identity::DistanceG2 => rng.random_range(delta..=3 * delta),
                Identity::SignlessG3 | Identity::DistanceG3 => rng.random_range(2..=delta.max(3) - 1),
            };
            let n: i64 = rng.random_range(2 * delta..=MAX_N as i64 + 2 * s);
            if identity.validate(n, s, delta).is_err() {
                continue;
            }
            let x: f64 = rng.random_range(-(n as f64)..=4.0 * n as f64);
            worst = worst.max(identity_check(identity, n, s, delta, &[x]).unwrap());
            drawn += 1;
        }
        pass &= worst <= IDENTITY_TOL;
        parts.push(format!("{identity:?} max {worst:.1e}"));
    }

    let mut exact_zero = true;
    for delta in 2..=6i64 {
        for n in 2 * delta..=MAX_N as i64 {
            exact_zero &= family_cubic(CubicFamily::Aq2, n, delta, delta).unwrap()
                == family_cubic(CubicFamily::AqStar, n, 0, delta).unwrap();
            exact_zero &= family_cubic(CubicFamily::Bd2, n, delta, delta).unwrap()
                == family_cubic(CubicFamily::BdStar, n, 0, delta).unwrap();
        }
    }
    outcome(
        pass && exact_zero,
        format!(
            "{DRAWS} draws each, relative residual tol {IDENTITY_TOL:e}: {}; s = δ gives identical cubics: {exact_zero}",
            parts.join(", ")
        ),
    )
}

fn perron_positivity() -> Outcome {
    let points = grid(theorem_2_min_order, 3..=6);
    let abc: Vec<_> = points.iter().map(|&p| (p, perron_abc(p).unwrap())).collect();
    let positive = abc.iter().filter(|(_, r)| r.two_b_minus_a > 0.0).count();
    let stated_ok = abc.iter().filter(|(_, r)| r.stated_ratio_residual <= RATIO_TOL).count();
    let derived_ok = abc.iter().filter(|(_, r)| r.derived_ratio_residual <= RATIO_TOL).count();
    let (worst_p, worst) = abc
        .iter()
        .map(|(p, r)| (p, r.stated_ratio_residual))
        .fold((&points[0], 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    let total = points.len();
    outcome(
        positive == total && stated_ok == total,
        format!(
            "{total} points (δ ∈ 3..=6): 2b − a > 0 at {positive}; closed form b/a = (ρ+n−2δ+2)/(2ρ+δ−2) within \
             {RATIO_TOL:e} at {stated_ok} (worst {worst:.2e} at n={}, δ={}); \
             b/a = (ρ+n−2δ+2)/(2ρ−δ+2) within {RATIO_TOL:e} at {derived_ok}",
            worst_p.n, worst_p.delta
        ),
    )
}

fn monotonicity() -> Outcome {
    let add = edge_additions(1000, 5..=12, SEED);
    let del = edge_deletions(1000, 5..=12, SEED);
    let min = |v: &[evenfactor::lemmas::LemmaOutcome]| v.iter().map(|o| o.margin).fold(f64::INFINITY, f64::min);
    let (ma, md) = (min(&add), min(&del));
    outcome(
        add.len() == 1000 && del.len() == 1000 && ma > 0.0 && md > 0.0,
        format!(
            "{} edge additions raise ρ_Q (min margin {ma:.4e}); {} non-bridge deletions raise ρ_D (min margin {md:.4e})",
            add.len(),
            del.len()
        ),
    )
}

fn extremal_table() -> Outcome {
    let cfg = ExtremalTableConfig { deltas: 2..=6, n_max: MAX_N, ..ExtremalTableConfig::default() };
    let report = extremal(&cfg);
    let recorded = report.rows.iter().filter(|r| r.get("even_factor_status").is_some_and(|v| v.is_string())).count();
    let cross_ref = report.notes.iter().any(|n| n.contains("unless"));
    let get = |k: &str| report.counts.get(k).copied().unwrap_or(0);
    outcome(
        !report.rows.is_empty() && recorded == report.rows.len() && cross_ref && report.success(),
        format!(
            "{} extremal graphs (δ ∈ 2..=6, n ≤ {MAX_N}): Found {}, NoneExists {}, cap exceeded {}; \
             'unless' clause note present: {cross_ref}",
            report.rows.len(),
            get("even_factor_Found"),
            get("even_factor_NoneExists"),
            get("even_factor_SearchCapExceeded")
        ),
    )
}

type Criterion = (u8, &'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 9] = [
    (1, "threshold consistency", threshold_consistency),
    (2, "distance analogue", distance_analogue),
    (3, "Yan–Kano implication, exhaustive", yan_kano_exhaustive),
    (4, "signless Laplacian theorem, exhaustive n=8", signless_theorem_exhaustive),
    (5, "distance theorem, sampled n=10", distance_theorem_sampled),
    (6, "identity suite", identity_suite),
    (7, "Perron positivity", perron_positivity),
    (8, "monotonicity suites", monotonicity),
    (9, "extremal-status table", extremal_table),
];

fn main() -> ExitCode {
    let selected: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, run) in CRITERIA {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("{verdict} [{id}] {name} ({:.1}s): {}", start.elapsed().as_secs_f64(), o.detail);
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
