use nalgebra::DMatrix;
use proptest::prelude::*;

use evenfactor::graph6::{from_graph6, to_graph6};
use evenfactor::oracle::{find_even_factor, is_even_factor, yan_kano, SearchStatus};
use evenfactor::quotient::{
    charpoly3, family_cubic, identity_check, largest_root, quotient_matrix, template_matrix, CubicFamily, Identity,
    Partition,
};
use evenfactor::sampler::{sample_graphs, SamplerConfig};
use evenfactor::spectral::{distance_matrix, rho_d, rho_q, signless_laplacian, wiener_index, SymMatrix};
use evenfactor::theorem::{extremal_graph, threshold_rho_d, threshold_rho_q, ExtremalParams};
use evenfactor::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn nalgebra_max(m: &SymMatrix) -> f64 {
    let k = m.order();
    let dm = DMatrix::from_row_slice(k, k, m.entries());
    dm.symmetric_eigen().eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Exhaustive search over all edge subsets.
fn brute_force_even_factor(g: &Graph) -> bool {
    let edges: Vec<_> = g.edges().collect();
    (0u32..1 << edges.len()).any(|mask| {
        let mut deg = vec![0u32; g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.iter().all(|&d| d > 0 && d % 2 == 0)
    })
}

fn star_params() -> impl Strategy<Value = ExtremalParams> {
    (2usize..=6).prop_flat_map(|d| (2 * d..=50usize).prop_map(move |n| ExtremalParams::new(n, d).unwrap()))
}

#[test]
fn yan_kano_condition_is_vacuous_on_two_vertices() {
    for g in [Graph::complete(2), Graph::empty(2)] {
        assert!(yan_kano(&g).holds);
        assert_eq!(find_even_factor(&g).status, SearchStatus::NoneExists);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn signless_radius_matches_dense_solver(g in graph(14)) {
        let ours = rho_q(&g).unwrap();
        let reference = nalgebra_max(&signless_laplacian(&g));
        prop_assert!((ours - reference).abs() <= 1e-8 * (1.0 + reference), "{} vs {}", ours, reference);
    }

    #[test]
    fn distance_radius_matches_dense_solver(g in connected(14)) {
        let ours = rho_d(&g).unwrap();
        let reference = nalgebra_max(&distance_matrix(&g).unwrap());
        prop_assert!((ours - reference).abs() <= 1e-8 * (1.0 + reference), "{} vs {}", ours, reference);
    }

    #[test]
    fn wiener_lower_bound(g in connected(14)) {
        let w = wiener_index(&g).unwrap() as f64;
        prop_assert!(rho_d(&g).unwrap() >= 2.0 * w / g.n() as f64 - 1e-9);
    }

    #[test]
    fn oracle_is_sound_and_complete(g in graph(7).prop_filter("few edges", |g| g.edge_count() <= 15)) {
        let cert = find_even_factor(&g);
        prop_assert_ne!(cert.status, SearchStatus::SearchCapExceeded);
        let found = cert.status == SearchStatus::Found;
        prop_assert_eq!(found, brute_force_even_factor(&g));
        if let Some(edges) = &cert.edges {
            prop_assert!(is_even_factor(&g, edges).unwrap());
        }
    }

    #[test]
    fn adding_an_edge_keeps_an_even_factor(g in graph(10), pick in any::<prop::sample::Index>()) {
        let missing = g.non_edges();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        if find_even_factor(&g).status == SearchStatus::Found {
            prop_assert_eq!(find_even_factor(&g.with_edge(u, v).unwrap()).status, SearchStatus::Found);
        }
    }

    #[test]
    fn oracle_is_deterministic(g in graph(12)) {
        prop_assert_eq!(find_even_factor(&g), find_even_factor(&g));
        prop_assert_eq!(yan_kano(&g), yan_kano(&g));
    }

    #[test]
    fn yan_kano_implies_even_factor(g in graph(10).prop_filter("even order ≥ 4", |g| g.n() >= 4 && g.n() % 2 == 0)) {
        if yan_kano(&g).holds {
            prop_assert_eq!(find_even_factor(&g).status, SearchStatus::Found);
        }
    }

    #[test]
    fn sampler_is_deterministic(n in 4usize..12, seed in any::<u64>()) {
        let cfg = SamplerConfig::new(n, seed);
        prop_assert_eq!(sample_graphs(cfg, 5), sample_graphs(cfg, 5));
    }

    #[test]
    fn family_cubics_are_characteristic_polynomials(
        family in prop::sample::select(CubicFamily::ALL.to_vec()),
        d in 2i64..=8,
        s in 1i64..=12,
        n in 4i64..=70,
    ) {
        prop_assume!(family.validate(n, s, d).is_ok());
        let q = template_matrix(family, n, s, d).unwrap();
        prop_assert_eq!(charpoly3(&q).unwrap(), family_cubic(family, n, s, d).unwrap());
    }

    #[test]
    fn identities_hold_at_random_points(
        identity in prop::sample::select(Identity::ALL.to_vec()),
        d in 2i64..=8,
        s in 2i64..=16,
        n in 4i64..=80,
        x in -200.0f64..400.0,
    ) {
        prop_assume!(identity.validate(n, s, d).is_ok());
        prop_assert!(identity_check(identity, n, s, d, &[x]).unwrap() <= 1e-6);
    }

    #[test]
    fn root_is_stable_under_bracket_refinement(p in star_params(), cut in 0.0f64..0.999) {
        let t = threshold_rho_q(p).unwrap();
        let (lo, hi) = t.bracket;
        let narrowed = lo + cut * (t.value - lo);
        let refined = largest_root(&t.cubic, narrowed, hi).unwrap();
        prop_assert!((refined - t.value).abs() <= 1e-12 * t.value);
        let top = largest_root(&t.cubic, narrowed, t.value + 1.0).unwrap();
        prop_assert!((top - t.value).abs() <= 1e-12 * t.value);
    }

    #[test]
    fn thresholds_match_the_extremal_graph(p in star_params()) {
        let g = extremal_graph(p);
        prop_assert!((threshold_rho_q(p).unwrap().value - rho_q(&g).unwrap()).abs() <= 1e-8);
        prop_assert!((threshold_rho_d(p).unwrap().value - rho_d(&g).unwrap()).abs() <= 1e-8);
    }

    #[test]
    fn equitable_quotient_keeps_the_perron_value(p in star_params()) {
        let (n, d) = (p.n, p.delta);
        let g = extremal_graph(p);
        let partition = Partition::consecutive(&[d, n - 2 * d + 1, d - 1]).unwrap();
        for m in [signless_laplacian(&g), distance_matrix(&g).unwrap()] {
            let q = quotient_matrix(&m, &partition).unwrap();
            prop_assert!(q.is_equitable());
            let value = q.perron().unwrap().value;
            prop_assert!((value - nalgebra_max(&m)).abs() <= 1e-8 * (1.0 + value));
        }
    }
}
