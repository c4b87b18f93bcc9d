mod common;

use pebbling::generators::gnp_sample;
use pebbling::graph::{find_isomorphism, is_isomorphic, max_disjoint_paths, min_vertex_separator, vertex_connectivity};
use pebbling::number::enumerate_distributions;
use pebbling::proof::{audit_counterexample, blowup_graph, claim1_family, min_separator, zub_partition, Verdict};
use pebbling::solver::{can_pebble, verify_certificate, weight, TargetSolver};
use pebbling::{Distribution, Graph};
use proptest::prelude::*;
use proptest::sample::Index;

fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, pairs.zip(mask).filter(|(_, &on)| on).map(|(e, _)| e)).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |m| graph_from_mask(n, &m))
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn counts(n: usize, max_each: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_each, n)
}

fn graph_and_counts(max_n: usize, max_each: u32) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), counts(n, max_each))
    })
}

fn permute(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 300,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn menger_duality(g in graph(7), s in any::<Index>(), t in any::<Index>()) {
        let (s, t) = (s.index(g.n()), t.index(g.n()));
        prop_assume!(s != t && !g.has_edge(s, t));
        let paths = max_disjoint_paths(&g, s, t, &[]).unwrap();
        let cut = min_vertex_separator(&g, s, t, &[]).unwrap();
        prop_assert_eq!(paths.len(), cut.len());
        prop_assert_eq!(cut.len(), common::min_separator_size(&g, s, t));
        let mut used = vec![false; g.n()];
        for p in &paths {
            prop_assert!(p.is_valid_in(&g));
            prop_assert_eq!((p.start(), p.end()), (s, t));
            for &x in p.interior() {
                prop_assert!(!used[x]);
                used[x] = true;
            }
        }
    }

    #[test]
    fn connectivity_matches_brute_force(g in graph(7)) {
        let k = vertex_connectivity(&g).unwrap();
        prop_assert!(k <= g.min_degree());
        prop_assert_eq!(k, common::vertex_connectivity(&g));
    }

    #[test]
    fn isomorphism_under_relabelling(g in graph(7), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = permute(&g, &perm);
        let map = find_isomorphism(&g, &h).expect("relabelling is an isomorphism");
        prop_assert!(g.edges().all(|(u, v)| h.has_edge(map[u], map[v])));
        if n <= 6 {
            let other = graph_from_mask(n, &(0..n * (n - 1) / 2).map(|i| (seed >> (i % 64)) & 1 == 1).collect::<Vec<_>>());
            prop_assert_eq!(is_isomorphic(&g, &other), common::isomorphic(&g, &other));
        }
    }

    #[test]
    fn solver_agrees_with_oracle((g, c) in graph_and_counts(6, 3), t in any::<Index>()) {
        let t = t.index(g.n());
        let d = Distribution::new(c.clone());
        let answer = can_pebble(&g, &d, t).unwrap();
        prop_assert_eq!(answer.is_reachable(), common::reachable(&g, &c, t));
        if let Some(cert) = answer.certificate() {
            prop_assert!(verify_certificate(&g, &d, t, cert).is_ok());
        }
        if !weight(&g, &d, t).unwrap().is_at_least_one() {
            prop_assert!(!answer.is_reachable());
        }
    }

    #[test]
    fn reachability_is_monotone((g, c) in graph_and_counts(6, 3), t in any::<Index>(), extra in any::<Index>(), e in any::<Index>()) {
        let n = g.n();
        let t = t.index(n);
        let solver = TargetSolver::new(&g, t).unwrap();
        if solver.solve(&c).is_some() {
            let mut more = c.clone();
            more[extra.index(n)] += 1;
            prop_assert!(solver.solve(&more).is_some());
            let missing: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
            if !missing.is_empty() {
                let (u, v) = missing[e.index(missing.len())];
                let bigger = g.with_edge(u, v).unwrap();
                prop_assert!(TargetSolver::new(&bigger, t).unwrap().solve(&c).is_some());
            }
        }
    }

    #[test]
    fn partition_identities(g in graph(8), picks in prop::collection::vec(any::<Index>(), 8)) {
        let n = g.n();
        let mut c = vec![0u32; n];
        for p in picks.iter().take(n) {
            c[p.index(n)] += 1;
        }
        let part = zub_partition(&g, &Distribution::new(c)).unwrap();
        prop_assert_eq!(part.zeros.len() + part.units.len() + part.bigs.len(), n);
        prop_assert_eq!(part.identities_hold(), Some(true));
    }

    #[test]
    fn blowup_separator_duality((g, c) in graph_and_counts(6, 4), v in any::<Index>()) {
        let v = v.index(g.n());
        let d = Distribution::new(c.clone());
        let bg = blowup_graph(&g, &d, v).unwrap();
        prop_assume!(bg.graph.n() <= 12);
        let report = min_separator(&g, &d, v).unwrap();
        prop_assert!(report.menger_certified && report.separates_copies && report.classes_closed);
        prop_assert!(!report.repaired);
        prop_assert_eq!(report.size(), report.paths.len());
        prop_assert_eq!(report.size(), common::min_separator_size(&bg.graph, bg.root(), bg.apex()));
        // the derived base separator keeps a big only when all its copies are cut
        for &b in &report.base_separator {
            prop_assert!(c[b] >= 1);
        }
    }

    #[test]
    fn claim1_family_is_maximum((g, c) in graph_and_counts(6, 4), v in any::<Index>()) {
        let v = v.index(g.n());
        let d = Distribution::new(c.clone());
        let family = claim1_family(&g, &d, v).unwrap();
        prop_assert!(family.is_valid(&g, &d));
        prop_assert_eq!(family.len(), common::max_claim1_family(&g, &c, v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 150,
        max_global_rejects: 200_000,
        max_local_rejects: 200_000,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn audits_of_unreachable_configurations_hold(g in connected_graph(6), picks in prop::collection::vec(any::<Index>(), 6), z in any::<Index>()) {
        let n = g.n();
        let z0 = z.index(n);
        let mut c = vec![0u32; n];
        for p in picks.iter().take(n) {
            let mut x = p.index(n - 1);
            if x >= z0 {
                x += 1;
            }
            c[x] += 1;
        }
        let d = Distribution::new(c.clone());
        prop_assume!(!common::reachable(&g, &c, z0));
        let report = audit_counterexample(&g, &d, z0).unwrap();
        for claim in &report.claims {
            prop_assert!(claim.verdict != Verdict::Fails, "{} failed on {:?} {:?} {}", claim.claim, g, c, z0);
        }
        prop_assert_eq!(report.claim("claim1").unwrap().verdict, Verdict::Holds);
    }
}

#[test]
fn composition_counts() {
    for n in 1..=5 {
        for total in 0..=6u32 {
            let ours: Vec<Distribution> = enumerate_distributions(n, total, None).unwrap().collect();
            assert_eq!(
                ours.len() as u64,
                common::binomial(total as u64 + n as u64 - 1, n as u64 - 1)
            );
            let mut theirs = common::all_distributions(n, total);
            theirs.sort();
            let ours: Vec<Vec<u32>> = ours.iter().map(|d| d.counts().to_vec()).collect();
            assert_eq!(ours, theirs, "lexicographic order");
        }
    }
    let zeroed: Vec<Distribution> = enumerate_distributions(4, 3, Some(2)).unwrap().collect();
    assert_eq!(zeroed.len() as u64, common::binomial(5, 2));
    assert!(zeroed.iter().all(|d| d.counts()[2] == 0));
}

#[test]
fn gnp_frozen_sample() {
    let g = gnp_sample(8, 0.5, 12345).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert_eq!(edges, FROZEN_GNP_8_HALF_12345);
}

const FROZEN_GNP_8_HALF_12345: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 4),
    (0, 5),
    (0, 6),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 7),
    (2, 3),
    (2, 5),
    (2, 6),
    (3, 5),
    (3, 6),
    (3, 7),
    (4, 5),
    (5, 6),
];
