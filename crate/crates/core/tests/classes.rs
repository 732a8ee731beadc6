use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secdom::classes::{
    bipartition, perfect_edge_elimination, recognize_threshold, split_partition, threshold_insds,
    verify_elimination_ordering, PebResult,
};
use secdom::{catalog, solve, verify, Graph, SearchBudget, Variant};

#[test]
fn random_threshold_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let mut seq: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        seq[n - 1] = true;
        let g = catalog::random_relabel(&mut rng, &catalog::threshold_from_sequence(&seq));
        let certificate =
            recognize_threshold(&g).expect("creation sequences give threshold graphs");
        assert!(certificate.is_valid(&g));
        let s = threshold_insds(&g).unwrap();
        assert!(verify::check(&g, &s, Variant::InSDom));
        let exact = solve::solve(&g, Variant::InSDom, &SearchBudget::default()).unwrap();
        assert_eq!(exact.value, Some(s.len()));
    }
}

#[test]
fn threshold_recognition_is_exact() {
    // A graph is threshold iff it has no induced P4, C4 or 2K2.
    let forbidden = [
        Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        Graph::new(4, &[(0, 1), (2, 3)]).unwrap(),
    ]
    .map(|h| catalog::canonical_code(&h));
    for n in 0..=7 {
        for g in catalog::all_graphs(n) {
            let mut induced_free = true;
            for mask in 0u64..1 << n {
                if mask.count_ones() == 4 {
                    let keep = secdom::VertexSet::from_mask(n, mask);
                    let (h, _) = g.induced(&keep);
                    if forbidden.contains(&catalog::canonical_code(&h)) {
                        induced_free = false;
                        break;
                    }
                }
            }
            assert_eq!(recognize_threshold(&g).is_some(), induced_free);
        }
    }
}

#[test]
fn peb_greedy_agrees_with_exhaustive_existence() {
    // Bipartite graphs only; the greedy pass must never stall on a graph
    // that has an ordering.
    for n in 0..=8 {
        for g in catalog::all_graphs(n) {
            if bipartition(&g).is_none() {
                continue;
            }
            match perfect_edge_elimination(&g) {
                PebResult::Ordering(o) => assert!(verify_elimination_ordering(&g, &o)),
                PebResult::Absent => assert!(!has_ordering(&g, &g.all_vertices())),
                other => panic!("unexpected {other:?}"),
            }
        }
    }
}

/// Plain recursive search, no memoization.
fn has_ordering(g: &Graph, alive: &secdom::VertexSet) -> bool {
    let edges: Vec<_> = g
        .edges()
        .filter(|&(u, v)| alive.contains(u) && alive.contains(v))
        .collect();
    edges.is_empty()
        || edges.into_iter().any(|(u, v)| {
            secdom::classes::is_bisimplicial(g, alive, u, v) && {
                let mut next = alive.clone();
                next.remove(u);
                next.remove(v);
                has_ordering(g, &next)
            }
        })
}

#[test]
fn split_partitions_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = catalog::random_graph(&mut rng, n, p);
        if let Some(p) = split_partition(&g) {
            assert!(p.is_valid(&g));
        }
        if recognize_threshold(&g).is_some() {
            assert!(split_partition(&g).is_some());
        }
    }
}

#[test]
fn bipartitions_are_proper() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let (g, _, _) = catalog::random_bipartite(&mut rng, 5, 6, 0.4);
        let (x, y) = bipartition(&g).unwrap();
        assert!(verify::is_independent(&g, &x));
        assert!(verify::is_independent(&g, &y));
        assert_eq!(x.len() + y.len(), g.n());
    }
}
