//! Graph enumerators and seeded random generators for oracle testing.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Upper-triangle adjacency bits of `g` with vertex `order[i]` placed at
/// position `i`.
fn encode(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

/// Canonical code of a graph with at most 11 vertices: the maximum encoding
/// over all orderings that list vertices by non-increasing degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are for tiny graphs");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < n {
        let d = g.degree(order[i]);
        let mut j = i;
        while j < n && g.degree(order[j]) == d {
            j += 1;
        }
        blocks.push((i, j));
        i = j;
    }
    let mut best = 0u64;
    permute_blocks(&adj, &mut order, &blocks, 0, &mut best);
    best
}

fn permute_blocks(
    adj: &[u32],
    order: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    b: usize,
    best: &mut u64,
) {
    if b == blocks.len() {
        *best = (*best).max(encode(adj, order));
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(adj, order, blocks, b, lo, hi - lo, best);
}

#[allow(clippy::too_many_arguments)]
fn heap_permute(
    adj: &[u32],
    order: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    b: usize,
    lo: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_blocks(adj, order, blocks, b + 1, best);
        return;
    }
    for i in 0..k {
        heap_permute(adj, order, blocks, b, lo, k - 1, best);
        if k.is_multiple_of(2) {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices (`n <= 8`). Built by extending each class on `n - 1` vertices
/// with a new vertex in every possible way.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let smaller = all_graphs(n - 1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in &smaller {
        let base: Vec<(usize, usize)> = h.edges().collect();
        for mask in 0u32..(1 << (n - 1)) {
            let mut edges = base.clone();
            edges.extend(
                (0..n - 1)
                    .filter(|&u| mask >> u & 1 == 1)
                    .map(|u| (u, n - 1)),
            );
            let g = Graph::new(n, &edges).expect("valid extension");
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
        }
    }
    out
}

pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid random edges")
}

/// Random graph with maximum degree at most `max_degree`: candidate edges are
/// visited in random order and kept while both endpoints have room.
pub fn random_bounded_degree<R: Rng>(rng: &mut R, n: usize, max_degree: usize, p: f64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < max_degree && deg[v] < max_degree && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("valid random edges")
}

/// Random bipartite graph with parts `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng>(
    rng: &mut R,
    a: usize,
    b: usize,
    p: f64,
) -> (Graph, VertexSet, VertexSet) {
    let n = a + b;
    let mut edges = Vec::new();
    for x in 0..a {
        for y in a..n {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("valid random edges");
    (
        g,
        VertexSet::from_ids(n, 0..a),
        VertexSet::from_ids(n, a..n),
    )
}

/// Applies `perm`: old vertex `v` becomes `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges).expect("permutation keeps edges valid")
}

pub fn random_relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    relabel(g, &perm)
}

/// Threshold graph from a creation sequence: vertex `i` is added either
/// isolated (`false`) or adjacent to all earlier vertices (`true`). The
/// first entry is irrelevant.
pub fn threshold_from_sequence(seq: &[bool]) -> Graph {
    let n = seq.len();
    let mut edges = Vec::new();
    for (i, &dominating) in seq.iter().enumerate() {
        if dominating {
            edges.extend((0..i).map(|u| (u, i)));
        }
    }
    Graph::new(n, &edges).expect("valid threshold edges")
}

/// Every connected threshold graph on `n >= 1` vertices, one per
/// isomorphism class. Threshold graphs are determined by their degree
/// sequence, which is used to deduplicate; for `n >= 2` there are
/// `2^(n-2)` of them.
pub fn connected_threshold_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for bits in 0u64..(1 << (n - 2)) {
        let mut seq = vec![false; n];
        for (i, slot) in seq.iter_mut().enumerate().take(n - 1).skip(1) {
            *slot = bits >> (i - 1) & 1 == 1;
        }
        seq[n - 1] = true;
        let g = threshold_from_sequence(&seq);
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        if seen.insert(degrees) {
            out.push(g);
        }
    }
    out
}
