//! Brute-force oracles written straight from the definitions, sharing no
//! code with the library beyond the `Graph` edge list.

#![allow(dead_code)]

use rand::Rng;
use secdom::reductions::SetCoverInstance;
use secdom::{Graph, Variant, VertexSet};

pub struct Naive {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    fn dominates(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| s[v] || (0..self.n).any(|u| s[u] && self.adj[u][v]))
    }

    fn independent(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| !(s[u] && s[v] && self.adj[u][v])))
    }

    fn has_isolate(&self, s: &[bool]) -> bool {
        self.n == 0 || (0..self.n).any(|v| s[v] && (0..self.n).all(|u| !(s[u] && self.adj[u][v])))
    }

    fn secure(&self, s: &[bool]) -> bool {
        (0..self.n).filter(|&u| !s[u]).all(|u| {
            (0..self.n).filter(|&v| s[v] && self.adj[u][v]).any(|v| {
                let mut t = s.to_vec();
                t[v] = false;
                t[u] = true;
                self.dominates(&t)
            })
        })
    }

    pub fn check(&self, s: &[bool], variant: Variant) -> bool {
        self.dominates(s)
            && (!variant.requires_independence() || self.independent(s))
            && (!variant.requires_isolate() || self.has_isolate(s))
            && (!variant.requires_defense() || self.secure(s))
    }

    pub fn check_set(&self, s: &VertexSet, variant: Variant) -> bool {
        let bits: Vec<bool> = (0..self.n).map(|v| s.contains(v)).collect();
        self.check(&bits, variant)
    }

    /// Minimum size and the lexicographically smallest minimum set, by
    /// trying every subset.
    pub fn minimum(&self, variant: Variant) -> Option<(usize, VertexSet)> {
        assert!(self.n <= 16);
        let mut best: Option<(usize, VertexSet)> = None;
        for mask in 0u32..1 << self.n {
            let size = mask.count_ones() as usize;
            if best.as_ref().is_some_and(|(b, _)| size > *b) {
                continue;
            }
            let bits: Vec<bool> = (0..self.n).map(|v| mask >> v & 1 == 1).collect();
            if !self.check(&bits, variant) {
                continue;
            }
            let set = VertexSet::from_ids(self.n, (0..self.n).filter(|&v| bits[v]));
            best = match best {
                Some((b, w)) if b == size && w <= set => Some((b, w)),
                _ => Some((size, set)),
            };
        }
        best
    }
}

/// Random set cover instance with at most `max_n` elements and `max_m`
/// subsets; uncovered elements are added to a random subset.
pub fn random_setcover<R: Rng>(rng: &mut R, max_n: usize, max_m: usize) -> SetCoverInstance {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let mut subsets: Vec<Vec<usize>> = (0..m)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.35)).collect())
        .collect();
    for e in 0..n {
        if !subsets.iter().any(|c| c.contains(&e)) {
            let j = rng.gen_range(0..m);
            subsets[j].push(e);
            subsets[j].sort_unstable();
        }
    }
    SetCoverInstance::new(n, subsets).expect("every element is covered")
}
