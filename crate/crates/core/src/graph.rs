//! Undirected simple graphs over dense vertex ids `0..n`.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An undirected simple graph. Vertices are `0..n`; adjacency is one
/// neighbor bitset per vertex. Immutable once built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { adj, labels: None })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        }
    }

    /// Builds a graph directly from neighbor sets, checking symmetry and
    /// loop-freedom.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        for (v, nb) in adj.iter().enumerate() {
            if nb.universe() != n {
                return Err(Error::Precondition(format!(
                    "neighbor set of {v} has universe {} instead of {n}",
                    nb.universe()
                )));
            }
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric for ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Self { adj, labels: None })
    }

    /// Attaches one text label per vertex. Labels never influence any
    /// algorithm.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[S]`: the members of `s` and everything adjacent to one.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// The same graph with edge `(u, v)` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// Subgraph induced by `keep`, renumbered densely in ascending order.
    /// Returns the graph and the old id of each new vertex.
    pub fn induced(&self, keep: &VertexSet) -> (Self, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![VertexSet::empty(old.len()); old.len()];
        for (i, &v) in old.iter().enumerate() {
            for u in self.adj[v].intersection(keep).iter() {
                adj[i].insert(new_id[u]);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| old.iter().map(|&v| l[v].clone()).collect());
        (Self { adj, labels }, old)
    }

    /// Connected components, each listed by its smallest vertex first.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for u in &self.adj[v] {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }
}
