//! Recognition of bipartite, split, threshold and perfect elimination
//! bipartite graphs, and the linear-time InSDS algorithm for threshold
//! graphs.
//!
//! Every recognizer returns a certificate, and every certificate is checked
//! against its defining conditions before it is returned.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Two-coloring by breadth-first layering, one component at a time in
/// order of smallest vertex. The smallest vertex of each component goes to
/// the first part. `None` when the graph has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let s = side[u].expect("queued vertices are colored");
            for v in g.neighbors(u).iter() {
                match side[v] {
                    None => {
                        side[v] = Some(!s);
                        queue.push_back(v);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let x = VertexSet::from_ids(n, (0..n).filter(|&v| side[v] == Some(false)));
    let y = x.complement();
    Some((x, y))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.n();
        self.clique.universe() == n
            && self.independent.universe() == n
            && self.clique.is_disjoint(&self.independent)
            && self.clique.union(&self.independent).len() == n
            && self
                .clique
                .iter()
                .all(|v| self.clique.difference(g.neighbors(v)).to_vec() == [v])
            && self
                .independent
                .iter()
                .all(|v| g.neighbors(v).is_disjoint(&self.independent))
    }
}

/// Split recognition from the degree sequence: with degrees sorted as
/// `d_1 >= ... >= d_n` and `m` the largest `i` with `d_i >= i - 1`, the
/// graph is split iff `Σ_{i<=m} d_i = m(m-1) + Σ_{i>m} d_i`, and then the
/// `m` highest-degree vertices form a clique.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).rev().find(|&i| d[i - 1] + 1 >= i).unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = VertexSet::from_ids(n, order[..m].iter().copied());
    let partition = SplitPartition {
        independent: clique.complement(),
        clique,
    };
    partition.is_valid(g).then_some(partition)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdCertificate {
    pub partition: SplitPartition,
    /// `x_1, ..., x_p` with `N[x_1] ⊆ ... ⊆ N[x_p]`.
    pub clique_order: Vec<usize>,
    /// `y_1, ..., y_q` with `N(y_1) ⊇ ... ⊇ N(y_q)`.
    pub independent_order: Vec<usize>,
}

impl ThresholdCertificate {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let p = &self.partition;
        let same = |order: &[usize], set: &VertexSet| {
            order.len() == set.len() && VertexSet::from_ids(g.n(), order.iter().copied()) == *set
        };
        p.is_valid(g)
            && same(&self.clique_order, &p.clique)
            && same(&self.independent_order, &p.independent)
            && self.clique_order.windows(2).all(|w| {
                g.closed_neighborhood(w[0])
                    .is_subset(&g.closed_neighborhood(w[1]))
            })
            && self
                .independent_order
                .windows(2)
                .all(|w| g.neighbors(w[1]).is_subset(g.neighbors(w[0])))
    }
}

/// Threshold recognition by peeling: repeatedly remove an isolated vertex
/// (it joins the independent side) or, failing that, a vertex adjacent to
/// everything that remains (it joins the clique). The graph is threshold
/// iff this empties it. The last vertex joins the clique only if the
/// independent side is still empty. Both orders in the certificate are the
/// reverse of the peel order.
pub fn recognize_threshold(g: &Graph) -> Option<ThresholdCertificate> {
    let n = g.n();
    let mut alive = g.all_vertices();
    let mut degree = g.degrees();
    let mut clique_peel = Vec::new();
    let mut independent_peel = Vec::new();
    while let Some(last) = alive.first() {
        let size = alive.len();
        if size == 1 {
            if independent_peel.is_empty() {
                clique_peel.push(last);
            } else {
                independent_peel.push(last);
            }
            break;
        }
        let v = if let Some(v) = alive.iter().find(|&v| degree[v] == 0) {
            independent_peel.push(v);
            v
        } else if let Some(v) = alive.iter().find(|&v| degree[v] == size - 1) {
            clique_peel.push(v);
            v
        } else {
            return None;
        };
        alive.remove(v);
        for u in g.neighbors(v).iter() {
            degree[u] -= 1;
        }
    }
    clique_peel.reverse();
    independent_peel.reverse();
    let certificate = ThresholdCertificate {
        partition: SplitPartition {
            clique: VertexSet::from_ids(n, clique_peel.iter().copied()),
            independent: VertexSet::from_ids(n, independent_peel.iter().copied()),
        },
        clique_order: clique_peel,
        independent_order: independent_peel,
    };
    certificate.is_valid(g).then_some(certificate)
}

/// Minimum InSDS of a connected threshold graph with split partition
/// `(C, I)`: `I ∪ {c_0}` for the first `c_0 ∈ C` with no neighbor in `I`,
/// otherwise `I`.
pub fn threshold_insds(g: &Graph) -> Result<VertexSet> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "threshold InSDS needs a connected graph".into(),
        ));
    }
    let certificate = recognize_threshold(g)
        .ok_or_else(|| Error::WrongClass("graph is not a threshold graph".into()))?;
    let independent = certificate.partition.independent;
    let mut s = independent.clone();
    if let Some(c0) = certificate
        .clique_order
        .iter()
        .copied()
        .find(|&c| g.neighbors(c).is_disjoint(&independent))
    {
        s.insert(c0);
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    pub edges: Vec<(usize, usize)>,
    /// `eliminated[i]` is the set of endpoints of `edges[..=i]`.
    pub eliminated: Vec<VertexSet>,
}

/// Outcome of perfect edge elimination recognition. `Absent` is only
/// reported after an exhaustive search; larger graphs on which the greedy
/// pass stalls are `Unresolved`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PebResult {
    Ordering(EliminationOrdering),
    Absent,
    Unresolved,
    NotBipartite,
}

/// Largest graph on which a stalled greedy pass is followed by exhaustive
/// search.
pub const PEB_EXHAUSTIVE_LIMIT: usize = 20;

/// Whether `uv` is bisimplicial in `g[alive]`: every neighbor of `u` is
/// adjacent to every neighbor of `v`.
pub fn is_bisimplicial(g: &Graph, alive: &VertexSet, u: usize, v: usize) -> bool {
    if !alive.contains(u) || !alive.contains(v) || !g.has_edge(u, v) {
        return false;
    }
    let nu = g.neighbors(u).intersection(alive);
    let nv = g.neighbors(v).intersection(alive);
    nv.iter().all(|a| nu.is_subset(g.neighbors(a)))
}

fn alive_edges(g: &Graph, alive: &VertexSet) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| alive.contains(u) && alive.contains(v))
        .collect()
}

/// Checks an ordering against the definition: each edge is bisimplicial in
/// the graph left after removing the earlier endpoints, the edges share no
/// endpoints, the `eliminated` sets are the cumulative endpoint sets, and
/// nothing is left but isolated vertices.
pub fn verify_elimination_ordering(g: &Graph, ordering: &EliminationOrdering) -> bool {
    if ordering.edges.len() != ordering.eliminated.len() {
        return false;
    }
    let mut alive = g.all_vertices();
    let mut removed = VertexSet::empty(g.n());
    for (&(u, v), expected) in ordering.edges.iter().zip(&ordering.eliminated) {
        if u >= g.n() || v >= g.n() || !is_bisimplicial(g, &alive, u, v) {
            return false;
        }
        alive.remove(u);
        alive.remove(v);
        removed.insert(u);
        removed.insert(v);
        if *expected != removed {
            return false;
        }
    }
    alive_edges(g, &alive).is_empty()
}

/// Perfect edge elimination ordering of a bipartite graph. Greedily
/// eliminates the first bisimplicial edge in edge order; if that stalls,
/// graphs with at most [`PEB_EXHAUSTIVE_LIMIT`] vertices are searched
/// exhaustively.
pub fn perfect_edge_elimination(g: &Graph) -> PebResult {
    if bipartition(g).is_none() {
        return PebResult::NotBipartite;
    }
    let mut alive = g.all_vertices();
    let mut edges = Vec::new();
    loop {
        let remaining = alive_edges(g, &alive);
        if remaining.is_empty() {
            return finish(g, edges);
        }
        match remaining
            .into_iter()
            .find(|&(u, v)| is_bisimplicial(g, &alive, u, v))
        {
            Some((u, v)) => {
                alive.remove(u);
                alive.remove(v);
                edges.push((u, v));
            }
            None => break,
        }
    }
    if g.n() > PEB_EXHAUSTIVE_LIMIT {
        return PebResult::Unresolved;
    }
    let mut dead_ends = HashSet::new();
    let mut path = Vec::new();
    if exhaustive(g, &g.all_vertices(), &mut path, &mut dead_ends) {
        finish(g, path)
    } else {
        PebResult::Absent
    }
}

fn exhaustive(
    g: &Graph,
    alive: &VertexSet,
    path: &mut Vec<(usize, usize)>,
    dead_ends: &mut HashSet<VertexSet>,
) -> bool {
    let remaining = alive_edges(g, alive);
    if remaining.is_empty() {
        return true;
    }
    if dead_ends.contains(alive) {
        return false;
    }
    for (u, v) in remaining {
        if !is_bisimplicial(g, alive, u, v) {
            continue;
        }
        let mut next = alive.clone();
        next.remove(u);
        next.remove(v);
        path.push((u, v));
        if exhaustive(g, &next, path, dead_ends) {
            return true;
        }
        path.pop();
    }
    dead_ends.insert(alive.clone());
    false
}

fn finish(g: &Graph, edges: Vec<(usize, usize)>) -> PebResult {
    let mut removed = VertexSet::empty(g.n());
    let eliminated = edges
        .iter()
        .map(|&(u, v)| {
            removed.insert(u);
            removed.insert(v);
            removed.clone()
        })
        .collect();
    let ordering = EliminationOrdering { edges, eliminated };
    assert!(
        verify_elimination_ordering(g, &ordering),
        "constructed elimination ordering failed verification"
    );
    PebResult::Ordering(ordering)
}
