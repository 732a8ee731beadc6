//! Membership checks for the five domination variants.
//!
//! Every check is stated directly on the definitions: domination is
//! `N[S] = V`, independence is "no edge inside `S`", and a vertex `u` outside
//! `S` is defended by a neighbor `v` in `S` when `(S \ {v}) ∪ {u}` still
//! dominates. The swap is re-tested from scratch for each candidate defender.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The five minimization problems: domination (`γ`), independent
/// domination (`i`), isolate domination (`γ_0`), secure domination (`γ_s`)
/// and independent secure domination (`γ_is`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "dom")]
    Dom,
    #[serde(rename = "indom")]
    InDom,
    #[serde(rename = "idom")]
    IDom,
    #[serde(rename = "sdom")]
    SDom,
    #[serde(rename = "insdom")]
    InSDom,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Dom,
        Variant::InDom,
        Variant::IDom,
        Variant::SDom,
        Variant::InSDom,
    ];

    pub fn requires_independence(self) -> bool {
        matches!(self, Variant::InDom | Variant::InSDom)
    }

    pub fn requires_defense(self) -> bool {
        matches!(self, Variant::SDom | Variant::InSDom)
    }

    pub fn requires_isolate(self) -> bool {
        matches!(self, Variant::IDom)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Dom => "dom",
            Variant::InDom => "indom",
            Variant::IDom => "idom",
            Variant::SDom => "sdom",
            Variant::InSDom => "insdom",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown variant {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Undominated {
        vertex: usize,
    },
    AdjacentPair {
        u: usize,
        v: usize,
    },
    /// `failed` lists the neighbors in `S` whose swap with `vertex` leaves
    /// something undominated.
    Undefended {
        vertex: usize,
        failed: Vec<usize>,
    },
    NoIsolatedVertex,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Undominated { vertex } => write!(f, "vertex {vertex} is not dominated"),
            Violation::AdjacentPair { u, v } => write!(f, "edge ({u}, {v}) inside the set"),
            Violation::Undefended { vertex, failed } => {
                write!(f, "vertex {vertex} cannot be defended (tried {failed:?})")
            }
            Violation::NoIsolatedVertex => {
                write!(f, "no isolated vertex exists in the induced subgraph")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub variant: Variant,
    pub holds: bool,
    pub violations: Vec<Violation>,
}

fn check_universe(g: &Graph, s: &VertexSet) {
    assert_eq!(
        s.universe(),
        g.n(),
        "vertex set universe does not match the graph"
    );
}

/// Vertices outside `N[S]`.
pub fn undominated(g: &Graph, s: &VertexSet) -> VertexSet {
    check_universe(g, s);
    g.closed_neighborhood_of(s).complement()
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    undominated(g, s).is_empty()
}

/// Edges with both ends in `s`, as `(u, v)` with `u < v`.
pub fn internal_edges(g: &Graph, s: &VertexSet) -> Vec<(usize, usize)> {
    check_universe(g, s);
    s.iter()
        .flat_map(|u| {
            g.neighbors(u)
                .intersection(s)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    check_universe(g, s);
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

/// `epn(v, S)`: vertices outside `S` whose only neighbor in `S` is `v`.
pub fn external_private_neighbors(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet> {
    check_universe(g, s);
    if !s.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is not in the set")));
    }
    let mut out = VertexSet::empty(g.n());
    for w in g.neighbors(v).difference(s).iter() {
        if g.neighbors(w).intersection_len(s) == 1 {
            out.insert(w);
        }
    }
    Ok(out)
}

/// All `v ∈ N(u) ∩ S` such that `(S \ {v}) ∪ {u}` dominates.
pub fn defenders(g: &Graph, s: &VertexSet, u: usize) -> Result<VertexSet> {
    check_universe(g, s);
    if s.contains(u) {
        return Err(Error::Precondition(format!(
            "vertex {u} is already in the set"
        )));
    }
    let mut out = VertexSet::empty(g.n());
    for v in g.neighbors(u).intersection(s).iter() {
        let mut swapped = s.clone();
        swapped.remove(v);
        swapped.insert(u);
        if is_dominating(g, &swapped) {
            out.insert(v);
        }
    }
    Ok(out)
}

pub fn is_secure_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_dominating(g, s)
        && s.complement()
            .iter()
            .all(|u| !defenders(g, s, u).expect("u is outside s").is_empty())
}

/// Dominating, and some member of `s` has no neighbor in `s`.
pub fn is_isolate_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_dominating(g, s) && has_isolated_member(g, s)
}

fn has_isolated_member(g: &Graph, s: &VertexSet) -> bool {
    s.iter().any(|v| g.neighbors(v).is_disjoint(s))
}

pub fn is_independent_secure_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_independent(g, s) && is_secure_dominating(g, s)
}

pub fn check(g: &Graph, s: &VertexSet, variant: Variant) -> bool {
    match variant {
        Variant::Dom => is_dominating(g, s),
        Variant::InDom => is_independent(g, s) && is_dominating(g, s),
        Variant::IDom => g.n() == 0 || is_isolate_dominating(g, s),
        Variant::SDom => is_secure_dominating(g, s),
        Variant::InSDom => is_independent_secure_dominating(g, s),
    }
}

/// Full report with every violation, grouped by kind and ascending by
/// vertex inside each group.
pub fn verify_set(g: &Graph, s: &VertexSet, variant: Variant) -> CertificateReport {
    check_universe(g, s);
    let mut violations: Vec<Violation> = undominated(g, s)
        .iter()
        .map(|vertex| Violation::Undominated { vertex })
        .collect();
    if variant.requires_independence() {
        violations.extend(
            internal_edges(g, s)
                .into_iter()
                .map(|(u, v)| Violation::AdjacentPair { u, v }),
        );
    }
    if variant.requires_defense() {
        for u in s.complement().iter() {
            if defenders(g, s, u).expect("u is outside s").is_empty() {
                let failed = g.neighbors(u).intersection(s).to_vec();
                violations.push(Violation::Undefended { vertex: u, failed });
            }
        }
    }
    if variant.requires_isolate() && g.n() > 0 && !has_isolated_member(g, s) {
        violations.push(Violation::NoIsolatedVertex);
    }
    CertificateReport {
        variant,
        holds: violations.is_empty(),
        violations,
    }
}
