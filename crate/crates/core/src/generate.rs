//! Named graph families and graph products.
//!
//! Vertex numbering is fixed per family so that witness sets can be written
//! down by hand:
//!
//! * `Path n`, `Cycle n`: `v_i` is vertex `i - 1`, in path order.
//! * `CompleteBipartite p q`: part A is `0..p`, part B is `p..p+q`, with `p <= q`.
//! * `Star q`: the center is `0`, leaves `1..=q` (same as `K_{1,q}`).
//! * `Wheel n`: rim is the cycle `0..n`, hub is `n`.
//! * `Grid m k`: cell `(r, c)` is vertex `r * k + c`.
//! * `ApexJoin G`: the vertices of `G` keep their ids, the apex is `|V(G)|`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the vertex count of a Cartesian product.
pub const DEFAULT_MAX_PRODUCT: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite { p: usize, q: usize },
    Star(usize),
    Wheel(usize),
    Grid { m: usize, k: usize },
    ApexJoin(Box<Graph>),
}

impl FamilySpec {
    /// `K_{p,q}` with the parts swapped if needed so that `p <= q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        FamilySpec::CompleteBipartite {
            p: p.min(q),
            q: p.max(q),
        }
    }

    /// Checks parameter ranges and returns the normalized spec.
    pub fn validated(&self) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n == 0 => {
                bad(format!("{self} needs at least one vertex"))
            }
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => {
                bad(format!("{self} needs a rim of at least 3 vertices"))
            }
            FamilySpec::Star(0) => bad("star needs at least one leaf".into()),
            FamilySpec::CompleteBipartite { p, q } => {
                if *p == 0 || *q == 0 {
                    bad(format!("{self} needs both parts nonempty"))
                } else {
                    Ok(Self::complete_bipartite(*p, *q))
                }
            }
            FamilySpec::Grid { m, k } if *m == 0 || *k == 0 => {
                bad(format!("{self} needs both sides at least 1"))
            }
            FamilySpec::ApexJoin(g) if g.n() == 0 => bad("apex join of the empty graph".into()),
            other => Ok(other.clone()),
        }
    }

    /// Parses `name params...` as used on the command line, e.g.
    /// `["grid", "3", "4"]` or `["apex", "cycle", "5"]`.
    pub fn parse(words: &[&str]) -> Result<Self> {
        let (name, rest) = words
            .split_first()
            .ok_or_else(|| Error::InvalidFamily("missing family name".into()))?;
        let nums = |count: usize| -> Result<Vec<usize>> {
            if rest.len() != count {
                return Err(Error::InvalidFamily(format!(
                    "{name} takes {count} parameter(s), got {}",
                    rest.len()
                )));
            }
            rest.iter()
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidFamily(format!("not a count: {s:?}")))
                })
                .collect()
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(nums(1)?[0]),
            "cycle" => FamilySpec::Cycle(nums(1)?[0]),
            "complete" | "clique" => FamilySpec::Complete(nums(1)?[0]),
            "bipartite" | "kpq" | "complete-bipartite" => {
                let v = nums(2)?;
                FamilySpec::complete_bipartite(v[0], v[1])
            }
            "star" => FamilySpec::Star(nums(1)?[0]),
            "wheel" => FamilySpec::Wheel(nums(1)?[0]),
            "grid" => {
                let v = nums(2)?;
                FamilySpec::Grid { m: v[0], k: v[1] }
            }
            "apex" => FamilySpec::ApexJoin(Box::new(generate(&FamilySpec::parse(rest)?)?)),
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        };
        spec.validated()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Complete(n) => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite { p, q } => write!(f, "K_{{{p},{q}}}"),
            FamilySpec::Star(q) => write!(f, "K_{{1,{q}}}"),
            FamilySpec::Wheel(n) => write!(f, "W_{n}"),
            FamilySpec::Grid { m, k } => write!(f, "P_{m} x P_{k}"),
            FamilySpec::ApexJoin(g) => write!(f, "K_1 + G(n={})", g.n()),
        }
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::new(n, &edges).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("clique edges are valid")
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..p {
        for b in p..p + q {
            edges.push((a, b));
        }
    }
    Graph::new(p + q, &edges).expect("biclique edges are valid")
}

/// `K_1 + G`: a new vertex `n` adjacent to every vertex of `g`.
pub fn apex_join(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::new(n + 1, &edges).expect("apex edges are valid")
}

pub fn wheel(n: usize) -> Graph {
    apex_join(&cycle(n))
}

pub fn grid(m: usize, k: usize) -> Graph {
    cartesian_product(&path(m), &path(k)).expect("grid sizes are small")
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    Ok(match spec.validated()? {
        FamilySpec::Path(n) => path(n),
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => complete(n),
        FamilySpec::CompleteBipartite { p, q } => complete_bipartite(p, q),
        FamilySpec::Star(q) => complete_bipartite(1, q),
        FamilySpec::Wheel(n) => wheel(n),
        FamilySpec::Grid { m, k } => cartesian_product(&path(m), &path(k))?,
        FamilySpec::ApexJoin(g) => apex_join(&g),
    })
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    cartesian_product_with_limit(g, h, DEFAULT_MAX_PRODUCT)
}

/// `G □ H`, with `(a, b)` numbered `a * |V(H)| + b`.
pub fn cartesian_product_with_limit(g: &Graph, h: &Graph, max_n: usize) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::Precondition(
            "product factors must be nonempty".into(),
        ));
    }
    let nh = h.n();
    let n = g
        .n()
        .checked_mul(nh)
        .ok_or(Error::TooLarge(usize::MAX, max_n))?;
    if n > max_n {
        return Err(Error::TooLarge(n, max_n));
    }
    let mut adj = vec![VertexSet::empty(n); n];
    for a in 0..g.n() {
        for b in 0..nh {
            let v = a * nh + b;
            for b2 in h.neighbors(b) {
                adj[v].insert(a * nh + b2);
            }
            for a2 in g.neighbors(a) {
                adj[v].insert(a2 * nh + b);
            }
        }
    }
    Graph::from_adjacency(adj)
}
