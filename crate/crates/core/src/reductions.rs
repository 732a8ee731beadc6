//! Gadget reductions between domination problems, each with a forward map
//! (source solution to gadget solution) and a reverse extraction.
//!
//! | kind       | source problem    | gadget problem     | offset |
//! |------------|-------------------|--------------------|--------|
//! | `setcover` | set cover         | IDOM, split        | `m`    |
//! | `peb`      | DOM, bipartite    | IDOM, PEB          | `l`    |
//! | `insdm`    | InDOM             | InSDOM             | `n`    |
//! | `gp`       | DOM, connected    | DOM                | `n`    |
//! | `apx`      | InDOM, `Δ <= 3`   | InSDOM, `Δ <= 5`   | `3n`   |
//!
//! A source solution of size `k` maps to a gadget solution of size
//! `k + offset`, and any gadget solution of size `k + offset` yields a source
//! solution of size at most `k`. Every mapped set is verified before it is
//! returned.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classes::{self, EliminationOrdering};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{self, Variant};
use crate::vertex_set::VertexSet;

/// Universe `0..universe_size` and a family of subsets of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        let inst = Self {
            universe_size,
            subsets,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Elements must be in range and the whole family must cover the
    /// universe.
    pub fn validate(&self) -> Result<()> {
        for (j, c) in self.subsets.iter().enumerate() {
            if let Some(&e) = c.iter().find(|&&e| e >= self.universe_size) {
                return Err(Error::Precondition(format!(
                    "subset {} contains element {} outside 1..={}",
                    j + 1,
                    e + 1,
                    self.universe_size
                )));
            }
        }
        let all: Vec<usize> = (0..self.subsets.len()).collect();
        let missing = self.uncovered(&all);
        if !missing.is_empty() {
            let ids: Vec<String> = missing.iter().map(|e| (e + 1).to_string()).collect();
            return Err(Error::Precondition(format!(
                "elements {} are in no subset",
                ids.join(", ")
            )));
        }
        Ok(())
    }

    /// Elements not covered by the subsets with the given 0-based indices.
    pub fn uncovered(&self, chosen: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.universe_size];
        for &j in chosen {
            for &e in &self.subsets[j] {
                covered[e] = true;
            }
        }
        (0..self.universe_size).filter(|&e| !covered[e]).collect()
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        chosen.iter().all(|&j| j < self.subsets.len()) && self.uncovered(chosen).is_empty()
    }

    /// Text format: `n m` on the first line, then one line per subset with
    /// its 1-based elements separated by spaces. Blank lines and `#`
    /// comments are skipped before the header only.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .skip_while(|(_, l)| l.trim().is_empty() || l.trim_start().starts_with('#'));
        let (header_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        let nums = |line_no: usize, s: &str| -> Result<Vec<usize>> {
            s.split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::Parse {
                        line: line_no + 1,
                        msg: format!("`{t}` is not a non-negative integer"),
                    })
                })
                .collect()
        };
        let head = nums(header_no, header)?;
        let [n, m] = head[..] else {
            return Err(Error::Parse {
                line: header_no + 1,
                msg: "header must be `n m`".into(),
            });
        };
        let mut subsets = Vec::with_capacity(m);
        for _ in 0..m {
            let (no, line) = lines.next().ok_or(Error::Parse {
                line: header_no + subsets.len() + 2,
                msg: format!("expected {m} subset lines, found {}", subsets.len()),
            })?;
            let mut elems = Vec::new();
            for e in nums(no, line)? {
                if e == 0 || e > n {
                    return Err(Error::Parse {
                        line: no + 1,
                        msg: format!("element {e} outside 1..={n}"),
                    });
                }
                elems.push(e - 1);
            }
            subsets.push(elems);
        }
        if let Some((no, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: no + 1,
                msg: format!("unexpected trailing line `{extra}`"),
            });
        }
        Self::new(n, subsets)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.universe_size, self.subsets.len());
        for c in &self.subsets {
            let ids: Vec<String> = c.iter().map(|e| (e + 1).to_string()).collect();
            out.push_str(&ids.join(" "));
            out.push('\n');
        }
        out
    }

    /// Smallest cover by exhaustive search over subfamilies in order of
    /// size, lexicographically first among equals. At most 24 subsets.
    pub fn minimum_cover(&self) -> Result<Vec<usize>> {
        let m = self.subsets.len();
        if m > 24 {
            return Err(Error::TooLarge(m, 24));
        }
        for k in 0..=m {
            let mut chosen: Vec<usize> = (0..k).collect();
            loop {
                if self.is_cover(&chosen) {
                    return Ok(chosen);
                }
                // Next k-combination in lexicographic order.
                let Some(i) = (0..k).rev().find(|&i| chosen[i] < m - k + i) else {
                    break;
                };
                chosen[i] += 1;
                for j in i + 1..k {
                    chosen[j] = chosen[j - 1] + 1;
                }
            }
        }
        Err(Error::Precondition("instance has no cover".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionKind {
    SetCover,
    Peb,
    InSdm,
    Gp,
    Apx,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 5] = [
        ReductionKind::SetCover,
        ReductionKind::Peb,
        ReductionKind::InSdm,
        ReductionKind::Gp,
        ReductionKind::Apx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::SetCover => "setcover",
            ReductionKind::Peb => "peb",
            ReductionKind::InSdm => "insdm",
            ReductionKind::Gp => "gp",
            ReductionKind::Apx => "apx",
        }
    }

    /// Variant on the source graph; `None` for set cover.
    pub fn source_variant(self) -> Option<Variant> {
        match self {
            ReductionKind::SetCover => None,
            ReductionKind::Peb | ReductionKind::Gp => Some(Variant::Dom),
            ReductionKind::InSdm | ReductionKind::Apx => Some(Variant::InDom),
        }
    }

    pub fn target_variant(self) -> Variant {
        match self {
            ReductionKind::SetCover | ReductionKind::Peb => Variant::IDom,
            ReductionKind::Gp => Variant::Dom,
            ReductionKind::InSdm | ReductionKind::Apx => Variant::InSDom,
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown reduction `{s}`")))
    }
}

/// A gadget graph with labeled vertices.
///
/// `roles` maps a family name to its vertices in index order: for example
/// `roles["c"][j - 1]` is `c_j`. Source vertices keep their ids
/// `0..source_n` (family `x` for set cover elements, `x`/`y` for the
/// bipartite sides, `v` otherwise). The PEB gadget also lists the subsets
/// `Y1` and `Y2` of `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub graph: Graph,
    pub offset: usize,
    pub roles: BTreeMap<String, Vec<usize>>,
    pub source_n: usize,
}

impl ReductionOutput {
    pub fn role(&self, family: &str) -> &[usize] {
        self.roles.get(family).map(Vec::as_slice).unwrap_or(&[])
    }

    fn role_set(&self, family: &str) -> VertexSet {
        VertexSet::from_ids(self.graph.n(), self.role(family).iter().copied())
    }

    fn source_set(&self) -> VertexSet {
        VertexSet::from_ids(self.graph.n(), 0..self.source_n)
    }

    /// The source graph, recovered as the subgraph induced on `0..source_n`.
    pub fn source_graph(&self) -> Graph {
        self.graph.induced(&self.source_set()).0.without_labels()
    }
}

struct Builder {
    labels: Vec<String>,
    roles: BTreeMap<String, Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Self {
            labels: Vec::new(),
            roles: BTreeMap::new(),
            edges: Vec::new(),
        }
    }

    fn add(&mut self, family: &str, index: usize) -> usize {
        let id = self.labels.len();
        self.labels.push(format!("{family}_{index}"));
        self.roles.entry(family.to_string()).or_default().push(id);
        id
    }

    fn family(&mut self, family: &str, count: usize) -> Vec<usize> {
        (1..=count).map(|i| self.add(family, i)).collect()
    }

    fn finish(
        self,
        kind: ReductionKind,
        offset: usize,
        source_n: usize,
    ) -> Result<ReductionOutput> {
        let graph = Graph::new(self.labels.len(), &self.edges)?.with_labels(self.labels)?;
        Ok(ReductionOutput {
            kind,
            graph,
            offset,
            roles: self.roles,
            source_n,
        })
    }
}

/// Split gadget for set cover: elements `x_i`, and per subset a clique
/// vertex `c_j` adjacent to its elements, a clique vertex `u_j` and a
/// pendant `v_j` on `u_j`. `K ∪ L = {c_j} ∪ {u_j}` is a clique.
pub fn setcover_to_split(inst: &SetCoverInstance) -> Result<ReductionOutput> {
    inst.validate()?;
    let (n, m) = (inst.universe_size, inst.subsets.len());
    let mut b = Builder::new();
    let x = b.family("x", n);
    let c = b.family("c", m);
    let u = b.family("u", m);
    let v = b.family("v", m);
    for (j, subset) in inst.subsets.iter().enumerate() {
        b.edges.extend(subset.iter().map(|&e| (x[e], c[j])));
        b.edges.push((u[j], v[j]));
    }
    let clique: Vec<usize> = c.iter().chain(&u).copied().collect();
    for (i, &p) in clique.iter().enumerate() {
        b.edges.extend(clique[i + 1..].iter().map(|&q| (p, q)));
    }
    b.finish(ReductionKind::SetCover, m, n)
}

/// Which `y` get a pendant path in the PEB gadget.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Y1Rule {
    /// `y ∈ Y1` iff no neighbor of `y` has degree 1 (isolated `y` included).
    #[default]
    NoPendantNeighbor,
    /// `y ∈ Y1` iff some neighbor of `y` has degree 1.
    PendantNeighbor,
}

/// PEB gadget: attaches a path `y - a - b - c` to every `y ∈ Y1`. `x`
/// must be one side of a bipartition of `g`; its complement is `Y`.
/// With the default rule the elimination ordering from [`peb_sigma`] is
/// built and verified.
pub fn bipartite_dom_to_peb(g: &Graph, x: &VertexSet, rule: Y1Rule) -> Result<ReductionOutput> {
    let n = g.n();
    if x.universe() != n {
        return Err(Error::Precondition("side X has the wrong universe".into()));
    }
    let y = x.complement();
    if !verify::is_independent(g, x) || !verify::is_independent(g, &y) {
        return Err(Error::WrongClass(
            "X and its complement are not a bipartition".into(),
        ));
    }
    let pendant = |v: usize| g.degree(v) == 1;
    let in_y1 = |v: usize| match rule {
        Y1Rule::NoPendantNeighbor => !g.neighbors(v).iter().any(pendant),
        Y1Rule::PendantNeighbor => g.neighbors(v).iter().any(pendant),
    };

    let mut b = Builder::new();
    let mut index = vec![0; n];
    let mut counts = [0usize; 2];
    for v in 0..n {
        let side = usize::from(y.contains(v));
        counts[side] += 1;
        index[v] = counts[side];
        b.labels.push(format!("{}_{}", ["x", "y"][side], index[v]));
        b.roles.entry(["x", "y"][side].into()).or_default().push(v);
    }
    b.edges.extend(g.edges());
    let (y1, y2): (Vec<usize>, Vec<usize>) = y.iter().partition(|&v| in_y1(v));
    for &yv in &y1 {
        let a = b.add("a", index[yv]);
        let bb = b.add("b", index[yv]);
        let c = b.add("c", index[yv]);
        b.edges.extend([(yv, a), (a, bb), (bb, c)]);
    }
    let l = y1.len();
    b.roles.insert("Y1".into(), y1);
    b.roles.insert("Y2".into(), y2);
    let out = b.finish(ReductionKind::Peb, l, n)?;
    if rule == Y1Rule::NoPendantNeighbor {
        peb_sigma(&out)?;
    }
    Ok(out)
}

/// The ordering `b_1c_1, ..., b_lc_l, a_1y_1, ..., a_ly_l` followed by
/// `x_j y_j` for each `y_j ∈ Y2` and its smallest pendant neighbor `x_j`,
/// verified as a perfect edge elimination ordering of the gadget.
pub fn peb_sigma(out: &ReductionOutput) -> Result<EliminationOrdering> {
    if out.kind != ReductionKind::Peb {
        return Err(Error::Precondition(format!(
            "σ is defined for peb, not {}",
            out.kind
        )));
    }
    let g = &out.graph;
    let (a, b, c) = (out.role("a"), out.role("b"), out.role("c"));
    let mut edges: Vec<(usize, usize)> = b.iter().zip(c).map(|(&b, &c)| (b, c)).collect();
    edges.extend(a.iter().zip(out.role("Y1")).map(|(&a, &y)| (a, y)));
    for &y in out.role("Y2") {
        let xj = g
            .neighbors(y)
            .iter()
            .find(|&v| g.degree(v) == 1)
            .ok_or_else(|| {
                Error::Construction(format!("{} has no pendant neighbor", label(g, y)))
            })?;
        edges.push((xj, y));
    }
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
    if !classes::verify_elimination_ordering(g, &ordering) {
        return Err(Error::Construction(
            "σ is not a perfect edge elimination ordering".into(),
        ));
    }
    Ok(ordering)
}

fn label(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), str::to_string)
}

/// InDOM to InSDOM: a path `v_i - a_i - b_i` on every vertex.
pub fn indm_to_insdm(g: &Graph) -> Result<ReductionOutput> {
    let n = g.n();
    let mut b = source_builder(g);
    let a = b.family("a", n);
    let bb = b.family("b", n);
    for i in 0..n {
        b.edges.extend([(i, a[i]), (a[i], bb[i])]);
    }
    b.finish(ReductionKind::InSdm, n, n)
}

/// Graph with a pendant path `v_i - a_i - b_i - c_i` on every vertex of a
/// connected graph. Its InSDS number is `2n` and its domination number is
/// `γ(G) + n`.
pub fn gp_graph(g: &Graph) -> Result<ReductionOutput> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Precondition(
            "gp graph needs a connected graph".into(),
        ));
    }
    let n = g.n();
    let mut b = source_builder(g);
    let a = b.family("a", n);
    let bb = b.family("b", n);
    let c = b.family("c", n);
    for i in 0..n {
        b.edges.extend([(i, a[i]), (a[i], bb[i]), (bb[i], c[i])]);
    }
    b.finish(ReductionKind::Gp, n, n)
}

/// The InSDS `{a_i} ∪ {c_i}` of a gp graph, of size `2n`.
pub fn gp_insds_witness(out: &ReductionOutput) -> Result<VertexSet> {
    if out.kind != ReductionKind::Gp {
        return Err(Error::Precondition(format!(
            "expected a gp graph, got {}",
            out.kind
        )));
    }
    let s = out.role_set("a").union(&out.role_set("c"));
    ensure(&out.graph, &s, Variant::InSDom)?;
    Ok(s)
}

/// Bounded-degree gadget: every vertex gets `v_i - q_i - p_i` and a star
/// `r_i` with leaves `s_i`, `t_i` hung from `v_i - r_i`.
pub fn apx_gadget(g: &Graph) -> Result<ReductionOutput> {
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!(
            "apx gadget needs maximum degree at most 3, got {}",
            g.max_degree()
        )));
    }
    let n = g.n();
    let mut b = source_builder(g);
    let p = b.family("p", n);
    let q = b.family("q", n);
    let r = b.family("r", n);
    let s = b.family("s", n);
    let t = b.family("t", n);
    for i in 0..n {
        b.edges.extend([
            (i, q[i]),
            (q[i], p[i]),
            (i, r[i]),
            (r[i], s[i]),
            (r[i], t[i]),
        ]);
    }
    let out = b.finish(ReductionKind::Apx, 3 * n, n)?;
    assert!(out.graph.max_degree() <= 5);
    Ok(out)
}

fn source_builder(g: &Graph) -> Builder {
    let mut b = Builder::new();
    b.family("v", g.n());
    b.edges.extend(g.edges());
    b
}

fn ensure(g: &Graph, s: &VertexSet, variant: Variant) -> Result<()> {
    let report = verify::verify_set(g, s, variant);
    if report.holds {
        return Ok(());
    }
    let why: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    Err(Error::InvalidWitness(format!(
        "{s} is not a {} set: {}",
        variant.name(),
        why.join("; ")
    )))
}

/// Maps a source solution to a gadget solution of size
/// `|source| + offset`. For set cover `source` holds 0-based subset
/// indices (universe `m`); otherwise it is a vertex set of the source
/// graph. Both sides are verified.
pub fn forward_witness(out: &ReductionOutput, source: &VertexSet) -> Result<VertexSet> {
    let n = out.graph.n();
    let lift = |s: &VertexSet| s.resized(n).expect("source ids are gadget ids");
    let picked = |family: &str, pick: &dyn Fn(usize) -> bool| {
        VertexSet::from_ids(
            n,
            out.role(family)
                .iter()
                .enumerate()
                .filter(|&(i, _)| pick(i))
                .map(|(_, &v)| v),
        )
    };
    let image = match out.kind {
        ReductionKind::SetCover => {
            let m = out.role("c").len();
            if source.universe() != m || !cover_of(out, &source.to_vec()) {
                return Err(Error::InvalidWitness(format!(
                    "{source} is not a set cover"
                )));
            }
            picked("c", &|j| source.contains(j)).union(&out.role_set("v"))
        }
        kind => {
            let variant = kind
                .source_variant()
                .expect("graph reductions have a source variant");
            if source.universe() != out.source_n {
                return Err(Error::InvalidWitness(
                    "witness universe does not match the source graph".into(),
                ));
            }
            ensure(&out.source_graph(), source, variant)?;
            let d = lift(source);
            match kind {
                ReductionKind::Peb if out.offset == 0 => {
                    // Every y has a pendant neighbor: all of Y plus the
                    // isolated vertices is no larger than any dominating set
                    // and has an isolate.
                    let g = &out.graph;
                    let isolated =
                        VertexSet::from_ids(n, (0..out.source_n).filter(|&v| g.degree(v) == 0));
                    out.role_set("y").union(&isolated)
                }
                ReductionKind::Peb | ReductionKind::Gp => d.union(&out.role_set("b")),
                ReductionKind::InSdm => d
                    .union(&picked("a", &|i| !source.contains(i)))
                    .union(&picked("b", &|i| source.contains(i))),
                ReductionKind::Apx => d
                    .union(&out.role_set("s"))
                    .union(&out.role_set("t"))
                    .union(&picked("p", &|i| source.contains(i)))
                    .union(&picked("q", &|i| !source.contains(i))),
                ReductionKind::SetCover => unreachable!(),
            }
        }
    };
    ensure(&out.graph, &image, out.kind.target_variant())
        .map_err(|e| Error::Construction(format!("forward map failed: {e}")))?;
    if image.len() > source.len() + out.offset {
        return Err(Error::Construction(format!(
            "forward map produced {} vertices, expected at most {}",
            image.len(),
            source.len() + out.offset
        )));
    }
    Ok(image)
}

fn cover_of(out: &ReductionOutput, chosen: &[usize]) -> bool {
    let c = out.role("c");
    let g = &out.graph;
    chosen.iter().all(|&j| j < c.len())
        && out
            .role("x")
            .iter()
            .all(|&x| chosen.iter().any(|&j| g.has_edge(x, c[j])))
}

/// Maps a verified gadget solution back to a source solution of size at
/// most `|witness| - offset`. For set cover the result holds 0-based subset
/// indices.
pub fn extract_solution(out: &ReductionOutput, witness: &VertexSet) -> Result<VertexSet> {
    let g = &out.graph;
    if witness.universe() != g.n() {
        return Err(Error::InvalidWitness(
            "witness universe does not match the gadget".into(),
        ));
    }
    ensure(g, witness, out.kind.target_variant())?;
    let in_source = witness.intersection(&out.source_set());
    let result = match out.kind {
        ReductionKind::SetCover => {
            let c = out.role("c");
            let mut chosen = VertexSet::empty(c.len());
            for (j, &cj) in c.iter().enumerate() {
                if witness.contains(cj) {
                    chosen.insert(j);
                }
            }
            for &x in out.role("x") {
                if witness.contains(x) {
                    let j = c
                        .iter()
                        .position(|&cj| g.has_edge(x, cj))
                        .expect("every element lies in some subset");
                    chosen.insert(j);
                }
            }
            if !cover_of(out, &chosen.to_vec()) {
                return Err(Error::Construction(format!(
                    "extracted {chosen} is not a cover"
                )));
            }
            chosen
        }
        kind => {
            let mut d = in_source;
            match kind {
                ReductionKind::Peb => {
                    for (&a, &y) in out.role("a").iter().zip(out.role("Y1")) {
                        if witness.contains(a) {
                            d.insert(y);
                        }
                    }
                }
                ReductionKind::Gp => {
                    for (i, &a) in out.role("a").iter().enumerate() {
                        if witness.contains(a) {
                            d.insert(i);
                        }
                    }
                }
                _ => {}
            }
            let d = d.resized(out.source_n).expect("only source ids remain");
            let variant = kind
                .source_variant()
                .expect("graph reductions have a source variant");
            ensure(&out.source_graph(), &d, variant)
                .map_err(|e| Error::Construction(format!("extraction failed: {e}")))?;
            d
        }
    };
    if result.len() + out.offset > witness.len() {
        return Err(Error::Construction(format!(
            "extracted {} items from a witness of size {} with offset {}",
            result.len(),
            witness.len(),
            out.offset
        )));
    }
    Ok(result)
}

/// Set cover extraction as 0-based subset indices: the subsets whose `c_j`
/// is in `ids`, plus the smallest-indexed subset holding each element in
/// `ids`.
pub fn extract_cover(out: &ReductionOutput, ids: &VertexSet) -> Result<Vec<usize>> {
    if out.kind != ReductionKind::SetCover {
        return Err(Error::Precondition(format!(
            "expected a set cover gadget, got {}",
            out.kind
        )));
    }
    extract_solution(out, ids).map(|s| s.to_vec())
}
