//! Exact minimum search for all five variants.
//!
//! Sizes are tried in increasing order starting from `⌈n/(Δ+1)⌉`; inside one
//! size the subsets are enumerated depth-first in lexicographic order, so the
//! first feasible set is the lexicographically smallest minimum witness.
//!
//! Pruning, when enabled:
//! * the lowest undominated vertex `w` must get a member from `N[w]`, so the
//!   branch loop stops after the last candidate inside `N[w]`;
//! * a branch dies when some undominated vertex can no longer be covered by
//!   the remaining candidates, or when too few slots remain to cover the
//!   undominated vertices at `Δ + 1` per slot;
//! * for the independent variants, neighbors of chosen vertices are removed
//!   from the candidate pool.
//!
//! The kernel works on single-word masks, so graphs are capped at 64
//! vertices regardless of the configured budget.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::Variant;
use crate::vertex_set::VertexSet;

/// Hard limit of the mask kernel.
pub const MASK_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_n: usize,
    pub max_candidates: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_n: 24,
            max_candidates: 100_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

impl SearchBudget {
    fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_candidates == 0 || self.time_limit.is_zero() {
            return Err(Error::Precondition("budget caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: SearchBudget,
    pub prune: bool,
    /// Fan the first branching level out over the rayon pool. Results are
    /// identical to the sequential search; `explored` may differ.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            budget: SearchBudget::default(),
            prune: true,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub variant: Variant,
    /// `None` either because no feasible set exists (`exhausted`) or because
    /// the budget ran out first (`!exhausted`). Serialized as `"absent"`.
    #[serde(with = "absent")]
    pub value: Option<usize>,
    pub witness: Option<VertexSet>,
    pub explored: u64,
    pub exhausted: bool,
}

/// Serde adapter writing `None` as the string `"absent"` instead of `null`.
pub mod absent {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Value(usize),
        Token(String),
    }

    pub fn serialize<S: Serializer>(value: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => Repr::Value(*v).serialize(s),
            None => s.serialize_str("absent"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<usize>, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Value(v) => Ok(Some(v)),
            Repr::Token(t) if t == "absent" => Ok(None),
            Repr::Token(t) => Err(serde::de::Error::custom(format!(
                "expected a count or \"absent\", got {t:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum Decision {
    Yes { witness: VertexSet },
    No,
    Unknown,
}

/// `max(⌈n/(Δ+1)⌉, 1)`, or 0 for the empty graph. Valid for every variant
/// since each one is in particular a dominating set.
pub fn lower_bound(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    n.div_ceil(g.max_degree() + 1).max(1)
}

pub fn solve(g: &Graph, variant: Variant, budget: &SearchBudget) -> Result<Solution> {
    solve_with(
        g,
        variant,
        &SolverConfig {
            budget: budget.clone(),
            ..SolverConfig::default()
        },
    )
}

pub fn solve_with(g: &Graph, variant: Variant, config: &SolverConfig) -> Result<Solution> {
    let kernel = Kernel::new(g, variant, config)?;
    let shared = Shared::new(&config.budget);
    let mut value = None;
    let mut witness = None;
    let mut exhausted = true;
    for k in kernel.lower..=kernel.n {
        match kernel.first_of_size(k, &shared) {
            Outcome::Found(mask) => {
                value = Some(k);
                witness = Some(VertexSet::from_mask(kernel.n, mask));
                break;
            }
            Outcome::Aborted => {
                exhausted = false;
                break;
            }
            Outcome::None => {}
        }
    }
    Ok(Solution {
        variant,
        value,
        witness,
        explored: shared.explored.load(Ordering::Relaxed),
        exhausted,
    })
}

/// Is there a feasible set of size at most `k`?
pub fn solve_decision(
    g: &Graph,
    variant: Variant,
    k: usize,
    budget: &SearchBudget,
) -> Result<Decision> {
    let config = SolverConfig {
        budget: budget.clone(),
        ..SolverConfig::default()
    };
    let kernel = Kernel::new(g, variant, &config)?;
    let shared = Shared::new(budget);
    for size in kernel.lower..=k.min(kernel.n) {
        match kernel.first_of_size(size, &shared) {
            Outcome::Found(mask) => {
                return Ok(Decision::Yes {
                    witness: VertexSet::from_mask(kernel.n, mask),
                })
            }
            Outcome::Aborted => return Ok(Decision::Unknown),
            Outcome::None => {}
        }
    }
    Ok(Decision::No)
}

/// Every minimum feasible set, in lexicographic order. Limited to 16
/// vertices. Returns an empty list when no feasible set exists.
pub fn all_minimum_sets(
    g: &Graph,
    variant: Variant,
    budget: &SearchBudget,
) -> Result<Vec<VertexSet>> {
    const ENUMERATION_LIMIT: usize = 16;
    let cap = budget.max_n.min(ENUMERATION_LIMIT);
    if g.n() > cap {
        return Err(Error::TooLarge(g.n(), cap));
    }
    let config = SolverConfig {
        budget: budget.clone(),
        ..SolverConfig::default()
    };
    let kernel = Kernel::new(g, variant, &config)?;
    let shared = Shared::new(budget);
    for k in kernel.lower..=kernel.n {
        let mut found = Vec::new();
        let mut search = Search::new(&kernel, k, &shared);
        let flow = search.dfs(0, 0, 0, 0, 0, &mut |mask| {
            found.push(mask);
            false
        });
        search.flush();
        if flow == Flow::Abort {
            return Err(Error::BudgetExhausted);
        }
        if !found.is_empty() {
            return Ok(found
                .into_iter()
                .map(|m| VertexSet::from_mask(kernel.n, m))
                .collect());
        }
    }
    Ok(Vec::new())
}

enum Outcome {
    Found(u64),
    None,
    Aborted,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Flow {
    Continue,
    Stop,
    Abort,
}

struct Shared {
    explored: AtomicU64,
    abort: AtomicBool,
    max_candidates: u64,
    deadline: Instant,
}

impl Shared {
    fn new(budget: &SearchBudget) -> Self {
        Self {
            explored: AtomicU64::new(0),
            abort: AtomicBool::new(false),
            max_candidates: budget.max_candidates,
            deadline: Instant::now() + budget.time_limit,
        }
    }
}

struct Kernel {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    closed: Vec<u64>,
    max_degree: usize,
    lower: usize,
    variant: Variant,
    prune: bool,
    parallel: bool,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn at_or_above(start: usize) -> u64 {
    u64::MAX.checked_shl(start as u32).unwrap_or(0)
}

fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Kernel {
    fn new(g: &Graph, variant: Variant, config: &SolverConfig) -> Result<Self> {
        config.budget.validate()?;
        let cap = config.budget.max_n.min(MASK_LIMIT);
        let n = g.n();
        if n > cap {
            return Err(Error::TooLarge(n, cap));
        }
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).to_mask().expect("n <= 64"))
            .collect();
        let closed = adj.iter().enumerate().map(|(v, &a)| a | bit(v)).collect();
        Ok(Self {
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            adj,
            closed,
            max_degree: g.max_degree(),
            lower: lower_bound(g),
            variant,
            prune: config.prune,
            parallel: config.parallel,
        })
    }

    fn first_of_size(&self, k: usize, shared: &Shared) -> Outcome {
        if k == 0 {
            let mut search = Search::new(self, 0, shared);
            return match search.dfs(0, 0, 0, 0, 0, &mut |_| true) {
                Flow::Stop => Outcome::Found(0),
                Flow::Abort => Outcome::Aborted,
                Flow::Continue => Outcome::None,
            };
        }
        if !self.parallel {
            let mut found = 0;
            let mut search = Search::new(self, k, shared);
            let flow = search.dfs(0, 0, 0, 0, 0, &mut |mask| {
                found = mask;
                true
            });
            search.flush();
            return match flow {
                Flow::Stop => Outcome::Found(found),
                Flow::Abort => Outcome::Aborted,
                Flow::Continue => Outcome::None,
            };
        }
        // Parallel: one task per choice of smallest member. `find_map_first`
        // keeps index order, so the lexicographically first hit wins; an
        // abort in an earlier subtree masks any later hit.
        let roots = Search::new(self, k, shared).root_choices();
        let result = roots.par_iter().find_map_first(|&v| {
            let mut found = 0;
            let mut search = Search::new(self, k, shared);
            let blocked = if self.prune && self.variant.requires_independence() {
                self.adj[v]
            } else {
                0
            };
            let flow = search.dfs(v + 1, bit(v), self.closed[v], 1, blocked, &mut |mask| {
                found = mask;
                true
            });
            search.flush();
            match flow {
                Flow::Stop => Some(Outcome::Found(found)),
                Flow::Abort => Some(Outcome::Aborted),
                Flow::Continue => None,
            }
        });
        result.unwrap_or(Outcome::None)
    }

    /// Secure-domination test through private neighborhoods: `v` can be
    /// swapped for `u` exactly when every vertex dominated only by `v`
    /// lies in `N[u]`.
    fn is_secure(&self, chosen: u64) -> bool {
        let mut once = 0u64;
        let mut twice = 0u64;
        for v in members(chosen) {
            twice |= once & self.closed[v];
            once |= self.closed[v];
        }
        let only_once = once & !twice;
        members(self.full & !chosen).all(|u| {
            members(self.adj[u] & chosen).any(|v| self.closed[v] & only_once & !self.closed[u] == 0)
        })
    }

    fn accept(&self, chosen: u64, dominated: u64) -> bool {
        if dominated != self.full {
            return false;
        }
        let independent = || members(chosen).all(|v| self.adj[v] & chosen == 0);
        match self.variant {
            Variant::Dom => true,
            Variant::InDom => independent(),
            Variant::IDom => self.n == 0 || members(chosen).any(|v| self.adj[v] & chosen == 0),
            Variant::SDom => self.is_secure(chosen),
            Variant::InSDom => independent() && self.is_secure(chosen),
        }
    }
}

struct Search<'a> {
    kernel: &'a Kernel,
    k: usize,
    shared: &'a Shared,
    local: u64,
}

const FLUSH_EVERY: u64 = 4096;

impl<'a> Search<'a> {
    fn new(kernel: &'a Kernel, k: usize, shared: &'a Shared) -> Self {
        Self {
            kernel,
            k,
            shared,
            local: 0,
        }
    }

    fn flush(&mut self) {
        self.shared
            .explored
            .fetch_add(self.local, Ordering::Relaxed);
        self.local = 0;
    }

    /// Counts one node; true when the search must stop.
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= FLUSH_EVERY {
            let total = self
                .shared
                .explored
                .fetch_add(self.local, Ordering::Relaxed)
                + self.local;
            self.local = 0;
            if total > self.shared.max_candidates || Instant::now() >= self.shared.deadline {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
        }
        self.shared.abort.load(Ordering::Relaxed)
    }

    /// Candidate first members at the root, in order, after the same
    /// pruning the sequential loop applies.
    fn root_choices(&self) -> Vec<usize> {
        let (cand, limit) = match self.branch_range(0, 0, 0, 0) {
            Some(r) => r,
            None => return Vec::new(),
        };
        members(cand).filter(|&v| v <= limit).collect()
    }

    /// Candidate mask and the largest vertex worth branching on, or `None`
    /// when the node is dead.
    fn branch_range(
        &self,
        start: usize,
        dominated: u64,
        count: usize,
        blocked: u64,
    ) -> Option<(u64, usize)> {
        let kr = self.kernel;
        let remaining = self.k - count;
        let cand = kr.full & !blocked & at_or_above(start);
        if (cand.count_ones() as usize) < remaining {
            return None;
        }
        let mut limit = kr.n.saturating_sub(1);
        if kr.prune {
            let undom = kr.full & !dominated;
            if undom != 0 {
                let w = undom.trailing_zeros() as usize;
                let options = kr.closed[w] & cand;
                if options == 0 {
                    return None;
                }
                limit = 63 - options.leading_zeros() as usize;
                if undom.count_ones() as usize > remaining * (kr.max_degree + 1) {
                    return None;
                }
                let coverable = members(cand).fold(0u64, |acc, c| acc | kr.closed[c]);
                if undom & !coverable != 0 {
                    return None;
                }
            }
        }
        Some((cand, limit))
    }

    fn dfs(
        &mut self,
        start: usize,
        chosen: u64,
        dominated: u64,
        count: usize,
        blocked: u64,
        sink: &mut dyn FnMut(u64) -> bool,
    ) -> Flow {
        if self.tick() {
            return Flow::Abort;
        }
        let kr = self.kernel;
        if count == self.k {
            if kr.accept(chosen, dominated) && sink(chosen) {
                return Flow::Stop;
            }
            return Flow::Continue;
        }
        let Some((cand, limit)) = self.branch_range(start, dominated, count, blocked) else {
            return Flow::Continue;
        };
        let remaining = self.k - count;
        let independent = kr.prune && kr.variant.requires_independence();
        for v in members(cand) {
            if v > limit {
                break;
            }
            let later = cand & at_or_above(v + 1);
            if (later.count_ones() as usize) < remaining - 1 {
                break;
            }
            let next_blocked = if independent {
                blocked | kr.adj[v]
            } else {
                blocked
            };
            match self.dfs(
                v + 1,
                chosen | bit(v),
                dominated | kr.closed[v],
                count + 1,
                next_blocked,
                sink,
            ) {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, path};

    fn value(g: &Graph, v: Variant) -> Option<usize> {
        let s = solve(g, v, &SearchBudget::default()).unwrap();
        assert!(s.exhausted);
        s.value
    }

    #[test]
    fn known_values() {
        assert_eq!(value(&cycle(5), Variant::InSDom), None);
        assert_eq!(value(&complete(6), Variant::InSDom), Some(1));
        assert_eq!(value(&path(10), Variant::InSDom), Some(5));
        assert_eq!(value(&complete_bipartite(2, 3), Variant::InSDom), Some(2));
        assert_eq!(value(&complete_bipartite(1, 4), Variant::InSDom), Some(4));
    }

    #[test]
    fn decision_examples() {
        let b = SearchBudget::default();
        assert!(matches!(
            solve_decision(&path(7), Variant::InSDom, 3, &b).unwrap(),
            Decision::Yes { .. }
        ));
        assert_eq!(
            solve_decision(&path(7), Variant::InSDom, 2, &b).unwrap(),
            Decision::No
        );
        match solve_decision(&cycle(3), Variant::InSDom, 1, &b).unwrap() {
            Decision::Yes { witness } => assert_eq!(witness.len(), 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn all_minimum_examples() {
        let b = SearchBudget::default();
        let sets = |g: &Graph, v| -> Vec<Vec<usize>> {
            all_minimum_sets(g, v, &b)
                .unwrap()
                .iter()
                .map(VertexSet::to_vec)
                .collect()
        };
        assert_eq!(
            sets(&complete(3), Variant::InSDom),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(sets(&path(3), Variant::Dom), vec![vec![1]]);
        assert_eq!(
            sets(&cycle(4), Variant::InSDom),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert!(sets(&cycle(5), Variant::InSDom).is_empty());
        assert!(all_minimum_sets(&path(17), Variant::Dom, &b).is_err());
    }

    #[test]
    fn empty_graph() {
        let s = solve(&Graph::empty(0), Variant::InSDom, &SearchBudget::default()).unwrap();
        assert_eq!(s.value, Some(0));
        assert!(s.exhausted);
    }

    #[test]
    fn isolated_vertices_are_forced() {
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        let s = solve(&g, Variant::Dom, &SearchBudget::default()).unwrap();
        assert_eq!(s.value, Some(3));
        assert_eq!(s.witness.unwrap().to_vec(), vec![0, 2, 3]);
    }

    #[test]
    fn size_cap_and_budget() {
        let budget = SearchBudget {
            max_n: 5,
            ..SearchBudget::default()
        };
        assert!(matches!(
            solve(&path(6), Variant::Dom, &budget),
            Err(Error::TooLarge(6, 5))
        ));
        let tiny = SearchBudget {
            max_candidates: 10,
            ..SearchBudget::default()
        };
        let s = solve(&path(24), Variant::SDom, &tiny).unwrap();
        assert!(!s.exhausted);
        assert_eq!(s.value, None);
        assert!(s.witness.is_none());
        assert_eq!(
            solve_decision(&path(24), Variant::SDom, 20, &tiny).unwrap(),
            Decision::Unknown
        );
        let zero = SearchBudget {
            max_candidates: 0,
            ..SearchBudget::default()
        };
        assert!(solve(&path(3), Variant::Dom, &zero).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        for n in 4..12 {
            let g = cycle(n);
            for v in Variant::ALL {
                let seq = solve(&g, v, &SearchBudget::default()).unwrap();
                let par = solve_with(
                    &g,
                    v,
                    &SolverConfig {
                        parallel: true,
                        ..SolverConfig::default()
                    },
                )
                .unwrap();
                assert_eq!(
                    (seq.value, seq.witness, seq.exhausted),
                    (par.value, par.witness, par.exhausted)
                );
            }
        }
    }

    #[test]
    fn absent_values_serialize_as_a_token() {
        let s = solve(&cycle(5), Variant::InSDom, &SearchBudget::default()).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"value\":\"absent\""));
        assert_eq!(serde_json::from_str::<Solution>(&json).unwrap(), s);
        let p = solve(&path(3), Variant::InSDom, &SearchBudget::default()).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"value\":2"));
        assert_eq!(serde_json::from_str::<Solution>(&json).unwrap(), p);
    }
}
