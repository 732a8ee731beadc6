//! Closed-form independent secure domination numbers for named families,
//! with explicit witness sets.
//!
//! Every witness is checked with [`verify::verify_set`] before it is handed
//! out; a construction that does not verify is an error, never a silent
//! wrong answer.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{self, FamilySpec};
use crate::graph::Graph;
use crate::solve::{self, SearchBudget};
use crate::verify::{self, Variant, Violation};
use crate::vertex_set::VertexSet;

/// Which result produced a [`ClosedFormResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// `γ_is(K_n) = 1`.
    Complete,
    /// `γ_is(K_{p,q})` is `q` when `p = 1` and `p` otherwise.
    CompleteBipartite,
    /// `γ_is(P_n) = ⌈3n/7⌉` for `n >= 4`.
    PathFormula,
    /// `γ_is(C_n) = ⌈3n/7⌉` for `n ∉ {3, 5}`.
    CycleFormula,
    /// `γ_is(W_n) = ⌈3n/7⌉` on the rim size `n`, `n ∉ {3, 5}`.
    WheelFormula,
    /// `γ_is(K_1 + G) = γ_is(G)` for non-complete `G`, right side solved
    /// exactly.
    ApexJoin,
    /// Grids only have the upper bound `⌈mk/3⌉ + 4`.
    GridUpperBound,
    /// Parameters outside every formula's range; answered by exact search.
    ExactSolver,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormResult {
    /// `None` when no InSDS exists, or when only a bound is known.
    #[serde(with = "crate::solve::absent")]
    pub value: Option<usize>,
    pub witness: Option<VertexSet>,
    pub upper_bound: Option<usize>,
    pub source: Source,
}

/// `⌈3n/7⌉`.
pub fn three_sevenths(n: usize) -> usize {
    (3 * n).div_ceil(7)
}

pub fn closed_form(spec: &FamilySpec) -> Result<ClosedFormResult> {
    let spec = spec.validated()?;
    let graph = generate::generate(&spec)?;
    let formula = |value: usize, witness: VertexSet, source: Source| -> Result<ClosedFormResult> {
        checked(&graph, &witness, value)?;
        Ok(ClosedFormResult {
            value: Some(value),
            witness: Some(witness),
            upper_bound: Some(value),
            source,
        })
    };
    match spec {
        FamilySpec::Complete(n) => formula(1, VertexSet::from_ids(n, [0]), Source::Complete),
        FamilySpec::CompleteBipartite { p, q } => {
            let (value, ids) = if p == 1 { (q, 1..1 + q) } else { (p, 0..p) };
            formula(
                value,
                VertexSet::from_ids(p + q, ids),
                Source::CompleteBipartite,
            )
        }
        FamilySpec::Star(q) => formula(
            q,
            VertexSet::from_ids(q + 1, 1..=q),
            Source::CompleteBipartite,
        ),
        FamilySpec::Path(n) if n >= 4 => {
            formula(three_sevenths(n), path_witness(n)?, Source::PathFormula)
        }
        FamilySpec::Cycle(n) if n != 3 && n != 5 => {
            formula(three_sevenths(n), cycle_witness(n)?, Source::CycleFormula)
        }
        FamilySpec::Wheel(n) if n != 3 && n != 5 => {
            let rim = cycle_witness(n)?;
            let witness = rim.resized(n + 1).expect("rim ids fit");
            formula(three_sevenths(n), witness, Source::WheelFormula)
        }
        FamilySpec::Grid { m, k } => Ok(ClosedFormResult {
            value: None,
            witness: None,
            upper_bound: Some(grid_upper_bound(m, k)),
            source: Source::GridUpperBound,
        }),
        FamilySpec::ApexJoin(inner) if !inner.is_complete() => {
            let mut r = exact(&inner)?;
            r.source = Source::ApexJoin;
            if let Some(w) = r.witness.take() {
                let lifted = w.resized(graph.n()).expect("inner ids fit");
                checked(&graph, &lifted, lifted.len())?;
                r.witness = Some(lifted);
            }
            Ok(r)
        }
        _ => exact(&graph),
    }
}

fn exact(g: &Graph) -> Result<ClosedFormResult> {
    let s = solve::solve(g, Variant::InSDom, &SearchBudget::default())?;
    if !s.exhausted {
        return Err(Error::BudgetExhausted);
    }
    Ok(ClosedFormResult {
        value: s.value,
        upper_bound: s.value,
        witness: s.witness,
        source: Source::ExactSolver,
    })
}

fn checked(g: &Graph, witness: &VertexSet, value: usize) -> Result<()> {
    let report = verify::verify_set(g, witness, Variant::InSDom);
    if !report.holds {
        return Err(Error::Construction(format!(
            "witness {witness} fails: {}",
            report
                .violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    if witness.len() != value {
        return Err(Error::Construction(format!(
            "witness has {} vertices, formula says {value}",
            witness.len()
        )));
    }
    Ok(())
}

/// Ids (1-based, as `v_1..v_n`) of the three-in-seven path pattern: three
/// alternate vertices in every full block of seven, then one, two or three
/// alternate vertices for the tail.
fn path_pattern(n: usize) -> Vec<usize> {
    let blocks = n / 7;
    let tail = n % 7;
    let mut ids: Vec<usize> = (0..blocks)
        .flat_map(|i| [7 * i + 2, 7 * i + 4, 7 * i + 6])
        .collect();
    let extra = match tail {
        0 => 0,
        1 | 2 => 1,
        3 | 4 => 2,
        _ => 3,
    };
    ids.extend((0..extra).map(|j| 7 * blocks + 1 + 2 * j));
    ids
}

/// Verified minimum InSDS of `P_n`, `n >= 4`, in 0-based ids.
pub fn path_witness(n: usize) -> Result<VertexSet> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "path witness needs n >= 4, got {n}"
        )));
    }
    let witness = VertexSet::from_ids(n, path_pattern(n).into_iter().map(|v| v - 1));
    checked(&generate::path(n), &witness, three_sevenths(n))?;
    Ok(witness)
}

/// The path pattern reused on `C_n`: the closing edge joins `v_n` and `v_1`,
/// and `v_1` is only used when there is no full block, so independence
/// survives for every `n` except 5.
fn cycle_witness(n: usize) -> Result<VertexSet> {
    let witness = VertexSet::from_ids(n, path_pattern(n).into_iter().map(|v| v - 1));
    checked(&generate::cycle(n), &witness, three_sevenths(n))?;
    Ok(witness)
}

/// `⌈mk/3⌉ + 4`.
pub fn grid_upper_bound(m: usize, k: usize) -> usize {
    (m * k).div_ceil(3) + 4
}

/// Residue of the diagonal class used for an `m × k` grid. Class 0 holds
/// the top-left corner; it is swapped for class 1 exactly when class 0
/// would leave the bottom-right corner undominated.
pub fn grid_diagonal_class(m: usize, k: usize) -> usize {
    if (m + k) % 3 == 1 {
        1
    } else {
        0
    }
}

/// Verified InSDS of `P_m □ P_k` with at most `⌈mk/3⌉ + 4` vertices.
///
/// Starts from the diagonal class `{(r, c) : r + c ≡ t (mod 3)}`, which is
/// independent and dominating but leaves a few undefended vertices next to
/// the top-left and bottom-right corners. The repair tries modifications of
/// at most 2 removals and 4 additions inside the 4×4 corner subgrids, in
/// order of increasing modification count. Both corners are first repaired
/// together; if that fails the top-left corner is repaired on its own and
/// then the bottom-right one, each with the same budget. The other two
/// residue classes are tried, in increasing order, only when the preferred
/// one cannot be repaired (5×5 is the only such case up to 8×8).
pub fn grid_witness(m: usize, k: usize) -> Result<VertexSet> {
    if m == 0 || k == 0 {
        return Err(Error::Precondition("grid sides must be at least 1".into()));
    }
    let g = generate::grid(m, k);
    let n = m * k;
    let bound = grid_upper_bound(m, k);

    let mut top_left = VertexSet::empty(n);
    let mut bottom_right = VertexSet::empty(n);
    for r in 0..m.min(4) {
        for c in 0..k.min(4) {
            top_left.insert(r * k + c);
            bottom_right.insert((m - 1 - r) * k + (k - 1 - c));
        }
    }
    let valid = |s: &VertexSet| verify::check(&g, s, Variant::InSDom);
    let corner_fixed = |s: &VertexSet| {
        verify::verify_set(&g, s, Variant::InSDom)
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Undefended { vertex, .. } if !top_left.contains(*vertex)))
    };
    let both = top_left.union(&bottom_right);

    let preferred = grid_diagonal_class(m, k);
    let classes = std::iter::once(preferred).chain((0..3).filter(|&t| t != preferred));
    for t in classes {
        let base = VertexSet::from_ids(n, (0..n).filter(|v| (v / k + v % k) % 3 == t));
        let found = repair(&g, &base, &both, valid).or_else(|| {
            let first = repair(&g, &base, &top_left, corner_fixed)?;
            repair(&g, &first, &bottom_right, valid)
        });
        if let Some(w) = found.filter(|w| w.len() <= bound) {
            return Ok(w);
        }
    }
    Err(Error::Construction(format!(
        "no corner repair of the {m}x{k} diagonal pattern within {bound} vertices"
    )))
}

const MAX_REMOVALS: usize = 2;
const MAX_ADDITIONS: usize = 4;

/// Smallest modification of the independent set `base` inside `region`
/// (removals first, then additions, both in lexicographic order) that keeps
/// it independent and satisfies `accept`.
fn repair(
    g: &Graph,
    base: &VertexSet,
    region: &VertexSet,
    accept: impl Fn(&VertexSet) -> bool,
) -> Option<VertexSet> {
    let removable = base.intersection(region).to_vec();
    let addable = region.difference(base).to_vec();
    for total in 0..=MAX_REMOVALS + MAX_ADDITIONS {
        for removals in 0..=total.min(MAX_REMOVALS) {
            let additions = total - removals;
            if additions > MAX_ADDITIONS {
                continue;
            }
            for removed in combinations(&removable, removals) {
                let mut kept = base.clone();
                for &v in &removed {
                    kept.remove(v);
                }
                // An added vertex must have no neighbor left in the set.
                let free: Vec<usize> = addable
                    .iter()
                    .copied()
                    .filter(|&v| g.neighbors(v).is_disjoint(&kept))
                    .collect();
                for added in combinations(&free, additions) {
                    let mut candidate = kept.clone();
                    for &v in &added {
                        candidate.insert(v);
                    }
                    if verify::is_independent(g, &candidate) && accept(&candidate) {
                        return Some(candidate);
                    }
                }
            }
        }
    }
    None
}

/// All `r`-element subsets of `items`, in lexicographic order.
fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        r: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::with_capacity(r), &mut out);
    out
}
