//! Acceptance criteria, one line each. Run with
//! `cargo test -p secdom-core --test acceptance`.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secdom::classes::{recognize_threshold, split_partition, threshold_insds};
use secdom::families::{grid_upper_bound, grid_witness, path_witness};
use secdom::io::parse_graph;
use secdom::reductions::{
    apx_gadget, bipartite_dom_to_peb, extract_cover, extract_solution, forward_witness, gp_graph,
    indm_to_insdm, peb_sigma, setcover_to_split, SetCoverInstance, Y1Rule,
};
use secdom::{
    catalog, generate, solve, verify, Graph, GraphFormat, SearchBudget, Variant, VertexSet,
};

type Outcome = Result<String, String>;

fn budget() -> SearchBudget {
    SearchBudget {
        max_n: 40,
        ..SearchBudget::default()
    }
}

/// Exact optimum; an error if the search did not finish.
fn exact(g: &Graph, variant: Variant) -> Result<Option<usize>, String> {
    let s = solve::solve(g, variant, &budget()).map_err(|e| e.to_string())?;
    if !s.exhausted {
        return Err(format!(
            "{variant:?} search on {} vertices did not finish",
            g.n()
        ));
    }
    Ok(s.value)
}

fn exact_with_witness(g: &Graph, variant: Variant) -> Result<(usize, VertexSet), String> {
    let s = solve::solve(g, variant, &budget()).map_err(|e| e.to_string())?;
    match (s.exhausted, s.value, s.witness) {
        (true, Some(v), Some(w)) => Ok((v, w)),
        _ => Err(format!("no {variant:?} optimum on {} vertices", g.n())),
    }
}

fn three_sevenths(n: usize) -> usize {
    (3 * n).div_ceil(7)
}

fn family_formulas() -> Outcome {
    let mut cases: Vec<(String, Graph, usize)> = Vec::new();
    for n in 4..=16 {
        cases.push((format!("P_{n}"), generate::path(n), three_sevenths(n)));
    }
    for n in (4..=14).filter(|&n| n != 5) {
        cases.push((format!("C_{n}"), generate::cycle(n), three_sevenths(n)));
    }
    for n in 1..=10 {
        cases.push((format!("K_{n}"), generate::complete(n), 1));
    }
    for p in 1..=5 {
        for q in p..=5 {
            let value = if p == 1 { q } else { p };
            cases.push((
                format!("K_{p},{q}"),
                generate::complete_bipartite(p, q),
                value,
            ));
        }
    }
    for n in (4..=10).filter(|&n| n != 5) {
        cases.push((format!("W_{n}"), generate::wheel(n), three_sevenths(n)));
    }
    let mut bad = Vec::new();
    for (name, g, formula) in &cases {
        let got = exact(g, Variant::InSDom)?;
        if got != Some(*formula) {
            bad.push(format!("{name}: solver {got:?}, formula {formula}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} instances, all equal", cases.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn nonexistence() -> Outcome {
    let c5 =
        solve::solve(&generate::cycle(5), Variant::InSDom, &budget()).map_err(|e| e.to_string())?;
    if c5.value.is_some() || !c5.exhausted {
        return Err(format!(
            "C_5 gave value {:?}, exhausted {}",
            c5.value, c5.exhausted
        ));
    }
    let c3 = exact(&generate::cycle(3), Variant::InSDom)?;
    if c3 != Some(1) {
        return Err(format!("C_3 gave {c3:?}"));
    }
    Ok("C_5 absent after exhaustive search, C_3 = 1".into())
}

fn witness_constructions() -> Outcome {
    for n in 4..=50 {
        let w = path_witness(n).map_err(|e| e.to_string())?;
        if w.len() != three_sevenths(n) || !verify::check(&generate::path(n), &w, Variant::InSDom) {
            return Err(format!("path witness for n = {n} is wrong: {w}"));
        }
    }
    let mut largest_slack = 0;
    for m in 2..=8 {
        for k in 2..=8 {
            let w = grid_witness(m, k).map_err(|e| format!("{m}x{k}: {e}"))?;
            let bound = grid_upper_bound(m, k);
            if w.len() > bound || !verify::check(&generate::grid(m, k), &w, Variant::InSDom) {
                return Err(format!("grid witness for {m}x{k} is wrong: {w}"));
            }
            largest_slack = largest_slack.max(bound - w.len());
        }
    }
    Ok(format!(
        "47 path witnesses, 49 grid witnesses; grid sizes at most {largest_slack} below the bound"
    ))
}

fn parameter_chain() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=7).flat_map(catalog::all_connected_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ecd0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.15..0.7);
        graphs.push(catalog::random_graph(&mut rng, n, p));
    }
    let mut violations = Vec::new();
    for g in &graphs {
        let value = |v| exact(g, v).map(|x| x.expect("every graph with a vertex has one"));
        let gamma = value(Variant::Dom)?;
        let gamma_s = value(Variant::SDom)?;
        let gamma_0 = value(Variant::IDom)?;
        let i = value(Variant::InDom)?;
        let gamma_is = exact(g, Variant::InSDom)?;
        let mut ok = gamma <= gamma_s && gamma <= gamma_0 && gamma_0 <= i;
        if let Some(is) = gamma_is {
            ok &= gamma_s <= is && i <= is;
        }
        if !ok {
            violations.push(format!("{:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    if violations.is_empty() {
        Ok(format!(
            "{exhaustive} connected graphs n <= 7 plus 500 random n <= 12, zero violations"
        ))
    } else {
        Err(format!(
            "{} violations: {}",
            violations.len(),
            violations.join("; ")
        ))
    }
}

fn reduction_identities() -> Outcome {
    let mut checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..50 {
        let inst = common::random_setcover(&mut rng, 6, 5);
        let cover = inst.minimum_cover().map_err(|e| e.to_string())?;
        let out = setcover_to_split(&inst).map_err(|e| e.to_string())?;
        let (ids, w) = exact_with_witness(&out.graph, Variant::IDom)?;
        let extracted = extract_cover(&out, &w).map_err(|e| e.to_string())?;
        if ids != cover.len() + out.offset || extracted.len() != cover.len() {
            return Err(format!(
                "set cover: {ids} vs {} + {}",
                cover.len(),
                out.offset
            ));
        }
        checked += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..50 {
        let a = rng.gen_range(1..=4);
        let b = rng.gen_range(1..=8 - a);
        let (g, x, _) = catalog::random_bipartite(&mut rng, a, b, 0.45);
        let out = bipartite_dom_to_peb(&g, &x, Y1Rule::default()).map_err(|e| e.to_string())?;
        let gamma = exact(&g, Variant::Dom)?.unwrap();
        let (gamma0, w) = exact_with_witness(&out.graph, Variant::IDom)?;
        let back = extract_solution(&out, &w).map_err(|e| e.to_string())?;
        if gamma + out.offset != gamma0 || back.len() != gamma {
            return Err(format!(
                "peb: γ = {gamma}, γ0 = {gamma0}, l = {}",
                out.offset
            ));
        }
        checked += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..50 {
        let n = rng.gen_range(1..=5);
        let g = catalog::random_graph(&mut rng, n, 0.5);
        let out = indm_to_insdm(&g).map_err(|e| e.to_string())?;
        let (i, d) = exact_with_witness(&g, Variant::InDom)?;
        let (value, w) = exact_with_witness(&out.graph, Variant::InSDom)?;
        let forward = forward_witness(&out, &d).map_err(|e| e.to_string())?;
        let back = extract_solution(&out, &w).map_err(|e| e.to_string())?;
        if i + n != value || forward.len() != value || back.len() != i {
            return Err(format!("insdm: i = {i}, γ_is = {value}, n = {n}"));
        }
        checked += 1;
    }

    for n in 1..=5 {
        for g in catalog::all_connected_graphs(n) {
            let out = gp_graph(&g).map_err(|e| e.to_string())?;
            let gamma_is = exact(&out.graph, Variant::InSDom)?;
            let gamma = exact(&g, Variant::Dom)?.unwrap();
            let gamma_gp = exact(&out.graph, Variant::Dom)?.unwrap();
            if gamma_is != Some(2 * n) || gamma + n != gamma_gp {
                return Err(format!(
                    "gp on n = {n}: γ_is = {gamma_is:?}, γ = {gamma}, γ' = {gamma_gp}"
                ));
            }
            checked += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let g = catalog::random_bounded_degree(&mut rng, n, 3, 0.6);
        let out = apx_gadget(&g).map_err(|e| e.to_string())?;
        let (i, d) = exact_with_witness(&g, Variant::InDom)?;
        let value = exact(&out.graph, Variant::InSDom)?.unwrap();
        let forward = forward_witness(&out, &d).map_err(|e| e.to_string())?;
        if i + 3 * n != value || forward.len() != value {
            return Err(format!("apx: i = {i}, γ_is = {value}, n = {n}"));
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} instances across the five reductions, zero violations"
    ))
}

fn threshold_algorithm() -> Outcome {
    let mut instances = 0;
    let mut slowest = Duration::ZERO;
    for n in 1..=12 {
        for g in catalog::connected_threshold_graphs(n) {
            let s = threshold_insds(&g).map_err(|e| e.to_string())?;
            let value = exact(&g, Variant::InSDom)?;
            if !verify::check(&g, &s, Variant::InSDom) || value != Some(s.len()) {
                return Err(format!(
                    "mismatch on {:?}: got {s}, solver {value:?}",
                    g.edges().collect::<Vec<_>>()
                ));
            }
            if n == 12 {
                let best = (0..5)
                    .map(|_| {
                        let start = Instant::now();
                        std::hint::black_box(threshold_insds(std::hint::black_box(&g)).unwrap());
                        start.elapsed()
                    })
                    .min()
                    .unwrap();
                slowest = slowest.max(best);
            }
            instances += 1;
        }
    }
    if slowest >= Duration::from_millis(1) {
        return Err(format!("threshold_insds took {slowest:?} at n = 12"));
    }
    Ok(format!(
        "{instances} threshold graphs, zero mismatches, slowest n = 12 run {slowest:?}"
    ))
}

fn structural_assertions() -> Outcome {
    let inst = SetCoverInstance::parse(include_str!("fixtures/setcover_9_5.txt"))
        .map_err(|e| e.to_string())?;
    let split = setcover_to_split(&inst).map_err(|e| e.to_string())?;
    let partition = split_partition(&split.graph).ok_or("set cover gadget is not split")?;
    let kl = VertexSet::from_ids(
        split.graph.n(),
        split.role("c").iter().chain(split.role("u")).copied(),
    );
    if partition.clique != kl {
        return Err(format!("split clique {} is not K ∪ L", partition.clique));
    }

    let g = parse_graph(
        include_str!("fixtures/bipartite_5x5.txt"),
        GraphFormat::EdgeList,
    )
    .map_err(|e| e.to_string())?;
    let peb = bipartite_dom_to_peb(&g, &VertexSet::from_ids(10, 0..5), Y1Rule::default())
        .map_err(|e| e.to_string())?;
    let sigma = peb_sigma(&peb).map_err(|e| e.to_string())?;
    if peb.graph.n() != 19 {
        return Err(format!("PEB gadget has {} vertices", peb.graph.n()));
    }

    let mut gadgets = 0;
    for n in 1..=7 {
        for g in catalog::all_graphs(n)
            .into_iter()
            .filter(|g| g.max_degree() <= 3)
        {
            let out = apx_gadget(&g).map_err(|e| e.to_string())?;
            if out.graph.max_degree() > 5 {
                return Err("apx gadget exceeds degree 5".into());
            }
            gadgets += 1;
        }
    }
    if recognize_threshold(&split.graph).is_some() {
        return Err("set cover gadget unexpectedly threshold".into());
    }
    Ok(format!(
        "split partition found, σ with {} edges verified, {gadgets} apx gadgets with Δ <= 5",
        sigma.edges.len()
    ))
}

fn setcover_fixture() -> Outcome {
    let inst = SetCoverInstance::parse(include_str!("fixtures/setcover_9_5.txt"))
        .map_err(|e| e.to_string())?;
    let out = setcover_to_split(&inst).map_err(|e| e.to_string())?;
    if out.graph.n() != 24 {
        return Err(format!("gadget has {} vertices", out.graph.n()));
    }
    let (ids, w) = exact_with_witness(&out.graph, Variant::IDom)?;
    let cover = extract_cover(&out, &w).map_err(|e| e.to_string())?;
    let brute = inst.minimum_cover().map_err(|e| e.to_string())?;
    if ids != 8 || cover.len() != 3 || brute.len() != 3 || !inst.is_cover(&cover) {
        return Err(format!(
            "min IDS {ids}, extracted cover {cover:?}, brute-force cover {brute:?}"
        ));
    }
    let named: Vec<String> = cover.iter().map(|j| format!("C{}", j + 1)).collect();
    Ok(format!(
        "min IDS 8, extracted cover {{{}}}",
        named.join(", ")
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("family formulas match the exact solver", family_formulas),
        ("C_5 has no InSDS, C_3 has value 1", nonexistence),
        (
            "path and grid witnesses verify within their sizes",
            witness_constructions,
        ),
        ("parameter chain holds", parameter_chain),
        ("reduction size identities", reduction_identities),
        (
            "threshold algorithm is optimal and fast",
            threshold_algorithm,
        ),
        ("gadget structure", structural_assertions),
        ("nine-element set cover end to end", setcover_fixture),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed().as_secs_f64();
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {} {status} [{elapsed:.2}s] {name}: {detail}",
            i + 1
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
