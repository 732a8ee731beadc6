use std::io::Read;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secdom::classes::{self, PebResult};
use secdom::families::{self, Source};
use secdom::io::{self, GraphDocument};
use secdom::reductions::{self, ReductionKind, ReductionOutput, SetCoverInstance};
use secdom::solve::{self, SolverConfig};
use secdom::{
    catalog, generate, verify, Decision, Error, FamilySpec, Graph, GraphFormat, VertexSet,
};
use serde_json::json;

use crate::{Cli, Command, GraphClass, OutputFormat};

pub const OK: i32 = 0;
pub const USAGE: i32 = 1;
pub const NEGATIVE: i32 = 2;
pub const BUDGET: i32 = 3;

pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn new(text: String, code: i32) -> Self {
        Self { text, code }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted | Error::TooLarge(..) => BUDGET,
            _ => USAGE,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: USAGE,
    }
}

type Result<T> = std::result::Result<T, Failure>;

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Gen { family } => gen(cli, family),
        Command::Solve { variant, k } => {
            let g = read_graph(cli)?;
            match k {
                Some(k) => decide(cli, &g, *variant, *k),
                None => solve_min(cli, &g, *variant),
            }
        }
        Command::Verify { variant, set } => {
            let g = read_graph(cli)?;
            let s = parse_set(set, g.n())?;
            let report = verify::verify_set(&g, &s, *variant);
            let code = if report.holds { OK } else { NEGATIVE };
            let text = match cli.format {
                OutputFormat::Json => json_line(&report),
                _ => {
                    let mut t = format!("{}\n", if report.holds { "holds" } else { "fails" });
                    for v in &report.violations {
                        t.push_str(&format!("violation {v}\n"));
                    }
                    t
                }
            };
            Ok(Output::new(text, code))
        }
        Command::Recognize { class } => recognize(cli, *class),
        Command::Reduce { which, y1, side } => reduce(cli, *which, (*y1).into(), side.as_deref()),
        Command::Family { spec } => family(cli, spec),
    }
}

fn read_input(cli: &Cli) -> Result<String> {
    if let Some(path) = &cli.input {
        return std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())));
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
    Ok(text)
}

fn read_graph(cli: &Cli) -> Result<Graph> {
    if let Some(inline) = &cli.graph {
        return parse_inline(inline);
    }
    let text = read_input(cli)?;
    let format = if text.trim_start().starts_with('{') {
        GraphFormat::Structured
    } else {
        GraphFormat::EdgeList
    };
    Ok(io::parse_graph(&text, format)?)
}

/// `n:u-v,u-v,...`; the edge part may be empty.
pub fn parse_inline(s: &str) -> Result<Graph> {
    let (n, edges) = s
        .split_once(':')
        .ok_or_else(|| usage(format!("inline graph `{s}` must look like `n:u-v,...`")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad vertex count `{n}`")))?;
    let mut list = Vec::new();
    for e in edges.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (u, v) = e
            .split_once('-')
            .ok_or_else(|| usage(format!("bad edge `{e}`")))?;
        let id = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad edge `{e}`")))
        };
        list.push((id(u)?, id(v)?));
    }
    Ok(Graph::new(n, &list)?)
}

pub fn parse_set(s: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::empty(n);
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = t
            .parse()
            .map_err(|_| usage(format!("bad vertex id `{t}`")))?;
        if v >= n {
            return Err(usage(format!(
                "vertex {v} is out of range for {n} vertices"
            )));
        }
        set.insert(v);
    }
    Ok(set)
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

fn print_graph(format: OutputFormat, g: &Graph) -> String {
    match format {
        OutputFormat::Text => io::serialize_graph(g, GraphFormat::EdgeList),
        OutputFormat::Json => io::serialize_graph(g, GraphFormat::Structured) + "\n",
        OutputFormat::Dot => io::to_dot(g),
    }
}

fn gen(cli: &Cli, words: &[String]) -> Result<Output> {
    let g = if words[0] == "random" {
        let [_, n, p] = words else {
            return Err(usage("random takes a vertex count and an edge probability"));
        };
        let n: usize = n
            .parse()
            .map_err(|_| usage(format!("bad vertex count `{n}`")))?;
        let p: f64 = p
            .parse()
            .ok()
            .filter(|p| (0.0..=1.0).contains(p))
            .ok_or_else(|| usage(format!("bad probability `{p}`")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        catalog::random_graph(&mut rng, n, p)
    } else {
        let words: Vec<&str> = words.iter().map(String::as_str).collect();
        generate::generate(&FamilySpec::parse(&words)?)?
    };
    Ok(Output::new(print_graph(cli.format, &g), OK))
}

fn solve_min(cli: &Cli, g: &Graph, variant: secdom::Variant) -> Result<Output> {
    let config = SolverConfig {
        budget: cli.budget.budget(),
        parallel: cli.budget.parallel,
        ..SolverConfig::default()
    };
    let s = solve::solve_with(g, variant, &config)?;
    let code = match (s.value, s.exhausted) {
        (Some(_), _) => OK,
        (None, true) => NEGATIVE,
        (None, false) => BUDGET,
    };
    let text = match cli.format {
        OutputFormat::Json => json_line(&s),
        _ => {
            let value = match (s.value, s.exhausted) {
                (Some(v), _) => v.to_string(),
                (None, true) => "absent".into(),
                (None, false) => "unknown".into(),
            };
            let mut t = format!("value {value}\n");
            if let Some(w) = &s.witness {
                t.push_str(&format!("witness {w}\n"));
            }
            t.push_str(&format!(
                "exhausted {}\nexplored {}\n",
                s.exhausted, s.explored
            ));
            t
        }
    };
    Ok(Output::new(text, code))
}

fn decide(cli: &Cli, g: &Graph, variant: secdom::Variant, k: usize) -> Result<Output> {
    let d = solve::solve_decision(g, variant, k, &cli.budget.budget())?;
    let code = match d {
        Decision::Yes { .. } => OK,
        Decision::No => NEGATIVE,
        Decision::Unknown => BUDGET,
    };
    let text = match cli.format {
        OutputFormat::Json => json_line(&d),
        _ => match &d {
            Decision::Yes { witness } => format!("yes {witness}\n"),
            Decision::No => "no\n".into(),
            Decision::Unknown => "unknown\n".into(),
        },
    };
    Ok(Output::new(text, code))
}

fn recognize(cli: &Cli, class: GraphClass) -> Result<Output> {
    let g = read_graph(cli)?;
    let name = format!("{class:?}").to_lowercase();
    let (member, certificate, lines): (Option<bool>, serde_json::Value, Vec<String>) = match class {
        GraphClass::Bipartite => match classes::bipartition(&g) {
            Some((x, y)) => (
                Some(true),
                json!({ "x": x, "y": y }),
                vec![format!("x {x}"), format!("y {y}")],
            ),
            None => (Some(false), json!(null), vec![]),
        },
        GraphClass::Split => match classes::split_partition(&g) {
            Some(p) => (
                Some(true),
                json!(p),
                vec![
                    format!("clique {}", p.clique),
                    format!("independent {}", p.independent),
                ],
            ),
            None => (Some(false), json!(null), vec![]),
        },
        GraphClass::Threshold => match classes::recognize_threshold(&g) {
            Some(c) => {
                let join = |v: &[usize]| {
                    v.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let mut lines = vec![
                    format!("clique_order {}", join(&c.clique_order)),
                    format!("independent_order {}", join(&c.independent_order)),
                ];
                let insds = classes::threshold_insds(&g).ok();
                if let Some(s) = &insds {
                    lines.push(format!("insds {s}"));
                }
                (
                    Some(true),
                    json!({ "certificate": c, "insds": insds }),
                    lines,
                )
            }
            None => (Some(false), json!(null), vec![]),
        },
        GraphClass::Peb => match classes::perfect_edge_elimination(&g) {
            PebResult::Ordering(o) => {
                let edges: Vec<String> = o.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let line = format!("ordering {}", edges.join(" "));
                (Some(true), json!(o), vec![line])
            }
            PebResult::Absent | PebResult::NotBipartite => (Some(false), json!(null), vec![]),
            PebResult::Unresolved => (None, json!(null), vec![]),
        },
    };
    let code = match member {
        Some(true) => OK,
        Some(false) => NEGATIVE,
        None => BUDGET,
    };
    let text = match cli.format {
        OutputFormat::Json => json_line(&json!({
            "class": name,
            "member": member,
            "certificate": certificate,
        })),
        _ => {
            let verdict = match member {
                Some(true) => "yes",
                Some(false) => "no",
                None => "unresolved",
            };
            let mut t = format!("{name} {verdict}\n");
            for l in lines {
                t.push_str(&l);
                t.push('\n');
            }
            t
        }
    };
    Ok(Output::new(text, code))
}

fn reduce(
    cli: &Cli,
    which: ReductionKind,
    y1: reductions::Y1Rule,
    side: Option<&str>,
) -> Result<Output> {
    let out = match which {
        ReductionKind::SetCover => {
            if cli.graph.is_some() {
                return Err(usage(
                    "setcover reads an instance from --input or standard input",
                ));
            }
            reductions::setcover_to_split(&SetCoverInstance::parse(&read_input(cli)?)?)?
        }
        ReductionKind::Peb => {
            let g = read_graph(cli)?;
            let x = match side {
                Some(s) => parse_set(s, g.n())?,
                None => {
                    classes::bipartition(&g)
                        .ok_or_else(|| Failure {
                            message: "graph is not bipartite".into(),
                            code: NEGATIVE,
                        })?
                        .0
                }
            };
            reductions::bipartite_dom_to_peb(&g, &x, y1)?
        }
        ReductionKind::InSdm => reductions::indm_to_insdm(&read_graph(cli)?)?,
        ReductionKind::Gp => reductions::gp_graph(&read_graph(cli)?)?,
        ReductionKind::Apx => reductions::apx_gadget(&read_graph(cli)?)?,
    };
    Ok(Output::new(print_reduction(cli.format, &out), OK))
}

/// Text output is an edge list whose `#` comment header carries the
/// offset and roles, so it can be piped straight into `solve`.
fn print_reduction(format: OutputFormat, out: &ReductionOutput) -> String {
    match format {
        OutputFormat::Text => {
            let mut t = format!("# reduction {} offset {}\n", out.kind, out.offset);
            for (family, ids) in &out.roles {
                let ids: Vec<String> = ids.iter().map(ToString::to_string).collect();
                t.push_str(&format!("# {family}: {}\n", ids.join(" ")));
            }
            t + &io::serialize_graph(&out.graph, GraphFormat::EdgeList)
        }
        OutputFormat::Json => json_line(&json!({
            "reduction": out.kind,
            "offset": out.offset,
            "source_n": out.source_n,
            "roles": out.roles,
            "graph": GraphDocument::from_graph(&out.graph),
        })),
        OutputFormat::Dot => io::to_dot(&out.graph),
    }
}

fn family(cli: &Cli, words: &[String]) -> Result<Output> {
    let words: Vec<&str> = words.iter().map(String::as_str).collect();
    let spec = FamilySpec::parse(&words)?;
    let r = families::closed_form(&spec)?;
    let bound_witness = match spec {
        FamilySpec::Grid { m, k } => Some(families::grid_witness(m, k)?),
        _ => None,
    };
    let code = match (r.value, r.source) {
        (None, Source::ExactSolver) => NEGATIVE,
        _ => OK,
    };
    let text = match cli.format {
        OutputFormat::Json => {
            let mut v = serde_json::to_value(&r).expect("serializable result");
            if let Some(w) = &bound_witness {
                v["bound_witness"] = json!(w);
            }
            json_line(&v)
        }
        _ => {
            let value = match (r.value, r.source) {
                (Some(v), _) => v.to_string(),
                (None, Source::GridUpperBound) => "unknown".into(),
                (None, _) => "absent".into(),
            };
            let source = serde_json::to_value(r.source).expect("serializable source");
            let mut t = format!("value {value}\n");
            if let Some(w) = &r.witness {
                t.push_str(&format!("witness {w}\n"));
            }
            if let Some(b) = r.upper_bound.filter(|_| r.value.is_none()) {
                t.push_str(&format!("upper_bound {b}\n"));
            }
            if let Some(w) = &bound_witness {
                t.push_str(&format!("bound_witness {w}\n"));
            }
            t.push_str(&format!("source {}\n", source.as_str().unwrap_or_default()));
            t
        }
    };
    Ok(Output::new(text, code))
}
