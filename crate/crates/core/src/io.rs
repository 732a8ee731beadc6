//! Text formats for graphs.
//!
//! Edge-list format: the first non-comment line holds the vertex count `n`;
//! every further non-empty line is `u v` with `u, v < n`. Lines starting with
//! `#` are comments. Serialization writes edges as `u v` with `u < v` in
//! ascending order.
//!
//! Structured format: a JSON document
//! `{"n": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}` where
//! `labels` is optional.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Structured,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        let g = Graph::new(self.n, &self.edges)?;
        match self.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Structured => {
            let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                msg: e.to_string(),
            })?;
            doc.into_graph()
        }
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("{}\n", g.n());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
        GraphFormat::Structured => serde_json::to_string(&GraphDocument::from_graph(g))
            .expect("graph documents always serialize"),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let nums: Vec<usize> = fields
            .iter()
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| err(format!("not a vertex id: {f:?}")))
            })
            .collect::<Result<_>>()?;
        match (n, nums.as_slice()) {
            (None, [count]) => n = Some(*count),
            (None, _) => return Err(err("expected the vertex count on its own line".into())),
            (Some(count), [u, v]) => {
                if *u >= count || *v >= count {
                    return Err(err(format!("edge ({u}, {v}) exceeds vertex count {count}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                edges.push((*u, *v));
            }
            (Some(_), _) => return Err(err(format!("expected `u v`, got {line:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex count".into(),
    })?;
    Graph::new(n, &edges)
}

/// Graphviz rendering; vertex labels become node labels.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {v} [label=\"{}\"];\n", l.replace('"', "\\\""))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn parses_path() {
        let g = parse_graph("3\n0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g, generate::path(3));
    }

    #[test]
    fn serializes_k2() {
        assert_eq!(
            serialize_graph(&generate::complete(2), GraphFormat::EdgeList),
            "2\n0 1\n"
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\n3\n# edge\n2 1\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_graph("3\n0 1\n0 x\n", GraphFormat::EdgeList) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph("2\n0 5\n", GraphFormat::EdgeList) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph("", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("3\n1 1\n", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn grid_round_trip() {
        let g = generate::grid(3, 3);
        for fmt in [GraphFormat::EdgeList, GraphFormat::Structured] {
            let text = serialize_graph(&g, fmt);
            assert_eq!(parse_graph(&text, fmt).unwrap(), g);
        }
    }

    #[test]
    fn structured_keeps_labels() {
        let g = generate::path(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        let text = serialize_graph(&g, GraphFormat::Structured);
        assert!(text.contains("\"labels\""));
        assert_eq!(parse_graph(&text, GraphFormat::Structured).unwrap(), g);
        assert!(to_dot(&g).contains("label=\"a\""));
    }
}
