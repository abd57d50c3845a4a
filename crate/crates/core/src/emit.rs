//! DOT and JSON edge-list output for graphs, and reading the edge list back.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::Vertex;

/// `{"n": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}`.
/// `labels` is omitted for unlabeled graphs; extra fields are ignored on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeList {
            n: g.order(),
            edges: g.edges().collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, self.edges.iter().copied())?;
        match &self.labels {
            Some(labels) => g.with_labels(labels.iter().cloned()),
            None => Ok(g),
        }
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from_graph(g)).expect("edge list serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    list.to_graph()
}

pub(crate) fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT; vertices are numbered, labeled vertices carry a `label`.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", dot_escape(name)).unwrap();
    for v in 0..g.order() {
        match g.label(v) {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", dot_escape(l)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_with_labels() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_labels(["a", "b", "c"])
            .unwrap();
        let json = to_json(&g);
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]}"#);
        assert_eq!(from_json(&json).unwrap(), g);
        let plain = from_json(r#"{"n":2,"edges":[[1,0]],"extra":true}"#).unwrap();
        assert!(plain.has_edge(0, 1));
        assert!(matches!(from_json(r#"{"n":2,"edges":[[0,2]]}"#), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(from_json("nope"), Err(Error::Json(_))));
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(to_dot(&g, "K2"), "graph \"K2\" {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
