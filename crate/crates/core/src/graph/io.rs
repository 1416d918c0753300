//! Graph JSON and DOT formats.
//!
//! JSON: `{"order": n, "edges": [[i, j], ...], "labels": [...]}` with
//! 0-based vertices, `i < j`, edges sorted; `labels` is omitted when the
//! graph has none.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            order: g.order(),
            edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Graph> {
        let g = Graph::from_edges(json.order, json.edges.iter().map(|e| (e[0], e[1])))?;
        match json.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphJson::from(self)).expect("graph json is serializable")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let json: GraphJson = serde_json::from_str(text)?;
        Graph::try_from(json)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            let label = self.label(v).replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, make_circulant};

    #[test]
    fn golden_json() {
        let g = cycle(3).unwrap();
        let compact = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(compact, r#"{"order":3,"edges":[[0,1],[0,2],[1,2]]}"#);
    }

    #[test]
    fn golden_dot() {
        let g = make_circulant(4, &[1]).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  3 [label=\"3\"];\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n"
        );
    }

    #[test]
    fn labelled_round_trip() {
        let g = cycle(5)
            .unwrap()
            .with_labels((0..5).map(|i| format!("v\"{i}")).collect())
            .unwrap();
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert!(g.to_dot().contains(r#"[label="v\"0"]"#));
    }

    #[test]
    fn malformed_input() {
        assert!(Graph::from_json("{").is_err());
        assert!(Graph::from_json(r#"{"order":2,"edges":[[0,2]]}"#).is_err());
        assert!(Graph::from_json(r#"{"order":2,"edges":[],"labels":["a"]}"#).is_err());
    }
}
