//! JSON edge-list format: `{"n": 4, "edges": [[0,1],[1,2]], "labels": {"0": "r1"}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl JsonGraph {
    pub fn from_graph(g: &Graph) -> JsonGraph {
        JsonGraph {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().clone(),
        }
    }

    pub fn into_graph(self) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edge_list(self.n, &edges)?.with_labels(self.labels)
    }
}

pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    raw.into_graph()
}

pub fn write_json(g: &Graph) -> String {
    serde_json::to_string(&JsonGraph::from_graph(g)).expect("graph serializes")
}
