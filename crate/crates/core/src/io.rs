//! Edge-list JSON: `{"n": int, "edges": [[u, v], ...], "name": str?}`.

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl EdgeList {
    pub fn from_graph(graph: &Graph) -> Self {
        Self {
            n: graph.n(),
            edges: graph.edges().map(Into::into).collect(),
            name: graph.name().map(str::to_string),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        let graph = Graph::new(self.n, self.edges.into_iter().map(|[u, v]| (u, v)))?;
        Ok(match self.name {
            Some(name) => graph.with_name(name),
            None => graph,
        })
    }
}

pub fn to_json(graph: &Graph) -> String {
    serde_json::to_string(&EdgeList::from_graph(graph)).expect("edge lists always serialize")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::EdgeListJson(e.to_string()))?;
    list.into_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_keeps_name() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap().with_name("C4");
        let text = to_json(&g);
        assert_eq!(text, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]],"name":"C4"}"#);
        let back = from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.name(), Some("C4"));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(from_json(r#"{"n":2,"edges":[[0,2]]}"#), Err(Error::OutOfRange { vertex: 2, n: 2 }));
        assert!(matches!(from_json(r#"{"edges":[]}"#), Err(Error::EdgeListJson(_))));
        assert_eq!(from_json(r#"{"n":1,"edges":[]}"#).unwrap(), Graph::complete(1));
    }
}
