//! JSON interchange format for signed plane graphs.
//!
//! ```json
//! {"version":1,"vertices":2,"edges":[{"id":0,"u":0,"v":1,"sign":1},{"id":1,"u":0,"v":1,"sign":-1}],
//!  "rotation":[[0,2],[3,1]],"involution":{"vertices":[1,0],"edges":[1,0]}}
//! ```
//!
//! `rotation` lists darts counterclockwise per vertex (edge `e` owns darts
//! `2e` at `u` and `2e + 1` at `v`). `involution` gives either vertex and
//! edge permutations of the graph or `medial_darts`, a dart permutation of
//! the medial map.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::graph::{Edge, Sign, SignedMultigraph};
use crate::plane::PlaneMap;
use crate::symmetry::MapInvolution;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("document has no `{0}` block")]
    MissingBlock(&'static str),
    #[error(transparent)]
    Graph(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct InvolutionBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub medial_darts: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionBlock>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        if doc.version != FORMAT_VERSION {
            return Err(DocumentError::Version(doc.version));
        }
        Ok(doc)
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_graph(g: &SignedMultigraph) -> Self {
        Self {
            version: FORMAT_VERSION,
            name: None,
            vertices: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id,
                    u: e.u,
                    v: e.v,
                    sign: e.sign,
                    label: None,
                })
                .collect(),
            rotation: None,
            involution: None,
        }
    }

    pub fn from_map(m: &PlaneMap) -> Self {
        let mut doc = Self::from_graph(&m.to_graph());
        doc.rotation = Some(m.vertex_rotations());
        doc
    }

    /// Edge ids must be exactly `0..edges.len()`.
    pub fn graph(&self) -> Result<SignedMultigraph, DocumentError> {
        let n = self.edges.len();
        let mut seen = vec![false; n];
        for e in &self.edges {
            if e.id >= n || std::mem::replace(&mut seen[e.id], true) {
                return Err(Error::Precondition(format!(
                    "edge ids must be dense and unique in 0..{n}; got {}",
                    e.id
                ))
                .into());
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id,
                u: e.u,
                v: e.v,
                sign: e.sign,
            })
            .collect();
        Ok(SignedMultigraph::from_edges(self.vertices, n, edges)?)
    }

    pub fn plane_map(&self) -> Result<PlaneMap, DocumentError> {
        let rot = self
            .rotation
            .as_ref()
            .ok_or(DocumentError::MissingBlock("rotation"))?;
        Ok(PlaneMap::from_graph(&self.graph()?, rot)?)
    }

    pub fn involution(&self, map: &PlaneMap) -> Result<MapInvolution, DocumentError> {
        let block = self
            .involution
            .as_ref()
            .ok_or(DocumentError::MissingBlock("involution"))?;
        if let Some(darts) = &block.medial_darts {
            return Ok(MapInvolution::from_medial_darts(
                &map.medial(),
                darts.clone(),
            )?);
        }
        match (&block.vertices, &block.edges) {
            (Some(v), Some(e)) => Ok(MapInvolution::from_graph_action(map, v, e)?),
            _ => Err(Error::InvalidInvolution(
                "involution needs `medial_darts` or both `vertices` and `edges`".into(),
            )
            .into()),
        }
    }

    pub fn edge_label(&self, id: usize) -> String {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .and_then(|e| e.label.clone())
            .unwrap_or_else(|| format!("x{id}"))
    }
}
