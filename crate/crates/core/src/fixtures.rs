//! Built-in example graphs.

use crate::document::{EdgeRecord, GraphDocument, InvolutionBlock, FORMAT_VERSION};
use crate::families::{cycle_family, SymmetricInstance};
use crate::graph::Sign;

pub const BUILTIN_NAMES: [&str; 6] = ["fig5", "triangle", "p2", "loop", "isthmus", "c4-symmetric"];

fn doc(
    name: &str,
    vertices: usize,
    edges: &[(&str, usize, usize, i64)],
    rotation: Vec<Vec<usize>>,
) -> GraphDocument {
    GraphDocument {
        version: FORMAT_VERSION,
        name: Some(name.to_string()),
        vertices,
        edges: edges
            .iter()
            .enumerate()
            .map(|(id, &(label, u, v, s))| EdgeRecord {
                id,
                u,
                v,
                sign: Sign::try_from(s).expect("fixture signs are +-1"),
                label: (!label.is_empty()).then(|| label.to_string()),
            })
            .collect(),
        rotation: Some(rotation),
        involution: None,
    }
}

/// Tait graph of the knot 8_21: five vertices, edges `a..h` with `a`, `b`
/// parallel and negative. 33 spanning trees; the 9 avoiding `a` and `b`
/// are the positive ones.
pub fn fig5() -> GraphDocument {
    doc(
        "fig5",
        5,
        &[
            ("a", 0, 1, -1),
            ("b", 0, 1, -1),
            ("c", 0, 2, 1),
            ("d", 0, 3, 1),
            ("e", 2, 3, 1),
            ("f", 1, 2, 1),
            ("g", 1, 4, 1),
            ("h", 2, 4, 1),
        ],
        vec![
            vec![4, 6, 0, 2],
            vec![1, 10, 12, 3],
            vec![11, 8, 5, 14],
            vec![7, 9],
            vec![13, 15],
        ],
    )
}

pub fn triangle() -> GraphDocument {
    doc(
        "triangle",
        3,
        &[("a", 0, 1, 1), ("b", 1, 2, 1), ("c", 0, 2, 1)],
        vec![vec![0, 4], vec![2, 1], vec![5, 3]],
    )
}

/// Two parallel edges of opposite sign, with the pole-swapping involution.
pub fn p2() -> GraphDocument {
    let mut d = doc(
        "p2",
        2,
        &[("", 0, 1, 1), ("", 0, 1, -1)],
        vec![vec![0, 2], vec![3, 1]],
    );
    d.involution = Some(InvolutionBlock {
        vertices: Some(vec![1, 0]),
        edges: Some(vec![1, 0]),
        medial_darts: None,
    });
    d
}

pub fn single_loop() -> GraphDocument {
    doc("loop", 1, &[("", 0, 0, 1)], vec![vec![0, 1]])
}

pub fn isthmus() -> GraphDocument {
    doc("isthmus", 2, &[("", 0, 1, 1)], vec![vec![0], vec![1]])
}

/// A symmetric instance as a document carrying its involution.
pub fn symmetric_document(inst: &SymmetricInstance) -> GraphDocument {
    let mut d = GraphDocument::from_map(&inst.map);
    d.name = Some(inst.name.clone());
    d.rotation = Some(inst.map.vertex_rotations());
    d.involution = Some(InvolutionBlock {
        vertices: Some(inst.vertex_perm.clone()),
        edges: Some(inst.edge_perm.clone()),
        medial_darts: None,
    });
    d
}

/// The 4-cycle with signs (+, +, -, -) and the shift-by-two involution.
pub fn c4_symmetric() -> GraphDocument {
    let mut d = symmetric_document(&cycle_family(2));
    d.name = Some("c4-symmetric".into());
    d
}

pub fn builtin(name: &str) -> Option<GraphDocument> {
    Some(match name {
        "fig5" => fig5(),
        "triangle" => triangle(),
        "p2" => p2(),
        "loop" => single_loop(),
        "isthmus" => isthmus(),
        "c4-symmetric" => c4_symmetric(),
        _ => return None,
    })
}
