//! Generators for antipodally symmetric families of Tait graphs.

use crate::error::Result;
use crate::graph::{Sign, SignedMultigraph};
use crate::plane::PlaneMap;
use crate::symmetry::MapInvolution;

/// A plane Tait graph together with an action on its vertices and edges.
#[derive(Debug, Clone)]
pub struct SymmetricInstance {
    pub name: String,
    pub graph: SignedMultigraph,
    pub map: PlaneMap,
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
}

impl SymmetricInstance {
    pub fn involution(&self) -> Result<MapInvolution> {
        MapInvolution::from_graph_action(&self.map, &self.vertex_perm, &self.edge_perm)
    }
}

/// `2k` parallel edges between two vertices, spaced like meridians; the
/// first `k` are positive. The action swaps the poles and sends edge `i`
/// to edge `i + k`.
pub fn parallel_family(k: usize) -> SymmetricInstance {
    assert!(k >= 1);
    let n = 2 * k;
    let edges: Vec<_> = (0..n)
        .map(|i| (0, 1, if i < k { Sign::Plus } else { Sign::Minus }))
        .collect();
    let graph = SignedMultigraph::new(2, &edges).expect("valid parallel graph");
    let north: Vec<usize> = (0..n).map(|i| 2 * i).collect();
    let south: Vec<usize> = (0..n).rev().map(|i| 2 * i + 1).collect();
    let map = PlaneMap::from_graph(&graph, &[north, south]).expect("planar parallel graph");
    SymmetricInstance {
        name: format!("parallel-{n}"),
        graph,
        map,
        vertex_perm: vec![1, 0],
        edge_perm: (0..n).map(|i| (i + k) % n).collect(),
    }
}

/// The cycle on `2k` vertices, edge `i` joining `i` and `i + 1`; the first
/// `k` edges are positive. The action shifts everything by `k`.
pub fn cycle_family(k: usize) -> SymmetricInstance {
    assert!(k >= 1);
    let n = 2 * k;
    let edges: Vec<_> = (0..n)
        .map(|i| (i, (i + 1) % n, if i < k { Sign::Plus } else { Sign::Minus }))
        .collect();
    let graph = SignedMultigraph::new(n, &edges).expect("valid cycle");
    let rotations: Vec<Vec<usize>> = (0..n)
        .map(|v| vec![2 * v, 2 * ((v + n - 1) % n) + 1])
        .collect();
    let map = PlaneMap::from_graph(&graph, &rotations).expect("planar cycle");
    let shift: Vec<usize> = (0..n).map(|i| (i + k) % n).collect();
    SymmetricInstance {
        name: format!("cycle-{n}"),
        graph,
        map,
        vertex_perm: shift.clone(),
        edge_perm: shift,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for k in 1..5 {
            let p = parallel_family(k);
            assert_eq!(p.map.face_count(), 2 * k);
            assert_eq!(p.map.link_components(), 2);
            let c = cycle_family(k);
            assert_eq!(c.map.face_count(), 2);
            assert_eq!(c.map.link_components(), 2);
        }
    }
}
