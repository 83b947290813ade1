//! Verification of antipodal symmetries of medial maps and of the
//! determinant and component-parity consequences for centrally symmetric
//! presentations.
//!
//! The antipodal map of the sphere reverses orientation, so an antipodal
//! involution is checked as a map automorphism that commutes with the edge
//! involution and conjugates the rotation to its inverse. Under such a map
//! the face on the right of a dart `d` goes to the face on the left of
//! `alpha(d)`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Sign, SignedMultigraph};
use crate::plane::{opposite, FaceColor, MedialMap, PlaneMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    Preserving,
    Reversing,
    Mixed,
}

impl Action {
    fn classify(mut same: impl Iterator<Item = bool>) -> Action {
        let first = match same.next() {
            None => return Action::Preserving,
            Some(b) => b,
        };
        if same.all(|b| b == first) {
            if first {
                Action::Preserving
            } else {
                Action::Reversing
            }
        } else {
            Action::Mixed
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
    /// Neither conjugation relation holds.
    Neither,
}

/// A candidate involution of a medial map, given by its dart permutation
/// together with the induced vertex and edge permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapInvolution {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub darts: Vec<usize>,
}

impl MapInvolution {
    /// Wraps a dart permutation of the medial map. Vertex and edge images
    /// are read off the first dart of each vertex and edge.
    pub fn from_medial_darts(m: &MedialMap, darts: Vec<usize>) -> Result<Self> {
        let mm = m.map();
        if darts.len() != mm.dart_count() || m.edge_count() == 0 {
            return Err(Error::LengthMismatch {
                expected: mm.dart_count(),
                got: darts.len(),
            });
        }
        if let Some(&bad) = darts.iter().find(|&&d| d >= darts.len()) {
            return Err(Error::InvalidInvolution(format!(
                "dart image {bad} out of range"
            )));
        }
        let rotations = mm.vertex_rotations();
        let vertices = rotations
            .iter()
            .map(|r| mm.vertex_of(darts[r[0]]))
            .collect();
        let edges = (0..mm.edge_count()).map(|e| darts[2 * e] / 2).collect();
        Ok(Self {
            vertices,
            edges,
            darts,
        })
    }

    /// Lifts an action on the source graph (vertex and edge permutations)
    /// to the medial map, treating it as orientation-reversing on the
    /// sphere. Loops keep their dart order.
    pub fn from_graph_action(src: &PlaneMap, vertices: &[usize], edges: &[usize]) -> Result<Self> {
        let (nv, ne) = (src.vertex_count(), src.edge_count());
        if vertices.len() != nv {
            return Err(Error::LengthMismatch {
                expected: nv,
                got: vertices.len(),
            });
        }
        if edges.len() != ne {
            return Err(Error::LengthMismatch {
                expected: ne,
                got: edges.len(),
            });
        }
        if ne == 0 {
            return Err(Error::InvalidInvolution("map has no edges".into()));
        }
        if vertices.iter().any(|&v| v >= nv) || edges.iter().any(|&e| e >= ne) {
            return Err(Error::InvalidInvolution(
                "permutation entry out of range".into(),
            ));
        }
        // source dart map
        let mut alpha = vec![0usize; src.dart_count()];
        for e in 0..ne {
            let f = edges[e];
            let (u, v) = (src.vertex_of(2 * e), src.vertex_of(2 * e + 1));
            let (fu, fv) = (src.vertex_of(2 * f), src.vertex_of(2 * f + 1));
            let (a0, a1) = if vertices[u] == fu && vertices[v] == fv {
                (2 * f, 2 * f + 1)
            } else if vertices[u] == fv && vertices[v] == fu {
                (2 * f + 1, 2 * f)
            } else {
                return Err(Error::InvalidInvolution(format!(
                    "edge {e} maps to edge {f} but its endpoints do not follow the vertex map"
                )));
            };
            alpha[2 * e] = a0;
            alpha[2 * e + 1] = a1;
        }
        // corner c = (c, sigma c) goes to (sigma^-1 alpha c, alpha c)
        let medial = src.medial();
        let mut darts = vec![0usize; 2 * src.dart_count()];
        for c in 0..src.dart_count() {
            let image = src.rotate_back(alpha[c]);
            darts[2 * c] = 2 * image + 1;
            darts[2 * c + 1] = 2 * image;
        }
        Self::from_medial_darts(&medial, darts)
    }

    /// The action on source-graph edges (medial vertex `e` is source edge `e`).
    pub fn source_edge_map(&self) -> &[usize] {
        &self.vertices
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub is_involution: bool,
    pub is_automorphism: bool,
    pub orientation: Orientation,
    pub fixed_point_free: bool,
    pub sign_action: Action,
    pub face_color_action: Action,
    pub component_count: usize,
    pub black_face_count: usize,
    pub black_face_count_even: bool,
    /// A fixed-point-free automorphism whose face colour action is mixed.
    pub dichotomy_violation: bool,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Face image of every medial face, when the action is an automorphism.
fn face_images(m: &MedialMap, a: &MapInvolution, orientation: Orientation) -> Vec<usize> {
    let mm = m.map();
    mm.faces()
        .iter()
        .map(|f| {
            let d = a.darts[f[0]];
            match orientation {
                Orientation::Reversing => mm.face_of(opposite(d)),
                _ => mm.face_of(d),
            }
        })
        .collect()
}

pub fn analyze_involution(m: &MedialMap, a: &MapInvolution) -> SymmetryReport {
    let mm = m.map();
    let n = mm.dart_count();
    let shaped = a.darts.len() == n
        && a.vertices.len() == m.vertex_count()
        && a.edges.len() == mm.edge_count()
        && is_permutation(&a.darts);

    let is_involution = shaped && (0..n).all(|d| a.darts[a.darts[d]] == d);
    let commutes_opposite = shaped && (0..n).all(|d| a.darts[opposite(d)] == opposite(a.darts[d]));
    let consistent = shaped
        && (0..n).all(|d| mm.vertex_of(a.darts[d]) == a.vertices[mm.vertex_of(d)])
        && (0..mm.edge_count()).all(|e| a.darts[2 * e] / 2 == a.edges[e]);
    let orientation = if !shaped {
        Orientation::Neither
    } else if (0..n).all(|d| a.darts[mm.rotate(d)] == mm.rotate(a.darts[d])) {
        Orientation::Preserving
    } else if (0..n).all(|d| a.darts[mm.rotate(d)] == mm.rotate_back(a.darts[d])) {
        Orientation::Reversing
    } else {
        Orientation::Neither
    };
    let is_automorphism = commutes_opposite && consistent && orientation != Orientation::Neither;

    let mut fixed_point_free = false;
    let mut face_color_action = Action::Mixed;
    if is_automorphism {
        let faces = face_images(m, a, orientation);
        let no_fixed_vertex = a.vertices.iter().enumerate().all(|(v, &w)| v != w);
        let no_fixed_edge = a.edges.iter().enumerate().all(|(e, &f)| e != f);
        let no_fixed_face = faces.iter().enumerate().all(|(f, &g)| f != g);
        fixed_point_free = no_fixed_vertex && no_fixed_edge && no_fixed_face;
        face_color_action = Action::classify(
            faces
                .iter()
                .enumerate()
                .map(|(f, &g)| m.face_color(f) == m.face_color(g)),
        );
    }

    let sign_of = |v: usize| m.vertex_signs().map_or(Sign::Plus, |s| s.get(v));
    let sign_action = if shaped {
        Action::classify((0..m.vertex_count()).map(|v| sign_of(v) == sign_of(a.vertices[v])))
    } else {
        Action::Mixed
    };

    let black_face_count = m
        .face_colors()
        .iter()
        .filter(|&&c| c == FaceColor::Black)
        .count();

    SymmetryReport {
        is_involution,
        is_automorphism,
        orientation,
        fixed_point_free,
        sign_action,
        face_color_action,
        component_count: m.components(),
        black_face_count,
        black_face_count_even: black_face_count % 2 == 0,
        dichotomy_violation: is_automorphism
            && fixed_point_free
            && face_color_action == Action::Mixed,
    }
}

fn admissible(r: &SymmetryReport) -> bool {
    r.is_involution
        && r.is_automorphism
        && r.fixed_point_free
        && matches!(
            (r.face_color_action, r.sign_action),
            (Action::Preserving, Action::Reversing) | (Action::Reversing, Action::Preserving)
        )
}

/// Fixed-point-free antipodal automorphism that is colour-preserving and
/// sign-reversing, or colour-reversing and sign-preserving.
pub fn is_centrally_symmetric_presentation(m: &MedialMap, a: &MapInvolution) -> bool {
    admissible(&analyze_involution(m, a))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub components: usize,
    pub components_even: bool,
    pub color_preserving: bool,
    pub pass: bool,
}

/// Even number of components exactly when the action preserves face colours.
pub fn check_parity_law(m: &MedialMap, a: &MapInvolution) -> Result<ParityVerdict> {
    let r = analyze_involution(m, a);
    if !(r.is_involution && r.is_automorphism && r.fixed_point_free) {
        return Err(Error::Precondition(
            "parity law needs a fixed-point-free involutive automorphism".into(),
        ));
    }
    let components_even = r.component_count.is_multiple_of(2);
    let color_preserving = r.face_color_action == Action::Preserving;
    Ok(ParityVerdict {
        components: r.component_count,
        components_even,
        color_preserving,
        pass: components_even == color_preserving,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenComponentVerdict {
    pub vertex_count_even: bool,
    pub signed_tree_count: String,
    pub matrix_tree: String,
    pub trees_checked: usize,
    /// Every tree maps to a spanning tree of opposite sign.
    pub bijection_ok: bool,
    pub pass: bool,
}

/// For a centrally symmetric presentation with an even number of
/// components: the determinant vanishes, witnessed by the tree involution
/// `T -> alpha(T)` flipping tree signs.
pub fn check_even_component_determinant(
    g: &SignedMultigraph,
    m: &MedialMap,
    a: &MapInvolution,
) -> Result<EvenComponentVerdict> {
    if m.vertex_count() != g.edge_count() || g.edge_count() != g.slots() {
        return Err(Error::Precondition(
            "medial map does not match the graph".into(),
        ));
    }
    let r = analyze_involution(m, a);
    if !admissible(&r) {
        return Err(Error::Precondition(
            "not a centrally symmetric presentation".into(),
        ));
    }
    if !r.component_count.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "component count {} is odd",
            r.component_count
        )));
    }
    if r.face_color_action != Action::Preserving {
        return Err(Error::Precondition(
            "action must preserve colours to act on the graph".into(),
        ));
    }
    let s = g.signature();
    let neg = s.to_mask();
    let edge_map = a.source_edge_map();
    let image = |t: EdgeSubset| EdgeSubset::from_ids(t.ids().map(|e| edge_map[e]));
    let sign = |t: EdgeSubset| (t.bits() & neg).count_ones() % 2;

    let mut trees_checked = 0;
    let mut bijection_ok = true;
    for t in g.spanning_trees()? {
        let at = image(t);
        trees_checked += 1;
        if !g.is_spanning_tree(at) || sign(at) == sign(t) || image(at) != t {
            bijection_ok = false;
        }
    }
    let stc = g.signed_tree_count(&s)?;
    let mt = g.matrix_tree_signed(&s)?;
    let vertex_count_even = g.vertex_count().is_multiple_of(2);
    Ok(EvenComponentVerdict {
        vertex_count_even,
        pass: vertex_count_even && bijection_ok && stc.is_zero() && mt.is_zero(),
        signed_tree_count: stc.to_string(),
        matrix_tree: mt.to_string(),
        trees_checked,
        bijection_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_family, parallel_family};
    use crate::graph::EdgeSignature;

    #[test]
    fn parallel_pair_swap() {
        let inst = parallel_family(1);
        let m = inst.map.medial();
        let a = inst.involution().unwrap();
        let r = analyze_involution(&m, &a);
        assert!(r.is_automorphism && r.is_involution && r.fixed_point_free);
        assert_eq!(r.orientation, Orientation::Reversing);
        assert_eq!(r.sign_action, Action::Reversing);
        assert_eq!(r.face_color_action, Action::Preserving);
        assert!(is_centrally_symmetric_presentation(&m, &a));

        let plus = inst
            .map
            .clone()
            .with_signs(EdgeSignature::all_positive(2))
            .unwrap();
        let mp = plus.medial();
        let ap = MapInvolution::from_graph_action(&plus, &[1, 0], &[1, 0]).unwrap();
        let rp = analyze_involution(&mp, &ap);
        assert_eq!(rp.sign_action, Action::Preserving);
        assert!(!is_centrally_symmetric_presentation(&mp, &ap));
    }

    #[test]
    fn identity_is_not_fixed_point_free() {
        let inst = parallel_family(1);
        let m = inst.map.medial();
        let id = MapInvolution::from_medial_darts(&m, (0..m.map().dart_count()).collect()).unwrap();
        let r = analyze_involution(&m, &id);
        assert!(r.is_involution && r.is_automorphism);
        assert!(!r.fixed_point_free);
        assert!(!is_centrally_symmetric_presentation(&m, &id));
        assert!(matches!(
            check_parity_law(&m, &id),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn non_involution_is_reported() {
        let inst = cycle_family(2);
        let m = inst.map.medial();
        // rotation by one step along the 4-cycle has order four
        let a = MapInvolution::from_graph_action(&inst.map, &[1, 2, 3, 0], &[1, 2, 3, 0]).unwrap();
        let r = analyze_involution(&m, &a);
        assert!(!r.is_involution);
    }

    #[test]
    fn verdicts_on_c4() {
        let inst = cycle_family(2);
        let m = inst.map.medial();
        let a = inst.involution().unwrap();
        let p = check_parity_law(&m, &a).unwrap();
        assert!(p.pass && p.components_even && p.color_preserving);
        let v = check_even_component_determinant(&inst.graph, &m, &a).unwrap();
        assert!(v.pass);
        assert_eq!(v.trees_checked, 4);
    }

    #[test]
    fn triangle_has_no_admissible_involution() {
        let g = SignedMultigraph::unsigned(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let map = PlaneMap::from_graph(&g, &[vec![0, 4], vec![2, 1], vec![5, 3]]).unwrap();
        let m = map.medial();
        // an involution on three vertices fixes one of them
        let swap = MapInvolution::from_graph_action(&map, &[1, 0, 2], &[0, 2, 1]).unwrap();
        let r = analyze_involution(&m, &swap);
        assert!(!r.fixed_point_free);
        assert!(matches!(
            check_parity_law(&m, &swap),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_even_component_determinant(&g, &m, &swap),
            Err(Error::Precondition(_))
        ));
    }
}
