//! Combinatorial maps on the sphere.
//!
//! Edge `e` owns darts `2e` and `2e + 1`; the edge involution swaps them.
//! The rotation `sigma` sends a dart to the next dart counterclockwise
//! around its vertex, and faces are the orbits of `d -> sigma(opp(d))`.

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSignature, SignedMultigraph};

#[inline]
pub fn opposite(d: usize) -> usize {
    d ^ 1
}

#[inline]
pub fn edge_of(d: usize) -> usize {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMap {
    rotation: Vec<usize>,
    rotation_inv: Vec<usize>,
    vertex_of: Vec<usize>,
    vertex_count: usize,
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    signs: Option<EdgeSignature>,
}

impl PlaneMap {
    /// Validates a rotation system given as one counterclockwise dart list
    /// per vertex. Darts `0..2E` must each appear exactly once.
    pub fn new(vertex_rotations: &[Vec<usize>], signs: Option<EdgeSignature>) -> Result<Self> {
        let vertex_count = vertex_rotations.len();
        if vertex_count == 0 {
            return Err(Error::MalformedRotation("no vertices".into()));
        }
        let darts: usize = vertex_rotations.iter().map(Vec::len).sum();
        if !darts.is_multiple_of(2) {
            return Err(Error::MalformedRotation(format!(
                "odd number of darts ({darts})"
            )));
        }
        let mut rotation = vec![usize::MAX; darts];
        let mut vertex_of = vec![usize::MAX; darts];
        for (v, cycle) in vertex_rotations.iter().enumerate() {
            for (i, &d) in cycle.iter().enumerate() {
                if d >= darts {
                    return Err(Error::MalformedRotation(format!(
                        "dart {d} out of range (map has {darts} darts)"
                    )));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(Error::MalformedRotation(format!("dart {d} listed twice")));
                }
                vertex_of[d] = v;
                rotation[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        if let Some(s) = &signs {
            if s.len() != darts / 2 {
                return Err(Error::LengthMismatch {
                    expected: darts / 2,
                    got: s.len(),
                });
            }
        }
        let mut rotation_inv = vec![0; darts];
        for (d, &n) in rotation.iter().enumerate() {
            rotation_inv[n] = d;
        }

        let mut conn = DisjointSets::new(vertex_count);
        for e in 0..darts / 2 {
            conn.union(vertex_of[2 * e], vertex_of[2 * e + 1]);
        }
        if conn.components() != 1 {
            return Err(Error::Disconnected);
        }

        let (faces, face_of) = face_orbits(&rotation);
        let face_count = faces.len().max(1);
        let euler = vertex_count as i64 - (darts / 2) as i64 + face_count as i64;
        if euler != 2 {
            return Err(Error::NotSpherical { euler });
        }
        Ok(Self {
            rotation,
            rotation_inv,
            vertex_of,
            vertex_count,
            faces,
            face_of,
            signs,
        })
    }

    /// Attaches a rotation system to a graph, checking that dart `2e` sits
    /// at the first endpoint of edge `e` and dart `2e + 1` at the second.
    pub fn from_graph(g: &SignedMultigraph, vertex_rotations: &[Vec<usize>]) -> Result<Self> {
        if g.edge_count() != g.slots() {
            return Err(Error::Precondition(
                "edge ids must be dense to build a map".into(),
            ));
        }
        if vertex_rotations.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                got: vertex_rotations.len(),
            });
        }
        let m = Self::new(vertex_rotations, Some(g.signature()))?;
        if m.edge_count() != g.edge_count() {
            return Err(Error::MalformedRotation(format!(
                "rotation lists {} edges, graph has {}",
                m.edge_count(),
                g.edge_count()
            )));
        }
        for e in g.edges() {
            if m.vertex_of[2 * e.id] != e.u || m.vertex_of[2 * e.id + 1] != e.v {
                return Err(Error::MalformedRotation(format!(
                    "darts of edge {} are not at its endpoints ({}, {})",
                    e.id, e.u, e.v
                )));
            }
        }
        Ok(m)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len().max(1)
    }

    pub fn rotate(&self, d: usize) -> usize {
        self.rotation[d]
    }

    pub fn rotate_back(&self, d: usize) -> usize {
        self.rotation_inv[d]
    }

    pub fn rotation(&self) -> &[usize] {
        &self.rotation
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    /// Face permutation: cross the edge, then turn counterclockwise.
    pub fn face_step(&self, d: usize) -> usize {
        self.rotation[opposite(d)]
    }

    /// Face orbits, each starting at its smallest dart, ordered by that dart.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn signs(&self) -> Option<&EdgeSignature> {
        self.signs.as_ref()
    }

    pub fn with_signs(mut self, signs: EdgeSignature) -> Result<Self> {
        if signs.len() != self.edge_count() {
            return Err(Error::LengthMismatch {
                expected: self.edge_count(),
                got: signs.len(),
            });
        }
        self.signs = Some(signs);
        Ok(self)
    }

    /// Counterclockwise dart list of every vertex, starting at its smallest dart.
    pub fn vertex_rotations(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        let mut seen = vec![false; self.dart_count()];
        for d in 0..self.dart_count() {
            if seen[d] {
                continue;
            }
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                out[self.vertex_of[x]].push(x);
                x = self.rotation[x];
            }
        }
        out
    }

    pub fn to_graph(&self) -> SignedMultigraph {
        let signs = self
            .signs
            .clone()
            .unwrap_or_else(|| EdgeSignature::all_positive(self.edge_count()));
        let edges = (0..self.edge_count())
            .map(|e| Edge {
                id: e,
                u: self.vertex_of[2 * e],
                v: self.vertex_of[2 * e + 1],
                sign: signs.get(e),
            })
            .collect();
        SignedMultigraph::from_edges(self.vertex_count, self.edge_count(), edges)
            .expect("validated map yields a valid graph")
    }

    /// Planar dual: one vertex per face, rotation given by the face
    /// permutation, every edge sign negated.
    pub fn dual(&self) -> PlaneMap {
        let rotations = if self.edge_count() == 0 {
            vec![Vec::new()]
        } else {
            self.faces.clone()
        };
        let signs = self.signs.as_ref().map(EdgeSignature::negated);
        PlaneMap::new(&rotations, signs).expect("dual of a spherical map is spherical")
    }

    pub fn medial(&self) -> MedialMap {
        MedialMap::build(self)
    }

    /// Number of closed strands in the diagram whose shadow is the medial map.
    pub fn link_components(&self) -> usize {
        self.medial().components()
    }
}

fn face_orbits(rotation: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut faces = Vec::new();
    let mut face_of = vec![usize::MAX; rotation.len()];
    for d in 0..rotation.len() {
        if face_of[d] != usize::MAX {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = d;
        while face_of[x] == usize::MAX {
            face_of[x] = faces.len();
            cycle.push(x);
            x = rotation[opposite(x)];
        }
        faces.push(cycle);
    }
    (faces, face_of)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceColor {
    /// Face around a vertex of the source graph.
    Black,
    /// Face inside a face of the source graph.
    White,
}

/// How the two strands pass through each crossing when tracing circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Passage {
    /// Straight through: the link diagram itself.
    Straight,
    /// Smoothing that joins the black regions across the crossing.
    Contract,
    /// Smoothing that joins the white regions across the crossing.
    Delete,
}

/// Medial map of a plane map.
///
/// Medial vertex `e` sits on source edge `e`. Medial edge `c` follows the
/// corner between source dart `c` and `sigma(c)`; its dart `2c` lies at
/// medial vertex `edge(c)` and `2c + 1` at `edge(sigma(c))`. The face on
/// the right of an odd medial dart is black.
#[derive(Debug, Clone)]
pub struct MedialMap {
    map: PlaneMap,
    /// Counterclockwise medial darts at each crossing: NE, NW, SW, SE when
    /// the source edge runs west to east from its dart `2e`.
    quadrants: Vec<[usize; 4]>,
    colors: Vec<FaceColor>,
    black_face_of_vertex: Vec<usize>,
    white_face_of_face: Vec<usize>,
    vertex_signs: Option<EdgeSignature>,
}

impl MedialMap {
    fn build(src: &PlaneMap) -> Self {
        let e_count = src.edge_count();
        let quadrants: Vec<[usize; 4]> = (0..e_count)
            .map(|e| {
                let (d0, d1) = (2 * e, 2 * e + 1);
                [
                    2 * src.rotate_back(d1) + 1,
                    2 * d0,
                    2 * src.rotate_back(d0) + 1,
                    2 * d1,
                ]
            })
            .collect();
        let rotations: Vec<Vec<usize>> = if e_count == 0 {
            vec![Vec::new()]
        } else {
            quadrants.iter().map(|q| q.to_vec()).collect()
        };
        let map = PlaneMap::new(&rotations, None).expect("medial of a spherical map is spherical");

        let mut colors = vec![FaceColor::White; map.face_count()];
        let mut black_face_of_vertex = vec![usize::MAX; src.vertex_count()];
        let mut white_face_of_face = vec![usize::MAX; src.face_count()];
        for c in 0..src.dart_count() {
            let black = map.face_of(2 * c + 1);
            colors[black] = FaceColor::Black;
            black_face_of_vertex[src.vertex_of(c)] = black;
            white_face_of_face[src.face_of(src.rotate(c))] = map.face_of(2 * c);
        }
        if e_count == 0 {
            // a lone vertex: the medial is empty and the sphere is its black face
            colors = vec![FaceColor::Black];
            black_face_of_vertex = vec![0];
            white_face_of_face.clear();
        }
        Self {
            map,
            quadrants,
            colors,
            black_face_of_vertex,
            white_face_of_face,
            vertex_signs: src.signs.clone(),
        }
    }

    pub fn map(&self) -> &PlaneMap {
        &self.map
    }

    pub fn vertex_count(&self) -> usize {
        self.quadrants.len()
    }

    pub fn edge_count(&self) -> usize {
        if self.quadrants.is_empty() {
            0
        } else {
            self.map.edge_count()
        }
    }

    pub fn quadrants(&self, v: usize) -> [usize; 4] {
        self.quadrants[v]
    }

    pub fn face_color(&self, f: usize) -> FaceColor {
        self.colors[f]
    }

    pub fn face_colors(&self) -> &[FaceColor] {
        &self.colors
    }

    pub fn black_face_of_vertex(&self, v: usize) -> usize {
        self.black_face_of_vertex[v]
    }

    pub fn white_face_of_face(&self, f: usize) -> usize {
        self.white_face_of_face[f]
    }

    /// Crossing signs, inherited from the source edge signs.
    pub fn vertex_signs(&self) -> Option<&EdgeSignature> {
        self.vertex_signs.as_ref()
    }

    /// Dart across the crossing from `d`.
    pub fn straight(&self, d: usize) -> usize {
        let q = &self.quadrants[self.map.vertex_of(d)];
        let i = q.iter().position(|&x| x == d).expect("dart at its vertex");
        q[(i + 2) % 4]
    }

    fn partner(&self, d: usize, passage: Passage) -> usize {
        let q = &self.quadrants[self.map.vertex_of(d)];
        let i = q.iter().position(|&x| x == d).expect("dart at its vertex");
        let j = match passage {
            Passage::Straight => (i + 2) % 4,
            Passage::Contract => i ^ 1,
            Passage::Delete => 3 - i,
        };
        q[j]
    }

    /// Counts closed curves when crossing `e` is passed as `passage(e)`.
    pub fn trace_circles(&self, passage: impl Fn(usize) -> Passage) -> usize {
        if self.quadrants.is_empty() {
            // no crossings: the diagram is a single circle around the lone vertex
            return 1;
        }
        let darts = self.map.dart_count();
        let mut seen = vec![false; darts];
        let mut orbits = 0;
        for d in 0..darts {
            if seen[d] {
                continue;
            }
            orbits += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                let arrive = opposite(x);
                x = self.partner(arrive, passage(self.map.vertex_of(arrive)));
            }
        }
        // every curve is traced once in each direction
        orbits / 2
    }

    pub fn components(&self) -> usize {
        self.trace_circles(|_| Passage::Straight)
    }

    /// Circles of the state contracting exactly the crossings in `contracted`.
    pub fn state_circles(&self, contracted: u64) -> usize {
        self.trace_circles(|e| {
            if contracted >> e & 1 == 1 {
                Passage::Contract
            } else {
                Passage::Delete
            }
        })
    }
}
