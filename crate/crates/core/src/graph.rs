//! Edge-signed multigraphs with stable edge identities.
//!
//! Edge `i` corresponds to bit `i` of every [`EdgeSubset`] and
//! [`EdgeSignature`] mask, and to the variable `x_i` of the FH polynomial.
//! Deletion and contraction never renumber edges, so a graph produced by
//! either operation keeps the id universe (`slots`) of its parent.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

/// Largest number of edge slots a graph may carry (edge masks are `u64`).
pub const MAX_EDGES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.value()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A set of edge ids stored as a bitmask (bit `i` is edge `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub fn empty() -> Self {
        EdgeSubset(0)
    }

    pub fn from_ids(ids: impl IntoIterator<Item = usize>) -> Self {
        EdgeSubset(ids.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }

    pub fn contains(self, id: usize) -> bool {
        id < 64 && self.0 >> id & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn ids(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..64).filter(move |i| mask >> i & 1 == 1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }
}

/// Per-edge signs indexed by edge id.
///
/// The mask view has bit `i` set exactly when edge `i` is negative, which is
/// the 0/1 evaluation point of the determinant formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSignature {
    signs: Vec<Sign>,
}

impl EdgeSignature {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    pub fn all_positive(n: usize) -> Self {
        Self::new(vec![Sign::Plus; n])
    }

    /// All edges positive except those listed.
    pub fn negative_on(n: usize, negative: &[usize]) -> Self {
        let mut signs = vec![Sign::Plus; n];
        for &i in negative {
            signs[i] = Sign::Minus;
        }
        Self::new(signs)
    }

    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn to_mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .fold(0, |m, (i, _)| m | (1u64 << i))
    }

    /// The 0/1 point with `v_i = (1 - sign_i) / 2`.
    pub fn to_point(&self) -> Vec<u8> {
        self.signs.iter().map(|s| s.is_negative() as u8).collect()
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn get(&self, id: usize) -> Sign {
        self.signs[id]
    }

    /// True when every sign agrees (an alternating diagram). Empty is alternating.
    pub fn is_alternating(&self) -> bool {
        self.signs.windows(2).all(|w| w[0] == w[1])
    }

    pub fn negated(&self) -> Self {
        Self::new(self.signs.iter().map(|s| s.flipped()).collect())
    }
}

/// Alias for [`EdgeSignature::is_alternating`].
pub fn is_alternating(s: &EdgeSignature) -> bool {
    s.is_alternating()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Loop,
    Isthmus,
    Ordinary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMultigraph {
    vertex_count: usize,
    slots: usize,
    edges: Vec<Edge>,
}

impl SignedMultigraph {
    /// Builds a graph whose edges get ids `0..edges.len()` in order.
    pub fn new(vertex_count: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let edges = edges
            .iter()
            .enumerate()
            .map(|(id, &(u, v, sign))| Edge { id, u, v, sign })
            .collect::<Vec<_>>();
        Self::from_edges(vertex_count, edges.len(), edges)
    }

    /// Builds an all-positive graph.
    pub fn unsigned(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u, v, Sign::Plus)).collect();
        Self::new(vertex_count, &e)
    }

    /// Builds a graph from explicit edges whose ids lie in `0..slots`.
    pub fn from_edges(vertex_count: usize, slots: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Precondition(
                "a graph needs at least one vertex".into(),
            ));
        }
        if slots > MAX_EDGES {
            return Err(Error::LimitExceeded {
                what: "edge count",
                size: slots,
                limit: MAX_EDGES,
            });
        }
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::Precondition(format!(
                    "duplicate edge id {}",
                    w[0].id
                )));
            }
        }
        for e in &edges {
            if e.id >= slots {
                return Err(Error::UnknownEdge(e.id));
            }
            for x in [e.u, e.v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Self {
            vertex_count,
            slots,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Size of the edge-id universe (signature and polynomial length).
    pub fn slots(&self) -> usize {
        self.slots
    }

    /// Number of edges currently present.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    fn require(&self, id: usize) -> Result<&Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn edge_mask(&self) -> EdgeSubset {
        EdgeSubset::from_ids(self.edges.iter().map(|e| e.id))
    }

    /// The signature stored on the edges; absent slots are positive.
    pub fn signature(&self) -> EdgeSignature {
        let mut signs = vec![Sign::Plus; self.slots];
        for e in &self.edges {
            signs[e.id] = e.sign;
        }
        EdgeSignature::new(signs)
    }

    /// Copy of the graph with the given signature written onto its edges.
    pub fn with_signature(&self, s: &EdgeSignature) -> Result<Self> {
        self.check_signature(s)?;
        let mut g = self.clone();
        for e in &mut g.edges {
            e.sign = s.get(e.id);
        }
        Ok(g)
    }

    fn check_signature(&self, s: &EdgeSignature) -> Result<()> {
        if s.len() != self.slots {
            return Err(Error::LengthMismatch {
                expected: self.slots,
                got: s.len(),
            });
        }
        Ok(())
    }

    pub fn delete(&self, id: usize) -> Result<Self> {
        self.require(id)?;
        let mut g = self.clone();
        g.edges.retain(|e| e.id != id);
        Ok(g)
    }

    /// Identifies the endpoints of `id` and removes it. The surviving vertex
    /// is the smaller endpoint; higher vertex indices shift down by one.
    pub fn contract(&self, id: usize) -> Result<Self> {
        let e = *self.require(id)?;
        if e.is_loop() {
            return Err(Error::ContractLoop(id));
        }
        let (keep, drop) = (e.u.min(e.v), e.u.max(e.v));
        let relabel = |w: usize| match w.cmp(&drop) {
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
            std::cmp::Ordering::Less => w,
        };
        let edges = self
            .edges
            .iter()
            .filter(|x| x.id != id)
            .map(|x| Edge {
                u: relabel(x.u),
                v: relabel(x.v),
                ..*x
            })
            .collect();
        Ok(Self {
            vertex_count: self.vertex_count - 1,
            slots: self.slots,
            edges,
        })
    }

    /// Union-find over the vertices using only the edges in `mask`.
    pub fn components_of(&self, mask: EdgeSubset) -> DisjointSets {
        let mut d = DisjointSets::new(self.vertex_count);
        for e in self.edges.iter().filter(|e| mask.contains(e.id)) {
            d.union(e.u, e.v);
        }
        d
    }

    pub fn component_count(&self) -> usize {
        self.components_of(self.edge_mask()).components()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn classify_edge(&self, id: usize) -> Result<EdgeKind> {
        let e = *self.require(id)?;
        if e.is_loop() {
            return Ok(EdgeKind::Loop);
        }
        let mut rest = self.edge_mask();
        rest.0 &= !(1u64 << id);
        let mut d = self.components_of(rest);
        Ok(if d.same(e.u, e.v) {
            EdgeKind::Ordinary
        } else {
            EdgeKind::Isthmus
        })
    }

    /// True when `subset` is a spanning tree of this graph.
    pub fn is_spanning_tree(&self, subset: EdgeSubset) -> bool {
        if subset.0 & !self.edge_mask().0 != 0 || subset.len() + 1 != self.vertex_count {
            return false;
        }
        self.components_of(subset).components() == 1
    }

    /// Streams every spanning tree once, ordered lexicographically on the
    /// edge bitmask with the lowest edge id as the most significant position.
    pub fn spanning_trees(&self) -> Result<SpanningTrees<'_>> {
        self.require_connected()?;
        Ok(SpanningTrees::new(self))
    }

    pub fn tree_count(&self) -> Result<BigInt> {
        Ok(BigInt::from(self.spanning_trees()?.count()))
    }

    /// Sum over spanning trees of the product of edge signs
    /// (#positive trees - #negative trees).
    pub fn signed_tree_count(&self, s: &EdgeSignature) -> Result<BigInt> {
        self.check_signature(s)?;
        let neg = s.to_mask();
        let (mut pos, mut negc) = (0u64, 0u64);
        for t in self.spanning_trees()? {
            if (t.0 & neg).count_ones().is_multiple_of(2) {
                pos += 1;
            } else {
                negc += 1;
            }
        }
        Ok(BigInt::from(pos) - BigInt::from(negc))
    }

    /// Determinant of the signed Laplacian (edge weight = sign, loops
    /// ignored) with the row and column of vertex 0 removed.
    pub fn matrix_tree_signed(&self, s: &EdgeSignature) -> Result<BigInt> {
        self.check_signature(s)?;
        self.require_connected()?;
        let n = self.vertex_count;
        let mut lap = vec![vec![0i64; n]; n];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            let w = s.get(e.id).value();
            lap[e.u][e.u] += w;
            lap[e.v][e.v] += w;
            lap[e.u][e.v] -= w;
            lap[e.v][e.u] -= w;
        }
        let reduced: Vec<Vec<BigInt>> = lap[1..]
            .iter()
            .map(|row| row[1..].iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Ok(bareiss_determinant(reduced))
    }
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[size - 1][size - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

struct Frame {
    pos: usize,
    chosen: u64,
    picked: usize,
    dsu: DisjointSets,
}

/// Iterator over spanning trees (see [`SignedMultigraph::spanning_trees`]).
pub struct SpanningTrees<'g> {
    graph: &'g SignedMultigraph,
    need: usize,
    stack: Vec<Frame>,
}

impl<'g> SpanningTrees<'g> {
    fn new(graph: &'g SignedMultigraph) -> Self {
        let root = Frame {
            pos: 0,
            chosen: 0,
            picked: 0,
            dsu: DisjointSets::new(graph.vertex_count),
        };
        Self {
            graph,
            need: graph.vertex_count - 1,
            stack: vec![root],
        }
    }

    /// Whether the chosen edges plus every edge from `pos` on still connect the graph.
    fn can_complete(&self, f: &Frame, pos: usize) -> bool {
        let mut d = f.dsu.clone();
        for e in &self.graph.edges[pos..] {
            d.union(e.u, e.v);
            if d.components() == 1 {
                return true;
            }
        }
        d.components() == 1
    }
}

impl Iterator for SpanningTrees<'_> {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        let edges = &self.graph.edges;
        while let Some(f) = self.stack.pop() {
            if f.picked == self.need {
                return Some(EdgeSubset(f.chosen));
            }
            if f.pos == edges.len() {
                continue;
            }
            let e = edges[f.pos];
            // include branch goes on the stack first so the exclude branch
            // (a zero at this position) is explored first
            let mut inc = None;
            if !e.is_loop() {
                let mut dsu = f.dsu.clone();
                if dsu.union(e.u, e.v) {
                    inc = Some(Frame {
                        pos: f.pos + 1,
                        chosen: f.chosen | 1u64 << e.id,
                        picked: f.picked + 1,
                        dsu,
                    });
                }
            }
            let exc = self.can_complete(&f, f.pos + 1).then(|| Frame {
                pos: f.pos + 1,
                ..f
            });
            if let Some(i) = inc {
                self.stack.push(i);
            }
            if let Some(x) = exc {
                self.stack.push(x);
            }
        }
        None
    }
}
