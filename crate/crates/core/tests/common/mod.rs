//! Random connected plane multigraphs with rotation systems.
#![allow(dead_code)]

use linkdet::graph::{Sign, SignedMultigraph};
use linkdet::plane::PlaneMap;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct RandomMap {
    pub graph: SignedMultigraph,
    pub map: PlaneMap,
    pub rotations: Vec<Vec<usize>>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Faces as dart orbits of `d -> sigma(d ^ 1)` for a partial rotation.
fn faces(rot: &[Vec<usize>], darts: usize) -> Vec<Vec<usize>> {
    let mut next = vec![0; darts];
    for cycle in rot {
        for (i, &d) in cycle.iter().enumerate() {
            next[d] = cycle[(i + 1) % cycle.len()];
        }
    }
    let mut seen = vec![false; darts];
    let mut out = Vec::new();
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        let mut f = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            f.push(d);
            d = next[d ^ 1];
        }
        out.push(f);
    }
    out
}

fn insert_before(rot: &mut [Vec<usize>], x: usize, new: usize) {
    for cycle in rot.iter_mut() {
        if let Some(i) = cycle.iter().position(|&d| d == x) {
            cycle.insert(i, new);
            return;
        }
    }
    panic!("dart {x} not in rotation");
}

/// Grows a plane map edge by edge: a pendant edge to a new vertex, a loop
/// inside a corner, or a chord joining two corners of one face.
pub fn random_map(r: &mut impl Rng, edges: usize, p_negative: f64) -> RandomMap {
    random_map_mix(r, edges, p_negative, 0.4, 0.1)
}

/// As [`random_map`] with explicit probabilities for pendant edges and
/// loops; the remaining steps add chords.
pub fn random_map_mix(
    r: &mut impl Rng,
    edges: usize,
    p_negative: f64,
    p_pendant: f64,
    p_loop: f64,
) -> RandomMap {
    let mut rot: Vec<Vec<usize>> = vec![Vec::new()];
    for e in 0..edges {
        let darts = 2 * e;
        let (a, b) = (2 * e, 2 * e + 1);
        let roll: f64 = r.gen();
        if darts == 0 {
            if roll < 0.8 {
                rot[0].push(a);
                rot.push(vec![b]);
            } else {
                rot[0].extend([a, b]);
            }
            continue;
        }
        let all_faces = faces(&rot, darts);
        let face = all_faces.choose(r).expect("nonempty map has a face");
        let x = *face.choose(r).unwrap();
        if roll < p_pendant {
            insert_before(&mut rot, x, a);
            rot.push(vec![b]);
        } else if roll < p_pendant + p_loop {
            insert_before(&mut rot, x, a);
            insert_before(&mut rot, a, b);
        } else {
            // prefer a corner at another vertex; loops come from the branch above
            let at = |d: usize| rot.iter().position(|c| c.contains(&d)).unwrap();
            let others: Vec<usize> = face.iter().copied().filter(|&d| at(d) != at(x)).collect();
            let y = *others.choose(r).unwrap_or(&x);
            insert_before(&mut rot, x, a);
            insert_before(&mut rot, y, b);
        }
    }
    let mut vertex_of = vec![0; 2 * edges];
    for (v, cycle) in rot.iter().enumerate() {
        for &d in cycle {
            vertex_of[d] = v;
        }
    }
    let list: Vec<(usize, usize, Sign)> = (0..edges)
        .map(|e| {
            let s = if r.gen_bool(p_negative) {
                Sign::Minus
            } else {
                Sign::Plus
            };
            (vertex_of[2 * e], vertex_of[2 * e + 1], s)
        })
        .collect();
    let graph = SignedMultigraph::new(rot.len(), &list).expect("generated graph");
    let map = PlaneMap::from_graph(&graph, &rot).expect("generated map is planar");
    RandomMap {
        graph,
        map,
        rotations: rot,
    }
}

/// A fixed corpus of maps with `1..=max_edges` edges.
pub fn corpus(max_edges: usize, per_size: usize, seed: u64) -> Vec<RandomMap> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for n in 1..=max_edges {
        for _ in 0..per_size {
            out.push(random_map(&mut r, n, 0.5));
        }
    }
    out
}
