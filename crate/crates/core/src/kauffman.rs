//! Kauffman bracket state sum at A = exp(i pi / 4).
//!
//! A state is a bitmask over crossings, i.e. over edges of the Tait graph:
//! a set bit means the smoothing that contracts the edge, a clear bit the
//! smoothing that deletes it. A-smoothings are the positive contractions
//! and negative deletions.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::fh::DEFAULT_LIMIT;
use crate::graph::{EdgeSignature, EdgeSubset, SignedMultigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct State {
    pub mask: u64,
    pub contracted_pos: u32,
    pub contracted_neg: u32,
    pub deleted_pos: u32,
    pub deleted_neg: u32,
    pub n_pos: u32,
    pub n_neg: u32,
    /// Number of A-smoothings.
    pub alpha: u32,
    /// Number of B-smoothings.
    pub beta: u32,
    /// Number of circles after smoothing every crossing.
    pub gamma: usize,
}

impl State {
    pub fn is_monocyclic(&self) -> bool {
        self.gamma == 1
    }
}

fn check(g: &SignedMultigraph, s: &EdgeSignature, state: u64) -> Result<()> {
    if s.len() != g.slots() {
        return Err(Error::LengthMismatch {
            expected: g.slots(),
            got: s.len(),
        });
    }
    if state & !g.edge_mask().bits() != 0 {
        return Err(Error::LengthMismatch {
            expected: g.slots(),
            got: 64 - state.leading_zeros() as usize,
        });
    }
    Ok(())
}

pub fn state_stats(g: &SignedMultigraph, s: &EdgeSignature, state: u64) -> Result<State> {
    check(g, s, state)?;
    let gamma = state_circles(g, state)?;
    let neg = s.to_mask() & g.edge_mask().bits();
    let all = g.edge_mask().bits();
    let pos = all & !neg;
    let cp = (state & pos).count_ones();
    let cn = (state & neg).count_ones();
    let dp = (!state & pos).count_ones();
    let dn = (!state & neg).count_ones();
    Ok(State {
        mask: state,
        contracted_pos: cp,
        contracted_neg: cn,
        deleted_pos: dp,
        deleted_neg: dn,
        n_pos: pos.count_ones(),
        n_neg: neg.count_ones(),
        alpha: cp + dn,
        beta: cn + dp,
        gamma,
    })
}

/// Circles of a state: `k(C) + nullity(C)` for the contracted subgraph `C`
/// spanning every vertex.
pub fn state_circles(g: &SignedMultigraph, state: u64) -> Result<usize> {
    g.require_connected()?;
    if state & !g.edge_mask().bits() != 0 {
        return Err(Error::LengthMismatch {
            expected: g.slots(),
            got: 64 - state.leading_zeros() as usize,
        });
    }
    let k = g.components_of(EdgeSubset(state)).components();
    let nullity = state.count_ones() as usize + k - g.vertex_count();
    Ok(k + nullity)
}

/// `A^(alpha - beta) (-A^2 - A^-2)^(gamma - 1)` at `A = zeta`.
pub fn state_weight(st: &State) -> CyclotomicInt {
    let loop_value = -CyclotomicInt::zeta_pow(2) - CyclotomicInt::zeta_pow(-2);
    let mut w = CyclotomicInt::zeta_pow(st.alpha as i64 - st.beta as i64);
    for _ in 1..st.gamma {
        w = w * loop_value;
    }
    w
}

/// Sum over all `2^n` states.
pub fn bracket_at_primitive8(g: &SignedMultigraph, s: &EdgeSignature) -> Result<CyclotomicInt> {
    bracket_with_limit(g, s, DEFAULT_LIMIT)
}

pub fn bracket_with_limit(
    g: &SignedMultigraph,
    s: &EdgeSignature,
    limit: usize,
) -> Result<CyclotomicInt> {
    check(g, s, 0)?;
    g.require_connected()?;
    let n = g.edge_count();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "crossing count for the state sum",
            size: n,
            limit,
        });
    }
    let ids: Vec<usize> = g.edges().iter().map(|e| e.id).collect();
    Ok((0..1u64 << n)
        .into_par_iter()
        .map(|compact| {
            let state = spread(compact, &ids);
            let st = state_stats(g, s, state).expect("validated inputs");
            state_weight(&st)
        })
        .reduce(|| CyclotomicInt::ZERO, |a, b| a + b))
}

/// Sum restricted to monocyclic states, i.e. to contracted sets that are
/// spanning trees.
pub fn bracket_monocyclic(g: &SignedMultigraph, s: &EdgeSignature) -> Result<CyclotomicInt> {
    check(g, s, 0)?;
    let mut total = CyclotomicInt::ZERO;
    for t in g.spanning_trees()? {
        let st = state_stats(g, s, t.bits())?;
        debug_assert!(st.is_monocyclic());
        total += state_weight(&st);
    }
    Ok(total)
}

/// `sum_T (-1)^{c-(T)}`, with `c-(T)` the number of negative tree edges.
pub fn tree_sign_sum(g: &SignedMultigraph, s: &EdgeSignature) -> Result<BigInt> {
    check(g, s, 0)?;
    let neg = s.to_mask();
    let mut sum: i64 = 0;
    for t in g.spanning_trees()? {
        sum += if (t.bits() & neg).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        };
    }
    Ok(BigInt::from(sum))
}

/// `|sum_T (-1)^{c-(T)}|`, the magnitude of the bracket.
pub fn det_via_bracket(g: &SignedMultigraph, s: &EdgeSignature) -> Result<BigInt> {
    Ok(tree_sign_sum(g, s)?.magnitude().clone().into())
}

/// `|<D>|` from the full `2^n` state sum.
pub fn det_via_state_sum(g: &SignedMultigraph, s: &EdgeSignature, limit: usize) -> Result<BigInt> {
    let b = bracket_with_limit(g, s, limit)?;
    let m = b
        .integer_magnitude()
        .expect("bracket at a primitive 8th root is zeta^k times an integer");
    Ok(BigInt::from(m))
}

/// Exponent `k` with `<D> = zeta^k * sum_T (-1)^{c-(T)}`: a monocyclic
/// state has `|V| - 1` contracted edges, so `alpha - beta` equals
/// `n- - n+ + 2|V| - 2 - 4 c-`.
pub fn bracket_phase_exponent(g: &SignedMultigraph, s: &EdgeSignature) -> i64 {
    let neg = (s.to_mask() & g.edge_mask().bits()).count_ones() as i64;
    let pos = g.edge_count() as i64 - neg;
    neg - pos + 2 * g.vertex_count() as i64 - 2
}

fn spread(compact: u64, ids: &[usize]) -> u64 {
    ids.iter()
        .enumerate()
        .filter(|(i, _)| compact >> i & 1 == 1)
        .fold(0u64, |m, (_, &id)| m | 1u64 << id)
}
