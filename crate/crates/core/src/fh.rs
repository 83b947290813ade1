//! The FH polynomial of a graph: the multilinear normal form of the
//! Fourier-Hadamard transform of its spanning-tree indicator, and the full
//! spectrum of that transform computed with a fast Walsh-Hadamard transform.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, EdgeSignature, EdgeSubset, SignedMultigraph};

/// Default cap on the number of variables for 2^n sweeps.
pub const DEFAULT_LIMIT: usize = 24;

/// A squarefree monomial, ordered by degree and then by bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub u64);

impl Monomial {
    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn vars(self) -> impl Iterator<Item = usize> {
        EdgeSubset(self.0).ids()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multilinear integer polynomial in canonical form (no zero coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FhPolynomial {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl FhPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        Self {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Self::zero(n_vars);
        p.terms.insert(Monomial(0), BigInt::one());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, m: u64) -> BigInt {
        self.terms.get(&Monomial(m)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(Monomial(m)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&Monomial(m));
        }
    }

    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.0, c.clone());
        }
    }

    /// Multiplies by `(1 - 2 x_var)`; `var` must not occur in `self`.
    fn times_affine(&self, var: usize) -> Self {
        let bit = 1u64 << var;
        let mut out = self.clone();
        for (m, c) in &self.terms {
            debug_assert_eq!(m.0 & bit, 0);
            out.add_term(m.0 | bit, c * -2);
        }
        out
    }

    /// Exact value at a 0/1 point.
    pub fn evaluate(&self, point: &[u8]) -> Result<BigInt> {
        if point.len() != self.n_vars {
            return Err(Error::LengthMismatch {
                expected: self.n_vars,
                got: point.len(),
            });
        }
        let mask = point
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        Ok(self.evaluate_mask(mask))
    }

    pub fn evaluate_mask(&self, mask: u64) -> BigInt {
        self.terms
            .iter()
            .filter(|(m, _)| m.0 & !mask == 0)
            .map(|(_, c)| c)
            .sum()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let coef = match i64::try_from(c) {
                    Ok(v) => json!(v),
                    Err(_) => json!(c.to_string()),
                };
                json!({ "monomial": m.vars().collect::<Vec<_>>(), "coefficient": coef })
            })
            .collect();
        json!({ "n_vars": self.n_vars, "terms": terms })
    }
}

impl fmt::Display for FhPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m.vars().map(|v| format!("x{v}")).collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Expands `sum_T prod_{i in T} (1 - 2 x_i)`. The coefficient of `x^y` is
/// `(-2)^|y|` times the number of trees containing `y`.
pub fn fh_explicit(g: &SignedMultigraph) -> Result<FhPolynomial> {
    let mut containing: HashMap<u64, u64> = HashMap::new();
    for t in g.spanning_trees()? {
        let mut sub = t.0;
        loop {
            *containing.entry(sub).or_default() += 1;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & t.0;
        }
    }
    let mut p = FhPolynomial::zero(g.slots());
    for (m, count) in containing {
        let scale = BigInt::from(-2).pow(m.count_ones());
        p.add_term(m, scale * count);
    }
    Ok(p)
}

/// Builds FH by factoring out loops (factor 1) and isthmuses (factor
/// `1 - 2x_e`), then splitting on the lowest-id ordinary edge:
/// `FH(G) = FH(G - e) + (1 - 2x_e) FH(G / e)`.
pub fn fh_recursive(g: &SignedMultigraph) -> Result<FhPolynomial> {
    g.require_connected()?;
    Ok(recurse(g, &mut None))
}

/// Same recursion with a cache keyed on the exact labelled minor.
pub fn fh_recursive_memo(g: &SignedMultigraph) -> Result<FhPolynomial> {
    g.require_connected()?;
    Ok(recurse(g, &mut Some(HashMap::new())))
}

type MinorKey = (usize, Vec<(usize, usize, usize)>);

fn minor_key(g: &SignedMultigraph) -> MinorKey {
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.id, e.u.min(e.v), e.u.max(e.v)))
        .collect();
    (g.vertex_count(), edges)
}

fn recurse(
    g: &SignedMultigraph,
    memo: &mut Option<HashMap<MinorKey, FhPolynomial>>,
) -> FhPolynomial {
    let key = memo.as_ref().map(|_| minor_key(g));
    if let (Some(cache), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(p) = cache.get(k) {
            return p.clone();
        }
    }

    let mut g = g.clone();
    let mut isthmuses = Vec::new();
    let split = loop {
        let reducible =
            g.edges()
                .iter()
                .find_map(|e| match g.classify_edge(e.id).expect("edge present") {
                    EdgeKind::Ordinary => None,
                    kind => Some((e.id, kind)),
                });
        match reducible {
            Some((id, EdgeKind::Loop)) => g = g.delete(id).expect("edge present"),
            Some((id, _)) => {
                isthmuses.push(id);
                g = g.contract(id).expect("isthmus is not a loop");
            }
            None => break g.edges().first().map(|e| e.id),
        }
    };

    let mut p = match split {
        None => FhPolynomial::one(g.slots()),
        Some(e) => {
            let deleted = recurse(&g.delete(e).expect("edge present"), memo);
            let contracted = recurse(&g.contract(e).expect("ordinary edge"), memo);
            let mut sum = deleted;
            sum.add_assign(&contracted.times_affine(e));
            sum
        }
    };
    for e in isthmuses {
        p = p.times_affine(e);
    }

    if let (Some(cache), Some(k)) = (memo.as_mut(), key) {
        cache.insert(k, p.clone());
    }
    p
}

/// `|FH_G(v)|` where `v_i = 1` exactly on the negative edges.
pub fn det_via_fh(g: &SignedMultigraph, s: &EdgeSignature) -> Result<BigInt> {
    if s.len() != g.slots() {
        return Err(Error::LengthMismatch {
            expected: g.slots(),
            got: s.len(),
        });
    }
    Ok(fh_explicit(g)?.evaluate(&s.to_point())?.abs())
}

/// Counts spanning trees meeting `{i : u_i = 1}` in an even and in an odd
/// number of edges.
pub fn parity_form(g: &SignedMultigraph, u: &[u8]) -> Result<(u64, u64)> {
    if u.len() != g.slots() {
        return Err(Error::LengthMismatch {
            expected: g.slots(),
            got: u.len(),
        });
    }
    let mask = u
        .iter()
        .enumerate()
        .filter(|(_, &b)| b != 0)
        .fold(0u64, |m, (i, _)| m | 1 << i);
    let (mut even, mut odd) = (0, 0);
    for t in g.spanning_trees()? {
        if (t.0 & mask).count_ones() % 2 == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    }
    Ok((even, odd))
}

/// In-place unnormalized Walsh-Hadamard transform. `data.len()` must be a
/// power of two. Stages are split across threads; the result does not
/// depend on the split.
pub fn walsh_hadamard(data: &mut [i64]) {
    let len = data.len();
    assert!(len.is_power_of_two(), "length must be a power of two");
    let mut half = 1;
    while half < len {
        let block = 2 * half;
        let butterfly = |chunk: &mut [i64]| {
            let (lo, hi) = chunk.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        };
        if len >= 1 << 14 {
            data.par_chunks_mut(block.max(1 << 12)).for_each(|big| {
                big.chunks_mut(block).for_each(butterfly);
            });
        } else {
            data.chunks_mut(block).for_each(butterfly);
        }
        half = block;
    }
}

/// One coordinate held fixed while sweeping the other `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Restriction {
    pub coordinate: usize,
    pub value: bool,
}

#[derive(Debug, Clone)]
pub struct SpectrumOptions {
    pub limit: usize,
    pub restriction: Option<Restriction>,
    pub signed: bool,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            limit: DEFAULT_LIMIT,
            restriction: None,
            signed: false,
        }
    }
}

/// Multiset of `|FH_G(u)|` over the swept points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub counts: BTreeMap<u64, u64>,
    /// Number of points swept: `2^n`, or `2^(n-1)` under a restriction.
    pub universe: u64,
    pub restriction: Option<Restriction>,
    /// Distribution of the signed values, when requested.
    pub signed: Option<BTreeMap<i64, u64>>,
}

impl SpectrumReport {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let counts: serde_json::Map<String, Value> = self
            .counts
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        let mut out = json!({
            "universe": self.universe,
            "counts": counts,
            "restriction": self.restriction.map(|r| json!({
                "coordinate": r.coordinate,
                "value": r.value as u8,
            })),
        });
        if let Some(signed) = &self.signed {
            let s: serde_json::Map<String, Value> = signed
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            out["signed"] = Value::Object(s);
        }
        out
    }
}

/// `FH_G(u)` for every `u` in `{0,1}^n`, indexed by the mask of `u`.
pub fn fh_table(g: &SignedMultigraph, limit: usize) -> Result<Vec<i64>> {
    check_limit(g.slots(), limit)?;
    transform_support(g.slots(), g.spanning_trees()?.map(|t| t.bits()))
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "edge count for a 2^n sweep",
            size: n,
            limit,
        });
    }
    Ok(())
}

/// Walsh-Hadamard transform of the function counting how often each mask
/// occurs in `support`.
fn transform_support(n: usize, support: impl Iterator<Item = u64>) -> Result<Vec<i64>> {
    let mut data = vec![0i64; 1usize << n];
    let mut total: u64 = 0;
    for m in support {
        if m >> n != 0 {
            return Err(Error::UnknownEdge(63 - m.leading_zeros() as usize));
        }
        data[m as usize] += 1;
        total += 1;
    }
    // every butterfly value is bounded by the support size
    if total > 1 << 62 {
        return Err(Error::LimitExceeded {
            what: "support size for 64-bit transform",
            size: usize::try_from(total).unwrap_or(usize::MAX),
            limit: 1 << 62,
        });
    }
    walsh_hadamard(&mut data);
    Ok(data)
}

pub fn spectrum(g: &SignedMultigraph, opts: &SpectrumOptions) -> Result<SpectrumReport> {
    check_limit(g.slots(), opts.limit)?;
    spectrum_of_support(g.slots(), g.spanning_trees()?.map(|t| t.bits()), opts)
}

/// Spectrum of the transform of an arbitrary list of edge subsets (repeats
/// count with multiplicity). With the spanning trees of `g` this is
/// [`spectrum`].
pub fn spectrum_of_support(
    n: usize,
    support: impl IntoIterator<Item = u64>,
    opts: &SpectrumOptions,
) -> Result<SpectrumReport> {
    check_limit(n, opts.limit)?;
    if let Some(r) = opts.restriction {
        if r.coordinate >= n {
            return Err(Error::UnknownEdge(r.coordinate));
        }
    }
    let table = transform_support(n, support.into_iter())?;
    let keep = |u: usize| match opts.restriction {
        None => true,
        Some(r) => (u >> r.coordinate & 1 == 1) == r.value,
    };

    let counts = table
        .par_iter()
        .enumerate()
        .filter(|(u, _)| keep(*u))
        .fold(BTreeMap::new, |mut acc: BTreeMap<u64, u64>, (_, v)| {
            *acc.entry(v.unsigned_abs()).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, merge_counts);

    let signed = opts.signed.then(|| {
        table
            .par_iter()
            .enumerate()
            .filter(|(u, _)| keep(*u))
            .fold(BTreeMap::new, |mut acc: BTreeMap<i64, u64>, (_, &v)| {
                *acc.entry(v).or_default() += 1;
                acc
            })
            .reduce(BTreeMap::new, merge_counts)
    });

    let universe = (table.len() as u64) >> opts.restriction.is_some() as u32;
    Ok(SpectrumReport {
        counts,
        universe,
        restriction: opts.restriction,
        signed,
    })
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}
