//! Link determinants from edge-signed plane Tait graphs.
//!
//! The determinant of the link presented by `(G, signs)` is computed four
//! ways: the signed spanning-tree count, the FH polynomial evaluated at the
//! sign vector, the Kauffman bracket at `A = exp(i pi / 4)`, and the signed
//! matrix-tree determinant. [`fh::spectrum`] sweeps all `2^n` signatures
//! with a fast Walsh-Hadamard transform, and [`symmetry`] checks antipodal
//! presentations of centrally symmetric links.

pub mod cyclotomic;
pub mod document;
pub mod dsu;
pub mod error;
pub mod families;
pub mod fh;
pub mod fixtures;
pub mod graph;
pub mod kauffman;
pub mod plane;
pub mod symmetry;

pub use cyclotomic::CyclotomicInt;
pub use document::{DocumentError, GraphDocument};
pub use error::{Error, Result};
pub use fh::{
    det_via_fh, fh_explicit, fh_recursive, parity_form, spectrum, FhPolynomial, Restriction,
    SpectrumOptions, SpectrumReport,
};
pub use graph::{EdgeKind, EdgeSignature, EdgeSubset, Sign, SignedMultigraph};
pub use kauffman::{
    bracket_at_primitive8, det_via_bracket, det_via_state_sum, state_circles, state_stats,
};
pub use plane::{MedialMap, PlaneMap};
pub use symmetry::{analyze_involution, MapInvolution, SymmetryReport};
