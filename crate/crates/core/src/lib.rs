//! Exact intersection theory on the Hilbert scheme of two points on `P^n`.
//!
//! The Chow ring of `P^{n[2]}` is free of rank `3 * C(n+1, 2)` and carries
//! three geometric bases built from five families of cycles
//! (`A`, `A'`, `B`, `B'`, `C`). This crate enumerates those bases, evaluates
//! complementary-codimension intersection numbers between them, decides
//! membership in the nef and effective cones, multiplies by the two top
//! codimension-two classes, writes the Chern classes of the tautological
//! bundles `O(d)^[2]`, and computes degrees of secant varieties of complete
//! intersections.
//!
//! All arithmetic is exact: coefficients are arbitrary precision rationals.

pub mod chern;
pub mod class;
pub mod document;
mod error;
pub mod fixed_points;
pub mod pairing;
pub mod products;
pub mod secant;
pub mod symbol;

pub use chern::{chern_taut, TautBundle};
pub use class::{linear_combine, GradedClass, Rational};
pub use document::{
    emit_class, format_rational, parse_class, parse_rational, parse_symbol, ClassDocument,
    TermRecord,
};
pub use error::{Error, Result};
pub use fixed_points::{
    bb_cell_of, enumerate_fixed_points, FixedPointKind, MonomialIdealDescriptor,
};
pub use pairing::{
    effective_pairings, intersection_matrix, is_effective, is_nef, pair_classes, pair_symbols,
    IntersectionMatrix, PairingConfig,
};
pub use products::{
    bprime_top_power, eval_monomial, mul_bprime_top, mul_c_top, to_ms, MonomialSpec,
};
pub use secant::{
    secant_degree, secant_degree_mu_closed, secant_degree_mu_intersection, secant_oracle,
    ExponentVariant, SecantProblem,
};
pub use symbol::{
    chow_rank, enumerate_basis, validate_symbol, BasisId, BasisSymbol, Family, Grading,
};
