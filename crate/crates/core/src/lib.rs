//! Alexander-quandle coloring invariants of links, computed from diagrams
//! and from Seifert matrices.

pub mod acceptance;
pub mod alex_module;
pub mod cli;
pub mod coloring;
pub mod diagram;
pub mod field_poly;
pub mod invariants;
pub mod linalg;
pub mod quandle;
pub mod scalar;

use num_bigint::BigInt;

/// Integer Laurent polynomials with arbitrary-precision coefficients.
pub type ZPoly = field_poly::IntLaurent<BigInt>;
/// Integer Laurent polynomials with machine coefficients.
pub type SmallZPoly = field_poly::IntLaurent<i64>;

/// Serialize a value through its `Display` form (big integers, polynomials).
pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
