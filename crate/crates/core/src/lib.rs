//! Guruswami-Sudan list decoding of Reed-Solomon codes over GF(2^m).
//!
//! The interpolation step is available in four flavours: the iterative
//! interpolation algorithm, the Lee-O'Sullivan basis reduction, binary
//! interpolation built on randomized ideal multiplication, and binary
//! interpolation in re-encoded coordinates.

pub mod bench;
pub mod binary;
pub mod decoder;
pub mod error;
pub mod field;
pub mod groebner;
pub mod poly;

pub use binary::{interpolate, merge, reencode_interpolate, MergeStats, RngStream};
pub use decoder::{gs_params, list_decode, y_roots, Algorithm, CodeSpec, DecodeResult, GsParams};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{InterpPoints, PolyBasis};
pub use poly::{BiPoly, Monomial, TermOrder, UniPoly};
