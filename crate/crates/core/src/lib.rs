//! Exact truncations of the unified two-variable quantum invariant `F∞` of
//! knots, computed from braid words, together with its colored Jones, ADO and
//! Alexander specializations.
//!
//! Coefficient arithmetic is generic over [`rings::Scalar`]; the aliases below
//! fix the concrete rings used throughout.

pub mod error;
pub mod qdet;
pub mod rings;
pub mod statesum;
pub mod traces;
pub mod verma;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use rings::{CyclotomicScalar, Laurent, Scalar};
pub use verma::BraidWord;


pub type Int = BigInt;
/// `ℤ[q^±, s^±]`, exponents stored as `[e_q, e_s]`.
pub type BivariateLaurent = Laurent<[i32; 2], Int>;
/// `ℤ[x^±]` in one variable (q for Jones, t for Alexander, s at q = 1).
pub type UnivariateLaurent = Laurent<i32, Int>;
/// `ℤ[ζ][s^±]` with ζ a root of unity.
pub type CyclotomicLaurent = Laurent<i32, CyclotomicScalar>;
