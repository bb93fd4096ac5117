//! Coefficient rings: sparse Laurent polynomials over ℤ or over cyclotomic
//! integers, quantum combinatorics, and the specialization maps.

mod bivariate;
pub mod cyclotomic;
mod divisibility;
pub mod json;
mod laurent;
pub mod quantum;
mod scalar;
pub mod specialize;
mod univariate;

pub use bivariate::SMajor;
pub use cyclotomic::{cyclotomic_poly, CyclotomicScalar};
pub use divisibility::{divisibility_order, divisible_by_power};
pub use laurent::{Exponent, Laurent};
pub use quantum::{brace, brace_alpha_falling, brace_alpha_shift, ideal_generator, q_binom, q_factorial, q_int};
pub use scalar::{ExactDiv, Scalar};
pub use specialize::{
    specialize_q_one, specialize_q_root, specialize_s, univariate_at_root, AtQOne, AtRootOfUnity, AtWeight, Bar, Generic,
    Specialization,
};
