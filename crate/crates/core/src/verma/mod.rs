//! The Verma module, the braiding on its tensor powers, and the graded
//! pieces of the resulting braid group representation.

mod action;
mod block;
mod braid;
mod burau;
mod composition;
mod dense;
mod quotient;
mod rmatrix;
mod rpart;

pub use action::{act_e, act_f_div, act_k};
pub use block::{braid_block, braid_block_in, braid_matrix_on, clear_block_cache, generator_matrix, WeightBlockMatrix};
pub use braid::BraidWord;
pub use burau::{burau_generator, sym_burau, sym_power, sym_power_tensor_basis, sym_rescale};
pub use composition::{compositions, Basis, Composition};
pub use dense::Matrix;
pub use quotient::quotient_module_check;
pub use rmatrix::{crossing_coeff, crossing_terms, RMatrixTerm};
pub(crate) use rmatrix::{place_outputs, split_inputs};
pub use rpart::{rpart_basis, rpart_block, rpart_factorization_check, rpart_factorization_mismatch};
