//! The quantum-determinant formula: operators on Laurent polynomials in
//! per-crossing variables, deformed Burau matrices, and the evaluation `ℰ`.

mod evaluate;
mod matrix;
mod multi;
mod operator;

pub use evaluate::{alexander_qdet, ado_qdet, ado_qdet_with, f_infinity_qdet, qdet_alexander, qdet_series, to_verma_variables};
pub use matrix::{complement_c, crossing_operators, deformed_burau, one_minus_c, qdet, reduced, right_quantum_check, OperatorMatrix};
pub use multi::{evaluate_e, MultiExp, MultiLaurent, Var};
pub use operator::{apply, apply_bounded, apply_word, OperatorExpression, Prim, Word};
