//! Partial traces of the braid action: truncated `F∞`, its specializations,
//! and checks of the structural identities they satisfy.

mod engine;
mod invariants;
mod series;
mod verify;

pub use invariants::{
    ado, ado_raw, alexander, burau_minor_det, colored_jones, colored_jones_raw, curl_scalars, f_infinity, f_infinity_mirror_convention, homological_form,
    partial_trace, partial_trace_in, CoeffMode,
};
pub use series::{AdoPolynomial, TruncatedSeries};
pub use verify::{compare_truncations, Agreement, mmr_report, verify_factorization, verify_mmr, verify_symmetry_ado, MmrReport};
