//! Root-of-unity `r`-part representations.
//!
//! At `q = ζ_{2r}` every label is written `k = i + r·j` with `i < r`; the
//! `r`-part of a tensor is `Σ j_p`. Tensors of `r`-part `≤ m` form a
//! subrepresentation, and projecting onto `r`-part exactly `m` gives `φ_n^m`.

use std::sync::Arc;

use num_traits::Zero;

use super::block::{braid_block_in, braid_matrix_on, WeightBlockMatrix};
use super::braid::BraidWord;
use super::composition::{compositions, Basis};
use crate::rings::{AtQOne, AtRootOfUnity};
use crate::CyclotomicLaurent;

/// Labels `i + r·j` with all `i_p < r` and `Σ j_p = m`.
pub fn rpart_basis(n: usize, r: u32, m: u32) -> Arc<Basis> {
    let mut labels = Vec::new();
    for j in compositions(n, m) {
        let total = (r as usize).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let label: Vec<u32> = j
                .iter()
                .map(|&jp| {
                    let ip = (c % r as usize) as u32;
                    c /= r as usize;
                    ip + r * jp
                })
                .collect();
            labels.push(label);
        }
    }
    labels.sort();
    Basis::new(labels)
}

/// `φ_n^m(β)` over `ℤ[ζ_{2r}][s^±]`.
pub fn rpart_block(braid: &BraidWord, r: u32, m: u32) -> WeightBlockMatrix<CyclotomicLaurent> {
    let basis = rpart_basis(braid.strands(), r, m);
    braid_matrix_on(braid, m, &basis, &AtRootOfUnity(r))
}

/// Check `Φ ∘ φ_n^m(β) = (φ_n^0(β) ⊗ F_r ψ_{n,m}(β)) ∘ Φ` with
/// `Φ(v_{i+rj}) = v_i ⊗ w_j`. Returns the first mismatching entry.
pub fn rpart_factorization_mismatch(braid: &BraidWord, r: u32, m: u32) -> Option<String> {
    let n = braid.strands();
    let order = 2 * r;
    let lhs = rpart_block(braid, r, m);
    let phi0 = rpart_block(braid, r, 0);
    let psi = braid_block_in(braid, m, &AtQOne).map(|p| CyclotomicLaurent::from_integer(p).frobenius(r as i32));
    let split = |k: &[u32]| -> (Vec<u32>, Vec<u32>) { (k.iter().map(|x| x % r).collect(), k.iter().map(|x| x / r).collect()) };
    for row in lhs.basis().labels() {
        let (ir, jr) = split(row);
        for col in lhs.basis().labels() {
            let (ic, jc) = split(col);
            let left = lhs.get(row, col);
            let a = phi0.get(&ir, &ic);
            let right = if a.is_zero() { CyclotomicLaurent::zero() } else { &a * &psi.get(&jr, &jc) };
            if left != right {
                return Some(format!(
                    "n={n} r={r} m={m} braid [{braid}] entry ({row:?}, {col:?}): lhs {left:?} rhs {right:?} (order {order})"
                ));
            }
        }
    }
    None
}

pub fn rpart_factorization_check(braid: &BraidWord, r: u32, m: u32) -> bool {
    rpart_factorization_mismatch(braid, r, m).is_none()
}
