use super::action::{act_e, act_f_div, act_k};
use crate::rings::specialize_s;

/// Compare the actions on the quotient `V^N / S_N` (basis `v̄_{N+1+i}`) with
/// the Verma module `V^{-N-2}` under `v̄_{N+1+i} ↔ v_i`.
pub fn quotient_module_check(n_weight: u32, depth: u32) -> bool {
    let big = n_weight as i32;
    let dual = -big - 2;
    let shift = n_weight + 1;
    // E v̄_{N+1} lands in S_N
    if act_e(shift).is_some_and(|j| j > n_weight) {
        return false;
    }
    for i in 0..depth {
        if specialize_s(&act_k(shift + i), big) != specialize_s(&act_k(i), dual) {
            return false;
        }
        if i > 0 && act_e(shift + i).map(|j| j - shift) != act_e(i) {
            return false;
        }
        for n in 0..=depth {
            let (top, c_top) = act_f_div(n, shift + i);
            let (low, c_low) = act_f_div(n, i);
            if top - shift != low || specialize_s(&c_top, big) != specialize_s(&c_low, dual) {
                return false;
            }
        }
    }
    true
}
