//! The Verma module `V^s` with basis `v_0, v_1, …`.

use crate::rings::{brace_alpha_falling, q_binom};
use crate::BivariateLaurent;

/// `K v_j = s q^{-2j} v_j`
pub fn act_k(j: u32) -> BivariateLaurent {
    BivariateLaurent::mono(-2 * j as i32, 1, 1)
}

/// `E v_j = v_{j-1}`; `None` is the zero vector (`E v_0 = 0`).
pub fn act_e(j: u32) -> Option<u32> {
    j.checked_sub(1)
}

/// `F^{(n)} v_j = [n+j choose j] {α - j; n} v_{j+n}`
pub fn act_f_div(n: u32, j: u32) -> (u32, BivariateLaurent) {
    let c = &q_binom((n + j) as i32, j) * &brace_alpha_falling(j as i32, n);
    (j + n, c)
}
