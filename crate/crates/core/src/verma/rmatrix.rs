//! Coefficients of the braiding `ℛ` and its inverse on `V ⊗ V`, with the
//! global `q^{α²/2}` dropped.
//!
//! Labels: the strand carrying `a` gains `i`, the other loses `i`. For a
//! positive crossing `a` comes in on the right and leaves on the left:
//! `v_b ⊗ v_a ↦ Σ_i c⁺ v_{a+i} ⊗ v_{b-i}`. For a negative crossing `a` comes in
//! on the left: `v_a ⊗ v_b ↦ Σ_i c⁻ v_{b-i} ⊗ v_{a+i}`.

use std::collections::HashMap;
use std::sync::OnceLock;

use parking_lot::RwLock;

use crate::rings::{brace_alpha_falling, q_binom};
use crate::BivariateLaurent;

#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixTerm {
    pub sign: i32,
    pub i: u32,
    /// `(a, b)`
    pub in_pair: (u32, u32),
    /// `(a + i, b - i)`
    pub out_pair: (u32, u32),
    pub coeff: BivariateLaurent,
}

impl RMatrixTerm {
    /// Input labels as (left, right) tensor positions.
    pub fn positions_in(&self) -> (u32, u32) {
        let (a, b) = self.in_pair;
        if self.sign > 0 { (b, a) } else { (a, b) }
    }

    /// Output labels as (left, right) tensor positions.
    pub fn positions_out(&self) -> (u32, u32) {
        let (a, b) = self.out_pair;
        if self.sign > 0 { (a, b) } else { (b, a) }
    }
}

/// Single coefficient of the crossing with state `i`.
pub fn crossing_coeff(sign: i32, a: u32, b: u32, i: u32) -> BivariateLaurent {
    type Memo = RwLock<HashMap<(i32, u32, u32, u32), BivariateLaurent>>;
    static CACHE: OnceLock<Memo> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (sign.signum(), a, b, i);
    if let Some(c) = cache.read().get(&key) {
        return c.clone();
    }
    let c = crossing_coeff_uncached(sign, a, b, i);
    cache.write().insert(key, c.clone());
    c
}

fn crossing_coeff_uncached(sign: i32, a: u32, b: u32, i: u32) -> BivariateLaurent {
    let (a_, b_, i_) = (a as i32, b as i32, i as i32);
    let base = &q_binom(a_ + i_, i) * &brace_alpha_falling(a_, i);
    let mono = if sign > 0 {
        BivariateLaurent::mono(i_ * (i_ - 1) / 2 + 2 * (a_ + i_) * (b_ - i_), -(a_ + b_), 1)
    } else {
        let c = if i % 2 == 0 { 1 } else { -1 };
        BivariateLaurent::mono(-i_ * (i_ - 1) / 2 - 2 * a_ * b_, a_ + b_, c)
    };
    &base * &mono
}

/// Every state `i ≤ min(b, bound)` of the crossing with input labels `(a, b)`.
pub fn crossing_terms(sign: i32, a: u32, b: u32, bound: u32) -> Vec<RMatrixTerm> {
    (0..=b.min(bound))
        .map(|i| RMatrixTerm {
            sign,
            i,
            in_pair: (a, b),
            out_pair: (a + i, b - i),
            coeff: crossing_coeff(sign, a, b, i),
        })
        .collect()
}

/// Input labels at tensor positions (left, right) to `(a, b)`.
pub(crate) fn split_inputs(sign: i32, left: u32, right: u32) -> (u32, u32) {
    if sign > 0 { (right, left) } else { (left, right) }
}

/// Output `(a+i, b-i)` to tensor positions (left, right).
pub(crate) fn place_outputs(sign: i32, a_out: u32, b_out: u32) -> (u32, u32) {
    if sign > 0 { (a_out, b_out) } else { (b_out, a_out) }
}
