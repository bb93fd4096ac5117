use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::invariants::{ado, alexander, colored_jones, partial_trace_in, CoeffMode};
use crate::error::Result;
use crate::rings::{divisibility_order, ideal_generator, univariate_at_root, AtQOne};
use crate::verma::{rpart_factorization_check, BraidWord};
use crate::{BivariateLaurent, UnivariateLaurent};

/// `ADO_r(A) = ADO_r(A⁻¹ ζ_{2r}^{-2})` for the normalized polynomial.
pub fn verify_symmetry_ado(braid: &BraidWord, r: u32) -> Result<bool> {
    let a = ado(braid, r)?;
    Ok(a.value.reflect(2 * r, -2) == a.value)
}

/// `ADO_r(ζ_{2r}^N) = J_N(ζ_{2r})` for `1 ≤ N < r`, and the `r`-part
/// factorization of the braid action on the first carry level.
pub fn verify_factorization(braid: &BraidWord, r: u32) -> Result<bool> {
    let a = ado(braid, r)?;
    let order = 2 * r;
    for n in 1..r {
        let j = univariate_at_root(&colored_jones(braid, n)?, order);
        if a.value.at_root_power(order, n as i64) != j {
            return Ok(false);
        }
    }
    Ok(rpart_factorization_check(braid, r, 1))
}

/// Outcome of the `q = 1` comparison with the inverse Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MmrReport {
    /// Exponent of the monomial `s^c` the product approximates.
    pub c: i32,
    /// Largest `k` with `(s - s⁻¹)^k | T·A(s²) - s^c` (capped).
    pub order: u32,
    pub required: u32,
}

impl MmrReport {
    pub fn holds(&self) -> bool {
        self.order >= self.required
    }
}

/// Compare the raw `q = 1` truncation `T` with `1/A(s²)`: the best monomial
/// `s^c` and how deep `T·A(s²) - s^c` sits in the `(s - s⁻¹)`-adic filtration.
pub fn mmr_report(braid: &BraidWord, bound: u32) -> Result<MmrReport> {
    braid.check_knot()?;
    let t = partial_trace_in(braid, 1, bound, CoeffMode::Truncated, &AtQOne);
    let alex_s2 = alexander(braid)?.map_terms(|&e, c| (2 * e, c.clone()));
    let product = &t * &alex_s2;
    let base = &UnivariateLaurent::var_pow(1) - &UnivariateLaurent::var_pow(-1);
    let cap = bound + 8;
    let required = bound.div_ceil(2);
    // if P = s^c (1 + O((s - s⁻¹)²)) then P(1) = 1 and P'(1) = c
    let at_one: BigInt = product.terms().map(|(_, c)| c.clone()).sum();
    let slope: BigInt = product.terms().map(|(&e, c)| c * e).sum();
    let c = match (at_one.is_one(), i32::try_from(&slope)) {
        (true, Ok(c)) => c,
        _ => return Ok(MmrReport { c: braid.writhe(), order: 0, required }),
    };
    let diff = &product - &UnivariateLaurent::var_pow(c);
    let order = if diff.is_zero() { cap } else { divisibility_order(&diff, &base, cap) };
    Ok(MmrReport { c, order, required })
}

pub fn verify_mmr(braid: &BraidWord, bound: u32) -> Result<bool> {
    Ok(mmr_report(braid, bound)?.holds())
}

/// How two truncations at the same bound relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Exact,
    /// The difference is a multiple of `{α; B+1}`, hence lies in `I_{B+1}`.
    ModIdeal,
    /// No certificate found.
    Differ,
}

impl Agreement {
    pub fn holds(self) -> bool {
        self != Agreement::Differ
    }
}

/// Compare two truncations taken with state bound `bound`.
pub fn compare_truncations(a: &BivariateLaurent, b: &BivariateLaurent, bound: u32) -> Agreement {
    if a == b {
        return Agreement::Exact;
    }
    match (a - b).div_exact(&ideal_generator(0, bound + 1)) {
        Some(_) => Agreement::ModIdeal,
        None => Agreement::Differ,
    }
}
