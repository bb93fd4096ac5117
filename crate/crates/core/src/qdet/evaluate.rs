use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{complement_c, deformed_burau, reduced};
use super::multi::{evaluate_e, MultiLaurent};
use super::operator::{apply, apply_bounded, OperatorExpression};
use crate::error::{Error, Result};
use crate::rings::{specialize_q_one, specialize_q_root, CyclotomicScalar, Scalar};
use crate::traces::{AdoPolynomial, TruncatedSeries};
use crate::verma::BraidWord;
use crate::{BivariateLaurent, CyclotomicLaurent, UnivariateLaurent};

/// The operator algebra's `q` and `s` are `q^{-2}` and `s^{-2}` in the
/// variables of the braid representation.
pub fn to_verma_variables(p: &BivariateLaurent) -> BivariateLaurent {
    p.map_terms(|e, c| ([-2 * e[0], -2 * e[1]], c.clone()))
}

fn prefactor_exponent(braid: &BraidWord) -> Result<i32> {
    braid.check_knot()?;
    let (w, n) = (braid.writhe(), braid.strands() as i32);
    if (w - n + 1) % 2 != 0 {
        return Err(Error::Parity { writhe: w, width: n as usize });
    }
    Ok((w - n + 1) / 2)
}

/// `C` for `q ρ′(β)`.
fn series_operator(braid: &BraidWord) -> OperatorExpression {
    complement_c(&reduced(&deformed_burau(braid)).scale_q(1))
}

/// `Σ_k ℰ(C^k · 1)` in the operator algebra's variables, dropping every
/// term on which some crossing has seen more than `bound` `a` operators.
/// Those terms evaluate into `I_{bound+1}`, and every `m·|β|` further
/// powers of `C` add at least one `a`, so the iteration stops by itself.
pub fn qdet_series(braid: &BraidWord, bound: u32) -> Result<BivariateLaurent> {
    braid.check_knot()?;
    let c = series_operator(braid);
    let m = braid.strands().saturating_sub(1).max(1);
    let cutoff = (bound as usize + 1) * m * braid.letters().len().max(1);
    let mut p = MultiLaurent::one();
    let mut total = BivariateLaurent::zero();
    for _ in 0..=cutoff {
        if p.is_zero() {
            break;
        }
        total += &evaluate_e(&p);
        p = apply_bounded(&c, &p, Some(bound));
    }
    Ok(total)
}

/// `F∞` from the inverse quantum determinant,
/// `s^{(w-m+1)/2} ℰ(1 / det̃_q(Id - q ρ′(β)))`, truncated in the `a`
/// degree and rewritten in the variables of the braid representation.
/// Normalized: at `s = q^N` it is `J_N`.
pub fn f_infinity_qdet(braid: &BraidWord, bound: u32) -> Result<TruncatedSeries> {
    let pre = prefactor_exponent(braid)?;
    let native = qdet_series(braid, bound)?.shift(&[0, pre]);
    Ok(TruncatedSeries {
        value: to_verma_variables(&native),
        state_bound: bound,
        writhe: braid.writhe(),
        strands: braid.strands(),
        normalized: true,
    })
}

/// `ℰ(det(Id - ρ′(β)))` at `q = 1`, a polynomial in the operator
/// algebra's `s`; the Alexander polynomial up to a unit.
pub fn qdet_alexander(braid: &BraidWord) -> Result<UnivariateLaurent> {
    braid.check_knot()?;
    let one_minus_c = OperatorExpression::one().minus(&complement_c(&reduced(&deformed_burau(braid))));
    Ok(specialize_q_one(&evaluate_e(&apply(&one_minus_c, &MultiLaurent::one()))))
}

/// [`qdet_alexander`] as the symmetric representative with value 1 at 1,
/// in `t` (the operator algebra's `s`).
pub fn alexander_qdet(braid: &BraidWord) -> Result<UnivariateLaurent> {
    symmetrize(&qdet_alexander(braid)?)
}

/// `ADO_r` from the quantum determinant: the Frobenius image of the
/// Alexander factor times the series at the root of unity, with the
/// prefactor. The series is only known modulo `(1 - s^{2r})^M`; the
/// polynomial is read off as the representative whose `s²`-exponents lie in
/// a window of width `rM` centred at 0, with `M` large enough for `span`.
pub fn ado_qdet(braid: &BraidWord, r: u32) -> Result<AdoPolynomial> {
    if r == 0 {
        return Err(Error::Parameter("r must be positive".into()));
    }
    braid.check_knot()?;
    let span = ado_span_bound(braid, r);
    let m = span / r + 1;
    ado_qdet_with(braid, r, r * m - 1)
}

/// [`ado_qdet`] with an explicit `a`-degree bound; exact as long as the
/// answer's `s²`-span is below `r·⌊(bound+1)/r⌋`.
pub fn ado_qdet_with(braid: &BraidWord, r: u32, bound: u32) -> Result<AdoPolynomial> {
    let pre = prefactor_exponent(braid)?;
    let series = to_verma_variables(&qdet_series(braid, bound)?.shift(&[0, pre]));
    let series = specialize_q_root(&series, r);
    let alex = symmetrize(&qdet_alexander(braid)?)?;
    let alex = CyclotomicLaurent::from_integer(&alex.map_terms(|&e, c| (-2 * e, c.clone())));
    let product = &alex.frobenius(r as i32) * &series;
    let m = (bound + 1) / r;
    let value = reduce_in_window(&product, r, m);
    Ok(AdoPolynomial { r, value, writhe: braid.writhe(), normalized: true })
}

/// A-priori bound on the `s²`-span of `ADO_r`. On the `r`-part 0 block
/// labels stay below `r`, so a crossing coefficient `s^{∓(a+b)} {α-a; i}`
/// with `a + i, b ≤ r - 1` has its `s`-degrees in a window of width
/// `2(r-1)`; the pivot and framing factors are single monomials.
fn ado_span_bound(braid: &BraidWord, r: u32) -> u32 {
    (r - 1) * braid.letters().len() as u32
}

/// The unit multiple that is symmetric under `s ↦ s⁻¹` and is 1 at `s = 1`.
fn symmetrize(p: &UnivariateLaurent) -> Result<UnivariateLaurent> {
    let (Some(&lo), Some(&hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(Error::DegenerateDeterminant);
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::DegenerateDeterminant);
    }
    let at_one: BigInt = p.terms().map(|(_, c)| c.clone()).sum();
    let sign = if at_one == BigInt::one() {
        BigInt::one()
    } else if at_one == -BigInt::one() {
        -BigInt::one()
    } else {
        return Err(Error::DegenerateDeterminant);
    };
    Ok(p.shift(&(-(lo + hi) / 2)).scale(&sign))
}

/// Representative of `p` modulo `(t^r - 1)^m`, `t = s²`, with
/// `t`-exponents in `[-⌊(rm-1)/2⌋, ⌈(rm-1)/2⌉]`.
fn reduce_in_window(p: &CyclotomicLaurent, r: u32, m: u32) -> CyclotomicLaurent {
    let width = (r * m) as i32;
    if width == 0 {
        return CyclotomicLaurent::zero();
    }
    // (t^r - 1)^m as exponents in t, monic
    let base = CyclotomicLaurent::from_terms([
        (r as i32, CyclotomicScalar::one()),
        (0, -CyclotomicScalar::one()),
    ]);
    let g = base.pow(m);
    let g0 = g.coeff(&0);
    let lo = -((width - 1) / 2);
    let hi = lo + width - 1;
    let in_t = |p: &CyclotomicLaurent| p.map_terms(|&e, c| (e / 2, c.clone()));
    assert!(p.terms().all(|(e, _)| e % 2 == 0), "ADO lives in even powers of s");
    let mut q = in_t(p);
    loop {
        let Some((top, c)) = q.terms().next_back().map(|(&e, c)| (e, c.clone())) else { break };
        if top <= hi {
            break;
        }
        q -= &g.shift(&(top - width)).scale(&c);
    }
    loop {
        let Some((bot, c)) = q.terms().next().map(|(&e, c)| (e, c.clone())) else { break };
        if bot >= lo {
            break;
        }
        // g0 = ±1, so dividing by it is multiplying by it
        q -= &g.shift(&bot).scale(&c.mul_ref(&g0));
    }
    q.map_terms(|&e, c| (2 * e, c.clone()))
}

