use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::engine::{diagonal_sum, monomial, pivot_exponent, TraceSpec};
use super::series::{AdoPolynomial, TruncatedSeries};
use crate::error::{Error, Result};
use crate::rings::{AtRootOfUnity, AtWeight, Bar, Generic, Specialization};
use crate::verma::{sym_burau, BraidWord, Matrix};
use crate::{BivariateLaurent, UnivariateLaurent};

/// How the partial trace is cut off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffMode {
    /// Generic coefficients; every crossing state is capped at the bound.
    Truncated,
    /// Tensor labels capped at the bound as well (finite blocks such as
    /// `V^N` or the `r`-part 0 piece).
    LabelBounded,
}

/// Partial trace over factors `2..n` of `(1 ⊗ (K^{pivot})^{⊗ n-1}) φ_n(β)`,
/// every crossing state (and, in `LabelBounded` mode, every label) `≤ bound`.
pub fn partial_trace(braid: &BraidWord, pivot: i32, bound: u32, mode: CoeffMode) -> Result<TruncatedSeries> {
    braid.check_knot()?;
    let value = partial_trace_in(braid, pivot, bound, mode, &Generic);
    Ok(TruncatedSeries { value, state_bound: bound, writhe: braid.writhe(), strands: braid.strands(), normalized: false })
}

/// [`partial_trace`] with coefficients pushed through `spec` first.
pub fn partial_trace_in<S: Specialization>(braid: &BraidWord, pivot: i32, bound: u32, mode: CoeffMode, spec: &S) -> S::Target {
    let weight = |label: &[u32]| monomial(spec, pivot_exponent(label, pivot));
    let ts = TraceSpec {
        spec,
        state_bound: Some(bound),
        label_bound: (mode == CoeffMode::LabelBounded).then_some(bound),
        twist: None,
        weight: &weight,
    };
    diagonal_sum(braid, &ts)
}

/// Truncation of `F∞` with every crossing state `≤ bound`.
pub fn f_infinity(braid: &BraidWord, bound: u32, normalize: bool) -> Result<TruncatedSeries> {
    let t = partial_trace(braid, 1, bound, CoeffMode::Truncated)?;
    Ok(if normalize { t.normalize() } else { t })
}

/// The raw truncation in the opposite crossing convention: the braid is
/// mirrored and the crossing coefficients conjugated by `q ↦ q⁻¹, s ↦ s⁻¹`,
/// the pivot `K` keeping its form. This is the convention in which the
/// closure of `σ₁⁻³` gives the textbook trefoil sum
/// `Σ_k q^{α-2k} q^{3αk} q^{-k(k-1)/2} (-1)^k ∏_{i<k} (q^{α-i} - q^{i-α})`.
pub fn f_infinity_mirror_convention(braid: &BraidWord, bound: u32) -> Result<TruncatedSeries> {
    braid.check_knot()?;
    let mirror = braid.mirror();
    let weight = |label: &[u32]| monomial(&Generic, pivot_exponent(label, 1));
    let ts = TraceSpec { spec: &Bar, state_bound: Some(bound), label_bound: None, twist: None, weight: &weight };
    let value = diagonal_sum(&mirror, &ts);
    Ok(TruncatedSeries { value, state_bound: bound, writhe: braid.writhe(), strands: braid.strands(), normalized: false })
}

/// Raw colored Jones: the trace on `V^N`, i.e. `s = q^N` with labels `≤ N`.
/// Exact, since higher labels have vanishing coefficients at `s = q^N`.
pub fn colored_jones_raw(braid: &BraidWord, n: u32) -> Result<UnivariateLaurent> {
    braid.check_knot()?;
    Ok(partial_trace_in(braid, 1, n, CoeffMode::LabelBounded, &AtWeight(n as i32)))
}

/// `J_N`, normalized by `q^{-N w}` so the unknot gives 1.
pub fn colored_jones(braid: &BraidWord, n: u32) -> Result<UnivariateLaurent> {
    Ok(colored_jones_raw(braid, n)?.shift(&(-(n as i32) * braid.writhe())))
}

/// `ADO_r` from the `r`-part 0 block with pivot `K^{1-r}`, normalized by
/// `s^{(r-1)w}`.
pub fn ado(braid: &BraidWord, r: u32) -> Result<AdoPolynomial> {
    let raw = ado_raw(braid, r)?;
    let value = raw.value.shift(&((r as i32 - 1) * braid.writhe()));
    Ok(AdoPolynomial { value, normalized: true, ..raw })
}

pub fn ado_raw(braid: &BraidWord, r: u32) -> Result<AdoPolynomial> {
    if r == 0 {
        return Err(Error::Parameter("r must be positive".into()));
    }
    braid.check_knot()?;
    let spec = AtRootOfUnity(r);
    let value = partial_trace_in(braid, 1 - r as i32, r - 1, CoeffMode::LabelBounded, &spec);
    Ok(AdoPolynomial { r, value, writhe: braid.writhe(), normalized: false })
}

/// Traces of `(1 ⊗ K) ℛ^{±1}` over the second factor.
pub fn curl_scalars(bound: u32) -> (TruncatedSeries, TruncatedSeries) {
    let curl = |sign: i32| {
        let b = BraidWord::new(2, vec![sign]).expect("valid generator");
        partial_trace(&b, 1, bound, CoeffMode::Truncated).expect("a single crossing closes to a knot")
    };
    (curl(1), curl(-1))
}

/// The homological formulation: the block action written in the multi-arc
/// basis `A''(k) = (-t)^{-m(m-1)/2} q^{-2αnm} q^{αΣ p k_p} A(k)`, with
/// `-t = q^{-2}`, paired against the dual barcode basis by the Kronecker
/// delta, with prefactor `s^{n-1} q^{-2Σk}`.
pub fn homological_form(braid: &BraidWord, bound: u32) -> Result<TruncatedSeries> {
    braid.check_knot()?;
    let n = braid.strands() as i32;
    // A(k) = d(k) A''(k); coordinates in the A'' basis scale by d.
    let d = |k: &[u32]| -> [i32; 2] {
        let m: i32 = k.iter().map(|&x| x as i32).sum();
        let moment: i32 = k.iter().enumerate().map(|(p, &x)| (p as i32 + 1) * x as i32).sum();
        [-m * (m - 1), 2 * n * m - moment]
    };
    let weight = |k: &[u32]| {
        let m: i32 = k.iter().map(|&x| x as i32).sum();
        BivariateLaurent::mono(-2 * m, n - 1, 1)
    };
    let ts = TraceSpec { spec: &Generic, state_bound: Some(bound), label_bound: None, twist: Some(&d), weight: &weight };
    let value = diagonal_sum(braid, &ts);
    Ok(TruncatedSeries { value, state_bound: bound, writhe: braid.writhe(), strands: braid.strands(), normalized: false })
}

/// Alexander polynomial from `det(I - ψ')`, `ψ'` the Burau matrix with its
/// first row and column removed; `det = s^{n-1+w} A(s²)`. Returned in `t`,
/// symmetric with `A(1) = 1`.
pub fn alexander(braid: &BraidWord) -> Result<UnivariateLaurent> {
    braid.check_knot()?;
    let det = burau_minor_det(braid);
    if det.is_zero() {
        return Err(Error::DegenerateDeterminant);
    }
    let shift = braid.strands() as i32 - 1 + braid.writhe();
    symmetric_alexander(&det.shift(&-shift))
}

/// `det(I - ψ'(β))` over `ℤ[s^±]`.
pub fn burau_minor_det(braid: &BraidWord) -> UnivariateLaurent {
    let psi = sym_burau(braid);
    let k = braid.strands() - 1;
    let reduced = Matrix::from_fn(k, k, |i, j| psi[(i + 1, j + 1)].clone());
    Matrix::identity(k).sub(&reduced).det()
}

/// Rewrite a polynomial in `s²` as one in `t`, then fix the unit: symmetric
/// exponents and value 1 at `t = 1`.
pub(crate) fn symmetric_alexander(p: &UnivariateLaurent) -> Result<UnivariateLaurent> {
    if p.terms().any(|(e, _)| e % 2 != 0) {
        return Err(Error::DegenerateDeterminant);
    }
    let in_t = p.map_terms(|&e, c| (e / 2, c.clone()));
    let (lo, hi) = (*in_t.min_exp().ok_or(Error::DegenerateDeterminant)?, *in_t.max_exp().expect("nonzero"));
    if (lo + hi) % 2 != 0 {
        return Err(Error::DegenerateDeterminant);
    }
    let centred = in_t.shift(&(-(lo + hi) / 2));
    let at_one: BigInt = centred.terms().map(|(_, c)| c.clone()).sum();
    if !at_one.abs().is_one() {
        return Err(Error::DegenerateDeterminant);
    }
    Ok(if at_one.is_negative() { -centred } else { centred })
}

