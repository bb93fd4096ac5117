//! Ring homomorphisms out of `ℤ[q^±, s^±]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::cyclotomic::CyclotomicScalar;
use super::scalar::Scalar;
use crate::{BivariateLaurent, CyclotomicLaurent, UnivariateLaurent};

/// A ring homomorphism applied coefficient-wise before matrix products.
pub trait Specialization: Sync {
    type Target: Scalar;
    fn apply(&self, p: &BivariateLaurent) -> Self::Target;
}

/// The identity on `ℤ[q^±, s^±]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Generic;

/// The involution `q ↦ q⁻¹, s ↦ s⁻¹`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bar;

/// `s ↦ q^N`.
#[derive(Clone, Copy, Debug)]
pub struct AtWeight(pub i32);

/// `q ↦ ζ_{2r}`, `s` formal.
#[derive(Clone, Copy, Debug)]
pub struct AtRootOfUnity(pub u32);

/// `q ↦ 1`, result is a Laurent polynomial in `s`.
#[derive(Clone, Copy, Debug, Default)]
pub struct AtQOne;

impl Specialization for Generic {
    type Target = BivariateLaurent;
    fn apply(&self, p: &BivariateLaurent) -> BivariateLaurent {
        p.clone()
    }
}

impl Specialization for Bar {
    type Target = BivariateLaurent;
    fn apply(&self, p: &BivariateLaurent) -> BivariateLaurent {
        p.bar()
    }
}

impl Specialization for AtWeight {
    type Target = UnivariateLaurent;
    fn apply(&self, p: &BivariateLaurent) -> UnivariateLaurent {
        specialize_s(p, self.0)
    }
}

impl Specialization for AtRootOfUnity {
    type Target = CyclotomicLaurent;
    fn apply(&self, p: &BivariateLaurent) -> CyclotomicLaurent {
        specialize_q_root(p, self.0)
    }
}

impl Specialization for AtQOne {
    type Target = UnivariateLaurent;
    fn apply(&self, p: &BivariateLaurent) -> UnivariateLaurent {
        specialize_q_one(p)
    }
}

pub fn specialize_s(p: &BivariateLaurent, n: i32) -> UnivariateLaurent {
    p.map_terms(|e, c| (e[0] + n * e[1], c.clone()))
}

pub fn specialize_q_one(p: &BivariateLaurent) -> UnivariateLaurent {
    p.map_terms(|e, c| (e[1], c.clone()))
}

pub fn specialize_q_root(p: &BivariateLaurent, r: u32) -> CyclotomicLaurent {
    assert!(r >= 1, "root of unity order must be positive");
    let order = 2 * r;
    p.map_terms(|e, c| (e[1], CyclotomicScalar::root_pow(order, e[0] as i64).mul_ref(&CyclotomicScalar::from_int(c.clone()))))
}

/// Evaluate a polynomial in `q` at `q = ζ_order`.
pub fn univariate_at_root(p: &UnivariateLaurent, order: u32) -> CyclotomicScalar {
    p.evaluate(|&e| CyclotomicScalar::root_pow(order, e as i64), |c| CyclotomicScalar::from_int(c.clone()))
}

impl CyclotomicLaurent {
    /// Evaluate at `s = ζ_order^n`.
    pub fn at_root_power(&self, order: u32, n: i64) -> CyclotomicScalar {
        self.evaluate(|&e| CyclotomicScalar::root_pow(order, n * e as i64), Clone::clone)
    }

    /// `s ↦ s^r`
    pub fn frobenius(&self, r: i32) -> Self {
        self.map_terms(|&e, c| (e * r, c.clone()))
    }

    /// `s ↦ s^{-1} ζ_order^k`
    pub fn reflect(&self, order: u32, k: i64) -> Self {
        self.map_terms(|&e, c| (-e, c.mul_ref(&CyclotomicScalar::root_pow(order, k * e as i64))))
    }

    /// Lift a polynomial with integer coefficients.
    pub fn from_integer(p: &UnivariateLaurent) -> Self {
        p.map_terms(|&e, c| (e, CyclotomicScalar::from_int(c.clone())))
    }
}

impl UnivariateLaurent {
    /// Multiply by an integer.
    pub fn times(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        self.scale(&BigInt::from(k))
    }
}
