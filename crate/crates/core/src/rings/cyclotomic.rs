//! Exact arithmetic in `ℤ[x]/Φ_n(x)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use super::scalar::Scalar;

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1 = ∏_{d | n} Φ_d
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        p = div_monic(&p, &cyclotomic_poly(d));
    }
    let p = Arc::new(p);
    cache.write().insert(n, p.clone());
    p
}

fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic factor division left a remainder");
    quot
}

/// Residue class in `ℤ[x]/Φ_order(x)`; `x` plays the role of a primitive
/// `order`-th root of unity.
///
/// `order == 0` marks a bare integer that has not met a root yet; it adopts
/// the order of whatever it is combined with. This is what lets `zero()` and
/// `one()` exist without context.
#[derive(Clone)]
pub struct CyclotomicScalar {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicScalar {
    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::reduced(0, vec![v.into()])
    }

    /// `x^e` in `ℤ[x]/Φ_order`.
    pub fn root_pow(order: u32, e: i64) -> Self {
        let k = e.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self::reduced(order, coeffs)
    }

    pub fn root(order: u32) -> Self {
        Self::root_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Reduced coefficient vector, constant term first, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Numerical value with `x = exp(2πi/order)`, as `(re, im)`.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let n = self.order.max(1) as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
            let th = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += c * th.cos();
            im += c * th.sin();
        }
        (re, im)
    }

    fn reduced(order: u32, mut coeffs: Vec<BigInt>) -> Self {
        if order > 0 {
            let phi = cyclotomic_poly(order);
            let deg = phi.len() - 1;
            for i in (deg..coeffs.len()).rev() {
                let c = std::mem::take(&mut coeffs[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, pj) in phi.iter().enumerate().take(deg) {
                    coeffs[i - deg + j] -= &c * pj;
                }
            }
            coeffs.truncate(deg.min(coeffs.len()));
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { order, coeffs }
    }

    fn joint_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (0, o) | (o, 0) => o,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing cyclotomic orders {a} and {b}"),
        }
    }
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        let compatible = self.order == other.order || self.order == 0 || other.order == 0;
        compatible && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicScalar {}

impl Zero for CyclotomicScalar {
    fn zero() -> Self {
        Self { order: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CyclotomicScalar {
    fn one() -> Self {
        Self { order: 0, coeffs: vec![BigInt::one()] }
    }
}

impl Add for CyclotomicScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let order = self.joint_order(&rhs);
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Self::reduced(order, long)
    }
}

impl Neg for CyclotomicScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for CyclotomicScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for CyclotomicScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Scalar for CyclotomicScalar {
    fn mul_ref(&self, other: &Self) -> Self {
        let order = self.joint_order(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::reduced(order, out)
    }

    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            super::univariate::push_term(&mut out, first, c, &[("z", k as i32)]);
            first = false;
        }
        f.write_str(&out)
    }
}

