//! Quantum integers, factorials, binomials and the `{α - a; n}` products.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::{BivariateLaurent, UnivariateLaurent};

type Memo = RwLock<HashMap<(i32, i32), BivariateLaurent>>;

fn memo(cell: &'static OnceLock<Memo>, key: (i32, i32), build: impl FnOnce() -> BivariateLaurent) -> BivariateLaurent {
    let map = cell.get_or_init(Default::default);
    if let Some(v) = map.read().get(&key) {
        return v.clone();
    }
    let v = build();
    map.write().insert(key, v.clone());
    v
}

fn q_int_univ(i: i32) -> UnivariateLaurent {
    if i == 0 {
        return UnivariateLaurent::zero();
    }
    let n = i.abs();
    let sign = if i < 0 { -BigInt::one() } else { BigInt::one() };
    UnivariateLaurent::from_terms((0..n).map(|k| (n - 1 - 2 * k, sign.clone())))
}

fn q_factorial_univ(k: u32) -> UnivariateLaurent {
    (1..=k as i32).fold(UnivariateLaurent::one(), |acc, i| &acc * &q_int_univ(i))
}

/// `[i]_q = (q^i - q^{-i}) / (q - q^{-1})`
pub fn q_int(i: i32) -> BivariateLaurent {
    BivariateLaurent::from_q(&q_int_univ(i))
}

pub fn q_factorial(k: u32) -> BivariateLaurent {
    BivariateLaurent::from_q(&q_factorial_univ(k))
}

/// Gaussian binomial; zero when `n < 0` or `k > n`.
pub fn q_binom(n: i32, k: u32) -> BivariateLaurent {
    let k = k as i32;
    if n < 0 || k > n {
        return BivariateLaurent::zero();
    }
    static CACHE: OnceLock<Memo> = OnceLock::new();
    memo(&CACHE, (n, k), || {
        let num = q_factorial_univ(n as u32);
        let den = &q_factorial_univ(k as u32) * &q_factorial_univ((n - k) as u32);
        let quot = num
            .div_exact(&den)
            .unwrap_or_else(|| panic!("inexact division computing q_binom({n}, {k})"));
        BivariateLaurent::from_q(&quot)
    })
}

/// `{n} = q^n - q^{-n}`
pub fn brace(n: i32) -> BivariateLaurent {
    &BivariateLaurent::q_pow(n) - &BivariateLaurent::q_pow(-n)
}

/// `{α + l} = s q^l - s^{-1} q^{-l}`
pub fn brace_alpha_shift(l: i32) -> BivariateLaurent {
    &BivariateLaurent::mono(l, 1, 1) - &BivariateLaurent::mono(-l, -1, 1)
}

/// `{α - a; n} = ∏_{i<n} {α - a - i}`
pub fn brace_alpha_falling(a: i32, n: u32) -> BivariateLaurent {
    static CACHE: OnceLock<Memo> = OnceLock::new();
    memo(&CACHE, (a, n as i32), || {
        (0..n as i32).fold(BivariateLaurent::one(), |acc, i| &acc * &brace_alpha_shift(-a - i))
    })
}

/// `{α + l; n} = ∏_{i<n} {α + l - i}`, the generators of the ideal `I_n`.
pub fn ideal_generator(l: i32, n: u32) -> BivariateLaurent {
    brace_alpha_falling(-l, n)
}
