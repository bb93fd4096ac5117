use num_traits::Zero;

use crate::UnivariateLaurent;

/// Does `base^k` divide `p` in the Laurent ring?
pub fn divisible_by_power(p: &UnivariateLaurent, base: &UnivariateLaurent, k: u32) -> bool {
    assert!(!base.is_zero(), "divisor must be nonzero");
    let mut cur = p.clone();
    for _ in 0..k {
        if cur.is_zero() {
            return true;
        }
        match cur.div_exact(base) {
            Some(q) => cur = q,
            None => return false,
        }
    }
    true
}

/// Largest `k` with `base^k | p` (capped at `cap`; zero is divisible by all).
pub fn divisibility_order(p: &UnivariateLaurent, base: &UnivariateLaurent, cap: u32) -> u32 {
    let mut cur = p.clone();
    for k in 0..cap {
        if cur.is_zero() {
            return cap;
        }
        match cur.div_exact(base) {
            Some(q) => cur = q,
            None => return k,
        }
    }
    cap
}
