use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::Laurent;
use super::scalar::ExactDiv;

impl<C: ExactDiv> Laurent<i32, C> {
    pub fn var_pow(e: i32) -> Self {
        Self::monomial(e, C::one())
    }

    /// Exact quotient `self / divisor`, or `None` if it does not exist in the
    /// Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (&lo_d, _) = divisor.terms().next()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = divisor.shift(&-lo_d);
        let (&deg_d, lead) = d.terms().next_back()?;
        let floor = *self.min_exp()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        loop {
            let Some((top, c)) = rem.terms().next_back().map(|(&e, c)| (e, c.clone())) else {
                break;
            };
            let t = top - deg_d;
            if t < floor {
                return None;
            }
            let k = c.try_div(lead)?;
            rem.add_scaled_shifted(&d, &-k.clone(), &t);
            quot.add_term(t, &k);
        }
        Some(quot.shift(&-lo_d))
    }
}

impl Laurent<i32, BigInt> {
    /// Render with the given variable name, highest power first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms().rev().enumerate() {
            push_term(&mut out, i == 0, c, &[(var, e)]);
        }
        out
    }
}

impl Laurent<[i32; 2], BigInt> {
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            push_term(&mut out, i == 0, c, &[("q", e[0]), ("s", e[1])]);
        }
        out
    }
}

pub(crate) fn push_term(out: &mut String, first: bool, c: &BigInt, vars: &[(&str, i32)]) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = c.abs();
    let mono: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if mono.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(&mono.join("*"));
    }
}

impl fmt::Display for Laurent<i32, BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl fmt::Display for Laurent<[i32; 2], BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: ExactDiv> ExactDiv for Laurent<i32, C> {
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }
}
