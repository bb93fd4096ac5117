use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::Laurent;
use crate::{BivariateLaurent, UnivariateLaurent};

/// Laurent polynomial in `s` whose coefficients are Laurent polynomials in `q`.
pub type SMajor = Laurent<i32, UnivariateLaurent>;

impl BivariateLaurent {
    pub fn q_pow(e: i32) -> Self {
        Self::monomial([e, 0], BigInt::one())
    }

    pub fn s_pow(e: i32) -> Self {
        Self::monomial([0, e], BigInt::one())
    }

    /// `c · q^eq · s^es`
    pub fn mono(eq: i32, es: i32, c: i64) -> Self {
        Self::monomial([eq, es], BigInt::from(c))
    }

    /// Embed a polynomial in `q` alone.
    pub fn from_q(p: &UnivariateLaurent) -> Self {
        p.map_terms(|&e, c| ([e, 0], c.clone()))
    }

    /// The involution `q ↦ q⁻¹, s ↦ s⁻¹`.
    pub fn bar(&self) -> Self {
        self.map_terms(|e, c| ([-e[0], -e[1]], c.clone()))
    }

    pub fn s_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms().map(|(e, _)| e[1]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    pub fn to_s_major(&self) -> SMajor {
        let mut out = SMajor::zero();
        for (e, c) in self.terms() {
            out.add_term(e[1], &UnivariateLaurent::monomial(e[0], c.clone()));
        }
        out
    }

    pub fn from_s_major(p: &SMajor) -> Self {
        let mut out = Self::zero();
        for (&es, cq) in p.terms() {
            for (&eq, c) in cq.terms() {
                out.add_term([eq, es], c);
            }
        }
        out
    }

    /// Exact quotient in `ℤ[q^±, s^±]`, by long division in `s` over `ℤ[q^±]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let quot = self.to_s_major().div_exact(&divisor.to_s_major())?;
        Some(Self::from_s_major(&quot))
    }
}
