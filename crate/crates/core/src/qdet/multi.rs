use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::rings::{Exponent, Laurent};
use crate::BivariateLaurent;

/// The three variables attached to each crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    U,
}

impl Var {
    fn offset(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::U => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::U => "u",
        }
    }
}

/// Slots per crossing: `x, y, u` and a counter of applied `a` operators,
/// which the evaluation ignores but the truncation reads.
const SLOTS: usize = 4;

/// Monomial `q^e · ∏_j x_j^· y_j^· u_j^·`. Slot 0 is the power of `q`,
/// crossing `j` (0-based) owns slots `1 + 4j ..= 4 + 4j`. Trailing zeros
/// are trimmed so each monomial has a single representation.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiExp(Vec<i32>);

impl MultiExp {
    pub fn new(mut raw: Vec<i32>) -> Self {
        while raw.last() == Some(&0) {
            raw.pop();
        }
        MultiExp(raw)
    }

    fn get(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn with(&self, i: usize, delta: i32) -> Self {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        v[i] += delta;
        Self::new(v)
    }

    pub fn q(&self) -> i32 {
        self.get(0)
    }

    pub fn var(&self, v: Var, j: usize) -> i32 {
        self.get(1 + SLOTS * j + v.offset())
    }

    /// How many `a` operators of crossing `j` produced this monomial.
    pub fn a_count(&self, j: usize) -> i32 {
        self.get(SLOTS * j + SLOTS)
    }

    pub fn crossings(&self) -> usize {
        self.0.len().saturating_sub(1).div_ceil(SLOTS)
    }

    pub(crate) fn raw(&self) -> &[i32] {
        &self.0
    }

    pub(crate) fn slot(v: Var, j: usize) -> usize {
        1 + SLOTS * j + v.offset()
    }

    pub(crate) fn counter_slot(j: usize) -> usize {
        SLOTS * j + SLOTS
    }

    pub(crate) fn shift_q(&self, d: i32) -> Self {
        self.with(0, d)
    }

    pub(crate) fn shift_var(&self, v: Var, j: usize, d: i32) -> Self {
        self.with(1 + SLOTS * j + v.offset(), d)
    }

    pub(crate) fn bump_a(&self, j: usize) -> Self {
        self.with(SLOTS * j + SLOTS, 1)
    }
}

impl fmt::Debug for MultiExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Exponent for MultiExp {
    fn origin() -> Self {
        MultiExp(Vec::new())
    }

    fn plus(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (o, e) in v.iter_mut().zip(&short.0) {
            *o += e;
        }
        Self::new(v)
    }

    fn negated(&self) -> Self {
        MultiExp(self.0.iter().map(|e| -e).collect())
    }
}

/// Laurent polynomials in `q` and the crossing variables `x_j, y_j, u_j`.
pub type MultiLaurent = Laurent<MultiExp, BigInt>;

impl MultiLaurent {
    pub fn variable(v: Var, j: usize) -> Self {
        Self::monomial(MultiExp::origin().shift_var(v, j, 1), BigInt::one())
    }

    pub fn q_power(e: i32) -> Self {
        Self::monomial(MultiExp::origin().shift_q(e), BigInt::one())
    }

    /// Largest per-crossing `a` count over the terms.
    pub fn max_a_count(&self) -> i32 {
        self.terms()
            .map(|(e, _)| (0..e.crossings()).map(|j| e.a_count(j)).max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Drop the terms where some crossing has seen more than `bound` `a`s.
    pub fn truncate_a(&self, bound: u32) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(e, _)| (0..e.crossings()).all(|j| e.a_count(j) <= bound as i32))
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }
}

/// `ℰ`: `u_j ↦ 1`, `x_j, y_j ↦ s`.
pub fn evaluate_e(p: &MultiLaurent) -> BivariateLaurent {
    p.map_terms(|e, c| {
        let s: i32 = (0..e.crossings()).map(|j| e.var(Var::X, j) + e.var(Var::Y, j)).sum();
        ([e.q(), s], c.clone())
    })
}
