use crate::{BivariateLaurent, CyclotomicLaurent};

/// A finite partial sum of `F∞`. Every omitted term carries a factor
/// `{α - a; i}` with `i > state_bound`, so `value` is exact modulo
/// `I_{state_bound + 1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    pub value: BivariateLaurent,
    pub state_bound: u32,
    pub writhe: i32,
    pub strands: usize,
    /// `value` has been multiplied by `s^{-w}`.
    pub normalized: bool,
}

impl TruncatedSeries {
    pub fn normalize(mut self) -> Self {
        if !self.normalized {
            self.value = self.value.shift(&[0, -self.writhe]);
            self.normalized = true;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdoPolynomial {
    pub r: u32,
    pub value: CyclotomicLaurent,
    pub writhe: i32,
    /// `value` has been multiplied by `s^{(r-1)w}`.
    pub normalized: bool,
}
