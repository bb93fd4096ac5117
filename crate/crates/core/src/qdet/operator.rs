use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::multi::{MultiExp, MultiLaurent, Var};
use crate::UnivariateLaurent;

/// Primitive operators on `MultiLaurent`, for crossing `j` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prim {
    /// `v̂^pow`: multiply by `v_j^pow`.
    Hat { var: Var, j: usize, pow: i32 },
    /// `τ_v^pow`: `v_j ↦ q^pow v_j`.
    Tau { var: Var, j: usize, pow: i32 },
    /// Bookkeeping: counts one application of `a_j`. Acts as the identity
    /// on the polynomial itself.
    MarkA { j: usize },
}

impl Prim {
    fn act(&self, e: &MultiExp) -> MultiExp {
        match *self {
            Prim::Hat { var, j, pow } => e.shift_var(var, j, pow),
            Prim::Tau { var, j, pow } => e.shift_q(pow * e.var(var, j)),
            Prim::MarkA { j } => e.bump_a(j),
        }
    }

    fn top_slot(&self) -> usize {
        match *self {
            Prim::Hat { var, j, .. } | Prim::Tau { var, j, .. } => MultiExp::slot(var, j),
            Prim::MarkA { j } => MultiExp::counter_slot(j),
        }
    }

    /// [`Prim::act`] on an untrimmed exponent buffer that is long enough.
    fn act_raw(&self, v: &mut [i32]) {
        match *self {
            Prim::Hat { var, j, pow } => v[MultiExp::slot(var, j)] += pow,
            Prim::Tau { var, j, pow } => v[0] += pow * v[MultiExp::slot(var, j)],
            Prim::MarkA { j } => v[MultiExp::counter_slot(j)] += 1,
        }
    }
}

impl fmt::Display for Prim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pw = |f: &mut fmt::Formatter<'_>, p: i32| if p == 1 { Ok(()) } else { write!(f, "^{p}") };
        match *self {
            Prim::Hat { var, j, pow } => {
                write!(f, "{}{}", var.name(), j + 1)?;
                pw(f, pow)
            }
            Prim::Tau { var, j, pow } => {
                write!(f, "τ{}{}", var.name(), j + 1)?;
                pw(f, pow)
            }
            Prim::MarkA { j } => write!(f, "[a{}]", j + 1),
        }
    }
}

/// A composite of primitives, written left to right and applied right to left.
pub type Word = Vec<Prim>;

/// Formal sum `Σ c_w(q) · w` of words with coefficients in `ℤ[q^±]`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct OperatorExpression {
    terms: BTreeMap<Word, UnivariateLaurent>,
}

impl OperatorExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(UnivariateLaurent::one(), w)
    }

    pub fn term(c: UnivariateLaurent, w: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn prim(p: Prim) -> Self {
        Self::word(vec![p])
    }

    pub fn hat(var: Var, j: usize, pow: i32) -> Self {
        Self::prim(Prim::Hat { var, j, pow })
    }

    pub fn tau(var: Var, j: usize, pow: i32) -> Self {
        Self::prim(Prim::Tau { var, j, pow })
    }

    fn add_term(&mut self, w: Word, c: &UnivariateLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(UnivariateLaurent::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &UnivariateLaurent)> {
        self.terms.iter()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, &(c1 * c2));
            }
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-UnivariateLaurent::one()))
    }

    pub fn scale(&self, c: &UnivariateLaurent) -> Self {
        let mut out = Self::zero();
        for (w, c0) in &self.terms {
            out.add_term(w.clone(), &(c0 * c));
        }
        out
    }

    /// Multiply by `±q^e`.
    pub fn scale_q(&self, sign: i32, e: i32) -> Self {
        self.scale(&UnivariateLaurent::monomial(e, sign.into()))
    }
}

/// Apply a word to a single monomial. Every primitive maps monomials to
/// monomials, so the image is again one monomial.
pub fn apply_word(w: &[Prim], e: &MultiExp) -> MultiExp {
    w.iter().rev().fold(e.clone(), |acc, p| p.act(&acc))
}

/// `op(p)`, linear in both arguments.
pub fn apply(op: &OperatorExpression, p: &MultiLaurent) -> MultiLaurent {
    apply_bounded(op, p, None)
}

/// [`apply`], dropping terms on which some crossing has seen more than
/// `bound` `a` operators.
pub fn apply_bounded(op: &OperatorExpression, p: &MultiLaurent, bound: Option<u32>) -> MultiLaurent {
    let words: Vec<(&Word, usize, Vec<(i32, &BigInt)>)> = op
        .terms()
        .map(|(w, c)| {
            let top = w.iter().map(Prim::top_slot).max().unwrap_or(0);
            (w, top, c.terms().map(|(&e, k)| (e, k)).collect())
        })
        .collect();
    let terms: Vec<(&MultiExp, &BigInt)> = p.terms().collect();
    let over = |v: &[i32]| {
        bound.is_some_and(|b| v.iter().skip(MultiExp::counter_slot(0)).step_by(4).any(|&n| n > b as i32))
    };
    let acc = terms
        .par_chunks(64)
        .fold(HashMap::<MultiExp, BigInt>::new, |mut acc, chunk| {
            let mut buf = Vec::new();
            for &(e, k) in chunk {
                for (w, top, coeffs) in &words {
                    buf.clear();
                    buf.extend_from_slice(e.raw());
                    if buf.len() <= *top {
                        buf.resize(top + 1, 0);
                    }
                    for prim in w.iter().rev() {
                        prim.act_raw(&mut buf);
                    }
                    if over(&buf) {
                        continue;
                    }
                    let q0 = buf[0];
                    for &(qe, c) in coeffs {
                        buf[0] = q0 + qe;
                        let slot = acc.entry(MultiExp::new(buf.clone())).or_insert_with(BigInt::zero);
                        *slot += c * k;
                    }
                    buf[0] = q0;
                }
            }
            acc
        })
        .reduce(HashMap::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            for (e, c) in small {
                *big.entry(e).or_insert_with(BigInt::zero) += c;
            }
            big
        });
    MultiLaurent::from_terms(acc)
}

impl fmt::Display for OperatorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word = if w.is_empty() { "1".to_string() } else { w.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" · ") };
            if c.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "({}) {word}", c.render("q"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
