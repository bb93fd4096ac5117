use std::ops::Index;

use super::multi::{MultiExp, MultiLaurent, Var};
use super::operator::{apply, OperatorExpression, Prim};
use num_traits::Zero;
use crate::verma::BraidWord;

/// Square matrix of operator expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    size: usize,
    entries: Vec<OperatorExpression>,
}

impl OperatorMatrix {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> OperatorExpression) -> Self {
        let entries = (0..size * size).map(|k| f(k / size, k % size)).collect();
        Self { size, entries }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |r, c| if r == c { OperatorExpression::one() } else { OperatorExpression::zero() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(self.size, |r, c| {
            (0..self.size).fold(OperatorExpression::zero(), |acc, t| acc.plus(&self[(r, t)].compose(&other[(t, c)])))
        })
    }

    /// Rows and columns `keep`, in that order.
    pub fn submatrix(&self, keep: &[usize]) -> Self {
        Self::from_fn(keep.len(), |r, c| self[(keep[r], keep[c])].clone())
    }

    /// Every entry multiplied by `q^e`.
    pub fn scale_q(&self, e: i32) -> Self {
        Self::from_fn(self.size, |r, c| self[(r, c)].scale_q(1, e))
    }
}

impl Index<(usize, usize)> for OperatorMatrix {
    type Output = OperatorExpression;

    fn index(&self, (r, c): (usize, usize)) -> &OperatorExpression {
        &self.entries[r * self.size + c]
    }
}

/// `(a_±, b_±, c_±)` for crossing `j`. Each word of `a` carries a mark so
/// that the truncation can count it.
pub fn crossing_operators(j: usize, sign: i32) -> [OperatorExpression; 3] {
    use OperatorExpression as O;
    let mark = O::prim(Prim::MarkA { j });
    let (a, c) = if sign > 0 {
        let a = O::hat(Var::U, j, 1).minus(&O::hat(Var::Y, j, 1).compose(&O::tau(Var::X, j, -1))).compose(&O::tau(Var::Y, j, -1));
        let c = O::hat(Var::X, j, 1).compose(&O::tau(Var::Y, j, -2)).compose(&O::tau(Var::U, j, -1));
        (a, c)
    } else {
        let a = O::tau(Var::Y, j, 1)
            .minus(&O::hat(Var::X, j, -1))
            .compose(&O::tau(Var::X, j, -1))
            .compose(&O::tau(Var::U, j, 1));
        let c = O::hat(Var::Y, j, -1).compose(&O::tau(Var::X, j, -1)).compose(&O::tau(Var::U, j, 1));
        (a, c)
    };
    [mark.compose(&a), O::hat(Var::U, j, 2), c]
}

/// `ρ(β) = A_1 ⋯ A_k`, `A_j` the identity except for the block
/// `S_+ = [[a, b], [c, 0]]` or `S_- = [[0, c], [b, a]]` at the letter's
/// position, crossing `j` labelling letter `j`.
pub fn deformed_burau(braid: &BraidWord) -> OperatorMatrix {
    let n = braid.strands();
    let mut rho = OperatorMatrix::identity(n);
    for (j, &l) in braid.letters().iter().enumerate() {
        let p = l.unsigned_abs() as usize - 1;
        let [a, b, c] = crossing_operators(j, l.signum());
        let block = if l > 0 { [a, b, c, OperatorExpression::zero()] } else { [OperatorExpression::zero(), c, b, a] };
        let gen = OperatorMatrix::from_fn(n, |r, col| {
            if (p..=p + 1).contains(&r) && (p..=p + 1).contains(&col) {
                block[2 * (r - p) + (col - p)].clone()
            } else if r == col {
                OperatorExpression::one()
            } else {
                OperatorExpression::zero()
            }
        });
        rho = rho.mul(&gen);
    }
    rho
}

/// `ρ′`: drop the first row and column.
pub fn reduced(m: &OperatorMatrix) -> OperatorMatrix {
    let keep: Vec<usize> = (1..m.size()).collect();
    m.submatrix(&keep)
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for k in 0..=p.len() {
            let mut v = p.clone();
            v.insert(k, m - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

/// `det_q M = Σ_π (-q)^{inv π} M_{π1,1} ⋯ M_{πm,m}`, the product kept in
/// column order.
pub fn qdet(m: &OperatorMatrix) -> OperatorExpression {
    let mut total = OperatorExpression::zero();
    for p in permutations(m.size()) {
        let term = (0..m.size()).fold(OperatorExpression::one(), |acc, col| acc.compose(&m[(p[col], col)]));
        let inv = inversions(&p) as i32;
        total = total.plus(&term.scale_q(if inv % 2 == 0 { 1 } else { -1 }, inv));
    }
    total
}

/// `C = Σ_{J ≠ ∅} (-1)^{|J|-1} det_q(M_J)`, over principal submatrices.
pub fn complement_c(m: &OperatorMatrix) -> OperatorExpression {
    let size = m.size();
    let mut c = OperatorExpression::zero();
    for mask in 1u32..(1 << size) {
        let keep: Vec<usize> = (0..size).filter(|&i| mask >> i & 1 == 1).collect();
        let d = qdet(&m.submatrix(&keep));
        c = if keep.len() % 2 == 1 { c.plus(&d) } else { c.minus(&d) };
    }
    c
}

/// `1 - C`, the quantum determinant of `Id - M` for right-quantum `M`.
pub fn one_minus_c(m: &OperatorMatrix) -> OperatorExpression {
    OperatorExpression::one().minus(&complement_c(m))
}

/// Every exponent vector with entries in `-deg..=deg` on the `x, y, u`
/// slots of crossings `0..k` and total absolute degree `≤ deg`.
fn test_monomials(k: usize, deg: i32) -> Vec<MultiLaurent> {
    let slots = 3 * k;
    let mut out = vec![vec![0i32; slots]];
    for s in 0..slots {
        let mut next = Vec::new();
        for v in &out {
            let used: i32 = v.iter().map(|x| x.abs()).sum();
            for e in -(deg - used)..=(deg - used) {
                let mut w = v.clone();
                w[s] = e;
                next.push(w);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|v| {
            let mut raw = vec![0];
            for j in 0..k {
                raw.extend_from_slice(&v[3 * j..3 * j + 3]);
                raw.push(0);
            }
            MultiLaurent::monomial(MultiExp::new(raw), 1.into())
        })
        .collect()
}

/// Check the right-quantum relations on every 2×2 submatrix
/// `[[a, b], [c, d]]` (rows `i < i'`, columns `j < j'`):
/// `ac = q·ca`, `bd = q·db`, `ad = da + q·cb - q⁻¹·bc`, as applied
/// operators on all monomials of total degree `≤ deg`.
pub fn right_quantum_check(m: &OperatorMatrix, crossings: usize, deg: i32) -> bool {
    let q = |e: i32| OperatorExpression::one().scale_q(1, e);
    let mut rels = Vec::new();
    for i in 0..m.size() {
        for i2 in i + 1..m.size() {
            for j in 0..m.size() {
                for j2 in j + 1..m.size() {
                    let (a, b, c, d) = (&m[(i, j)], &m[(i, j2)], &m[(i2, j)], &m[(i2, j2)]);
                    rels.push(a.compose(c).minus(&q(1).compose(&c.compose(a))));
                    rels.push(b.compose(d).minus(&q(1).compose(&d.compose(b))));
                    let rhs = d.compose(a).plus(&q(1).compose(&c.compose(b))).minus(&q(-1).compose(&b.compose(c)));
                    rels.push(a.compose(d).minus(&rhs));
                }
            }
        }
    }
    let monos = test_monomials(crossings, deg);
    rels.iter().all(|r| monos.iter().all(|p| apply(r, p).is_zero()))
}

