//! The `q = 1` picture: the `m = 1` block is the unreduced Burau matrix and
//! the `m`-th block is its symmetric power.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::braid::BraidWord;
use super::composition::compositions;
use super::dense::Matrix;
use crate::rings::Scalar;
use crate::UnivariateLaurent;

fn s_pow(e: i32) -> UnivariateLaurent {
    UnivariateLaurent::var_pow(e)
}

/// `ψ_{n,1}(σ_i^{±1})`: identity except the 2×2 block at `(i, i+1)`, which
/// is `[[1 - s⁻², s⁻¹], [s⁻¹, 0]]` or its inverse `[[0, s], [s, 1 - s²]]`.
pub fn burau_generator(n: usize, letter: i32) -> Matrix<UnivariateLaurent> {
    let i = letter.unsigned_abs() as usize - 1;
    let mut m = Matrix::identity(n);
    let one = UnivariateLaurent::one();
    let block = if letter > 0 {
        [[&one - &s_pow(-2), s_pow(-1)], [s_pow(-1), UnivariateLaurent::zero()]]
    } else {
        [[UnivariateLaurent::zero(), s_pow(1)], [s_pow(1), &one - &s_pow(2)]]
    };
    for (r, row) in block.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m[(i + r, i + c)] = v;
        }
    }
    m
}

/// `ψ_{n,1}(β)` over `ℤ[s^±]`, in the basis `e_k` (label 1 at position `k`).
pub fn sym_burau(braid: &BraidWord) -> Matrix<UnivariateLaurent> {
    let n = braid.strands();
    braid.letters().iter().fold(Matrix::identity(n), |acc, &l| acc.mul(&burau_generator(n, l)))
}

/// `Sym^m(M)` in the monomial basis `e^k`, `k` running over compositions of
/// `m` in lexicographic order.
pub fn sym_power<R: Scalar>(mat: &Matrix<R>, m: u32) -> Matrix<R> {
    let n = mat.rows();
    let basis = compositions(n, m);
    let index: HashMap<&[u32], usize> = basis.iter().enumerate().map(|(i, k)| (k.as_slice(), i)).collect();
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (col, k) in basis.iter().enumerate() {
        // expand ∏_j (Σ_i M[i][j] e_i)^{k_j}
        let mut poly: HashMap<Vec<u32>, R> = HashMap::from([(vec![0; n], R::one())]);
        for (j, &kj) in k.iter().enumerate() {
            for _ in 0..kj {
                let mut next: HashMap<Vec<u32>, R> = HashMap::new();
                for (mono, c) in &poly {
                    for i in 0..n {
                        let a = &mat[(i, j)];
                        if a.is_zero() {
                            continue;
                        }
                        let mut e = mono.clone();
                        e[i] += 1;
                        next.entry(e).or_insert_with(R::zero).add_assign_ref(&c.mul_ref(a));
                    }
                }
                poly = next;
            }
        }
        for (mono, c) in poly {
            if !c.is_zero() {
                out[(index[mono.as_slice()], col)] = c;
            }
        }
    }
    out
}

/// `∏ k_p!`, the scale relating the monomial basis `u_k` of `Sym^m` to the
/// tensor basis `w_k`: `u_k = (∏ k_p!) w_k`.
pub fn sym_rescale(k: &[u32]) -> BigInt {
    k.iter().map(|&x| (1..=x).map(BigInt::from).product::<BigInt>()).product()
}

/// `Sym^m(ψ_{n,1}(β))` rewritten in the tensor basis, i.e. conjugated by the
/// factorial rescale. Equals the `q = 1` block `ψ_{n,m}(β)`.
pub fn sym_power_tensor_basis(burau: &Matrix<UnivariateLaurent>, m: u32) -> Matrix<UnivariateLaurent> {
    let basis = compositions(burau.rows(), m);
    let sym = sym_power(burau, m);
    Matrix::from_fn(basis.len(), basis.len(), |r, c| {
        let num = sym[(r, c)].scale(&sym_rescale(&basis[r]));
        num.div_exact(&UnivariateLaurent::constant(sym_rescale(&basis[c])))
            .expect("rescaled symmetric power has integral entries")
    })
}
