use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use super::braid::BraidWord;
use super::composition::Basis;
use super::rmatrix::{crossing_coeff, place_outputs, split_inputs};
use crate::rings::{Generic, Scalar, Specialization};
use crate::BivariateLaurent;

/// Sparse matrix on a finite tensor basis (`rows = outputs`, `cols = inputs`).
/// For sub-weight blocks the basis is the compositions of `m` into `n` parts.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightBlockMatrix<R: Scalar> {
    n: usize,
    m: u32,
    basis: Arc<Basis>,
    entries: BTreeMap<(usize, usize), R>,
}

impl<R: Scalar> WeightBlockMatrix<R> {
    pub fn zero_on(n: usize, m: u32, basis: Arc<Basis>) -> Self {
        Self { n, m, basis, entries: BTreeMap::new() }
    }

    pub fn identity_on(n: usize, m: u32, basis: Arc<Basis>) -> Self {
        let entries = (0..basis.len()).map(|i| ((i, i), R::one())).collect();
        Self { n, m, basis, entries }
    }

    pub fn identity(n: usize, m: u32) -> Self {
        Self::identity_on(n, m, Basis::compositions(n, m))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> u32 {
        self.m
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> R {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(R::zero)
    }

    /// Entry by basis labels; zero for labels outside the basis.
    pub fn get(&self, row: &[u32], col: &[u32]) -> R {
        match (self.basis.position(row), self.basis.position(col)) {
            (Some(r), Some(c)) => self.entry(r, c),
            _ => R::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &R)> {
        self.entries.iter()
    }

    pub fn add_entry(&mut self, row: usize, col: usize, v: &R) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((row, col)).or_insert_with(R::zero);
        slot.add_assign_ref(v);
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.dim() && self.entries.iter().all(|(&(r, c), v)| r == c && v.is_one())
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&R) -> T) -> WeightBlockMatrix<T> {
        let mut out = WeightBlockMatrix::zero_on(self.n, self.m, self.basis.clone());
        for (&(r, c), v) in &self.entries {
            out.add_entry(r, c, &f(v));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert!(self.basis == rhs.basis, "block bases differ");
        let mut rhs_rows: HashMap<usize, Vec<(usize, &R)>> = HashMap::new();
        for (&(r, c), v) in &rhs.entries {
            rhs_rows.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), R> = BTreeMap::new();
        for (&(i, j), a) in &self.entries {
            let Some(row) = rhs_rows.get(&j) else { continue };
            for &(k, b) in row {
                acc.entry((i, k)).or_insert_with(R::zero).add_assign_ref(&a.mul_ref(b));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self { n: self.n, m: self.m, basis: self.basis.clone(), entries: acc }
    }
}

/// Matrix of `1 ⊗ … ⊗ ℛ^{±1} ⊗ … ⊗ 1` for letter `±i`, restricted to `basis`
/// (outputs leaving the basis are projected away), coefficients pushed
/// through `spec`.
pub fn generator_matrix<S: Specialization>(
    n: usize,
    m: u32,
    basis: &Arc<Basis>,
    letter: i32,
    spec: &S,
) -> WeightBlockMatrix<S::Target> {
    let sign = letter.signum();
    let p = letter.unsigned_abs() as usize - 1;
    let mut out = WeightBlockMatrix::zero_on(n, m, basis.clone());
    for (col, label) in basis.labels().iter().enumerate() {
        let (a, b) = split_inputs(sign, label[p], label[p + 1]);
        for i in 0..=b {
            let (l, r) = place_outputs(sign, a + i, b - i);
            let mut target = label.clone();
            target[p] = l;
            target[p + 1] = r;
            let Some(row) = basis.position(&target) else { continue };
            let c = spec.apply(&crossing_coeff(sign, a, b, i));
            out.add_entry(row, col, &c);
        }
    }
    out
}

/// `φ(β)` on an arbitrary label basis: product of generator matrices in word
/// order, so the last letter acts first.
pub fn braid_matrix_on<S: Specialization>(
    braid: &BraidWord,
    m: u32,
    basis: &Arc<Basis>,
    spec: &S,
) -> WeightBlockMatrix<S::Target> {
    let n = braid.strands();
    braid.letters().iter().fold(WeightBlockMatrix::identity_on(n, m, basis.clone()), |acc, &l| {
        acc.mul(&generator_matrix(n, m, basis, l, spec))
    })
}

/// `φ_{n,m}(β)` after specializing coefficients.
pub fn braid_block_in<S: Specialization>(braid: &BraidWord, m: u32, spec: &S) -> WeightBlockMatrix<S::Target> {
    braid_matrix_on(braid, m, &Basis::compositions(braid.strands(), m), spec)
}

type BlockKey = (usize, Vec<i32>, u32);

/// Process-wide cache of generic blocks. Readers share, one writer inserts.
fn block_cache() -> &'static RwLock<HashMap<BlockKey, Arc<WeightBlockMatrix<BivariateLaurent>>>> {
    static CACHE: OnceLock<RwLock<HashMap<BlockKey, Arc<WeightBlockMatrix<BivariateLaurent>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `φ_{n,m}(β)` over `ℤ[q^±, s^±]`, memoized per `(β, m)`.
pub fn braid_block(braid: &BraidWord, m: u32) -> Arc<WeightBlockMatrix<BivariateLaurent>> {
    let key = (braid.strands(), braid.letters().to_vec(), m);
    if let Some(b) = block_cache().read().get(&key) {
        return b.clone();
    }
    let block = Arc::new(braid_block_in(braid, m, &Generic));
    block_cache().write().entry(key).or_insert(block).clone()
}

pub fn clear_block_cache() {
    block_cache().write().clear();
}
