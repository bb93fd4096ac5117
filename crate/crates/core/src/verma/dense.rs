use std::collections::HashMap;


use crate::rings::Scalar;

/// Small dense matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Scalar> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, k| {
            let mut acc = R::zero();
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    acc.add_assign_ref(&a.mul_ref(&rhs[(j, k)]));
                }
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&R) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.rows() == self.cols()
            && (0..self.rows()).all(|i| (0..self.cols()).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    /// Delete row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        Self::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            self[(if i < r { i } else { i + 1 }, if j < c { j } else { j + 1 })].clone()
        })
    }

    /// Determinant by Laplace expansion over column subsets (memoized), which
    /// needs no division and is plenty for the sizes used here.
    pub fn det(&self) -> R {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        // minors of the bottom rows, keyed by the used column mask
        let mut memo: HashMap<u32, R> = HashMap::new();
        memo.insert(0, R::one());
        for row in (0..n).rev() {
            let depth = n - row;
            let mut next = HashMap::new();
            for mask in (0u32..1 << n).filter(|m| m.count_ones() as usize == depth) {
                let mut acc = R::zero();
                let mut sign_pos = 0;
                for c in 0..n {
                    if mask & (1 << c) == 0 {
                        continue;
                    }
                    let rest = mask & !(1 << c);
                    let term = self[(row, c)].mul_ref(&memo[&rest]);
                    if !term.is_zero() {
                        if sign_pos % 2 == 0 {
                            acc.add_assign_ref(&term);
                        } else {
                            acc.sub_assign_ref(&term);
                        }
                    }
                    sign_pos += 1;
                }
                next.insert(mask, acc);
            }
            memo = next;
        }
        memo.remove(&((1u32 << n) - 1)).unwrap_or_else(R::zero)
    }
}

impl<R: Scalar> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (r, c): (usize, usize)) -> &R {
        &self.data[r * self.cols + c]
    }
}

impl<R: Scalar> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut R {
        &mut self.data[r * self.cols + c]
    }
}
