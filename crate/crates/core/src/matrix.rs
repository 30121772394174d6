//! Dense square-or-rectangular matrices over a commutative ring.

use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul};

use num_traits::{One, Zero};

use crate::laurent::Laurent;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Integer matrix (Cartan and action matrices).
pub type IntMatrix = Matrix<i64>;
/// Matrix over `ℤ[v, v⁻¹]`.
pub type LaurentMatrix = Matrix<Laurent>;

impl<T> Matrix<T> {
    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Iterates over rows.
    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    /// Applies `f` to every entry.
    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }
}

impl<T: Clone> Matrix<T> {
    /// The transpose.
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// True when equal to its transpose.
    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }
}

impl<T: Clone + Zero> Matrix<T> {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    /// Square diagonal matrix.
    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { T::zero() })
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    /// The identity.
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Matrix<T> {
    /// Multiplies every entry by `k`.
    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| k.clone() * x.clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Clone + Zero + Add<Output = T>> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + rhs[(r, c)].clone())
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                let a = &self[(r, k)];
                if a.is_zero() {
                    acc
                } else {
                    acc + a.clone() * rhs[(k, c)].clone()
                }
            })
        })
    }
}

impl LaurentMatrix {
    /// Entrywise evaluation at `v = 1`.
    pub fn eval_one(&self) -> IntMatrix {
        self.map(Laurent::eval_one)
    }
}
