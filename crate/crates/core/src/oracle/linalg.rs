//! Dense matrices over an exact scalar type and their ranks.
//!
//! Everything here is generic over [`Scalar`]; the crate root provides
//! aliases for the big-integer and big-rational instantiations. Two rank
//! routines are provided so that they can be checked against each other:
//! fraction-free Bareiss elimination, which only needs exact division in an
//! integral domain, and plain Gaussian elimination, which needs a field.

use std::fmt;

use num_traits::Num;

/// Exact ring elements. Machine integers qualify as long as intermediate
/// values fit.
pub trait Scalar: Num + Clone + fmt::Debug {}

impl<T: Num + Clone + fmt::Debug> Scalar for T {}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(S::zero(), |acc, k| {
                let a = self.get(r, k);
                if a.is_zero() {
                    acc
                } else {
                    acc + a.clone() * other.get(k, c).clone()
                }
            })
        })
    }

    pub fn pow(&self, k: u32) -> Matrix<S> {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// The top-left `k x k` block.
    pub fn leading_block(&self, k: usize) -> Matrix<S> {
        Matrix::from_fn(k, k, |r, c| self.get(r, c).clone())
    }

    /// Rank by fraction-free (Bareiss) elimination. Every division is exact.
    pub fn rank_bareiss(&self) -> usize {
        let mut a = self.data.clone();
        let cols = self.cols;
        let at = |r: usize, c: usize| r * cols + c;
        let mut prev = S::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[at(r, c)].is_zero()) else {
                continue;
            };
            if p != rank {
                for k in 0..cols {
                    a.swap(at(p, k), at(rank, k));
                }
            }
            let pivot = a[at(rank, c)].clone();
            for r in rank + 1..self.rows {
                let factor = a[at(r, c)].clone();
                for k in c + 1..cols {
                    let v = pivot.clone() * a[at(r, k)].clone() - factor.clone() * a[at(rank, k)].clone();
                    a[at(r, k)] = v / prev.clone();
                }
                a[at(r, c)] = S::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Rank by ordinary Gaussian elimination; `S` must be a field.
    pub fn rank_gauss(&self) -> usize {
        let mut a = self.data.clone();
        let cols = self.cols;
        let at = |r: usize, c: usize| r * cols + c;
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[at(r, c)].is_zero()) else {
                continue;
            };
            for k in 0..cols {
                a.swap(at(p, k), at(rank, k));
            }
            let pivot = a[at(rank, c)].clone();
            for r in 0..self.rows {
                if r == rank || a[at(r, c)].is_zero() {
                    continue;
                }
                let factor = a[at(r, c)].clone() / pivot.clone();
                for k in c..cols {
                    let v = a[at(r, k)].clone() - factor.clone() * a[at(rank, k)].clone();
                    a[at(r, k)] = v;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Dimension of the kernel of `x -> self * x`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank_bareiss()
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols.max(1)) {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn int_matrix(rows: usize, cols: usize, v: &[i64]) -> Matrix<i64> {
        Matrix::from_fn(rows, cols, |r, c| v[r * cols + c])
    }

    #[test]
    fn small_ranks() {
        let m = int_matrix(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.rank_bareiss(), 2);
        assert_eq!(Matrix::<i64>::identity(4).rank_bareiss(), 4);
        assert_eq!(Matrix::<i64>::zeros(3, 5).rank_bareiss(), 0);
        let skip = int_matrix(3, 4, &[0, 1, 0, 2, 0, 2, 1, 0, 0, 3, 1, 2]);
        assert_eq!(skip.rank_bareiss(), 2);
        assert_eq!(skip.nullity(), 2);
        let skip = int_matrix(3, 4, &[0, 1, 0, 2, 0, 2, 1, 0, 0, 3, 2, 2]);
        assert_eq!(skip.rank_bareiss(), 3);
    }

    #[test]
    fn product_and_power() {
        let j = int_matrix(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(j.pow(2), int_matrix(3, 3, &[0, 0, 1, 0, 0, 0, 0, 0, 0]));
        assert!(j.pow(3).is_zero());
        assert_eq!(j.pow(0), Matrix::identity(3));
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rational_gauss(
            rows in 1usize..6,
            cols in 1usize..6,
            seed in proptest::collection::vec(-3i64..=3, 36),
        ) {
            let m = int_matrix(rows, cols, &seed);
            let big = Matrix::from_fn(rows, cols, |r, c| BigInt::from(*m.get(r, c)));
            let rat = Matrix::from_fn(rows, cols, |r, c| BigRational::from_integer(BigInt::from(*m.get(r, c))));
            let r1 = big.rank_bareiss();
            prop_assert_eq!(r1, rat.rank_gauss());
            prop_assert_eq!(r1, rat.rank_bareiss());
            prop_assert_eq!(r1, m.rank_bareiss());
        }
    }
}
