//! Brute-force checks by exact linear algebra on explicit nilpotent matrices.
//!
//! A pattern `π` gives a basis `e_1..e_n` with `u e_i = e_{pred(i)}`. The
//! commutant of `u`, the part of it preserving the standard flag of that
//! basis, and the Jordan types of `u` on the flag's subspaces are all
//! computed here from ranks, without using any closed formula.

pub mod linalg;

use num_bigint::BigInt;

use crate::error::{check_bound, Error, Result};
use crate::linkpatterns::LinkPattern;
use crate::shapes::Partition;
use linalg::{Matrix, Scalar};

pub const DEFAULT_COMMUTANT_BOUND: usize = 10;
pub const DEFAULT_FLAG_BOUND: usize = 9;
pub const DEFAULT_CHAIN_BOUND: usize = 9;

/// `u` written in the basis attached to a pattern.
#[derive(Debug, Clone)]
pub struct NilpotentRealization<S = BigInt> {
    pub pattern: LinkPattern,
    pub matrix: Matrix<S>,
}

impl<S: Scalar> NilpotentRealization<S> {
    pub fn new(pattern: &LinkPattern) -> Self {
        let n = pattern.n();
        let mut matrix = Matrix::zeros(n, n);
        for i in 1..=n {
            if let Some(p) = pattern.pred(Some(i)) {
                matrix.set(p - 1, i - 1, S::one());
            }
        }
        NilpotentRealization {
            pattern: pattern.clone(),
            matrix,
        }
    }

    pub fn n(&self) -> usize {
        self.pattern.n()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.matrix.pow(self.n() as u32).is_zero()
    }
}

/// Jordan type of a nilpotent matrix, read off from the ranks of its powers.
pub fn jordan_type_of<S: Scalar>(u: &Matrix<S>) -> Result<Partition> {
    let n = u.rows();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n + 1 {
            return Err(Error::NotApplicable("matrix is not nilpotent".into()));
        }
        power = power.mul(u);
        ranks.push(power.rank_bareiss());
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::new(columns)?.conjugate())
}

/// Nullity of `x -> xu - ux` restricted to the unknowns `x[p][q]` selected
/// by `keep`.
fn commutator_nullity<S: Scalar>(u: &Matrix<S>, keep: impl Fn(usize, usize) -> bool) -> usize {
    let n = u.rows();
    let vars: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| keep(p, q))
        .collect();
    let mut index = vec![None; n * n];
    for (k, &(p, q)) in vars.iter().enumerate() {
        index[p * n + q] = Some(k);
    }
    let mut system = Matrix::<S>::zeros(n * n, vars.len());
    for a in 0..n {
        for b in 0..n {
            let row = a * n + b;
            // (xu)[a][b] = sum_q x[a][q] u[q][b]
            for q in 0..n {
                if let Some(k) = index[a * n + q] {
                    if !u.get(q, b).is_zero() {
                        let v = system.get(row, k).clone() + u.get(q, b).clone();
                        system.set(row, k, v);
                    }
                }
            }
            // (ux)[a][b] = sum_p u[a][p] x[p][b]
            for p in 0..n {
                if let Some(k) = index[p * n + b] {
                    if !u.get(a, p).is_zero() {
                        let v = system.get(row, k).clone() - u.get(a, p).clone();
                        system.set(row, k, v);
                    }
                }
            }
        }
    }
    system.nullity()
}

pub fn commutant_dim(shape: &Partition) -> Result<u64> {
    commutant_dim_in::<BigInt>(shape, DEFAULT_COMMUTANT_BOUND)
}

/// Dimension of the centralizer of a nilpotent of Jordan type `shape`.
pub fn commutant_dim_in<S: Scalar>(shape: &Partition, bound: usize) -> Result<u64> {
    check_bound("commutant", shape.size(), bound)?;
    let pattern = LinkPattern::from_composition(&shape.as_composition());
    let real = NilpotentRealization::<S>::new(&pattern);
    Ok(commutator_nullity(&real.matrix, |_, _| true) as u64)
}

pub fn flag_stabilizer_dim(pattern: &LinkPattern) -> Result<u64> {
    flag_stabilizer_dim_in::<BigInt>(pattern, DEFAULT_FLAG_BOUND)
}

/// Dimension of the commutant elements that are upper triangular in the
/// pattern's basis.
pub fn flag_stabilizer_dim_in<S: Scalar>(pattern: &LinkPattern, bound: usize) -> Result<u64> {
    check_bound("flag stabilizer", pattern.n(), bound)?;
    let real = NilpotentRealization::<S>::new(pattern);
    Ok(commutator_nullity(&real.matrix, |p, q| p <= q) as u64)
}

pub fn jordan_type_chain(pattern: &LinkPattern) -> Result<Vec<Partition>> {
    jordan_type_chain_in::<BigInt>(pattern, DEFAULT_CHAIN_BOUND)
}

/// Jordan types of `u` on `span(e_1..e_i)` for `i = 1..=n`.
pub fn jordan_type_chain_in<S: Scalar>(pattern: &LinkPattern, bound: usize) -> Result<Vec<Partition>> {
    check_bound("jordan chain", pattern.n(), bound)?;
    let real = NilpotentRealization::<S>::new(pattern);
    let mut chain = Vec::with_capacity(pattern.n());
    for i in 1..=pattern.n() {
        let shape = jordan_type_of(&real.matrix.leading_block(i))?;
        if shape.size() != i {
            return Err(Error::Invariant(format!("restriction to V_{i} has type {shape}")));
        }
        chain.push(shape);
    }
    Ok(chain)
}
