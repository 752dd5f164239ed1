//! Dimensions of Jordan orbits.
//!
//! For a pattern `π`, a basis numbered along `π` spans a flag whose
//! stabilizer inside the centralizer of `u` has dimension `|A(π)|`, where
//! `A(π)` collects the pairs `(i, j)` such that the predecessor chain of `i`
//! stays weakly below the chain of `k_j = max(I_j)` at every step. The orbit
//! dimension is the centralizer dimension minus `|A(π)|`, and the orbit is
//! dense in its component exactly when that equals the Springer fiber
//! dimension.

use std::collections::BTreeSet;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::linkpatterns::LinkPattern;

/// Pairs `(i, j)` (label, 1-based canonical block index) with
/// `pred^l(i) <= pred^l(max I_j)` for every `l >= 0`.
pub fn a_set(pattern: &LinkPattern) -> BTreeSet<(usize, usize)> {
    let n = pattern.n();
    let mut out = BTreeSet::new();
    for (j, block) in pattern.blocks().iter().enumerate() {
        let top = *block.last().expect("blocks are non-empty");
        for i in 1..=n {
            if chain_below(pattern, i, top) {
                out.insert((i, j + 1));
            }
        }
    }
    out
}

/// Whether `pred^l(i) <= pred^l(k)` for all `l`; both chains reach `None`
/// within `n` steps.
fn chain_below(pattern: &LinkPattern, i: usize, k: usize) -> bool {
    let (mut a, mut b) = (Some(i), Some(k));
    for _ in 0..=pattern.n() {
        if a > b {
            return false;
        }
        if a.is_none() && b.is_none() {
            break;
        }
        a = pattern.pred(a);
        b = pattern.pred(b);
    }
    true
}

/// Orbit dimension data for one pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitAnalysis {
    pub pattern: LinkPattern,
    pub a_set: BTreeSet<(usize, usize)>,
    pub stab_dim: u64,
    pub orbit_dim: u64,
    pub centralizer_dim: u64,
    pub springer_dim: u64,
    pub dense: bool,
}

pub fn analyze_orbit(pattern: &LinkPattern) -> OrbitAnalysis {
    let shape = pattern.jordan_type();
    let a = a_set(pattern);
    let stab_dim = a.len() as u64;
    let centralizer_dim = shape.stabilizer_dim();
    let springer_dim = shape.springer_dim();
    let orbit_dim = centralizer_dim
        .checked_sub(stab_dim)
        .expect("flag stabilizer is a subgroup of the centralizer");
    OrbitAnalysis {
        pattern: pattern.clone(),
        a_set: a,
        stab_dim,
        orbit_dim,
        centralizer_dim,
        springer_dim,
        dense: orbit_dim == springer_dim,
    }
}

impl Serialize for OrbitAnalysis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("OrbitAnalysis", 5)?;
        s.serialize_field("pattern", &self.pattern)?;
        s.serialize_field("stab_dim", &self.stab_dim)?;
        s.serialize_field("orbit_dim", &self.orbit_dim)?;
        s.serialize_field("springer_dim", &self.springer_dim)?;
        s.serialize_field("dense", &self.dense)?;
        s.end()
    }
}

/// Comparison of `A(π)` with `A(π')`, where `π'` drops the vertex `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveReport {
    /// 1-based position of the block containing `n` once blocks are sorted by
    /// size with that block last among blocks of its size.
    pub j0: usize,
    pub a_pi: u64,
    pub a_pi_prime: u64,
    /// `a_pi == a_pi_prime + j0`.
    pub equality: bool,
    /// `(j, i, l)` with `j > j0`, `i` in the `j`-th block and
    /// `pred^{l+1}(i) < pred^{l+1}(n) < pred^l(i) < pred^l(n)`.
    pub witness: Option<(usize, usize, usize)>,
    pub centralizer_dim: u64,
    pub centralizer_dim_prime: u64,
    pub springer_dim: u64,
    pub springer_dim_prime: u64,
    pub orbit_dim: u64,
    pub orbit_dim_prime: u64,
}

impl InductiveReport {
    /// `dim Z_{u'} = dim Z_u - 2 j0 + 1`.
    pub fn centralizer_step_holds(&self) -> bool {
        self.centralizer_dim_prime + 2 * self.j0 as u64 == self.centralizer_dim + 1
    }

    /// `dim B_{u'} = dim B_u - j0 + 1`.
    pub fn springer_step_holds(&self) -> bool {
        self.springer_dim_prime + self.j0 as u64 == self.springer_dim + 1
    }

    /// Orbit codimension never increases when the last vertex is dropped.
    pub fn codim_monotone(&self) -> bool {
        let codim = self.springer_dim as i64 - self.orbit_dim as i64;
        let codim_prime = self.springer_dim_prime as i64 - self.orbit_dim_prime as i64;
        codim >= codim_prime
    }

    pub fn inequality_holds(&self) -> bool {
        self.a_pi >= self.a_pi_prime + self.j0 as u64
    }
}

/// Blocks sorted by size descending, the block holding `n` last among equal
/// sizes, remaining ties by smallest element.
fn order_with_last_block_at_end(pattern: &LinkPattern) -> Vec<&Vec<usize>> {
    let n = pattern.n();
    let mut blocks: Vec<&Vec<usize>> = pattern.blocks().iter().collect();
    blocks.sort_by(|a, b| {
        let a_has = a.last() == Some(&n);
        let b_has = b.last() == Some(&n);
        b.len().cmp(&a.len()).then(a_has.cmp(&b_has)).then(a[0].cmp(&b[0]))
    });
    blocks
}

pub fn inductive_report(pattern: &LinkPattern) -> Result<InductiveReport> {
    let n = pattern.n();
    if n < 2 {
        return Err(Error::NotApplicable(format!(
            "inductive comparison needs n >= 2, got {n}"
        )));
    }
    let ordered = order_with_last_block_at_end(pattern);
    let j0 = ordered
        .iter()
        .position(|b| b.last() == Some(&n))
        .expect("n lies in some block")
        + 1;

    let last = Some(n);
    let mut witness = None;
    'search: for (pos, block) in ordered.iter().enumerate().skip(j0) {
        for &i in block.iter() {
            for l in 0..=n {
                let a = pattern.pred_pow(Some(i), l + 1);
                let b = pattern.pred_pow(last, l + 1);
                let c = pattern.pred_pow(Some(i), l);
                let d = pattern.pred_pow(last, l);
                if a < b && b < c && c < d {
                    witness = Some((pos + 1, i, l));
                    break 'search;
                }
            }
        }
    }

    let prime = pattern.remove_last();
    let here = analyze_orbit(pattern);
    let there = analyze_orbit(&prime);
    Ok(InductiveReport {
        j0,
        a_pi: here.stab_dim,
        a_pi_prime: there.stab_dim,
        equality: here.stab_dim == there.stab_dim + j0 as u64,
        witness,
        centralizer_dim: here.centralizer_dim,
        centralizer_dim_prime: there.centralizer_dim,
        springer_dim: here.springer_dim,
        springer_dim_prime: there.springer_dim,
        orbit_dim: here.orbit_dim,
        orbit_dim_prime: there.orbit_dim,
    })
}
