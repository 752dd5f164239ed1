//! Partitions, compositions and the closed-form dimension counts attached to
//! a Jordan type.
//!
//! A [`Partition`] doubles as a Young diagram (its parts are the row lengths)
//! and as the Jordan type of a nilpotent endomorphism. A [`Composition`] is an
//! ordered sequence of positive integers, typically a rearrangement of a
//! partition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest total size accepted when parsing a partition or composition.
pub const MAX_PARSE_N: usize = 10_000;

/// A weakly decreasing sequence of positive integers. The empty partition
/// represents `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// An ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", pos + 1)));
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                parts[w],
                parts[w + 1]
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given positive integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1, ..., 1)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Dimension of the Springer fiber over a nilpotent of this Jordan type:
    /// the sum of `c(c-1)/2` over the column lengths `c`.
    pub fn springer_dim(&self) -> u64 {
        self.conjugate()
            .0
            .iter()
            .map(|&c| (c as u64) * (c as u64).saturating_sub(1) / 2)
            .sum()
    }

    /// Dimension of the centralizer of a nilpotent of this Jordan type: the
    /// sum of squared column lengths.
    pub fn stabilizer_dim(&self) -> u64 {
        self.conjugate().0.iter().map(|&c| (c as u64) * (c as u64)).sum()
    }

    /// Row-wise sum of two Young diagrams.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
            .collect();
        Partition(parts)
    }

    /// All distinct rearrangements of the parts, in lexicographic order.
    pub fn distinct_permutations(&self) -> Vec<Composition> {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match counts.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => counts.push((p, 1)),
            }
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.len());
        permute_multiset(&mut counts, self.len(), &mut current, &mut out);
        out
    }

    /// Removes one box from the end of row `row` (0-based), dropping the row
    /// if it empties. Returns `None` when the result is not a partition.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let mut parts = self.0.clone();
        let p = parts.get_mut(row)?;
        *p -= 1;
        if *p == 0 {
            parts.remove(row);
        }
        Partition::new(parts).ok()
    }
}

fn permute_multiset(
    counts: &mut [(usize, usize)],
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    if remaining == 0 {
        out.push(Composition(current.clone()));
        return;
    }
    for k in 0..counts.len() {
        if counts[k].1 == 0 {
            continue;
        }
        counts[k].1 -= 1;
        current.push(counts[k].0);
        permute_multiset(counts, remaining - 1, current, out);
        current.pop();
        counts[k].1 += 1;
    }
}

/// All partitions of `n`, in reverse lexicographic order (starting from `(n)`).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            current.push(p);
            rec(n - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("part {} is zero", pos + 1)));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Drops the part at `index` (0-based).
    pub fn without_part(&self, index: usize) -> Composition {
        let mut parts = self.0.clone();
        parts.remove(index);
        Composition(parts)
    }

    /// Decrements the last part, dropping it if it reaches zero.
    pub fn decrement_last(&self) -> Composition {
        let mut parts = self.0.clone();
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            if *last == 0 {
                parts.pop();
            }
        }
        Composition(parts)
    }

    /// Decrements the first part, dropping it if it reaches zero.
    pub fn decrement_first(&self) -> Composition {
        self.reversed().decrement_last().reversed()
    }

    /// Whether this sequence dominates `pattern` along some increasing
    /// embedding; see [`contains_pattern`].
    pub fn contains(&self, pattern: &[usize]) -> Option<Vec<usize>> {
        contains_pattern(&self.0, pattern)
    }
}

/// Pattern containment `seq >= pattern`: looks for indices
/// `i_1 < ... < i_k` with `seq[i_l] >= pattern[l]`. Returns the leftmost such
/// index tuple (1-based) when one exists.
///
/// Greedy leftmost matching is complete here: if any embedding exists, taking
/// the earliest admissible index for each pattern entry leaves at least as
/// much room for the rest.
pub fn contains_pattern(seq: &[usize], pattern: &[usize]) -> Option<Vec<usize>> {
    let mut witness = Vec::with_capacity(pattern.len());
    let mut pos = 0;
    for &want in pattern {
        let offset = seq[pos..].iter().position(|&x| x >= want)?;
        pos += offset;
        witness.push(pos + 1);
        pos += 1;
    }
    Some(witness)
}

/// Whether every irreducible component of the Springer fiber of this Jordan
/// type is smooth: hooks, at most two rows, three rows with a trivial third
/// block, and `(2,2,2)`.
pub fn jordan_type_all_smooth(shape: &Partition) -> bool {
    let p = shape.parts();
    let hook = p.iter().filter(|&&x| x >= 2).count() <= 1;
    let two_rows = p.len() <= 2;
    let three_with_trivial = p.len() == 3 && p[2] == 1;
    hook || two_rows || three_with_trivial || p == [2, 2, 2]
}

/// Whether the Springer fiber of this Jordan type has a singular component:
/// `shape >= (2,2,1,1)` or `shape >= (3,2,2)`.
pub fn has_singular_component(shape: &Partition) -> bool {
    contains_pattern(shape.parts(), &[2, 2, 1, 1]).is_some()
        || contains_pattern(shape.parts(), &[3, 2, 2]).is_some()
}

fn parse_positive_list(s: &str, what: &'static str) -> Result<Vec<usize>> {
    let mut parts = Vec::new();
    for token in s.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let v: usize = token.parse().map_err(|_| Error::Parse {
            what,
            token: token.to_string(),
        })?;
        if v == 0 {
            return Err(Error::Parse {
                what,
                token: token.to_string(),
            });
        }
        parts.push(v);
        let total: usize = parts.iter().sum();
        if total > MAX_PARSE_N {
            return Err(Error::SizeBound {
                what,
                n: total,
                bound: MAX_PARSE_N,
            });
        }
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_positive_list(s, "partition")?)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_positive_list(s, "composition")?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Column lengths read off a drawn diagram, box by box.
    fn columns_by_drawing(shape: &[usize]) -> Vec<usize> {
        let mut grid = vec![vec![false; 32]; shape.len()];
        for (r, &len) in shape.iter().enumerate() {
            grid[r][..len].fill(true);
        }
        (0..32)
            .map(|c| grid.iter().filter(|row| row[c]).count())
            .filter(|&h| h > 0)
            .collect()
    }

    /// Exhaustive search over all index tuples.
    fn contains_brute(seq: &[usize], pat: &[usize]) -> bool {
        fn rec(seq: &[usize], pat: &[usize], start: usize) -> bool {
            match pat.split_first() {
                None => true,
                Some((&h, rest)) => (start..seq.len()).any(|i| seq[i] >= h && rec(seq, rest, i + 1)),
            }
        }
        rec(seq, pat, 0)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 2, 1]).conjugate(), p(&[4, 3, 1]));
        assert_eq!(columns_by_drawing(&[3, 2, 2, 1]), vec![4, 3, 1]);
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
        assert_eq!(Partition::column(4).conjugate(), Partition::row(4));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution_and_matches_drawing() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().parts(), columns_by_drawing(lam.parts()).as_slice());
            }
        }
    }

    #[test]
    fn springer_dim_examples() {
        assert_eq!(p(&[2, 2, 1, 1]).springer_dim(), 7);
        assert_eq!(p(&[3, 2, 1, 1]).springer_dim(), 7);
        assert_eq!(p(&[3, 2, 2]).springer_dim(), 6);
        assert_eq!(Partition::row(6).springer_dim(), 0);
        assert_eq!(Partition::empty().springer_dim(), 0);
        assert_eq!(Partition::empty().stabilizer_dim(), 0);
    }

    #[test]
    fn springer_dim_via_column_sums() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                let by_cols: u64 = columns_by_drawing(lam.parts())
                    .iter()
                    .map(|&c| (0..c as u64).sum::<u64>())
                    .sum();
                assert_eq!(lam.springer_dim(), by_cols);
                assert_eq!(lam.conjugate().conjugate().springer_dim(), lam.springer_dim());
            }
        }
    }

    #[test]
    fn stabilizer_dim_examples() {
        assert_eq!(Partition::column(5).stabilizer_dim(), 25);
        assert_eq!(Partition::row(5).stabilizer_dim(), 5);
        assert_eq!(p(&[2, 2, 1, 1]).stabilizer_dim(), 20);
    }

    #[test]
    fn contains_pattern_examples() {
        assert_eq!(contains_pattern(&[1, 2, 2, 1], &[1, 2, 2, 1]), Some(vec![1, 2, 3, 4]));
        assert_eq!(contains_pattern(&[2, 3, 1, 2], &[2, 3, 2]), Some(vec![1, 2, 4]));
        assert!(contains_brute(&[2, 3, 1, 2], &[2, 3, 2]));
        assert_eq!(contains_pattern(&[3, 2, 2], &[2, 3, 2]), None);
        assert!(!contains_brute(&[3, 2, 2], &[2, 3, 2]));
    }

    fn all_sequences(max_len: usize, max_entry: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for s in &frontier {
                for e in 1..=max_entry {
                    let mut t: Vec<usize> = s.clone();
                    t.push(e);
                    next.push(t);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn contains_pattern_agrees_with_brute_force() {
        let seqs = all_sequences(5, 3);
        let pats = all_sequences(3, 3);
        for s in &seqs {
            for q in &pats {
                let got = contains_pattern(s, q);
                assert_eq!(got.is_some(), contains_brute(s, q), "{s:?} vs {q:?}");
                if let Some(w) = got {
                    assert!(w.windows(2).all(|x| x[0] < x[1]));
                    assert!(w.iter().zip(q).all(|(&i, &v)| s[i - 1] >= v));
                }
            }
        }
    }

    #[test]
    fn contains_pattern_is_reflexive_and_transitive() {
        let seqs: Vec<Vec<usize>> = all_sequences(6, 4).into_iter().filter(|s| !s.is_empty()).collect();
        for s in &seqs {
            assert!(contains_pattern(s, s).is_some());
        }
        // Transitivity on a smaller slice keeps the triple loop tractable.
        let small: Vec<Vec<usize>> = all_sequences(3, 3).into_iter().filter(|s| !s.is_empty()).collect();
        for a in &seqs {
            for b in &small {
                if contains_pattern(a, b).is_none() {
                    continue;
                }
                for c in &small {
                    if contains_pattern(b, c).is_some() {
                        assert!(contains_pattern(a, c).is_some(), "{a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn smoothness_by_jordan_type() {
        assert!(jordan_type_all_smooth(&p(&[5, 1, 1])));
        assert!(jordan_type_all_smooth(&p(&[2, 2, 2])));
        assert!(!jordan_type_all_smooth(&p(&[2, 2, 1, 1])));
        assert!(has_singular_component(&p(&[2, 2, 1, 1])));
        assert!(has_singular_component(&p(&[3, 2, 2])));
        assert!(!has_singular_component(&Partition::row(7)));
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(has_singular_component(&lam), !jordan_type_all_smooth(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn distinct_permutations_of_2211() {
        let perms = p(&[2, 2, 1, 1]).distinct_permutations();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0].parts(), &[1, 1, 2, 2]);
        assert!(perms.iter().all(|c| c.sorted() == p(&[2, 2, 1, 1])));
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 2, 1]));
        assert_eq!("3 2 2 1".parse::<Partition>().unwrap(), p(&[3, 2, 2, 1]));
        assert!("2,3".parse::<Partition>().is_err());
        assert_eq!("2,3,1".parse::<Composition>().unwrap().parts(), &[2, 3, 1]);
        match "2,x,1".parse::<Composition>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("0,1".parse::<Composition>(), Err(Error::Parse { .. })));
        assert!(matches!("10001".parse::<Partition>(), Err(Error::SizeBound { .. })));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }
}
