//! Set partitions of `{1..n}` with prescribed block sizes, viewed as arc
//! diagrams: each block is a chain of arcs joining consecutive elements.
//!
//! A pattern is stored with its blocks in canonical order (size descending,
//! ties by smallest element) together with the predecessor map `pred`, where
//! `pred(i)` is the previous element of the block containing `i` or `None`
//! when `i` is the block minimum. `None` compares below every label, which is
//! the ordering the chain comparisons in [`crate::orbits`] rely on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, Error, Result};
use crate::shapes::{Composition, Partition};
use crate::tableaux::StandardTableau;

/// Default size bound for [`enumerate_patterns`].
pub const DEFAULT_PATTERN_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternRepr", into = "PatternRepr")]
pub struct LinkPattern {
    n: usize,
    blocks: Vec<Vec<usize>>,
    pred: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Which subset of patterns [`enumerate_patterns`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternFilter {
    All,
    /// Interval blocks only.
    Standard,
    /// No crossings, and nested chains never longer than their enclosing chain.
    Dense,
}

impl LinkPattern {
    pub fn from_blocks(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPattern("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidPattern(format!("element {e} outside 1..={n}")));
                }
                if seen[e] {
                    return Err(Error::InvalidPattern(format!("element {e} appears twice")));
                }
                seen[e] = true;
            }
        }
        if let Some(gap) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::InvalidPattern(format!("element {gap} is missing")));
        }
        Ok(Self::canonical(blocks, n))
    }

    fn canonical(mut blocks: Vec<Vec<usize>>, n: usize) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        let mut pred = vec![None; n];
        for b in &blocks {
            for w in b.windows(2) {
                pred[w[1] - 1] = Some(w[0]);
            }
        }
        LinkPattern { n, blocks, pred }
    }

    /// The standard pattern whose blocks are consecutive intervals of the
    /// given lengths.
    pub fn from_composition(composition: &Composition) -> Self {
        let mut start = 1;
        let blocks = composition
            .parts()
            .iter()
            .map(|&len| {
                let b: Vec<usize> = (start..start + len).collect();
                start += len;
                b
            })
            .collect();
        Self::canonical(blocks, composition.size())
    }

    pub fn empty() -> Self {
        Self::canonical(Vec::new(), 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks in canonical order, each sorted ascending.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block sizes, i.e. the Jordan type realised by a basis numbered along
    /// this pattern.
    pub fn jordan_type(&self) -> Partition {
        Partition::new(self.blocks.iter().map(Vec::len).collect()).expect("canonical order sorts sizes")
    }

    /// Predecessor of `i` in its block; `None` for block minima and for `None`.
    pub fn pred(&self, i: Option<usize>) -> Option<usize> {
        i.and_then(|i| self.pred[i - 1])
    }

    /// `pred` applied `l` times.
    pub fn pred_pow(&self, i: Option<usize>, l: usize) -> Option<usize> {
        let mut cur = i;
        for _ in 0..l {
            if cur.is_none() {
                break;
            }
            cur = self.pred(cur);
        }
        cur
    }

    /// The whole predecessor map, indexed by `i - 1`.
    pub fn pred_map(&self) -> &[Option<usize>] {
        &self.pred
    }

    /// Arcs `(pred(i), i)`, sorted by right endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .filter_map(|i| self.pred[i - 1].map(|p| (p, i)))
            .collect()
    }

    /// Index of the block containing `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&i))
            .expect("every label lies in a block")
    }

    /// Minimal `c >= 1` with `pred^c(i) = None`: the position of `i` inside
    /// its block.
    pub fn column_index(&self, i: usize) -> usize {
        let mut c = 1;
        let mut cur = self.pred[i - 1];
        while let Some(p) = cur {
            c += 1;
            cur = self.pred[p - 1];
        }
        c
    }

    /// The standard tableau holding `i` in column `column_index(i)`.
    pub fn tableau(&self) -> StandardTableau {
        let cols: Vec<usize> = (1..=self.n).map(|i| self.column_index(i)).collect();
        StandardTableau::from_column_assignment(&cols)
            .expect("column counts of a pattern form a conjugate partition")
    }

    /// All `(i, j)` with `None < pred(j) < pred(i) < j < i`.
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            let Some(pi) = self.pred[i - 1] else { continue };
            for j in (pi + 1)..i {
                if let Some(pj) = self.pred[j - 1] {
                    if pj < pi {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    /// Ordered block index pairs `(j, k)` where block `j` lies strictly inside
    /// the span of block `k` while being shorter.
    pub fn nesting_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, outer) in self.blocks.iter().enumerate() {
            let (lo, hi) = (outer[0], *outer.last().unwrap());
            for (j, inner) in self.blocks.iter().enumerate() {
                if j == k || inner.len() >= outer.len() {
                    continue;
                }
                if inner.iter().all(|&e| lo < e && e < hi) {
                    out.push((j, k));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Membership in the crossingless, correctly nested subset.
    pub fn in_pi1(&self) -> bool {
        self.crossings().is_empty() && self.nesting_violations().is_empty()
    }

    /// Every block is an integer interval.
    pub fn is_standard(&self) -> bool {
        self.blocks.iter().all(|b| b.windows(2).all(|w| w[1] == w[0] + 1))
    }

    /// For a standard pattern, the block lengths in left-to-right order.
    pub fn as_composition(&self) -> Option<Composition> {
        if !self.is_standard() {
            return None;
        }
        let mut blocks: Vec<&Vec<usize>> = self.blocks.iter().collect();
        blocks.sort_by_key(|b| b[0]);
        Composition::new(blocks.iter().map(|b| b.len()).collect()).ok()
    }

    /// Reflection `i -> n + 1 - i`.
    pub fn mirror(&self) -> LinkPattern {
        let n = self.n;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| n + 1 - i).collect())
            .collect();
        Self::canonical(blocks, n)
    }

    /// Deletes the vertex `n` and its incoming arc.
    pub fn remove_last(&self) -> LinkPattern {
        let n = self.n;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&i| i != n).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        Self::canonical(blocks, n.saturating_sub(1))
    }

    /// Deletes the vertex `1` and its outgoing arc, shifting the other labels
    /// down by one.
    pub fn remove_first(&self) -> LinkPattern {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&i| i != 1).map(|&i| i - 1).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        Self::canonical(blocks, self.n.saturating_sub(1))
    }

    /// Deletes the block at `index` (canonical order, 0-based) and relabels
    /// the rest order-preservingly onto `1..=n - |block|`.
    pub fn remove_block(&self, index: usize) -> Result<LinkPattern> {
        let removed = self.blocks.get(index).ok_or(Error::BlockIndex {
            index,
            blocks: self.blocks.len(),
        })?;
        let mut new_label = vec![0; self.n + 1];
        let mut next = 1;
        for (i, label) in new_label.iter_mut().enumerate().skip(1) {
            if !removed.contains(&i) {
                *label = next;
                next += 1;
            }
        }
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, b)| b.iter().map(|&i| new_label[i]).collect())
            .collect();
        Ok(Self::canonical(blocks, self.n - removed.len()))
    }
}

/// All set partitions of `{1..n}` with block sizes `shape`, optionally
/// restricted, in ascending order of canonical block listing.
pub fn enumerate_patterns(shape: &Partition, filter: PatternFilter) -> Result<Vec<LinkPattern>> {
    enumerate_patterns_bounded(shape, filter, DEFAULT_PATTERN_BOUND)
}

pub fn enumerate_patterns_bounded(
    shape: &Partition,
    filter: PatternFilter,
    bound: usize,
) -> Result<Vec<LinkPattern>> {
    let n = shape.size();
    check_bound("link pattern enumeration", n, bound)?;
    // (size, multiplicity) for the sizes still to be placed
    let mut sizes: Vec<(usize, usize)> = Vec::new();
    for &p in shape.parts() {
        match sizes.last_mut() {
            Some((s, m)) if *s == p => *m += 1,
            _ => sizes.push((p, 1)),
        }
    }
    let mut used = vec![false; n + 1];
    let mut blocks = Vec::new();
    let mut out = Vec::new();
    partition_rec(n, &mut sizes, &mut used, &mut blocks, &mut out);
    out.retain(|p| match filter {
        PatternFilter::All => true,
        PatternFilter::Standard => p.is_standard(),
        PatternFilter::Dense => p.in_pi1(),
    });
    out.sort_by(|a, b| a.blocks.cmp(&b.blocks));
    Ok(out)
}

fn partition_rec(
    n: usize,
    sizes: &mut [(usize, usize)],
    used: &mut [bool],
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<LinkPattern>,
) {
    let Some(first) = (1..=n).find(|&i| !used[i]) else {
        out.push(LinkPattern::canonical(blocks.clone(), n));
        return;
    };
    used[first] = true;
    for k in 0..sizes.len() {
        if sizes[k].1 == 0 {
            continue;
        }
        sizes[k].1 -= 1;
        let size = sizes[k].0;
        let mut block = vec![first];
        choose_rest(n, first + 1, size - 1, sizes, used, &mut block, blocks, out);
        sizes[k].1 += 1;
    }
    used[first] = false;
}

#[allow(clippy::too_many_arguments)]
fn choose_rest(
    n: usize,
    from: usize,
    need: usize,
    sizes: &mut [(usize, usize)],
    used: &mut [bool],
    block: &mut Vec<usize>,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<LinkPattern>,
) {
    if need == 0 {
        blocks.push(block.clone());
        partition_rec(n, sizes, used, blocks, out);
        blocks.pop();
        return;
    }
    for e in from..=n {
        if used[e] {
            continue;
        }
        used[e] = true;
        block.push(e);
        choose_rest(n, e + 1, need - 1, sizes, used, block, blocks, out);
        block.pop();
        used[e] = false;
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, b) in self.blocks.iter().enumerate() {
            if j > 0 {
                f.write_str(" | ")?;
            }
            for (k, e) in b.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LinkPattern {
    type Err = Error;

    /// Blocks separated by `|`, elements by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(LinkPattern::empty());
        }
        let mut blocks = Vec::new();
        for chunk in s.split('|') {
            let block = chunk
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        what: "link pattern",
                        token: t.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        let n = blocks.iter().map(Vec::len).sum();
        check_bound("link pattern", n, crate::shapes::MAX_PARSE_N)?;
        LinkPattern::from_blocks(blocks, n)
    }
}

impl TryFrom<PatternRepr> for LinkPattern {
    type Error = Error;
    fn try_from(r: PatternRepr) -> Result<Self> {
        LinkPattern::from_blocks(r.blocks, r.n)
    }
}

impl From<LinkPattern> for PatternRepr {
    fn from(p: LinkPattern) -> Self {
        PatternRepr {
            n: p.n,
            blocks: p.blocks,
        }
    }
}
