//! Standard Young tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, Error, Result};
use crate::linkpatterns::LinkPattern;
use crate::shapes::{Composition, Partition};

/// Default size bound for [`enumerate_standard`].
pub const DEFAULT_TABLEAU_BOUND: usize = 12;

/// A filling of a Young diagram by `1..=n`, increasing along rows and down
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must be weakly decreasing".into()));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be exactly 1..={n}, offending entry {e}"
                )));
            }
            seen[e] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if let Some(c) = (0..row.len()).find(|&c| above[c] >= row[c]) {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    /// Builds the tableau that places entry `i` in column `columns[i - 1]`
    /// (1-based columns), filling each column top to bottom in increasing
    /// order.
    pub fn from_column_assignment(columns: &[usize]) -> Result<Self> {
        let width = columns.iter().copied().max().unwrap_or(0);
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); width];
        for (idx, &c) in columns.iter().enumerate() {
            if c == 0 {
                return Err(Error::InvalidTableau("column indices are 1-based".into()));
            }
            cols[c - 1].push(idx + 1);
        }
        Self::from_columns(cols)
    }

    /// Builds the tableau that places entry `i` in row `rows_of[i - 1]`
    /// (1-based), filling each row left to right in increasing order.
    pub fn from_row_assignment(rows_of: &[usize]) -> Result<Self> {
        let height = rows_of.iter().copied().max().unwrap_or(0);
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); height];
        for (idx, &r) in rows_of.iter().enumerate() {
            if r == 0 {
                return Err(Error::InvalidTableau("row indices are 1-based".into()));
            }
            rows[r - 1].push(idx + 1);
        }
        StandardTableau::new(rows)
    }

    fn from_columns(cols: Vec<Vec<usize>>) -> Result<Self> {
        let height = cols.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for col in &cols {
            if col.len() > height {
                return Err(Error::InvalidTableau("column lengths must be weakly decreasing".into()));
            }
            for (r, &e) in col.iter().enumerate() {
                rows[r].push(e);
            }
        }
        StandardTableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    /// Column contents, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    /// 0-based `(row, column)` of `entry`.
    pub fn position(&self, entry: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&e| e == entry).map(|c| (r, c)))
    }

    /// For each entry `1..=n`, its 1-based column.
    pub fn column_assignment(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for row in &self.rows {
            for (c, &e) in row.iter().enumerate() {
                out[e - 1] = c + 1;
            }
        }
        out
    }

    /// Rows become columns.
    pub fn transpose(&self) -> StandardTableau {
        StandardTableau { rows: self.columns() }
    }

    /// The subtableau formed by the entries `1..=m`.
    pub fn restrict(&self, m: usize) -> StandardTableau {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&e| e <= m).collect::<Vec<_>>())
            .filter(|r: &Vec<usize>| !r.is_empty())
            .collect();
        StandardTableau { rows }
    }

    /// Shapes of the subtableaux of entries `1..=i` for `i = 1..=n`.
    pub fn shape_chain(&self) -> Vec<Partition> {
        let mut lens = vec![0usize; self.rows.len()];
        let mut row_of = vec![0; self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = r;
            }
        }
        (1..=self.n())
            .map(|e| {
                lens[row_of[e]] += 1;
                Partition::new(lens.iter().copied().take_while(|&l| l > 0).collect())
                    .expect("subtableau of a standard tableau has a partition shape")
            })
            .collect()
    }

    /// Row-wise concatenation: row `j` of `self` followed by row `j` of
    /// `other` shifted by `self.n()`.
    pub fn sum(&self, other: &StandardTableau) -> Result<StandardTableau> {
        let shift = self.n();
        let len = self.rows.len().max(other.rows.len());
        let rows: Vec<Vec<usize>> = (0..len)
            .map(|j| {
                let mut row = self.rows.get(j).cloned().unwrap_or_default();
                if let Some(r2) = other.rows.get(j) {
                    row.extend(r2.iter().map(|&e| e + shift));
                }
                row
            })
            .collect();
        StandardTableau::new(rows).map_err(|e| Error::ShapeMismatch(e.to_string()))
    }

    /// Schützenberger evacuation: repeatedly delete the smallest entry, slide
    /// the hole out to an outer corner by jeu de taquin, and record the vacated
    /// corner with the complemented label.
    pub fn evacuation(&self) -> StandardTableau {
        let n = self.n();
        let mut work = self.rows.clone();
        let mut out: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for k in 0..n {
            let (mut r, mut c) = (0usize, 0usize);
            loop {
                let right = work[r].get(c + 1).copied();
                let below = work.get(r + 1).and_then(|row| row.get(c)).copied();
                let step = match (right, below) {
                    (Some(a), Some(b)) => Some(if a < b { (r, c + 1) } else { (r + 1, c) }),
                    (Some(_), None) => Some((r, c + 1)),
                    (None, Some(_)) => Some((r + 1, c)),
                    (None, None) => None,
                };
                match step {
                    Some((nr, nc)) => {
                        work[r][c] = work[nr][nc];
                        r = nr;
                        c = nc;
                    }
                    None => break,
                }
            }
            work[r].pop();
            if work[r].is_empty() {
                work.pop();
            }
            out[r][c] = n - k;
        }
        StandardTableau { rows: out }
    }

    /// Entries in reading order: rows top to bottom, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// All standard tableaux of the given shape, ordered lexicographically by
/// reading word.
pub fn enumerate_standard(shape: &Partition) -> Result<Vec<StandardTableau>> {
    enumerate_standard_bounded(shape, DEFAULT_TABLEAU_BOUND)
}

pub fn enumerate_standard_bounded(shape: &Partition, bound: usize) -> Result<Vec<StandardTableau>> {
    check_bound("standard tableau enumeration", shape.size(), bound)?;
    let parts = shape.parts();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill(parts, &mut rows, 1, shape.size(), &mut out);
    out.sort_by_cached_key(StandardTableau::reading_word);
    Ok(out)
}

fn fill(
    shape: &[usize],
    rows: &mut [Vec<usize>],
    next: usize,
    n: usize,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau { rows: rows.to_vec() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits_row = len < shape[r];
        let fits_col = r == 0 || rows[r - 1].len() > len;
        if fits_row && fits_col {
            rows[r].push(next);
            fill(shape, rows, next + 1, n, out);
            rows[r].pop();
        }
    }
}

/// The tableau attached to an ordering of block sizes: entry `i` sits in the
/// column given by its position inside its consecutive block.
pub fn tableau_from_composition(composition: &Composition) -> StandardTableau {
    LinkPattern::from_composition(composition).tableau()
}

/// The tableau attached to an ordering of column lengths: the `m`-th entry of
/// each consecutive group lands in row `m`.
pub fn tableau_from_cocomposition(composition: &Composition) -> Result<StandardTableau> {
    let rows_of: Vec<usize> = composition.parts().iter().flat_map(|&len| 1..=len).collect();
    StandardTableau::from_row_assignment(&rows_of)
        .map_err(|e| Error::Invariant(format!("column filling of {composition} failed: {e}")))
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str(" / ")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        if s.trim().is_empty() {
            return Ok(StandardTableau::empty());
        }
        for chunk in s.split('/') {
            let row = chunk
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        what: "tableau",
                        token: t.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        StandardTableau::new(rows)
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::partitions_of;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    /// Number of maximal chains of subdiagrams ending at `shape`.
    fn chain_count(shape: &[usize]) -> usize {
        if shape.is_empty() {
            return 1;
        }
        (0..shape.len())
            .filter(|&r| r + 1 == shape.len() || shape[r] > shape[r + 1])
            .map(|r| {
                let mut smaller = shape.to_vec();
                smaller[r] -= 1;
                if smaller[r] == 0 {
                    smaller.remove(r);
                }
                chain_count(&smaller)
            })
            .sum()
    }

    #[test]
    fn validation() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![4]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn enumeration_small_shapes() {
        assert_eq!(enumerate_standard(&p(&[1, 1, 1])).unwrap().len(), 1);
        let two_one = enumerate_standard(&p(&[2, 1])).unwrap();
        assert_eq!(two_one, vec![t("1 2 / 3"), t("1 3 / 2")]);
        assert_eq!(enumerate_standard(&p(&[2, 2])).unwrap().len(), 2);
        assert_eq!(enumerate_standard(&Partition::empty()).unwrap(), vec![StandardTableau::empty()]);
        assert!(matches!(
            enumerate_standard(&Partition::row(13)),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn enumeration_counts_and_validity() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let all = enumerate_standard(&lam).unwrap();
                assert_eq!(all.len(), chain_count(lam.parts()), "{lam}");
                for tab in &all {
                    assert_eq!(StandardTableau::new(tab.rows().to_vec()).as_ref(), Ok(tab));
                    assert_eq!(tab.shape(), lam);
                }
                assert!(all.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
            }
        }
        for n in 9..=10 {
            for lam in partitions_of(n) {
                let here = enumerate_standard(&lam).unwrap().len();
                let there = enumerate_standard(&lam.conjugate()).unwrap().len();
                assert_eq!(here, there);
            }
        }
    }

    #[test]
    fn transpose_example() {
        let tab = t("1 3 8 / 2 5 / 4 6 / 7");
        assert_eq!(tab.transpose(), t("1 2 4 7 / 3 5 6 / 8"));
        assert_eq!(t("1 2 3").transpose(), t("1 / 2 / 3"));
        for tab in enumerate_standard(&p(&[3, 2, 2, 1])).unwrap() {
            assert_eq!(tab.transpose().transpose(), tab);
            assert_eq!(tab.transpose().shape(), tab.shape().conjugate());
        }
    }

    #[test]
    fn composition_tableaux() {
        assert_eq!(tableau_from_composition(&c(&[2, 3, 1, 2])), t("1 2 5 / 3 4 / 6 8 / 7"));
        assert_eq!(tableau_from_composition(&c(&[1, 2, 2, 1])), t("1 3 / 2 5 / 4 / 6"));
        assert_eq!(tableau_from_composition(&c(&[2, 3, 2])), t("1 2 5 / 3 4 / 6 7"));
        assert_eq!(tableau_from_composition(&c(&[4])), t("1 2 3 4"));
    }

    #[test]
    fn cocomposition_tableaux() {
        assert_eq!(tableau_from_cocomposition(&c(&[1, 1, 1, 1])).unwrap(), t("1 2 3 4"));
        assert_eq!(tableau_from_cocomposition(&c(&[4])).unwrap(), t("1 / 2 / 3 / 4"));
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for pi in lam.distinct_permutations() {
                    let direct = tableau_from_cocomposition(&pi).unwrap();
                    assert_eq!(direct, tableau_from_composition(&pi).transpose());
                    assert_eq!(direct.shape(), lam.conjugate());
                }
            }
        }
    }

    #[test]
    fn shape_chains() {
        let chain = t("1 2 3").shape_chain();
        assert_eq!(chain, vec![p(&[1]), p(&[2]), p(&[3])]);
        let chain = t("1 3 / 2").shape_chain();
        assert_eq!(chain, vec![p(&[1]), p(&[1, 1]), p(&[2, 1])]);
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for tab in enumerate_standard(&lam).unwrap() {
                    let chain = tab.shape_chain();
                    assert_eq!(chain.len(), n);
                    assert_eq!(chain.last(), Some(&lam));
                    for (i, sh) in chain.iter().enumerate() {
                        assert_eq!(sh.size(), i + 1);
                        assert_eq!(sh, &tab.restrict(i + 1).shape());
                    }
                }
            }
        }
    }

    #[test]
    fn sum_example() {
        let t1 = t("1 2 / 3 / 4 / 5");
        let t2 = t("1 3 / 2 4");
        assert_eq!(t1.sum(&t2).unwrap(), t("1 2 6 8 / 3 7 9 / 4 / 5"));
        assert_eq!(t1.sum(&StandardTableau::empty()).unwrap(), t1);
        assert_eq!(StandardTableau::empty().sum(&t1).unwrap(), t1);
    }

    #[test]
    fn sum_shapes() {
        let mut all = Vec::new();
        for n in 0..=6 {
            for lam in partitions_of(n) {
                all.extend(enumerate_standard(&lam).unwrap());
            }
        }
        for a in &all {
            for b in &all {
                if a.n() + b.n() > 8 {
                    continue;
                }
                let s = a.sum(b).unwrap();
                assert_eq!(s.shape(), a.shape().row_sum(&b.shape()));
            }
        }
    }

    #[test]
    fn evacuation_basics() {
        assert_eq!(t("1 2 3 4").evacuation(), t("1 2 3 4"));
        assert_eq!(t("1 / 2 / 3").evacuation(), t("1 / 2 / 3"));
        for tab in enumerate_standard(&p(&[3, 2, 1])).unwrap() {
            let e = tab.evacuation();
            assert_eq!(e.shape(), tab.shape());
            assert_eq!(e.evacuation(), tab);
        }
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for tab in enumerate_standard(&lam).unwrap() {
                    let e = tab.evacuation();
                    assert!(StandardTableau::new(e.rows().to_vec()).is_ok());
                    assert_eq!(e.evacuation(), tab);
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        let tab = t("1 2 5 / 3 4 / 6 8 / 7");
        assert_eq!(tab.to_string(), "1 2 5 / 3 4 / 6 8 / 7");
        let json = serde_json::to_string(&tab).unwrap();
        assert_eq!(json, "[[1,2,5],[3,4],[6,8],[7]]");
        let back: StandardTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tab);
        assert!(serde_json::from_str::<StandardTableau>("[[2,1]]").is_err());
        assert!(matches!("1 x / 2".parse::<StandardTableau>(), Err(Error::Parse { .. })));
    }
}
