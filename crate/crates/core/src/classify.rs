//! Classification of components by tableau.
//!
//! A tableau is Bala-Carter when it is `T_π` for an ordering `π` of its row
//! lengths, Richardson when its transpose is Bala-Carter, generalized
//! Bala-Carter when it is `T_π` for a pattern in `Π^1`, and generalized
//! Richardson when its transpose is generalized Bala-Carter. Singularity is
//! decided only where a criterion applies; everything else is `Unknown`.

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{check_bound, Error, Result};
use crate::linkpatterns::LinkPattern;
use crate::shapes::{contains_pattern, has_singular_component, jordan_type_all_smooth, Composition, Partition};
use crate::tableaux::{enumerate_standard_bounded, tableau_from_composition, StandardTableau};

pub const DEFAULT_CLASSIFY_BOUND: usize = 10;

/// Compositions whose containment makes a Bala-Carter component singular.
pub const SINGULAR_PATTERNS: [&[usize]; 2] = [&[1, 2, 2, 1], &[2, 3, 2]];

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub pattern: Vec<usize>,
    /// 1-based positions of the matched parts.
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BcVerdict {
    Singular(Witness),
    Smooth,
}

impl BcVerdict {
    pub fn is_singular(&self) -> bool {
        matches!(self, BcVerdict::Singular(_))
    }
}

pub fn bc_is_singular(composition: &Composition) -> BcVerdict {
    for pattern in SINGULAR_PATTERNS {
        if let Some(indices) = contains_pattern(composition.parts(), pattern) {
            return BcVerdict::Singular(Witness {
                pattern: pattern.to_vec(),
                indices,
            });
        }
    }
    BcVerdict::Smooth
}

/// Whether every ordering of `shape` gives a singular Bala-Carter component.
pub fn all_bc_singular(shape: &Partition) -> bool {
    shape
        .distinct_permutations()
        .iter()
        .all(|c| bc_is_singular(c).is_singular())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmoothReason {
    BalaCarterCriterion,
    Richardson,
    IteratedBundle,
    Shape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Singularity {
    Singular(Witness),
    Smooth(SmoothReason),
    Unknown,
}

impl Singularity {
    pub fn label(&self) -> &'static str {
        match self {
            Singularity::Singular(_) => "singular",
            Singularity::Smooth(_) => "smooth",
            Singularity::Unknown => "unknown",
        }
    }
}

impl Serialize for Singularity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Singularity", 3)?;
        s.serialize_field("verdict", self.label())?;
        match self {
            Singularity::Singular(w) => {
                s.serialize_field("witness", w)?;
                s.serialize_field("reason", &None::<SmoothReason>)?;
            }
            Singularity::Smooth(r) => {
                s.serialize_field("witness", &None::<Witness>)?;
                s.serialize_field("reason", r)?;
            }
            Singularity::Unknown => {
                s.serialize_field("witness", &None::<Witness>)?;
                s.serialize_field("reason", &None::<SmoothReason>)?;
            }
        }
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub tableau: StandardTableau,
    pub shape: Partition,
    pub dim: u64,
    pub is_bala_carter: bool,
    pub bc_composition: Option<Composition>,
    pub is_richardson: bool,
    pub is_generalized_bc: bool,
    pub gen_bc_pattern: Option<LinkPattern>,
    pub is_generalized_richardson: bool,
    pub singular: Singularity,
    pub bundle_base: Option<Vec<usize>>,
}

impl ComponentReport {
    pub fn classes(&self) -> Vec<&'static str> {
        [
            (self.is_bala_carter, "BC"),
            (self.is_richardson, "R"),
            (self.is_generalized_bc, "genBC"),
            (self.is_generalized_richardson, "genR"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

impl Serialize for ComponentReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ComponentReport", 8)?;
        s.serialize_field("tableau", &self.tableau)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("class", &self.classes())?;
        s.serialize_field("bc_composition", &self.bc_composition)?;
        s.serialize_field("gen_bc_pattern", &self.gen_bc_pattern)?;
        s.serialize_field("singular", &self.singular)?;
        s.serialize_field("bundle_base", &self.bundle_base)?;
        s.serialize_field("dim", &self.dim)?;
        s.end()
    }
}

/// The composition `π` with `T = T_π`, if any. `T_π` places the entries of
/// each consecutive group in columns `1, 2, ...`, so `π` is read off the
/// column assignment.
pub fn bc_composition(tableau: &StandardTableau) -> Option<Composition> {
    let cols = tableau.column_assignment();
    let mut parts: Vec<usize> = Vec::new();
    for (k, &c) in cols.iter().enumerate() {
        if c == 1 {
            parts.push(1);
        } else if k > 0 && cols[k - 1] + 1 == c {
            *parts.last_mut()? += 1;
        } else {
            return None;
        }
    }
    let comp = Composition::new(parts).ok()?;
    (tableau_from_composition(&comp) == *tableau).then_some(comp)
}

/// A pattern in `Π^1` whose tableau is `T`, found by backtracking over
/// predecessor choices compatible with the columns of `T`. Crossings are
/// pruned as arcs are added; nesting is checked on complete patterns.
pub fn generalized_bc_pattern(tableau: &StandardTableau) -> Option<LinkPattern> {
    let cols = tableau.column_assignment();
    let n = cols.len();
    let mut pred = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    let mut found = None;
    search(tableau, &cols, 1, &mut pred, &mut used, &mut found);
    found
}

fn search(
    tableau: &StandardTableau,
    cols: &[usize],
    i: usize,
    pred: &mut [usize],
    used: &mut [bool],
    found: &mut Option<LinkPattern>,
) {
    let n = cols.len();
    if found.is_some() {
        return;
    }
    if i > n {
        let pattern = pattern_from_pred(pred, n);
        if pattern.in_pi1() && pattern.tableau() == *tableau {
            *found = Some(pattern);
        }
        return;
    }
    let c = cols[i - 1];
    if c == 1 {
        pred[i] = 0;
        search(tableau, cols, i + 1, pred, used, found);
        return;
    }
    for p in 1..i {
        if used[p] || cols[p - 1] + 1 != c {
            continue;
        }
        // an earlier arc (q, j) crosses (p, i) when q < p < j
        let crosses = (p + 1..i).any(|j| pred[j] != 0 && pred[j] < p);
        if crosses {
            continue;
        }
        pred[i] = p;
        used[p] = true;
        search(tableau, cols, i + 1, pred, used, found);
        used[p] = false;
        if found.is_some() {
            return;
        }
    }
    pred[i] = 0;
}

fn pattern_from_pred(pred: &[usize], n: usize) -> LinkPattern {
    let mut block_of = vec![usize::MAX; n + 1];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 1..=n {
        if pred[i] == 0 {
            block_of[i] = blocks.len();
            blocks.push(vec![i]);
        } else {
            block_of[i] = block_of[pred[i]];
            blocks[block_of[i]].push(i);
        }
    }
    LinkPattern::from_blocks(blocks, n).expect("predecessor map yields a set partition")
}

/// Projective-space dimensions of the iterated bundle structure on a
/// generalized Richardson component: `1..c-1` for each column length `c` of
/// the shape.
pub fn fiber_bundle_base(tableau: &StandardTableau) -> Result<Vec<usize>> {
    if generalized_bc_pattern(&tableau.transpose()).is_none() {
        return Err(Error::NotApplicable(format!(
            "{tableau} is not generalized Richardson"
        )));
    }
    Ok(flat_base(&tableau.shape()))
}

fn flat_base(shape: &Partition) -> Vec<usize> {
    shape.conjugate().parts().iter().flat_map(|&c| 1..c).collect()
}

/// The bundle tower for the transpose of `T_π`, built by the induction on
/// `π ∈ Π^1`: peel off `n` when it shares a block with `1`, otherwise split
/// at the largest element of the block of `1`. Bases are listed innermost
/// first.
pub fn bundle_tower(pattern: &LinkPattern) -> Result<Vec<usize>> {
    if !pattern.in_pi1() {
        return Err(Error::NotApplicable(format!("{pattern} is not in Π^1")));
    }
    Ok(tower(pattern))
}

fn tower(pattern: &LinkPattern) -> Vec<usize> {
    let n = pattern.n();
    if n == 0 {
        return Vec::new();
    }
    let first = &pattern.blocks()[pattern.block_of(1)];
    let n1 = *first.last().unwrap();
    if n1 == n {
        let mut out = tower(&pattern.remove_last());
        if first.len() > 1 {
            out.push(first.len() - 1);
        }
        return out;
    }
    let split = |lo: usize, hi: usize| {
        let blocks: Vec<Vec<usize>> = pattern
            .blocks()
            .iter()
            .filter(|b| b[0] >= lo && b[0] <= hi)
            .map(|b| b.iter().map(|&e| e + 1 - lo).collect())
            .collect();
        LinkPattern::from_blocks(blocks, hi + 1 - lo).expect("Π^1 patterns split at n1")
    };
    let mut out = tower(&split(1, n1));
    out.extend(tower(&split(n1 + 1, n)));
    out
}

pub fn classify_tableau(tableau: &StandardTableau) -> Result<ComponentReport> {
    classify_tableau_bounded(tableau, DEFAULT_CLASSIFY_BOUND)
}

pub fn classify_tableau_bounded(tableau: &StandardTableau, bound: usize) -> Result<ComponentReport> {
    check_bound("classification", tableau.n(), bound)?;
    let shape = tableau.shape();
    let transpose = tableau.transpose();
    let bc = bc_composition(tableau);
    let is_richardson = bc_composition(&transpose).is_some();
    let gen_bc_pattern = generalized_bc_pattern(tableau);
    let is_generalized_richardson = generalized_bc_pattern(&transpose).is_some();

    let singular = match &bc {
        Some(c) => match bc_is_singular(c) {
            BcVerdict::Singular(w) => Singularity::Singular(w),
            BcVerdict::Smooth => Singularity::Smooth(SmoothReason::BalaCarterCriterion),
        },
        None if is_richardson => Singularity::Smooth(SmoothReason::Richardson),
        None if is_generalized_richardson => Singularity::Smooth(SmoothReason::IteratedBundle),
        None if jordan_type_all_smooth(&shape) => Singularity::Smooth(SmoothReason::Shape),
        None => Singularity::Unknown,
    };

    Ok(ComponentReport {
        tableau: tableau.clone(),
        dim: shape.springer_dim(),
        bundle_base: is_generalized_richardson.then(|| flat_base(&shape)),
        shape,
        is_bala_carter: bc.is_some(),
        bc_composition: bc,
        is_richardson,
        is_generalized_bc: gen_bc_pattern.is_some(),
        gen_bc_pattern,
        is_generalized_richardson,
        singular,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct ShapeSummary {
    pub components: usize,
    pub bala_carter: usize,
    pub richardson: usize,
    pub generalized_bc: usize,
    pub generalized_richardson: usize,
    pub singular: usize,
    pub smooth: usize,
    pub unknown: usize,
    pub exists_singular: bool,
    pub all_bc_singular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ShapeClassification {
    pub shape: Partition,
    pub reports: Vec<ComponentReport>,
    pub summary: ShapeSummary,
}

pub fn classify_shape(shape: &Partition) -> Result<ShapeClassification> {
    classify_shape_bounded(shape, DEFAULT_CLASSIFY_BOUND)
}

pub fn classify_shape_bounded(shape: &Partition, bound: usize) -> Result<ShapeClassification> {
    check_bound("classification", shape.size(), bound)?;
    let tableaux = enumerate_standard_bounded(shape, bound.max(shape.size()))?;
    let reports = tableaux
        .par_iter()
        .map(|t| classify_tableau_bounded(t, bound))
        .collect::<Result<Vec<_>>>()?;
    let mut summary = ShapeSummary {
        components: reports.len(),
        exists_singular: has_singular_component(shape),
        all_bc_singular: all_bc_singular(shape),
        ..ShapeSummary::default()
    };
    for r in &reports {
        summary.bala_carter += r.is_bala_carter as usize;
        summary.richardson += r.is_richardson as usize;
        summary.generalized_bc += r.is_generalized_bc as usize;
        summary.generalized_richardson += r.is_generalized_richardson as usize;
        match r.singular {
            Singularity::Singular(_) => summary.singular += 1,
            Singularity::Smooth(_) => summary.smooth += 1,
            Singularity::Unknown => summary.unknown += 1,
        }
    }
    Ok(ShapeClassification {
        shape: shape.clone(),
        reports,
        summary,
    })
}

/// Dimension of the component of `T1 + T2`, checked against the sum of the
/// dimensions of the two summands.
pub fn sum_component_dims(t1: &StandardTableau, t2: &StandardTableau) -> Result<u64> {
    let total = t1.sum(t2)?.shape().springer_dim();
    let parts = t1.shape().springer_dim() + t2.shape().springer_dim();
    if total != parts {
        return Err(Error::Invariant(format!(
            "dimension of {t1} + {t2} is {total}, summands give {parts}"
        )));
    }
    Ok(total)
}
