//! JSON records and their text renderings for each subcommand.

use std::fmt::Write;

use serde::Serialize;
use springer_core::classify::{
    bc_is_singular, classify_shape_bounded, fiber_bundle_base, BcVerdict, ShapeSummary,
};
use springer_core::orbits::analyze_orbit;
use springer_core::shapes::{has_singular_component, jordan_type_all_smooth};
use springer_core::tableaux::tableau_from_composition;
use springer_core::{
    Composition, ComponentReport, LinkPattern, Partition, Result, Singularity, SmoothReason, StandardTableau,
};

use crate::TOOL_VERSION;

#[derive(Debug, Clone, Serialize)]
pub struct AtlasRecord {
    pub kind: &'static str,
    pub shape: Partition,
    pub n: usize,
    pub conjugate: Partition,
    pub springer_dim: u64,
    pub stabilizer_dim: u64,
    pub all_smooth: bool,
    pub reports: Vec<ComponentReport>,
    pub summary: ShapeSummary,
    pub tool_version: &'static str,
}

pub fn atlas_record(shape: &Partition, bound: usize) -> Result<AtlasRecord> {
    let classified = classify_shape_bounded(shape, bound)?;
    Ok(AtlasRecord {
        kind: "atlas",
        shape: shape.clone(),
        n: shape.size(),
        conjugate: shape.conjugate(),
        springer_dim: shape.springer_dim(),
        stabilizer_dim: shape.stabilizer_dim(),
        all_smooth: jordan_type_all_smooth(shape),
        reports: classified.reports,
        summary: classified.summary,
        tool_version: TOOL_VERSION,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tableau_lines(out: &mut String, t: &StandardTableau) {
    if t.n() == 0 {
        let _ = writeln!(out, "    (empty)");
    }
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>2}")).collect();
        let _ = writeln!(out, "    {}", cells.join(" "));
    }
}

fn singularity_text(s: &Singularity) -> String {
    match s {
        Singularity::Singular(w) => format!(
            "singular (contains {:?} at positions {:?})",
            w.pattern, w.indices
        ),
        Singularity::Smooth(reason) => {
            let why = match reason {
                SmoothReason::BalaCarterCriterion => "Bala-Carter criterion",
                SmoothReason::Richardson => "Richardson",
                SmoothReason::IteratedBundle => "iterated bundle",
                SmoothReason::Shape => "shape",
            };
            format!("smooth ({why})")
        }
        Singularity::Unknown => "unknown".into(),
    }
}

pub fn atlas_text(r: &AtlasRecord) -> String {
    let s = &r.summary;
    let mut out = String::new();
    let _ = writeln!(out, "shape            {}", r.shape);
    let _ = writeln!(out, "n                {}", r.n);
    let _ = writeln!(out, "conjugate        {}", r.conjugate);
    let _ = writeln!(out, "dim B_u          {}", r.springer_dim);
    let _ = writeln!(out, "dim Z_u          {}", r.stabilizer_dim);
    let _ = writeln!(out, "components       {}", s.components);
    let _ = writeln!(out, "  Bala-Carter    {}", s.bala_carter);
    let _ = writeln!(out, "  Richardson     {}", s.richardson);
    let _ = writeln!(out, "  gen. BC        {}", s.generalized_bc);
    let _ = writeln!(out, "  gen. R         {}", s.generalized_richardson);
    let _ = writeln!(
        out,
        "verdicts         {} singular, {} smooth, {} unknown",
        s.singular, s.smooth, s.unknown
    );
    let _ = writeln!(out, "exists singular  {}", yes_no(s.exists_singular));
    let _ = writeln!(out, "all smooth       {}", yes_no(r.all_smooth));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionRecord {
    pub kind: &'static str,
    pub composition: Composition,
    pub shape: Partition,
    pub tableau: StandardTableau,
    pub singular: Singularity,
    pub dim: u64,
    pub dual_tableau: StandardTableau,
    pub dual_shape: Partition,
    pub dual_bundle_base: Vec<usize>,
    pub dual_dim: u64,
    pub tool_version: &'static str,
}

pub fn composition_record(pi: &Composition) -> Result<CompositionRecord> {
    let tableau = tableau_from_composition(pi);
    let dual = tableau.transpose();
    let singular = match bc_is_singular(pi) {
        BcVerdict::Singular(w) => Singularity::Singular(w),
        BcVerdict::Smooth => Singularity::Smooth(SmoothReason::BalaCarterCriterion),
    };
    let shape = pi.sorted();
    let dual_shape = shape.conjugate();
    Ok(CompositionRecord {
        kind: "composition",
        composition: pi.clone(),
        dim: shape.springer_dim(),
        dual_dim: dual_shape.springer_dim(),
        dual_bundle_base: fiber_bundle_base(&dual)?,
        shape,
        dual_shape,
        tableau,
        singular,
        dual_tableau: dual,
        tool_version: TOOL_VERSION,
    })
}

pub fn composition_text(r: &CompositionRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "composition      {}", r.composition);
    let _ = writeln!(out, "shape            {}", r.shape);
    let _ = writeln!(out, "T_pi");
    tableau_lines(&mut out, &r.tableau);
    let _ = writeln!(out, "component        {}", singularity_text(&r.singular));
    let _ = writeln!(out, "dim              {}", r.dim);
    let _ = writeln!(out, "dual tableau     (shape {})", r.dual_shape);
    tableau_lines(&mut out, &r.dual_tableau);
    let _ = writeln!(out, "dual bundle base {:?}", r.dual_bundle_base);
    let _ = writeln!(out, "dual dim         {}", r.dual_dim);
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct PatternRecord {
    pub kind: &'static str,
    pub pattern: LinkPattern,
    pub jordan_type: Partition,
    pub crossings: Vec<(usize, usize)>,
    /// Pairs of blocks `(inner, outer)` as element lists.
    pub nesting_violations: Vec<(Vec<usize>, Vec<usize>)>,
    pub standard: bool,
    pub in_pi1: bool,
    pub tableau: StandardTableau,
    pub a_size: u64,
    pub orbit_dim: u64,
    pub springer_dim: u64,
    pub dense: bool,
    pub tool_version: &'static str,
}

pub fn pattern_record(p: &LinkPattern) -> PatternRecord {
    let orbit = analyze_orbit(p);
    let blocks = p.blocks();
    PatternRecord {
        kind: "pattern",
        pattern: p.clone(),
        jordan_type: p.jordan_type(),
        crossings: p.crossings(),
        nesting_violations: p
            .nesting_violations()
            .into_iter()
            .map(|(inner, outer)| (blocks[inner].clone(), blocks[outer].clone()))
            .collect(),
        standard: p.is_standard(),
        in_pi1: p.in_pi1(),
        tableau: p.tableau(),
        a_size: orbit.stab_dim,
        orbit_dim: orbit.orbit_dim,
        springer_dim: orbit.springer_dim,
        dense: orbit.dense,
        tool_version: TOOL_VERSION,
    }
}

pub fn pattern_text(r: &PatternRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pattern          {}", r.pattern);
    let _ = writeln!(out, "jordan type      {}", r.jordan_type);
    let arc = |k: usize| match r.pattern.pred(Some(k)) {
        Some(p) => format!("{p}-{k}"),
        None => k.to_string(),
    };
    let crossings: Vec<String> = r
        .crossings
        .iter()
        .map(|&(i, j)| format!("{} x {}", arc(j), arc(i)))
        .collect();
    let _ = writeln!(
        out,
        "crossings        {}",
        if crossings.is_empty() { "none".into() } else { crossings.join(", ") }
    );
    let nestings: Vec<String> = r
        .nesting_violations
        .iter()
        .map(|(a, b)| format!("{a:?} inside {b:?}"))
        .collect();
    let _ = writeln!(
        out,
        "nesting faults   {}",
        if nestings.is_empty() { "none".into() } else { nestings.join(", ") }
    );
    let _ = writeln!(out, "standard (Pi^0)  {}", yes_no(r.standard));
    let _ = writeln!(out, "in Pi^1          {}", yes_no(r.in_pi1));
    let _ = writeln!(out, "T_pi");
    tableau_lines(&mut out, &r.tableau);
    let _ = writeln!(out, "|A(pi)|          {}", r.a_size);
    let _ = writeln!(out, "orbit dim        {}", r.orbit_dim);
    let _ = writeln!(out, "dim B_u          {}", r.springer_dim);
    let _ = writeln!(out, "dense            {}", yes_no(r.dense));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexEntry {
    pub shape: Partition,
    pub file: String,
    pub components: usize,
    pub exists_singular: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasIndex {
    pub kind: &'static str,
    pub max_n: usize,
    pub shapes: Vec<IndexEntry>,
    pub tool_version: &'static str,
}

pub fn atlas_file_name(shape: &Partition) -> String {
    let parts: Vec<String> = shape.parts().iter().map(|p| p.to_string()).collect();
    format!("atlas_{}.json", parts.join("-"))
}

pub fn index_entry(record: &AtlasRecord) -> IndexEntry {
    IndexEntry {
        shape: record.shape.clone(),
        file: atlas_file_name(&record.shape),
        components: record.summary.components,
        exists_singular: has_singular_component(&record.shape),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names() {
        assert_eq!(atlas_file_name(&"3,2,2".parse().unwrap()), "atlas_3-2-2.json");
        assert_eq!(atlas_file_name(&"1".parse().unwrap()), "atlas_1.json");
    }

    #[test]
    fn shape_fixture() {
        let r = atlas_record(&"2,2,1,1".parse().unwrap(), 10).unwrap();
        assert_eq!(r.springer_dim, 7);
        assert_eq!(r.summary.bala_carter, 6);
        assert_eq!(r.summary.singular, 1);
        let text = atlas_text(&r);
        assert!(text.contains("dim B_u          7"));
        assert!(text.contains("exists singular  yes"));
    }

    #[test]
    fn composition_fixture() {
        let r = composition_record(&"2,3,1,2".parse().unwrap()).unwrap();
        assert_eq!(r.tableau.to_string(), "1 2 5 / 3 4 / 6 8 / 7");
        assert_eq!(r.dual_bundle_base.iter().sum::<usize>() as u64, r.dual_dim);
        let r = composition_record(&"1,2,2,1".parse().unwrap()).unwrap();
        assert!(matches!(r.singular, Singularity::Singular(_)));
    }

    #[test]
    fn pattern_fixture() {
        let r = pattern_record(&"1 2 5 | 3 4 | 6 7".parse().unwrap());
        assert!(!r.in_pi1 && r.crossings.is_empty() && !r.nesting_violations.is_empty());
        let r = pattern_record(&"1 5 | 2 3 4 | 6 7".parse().unwrap());
        assert!(r.in_pi1 && r.dense);
    }
}
