//! Property sweeps behind `verify`. Each sweep returns the number of checks
//! made or the first counterexample in enumeration order.

use rayon::prelude::*;
use springer_core::classify::{
    bc_composition, classify_shape_bounded, fiber_bundle_base, generalized_bc_pattern,
};
use springer_core::linkpatterns::{enumerate_patterns_bounded, PatternFilter};
use springer_core::oracle::{
    commutant_dim, flag_stabilizer_dim, jordan_type_chain, DEFAULT_CHAIN_BOUND, DEFAULT_FLAG_BOUND,
};
use springer_core::orbits::{a_set, analyze_orbit, inductive_report};
use springer_core::shapes::partitions_of;
use springer_core::tableaux::{enumerate_standard_bounded, tableau_from_composition};
use springer_core::{Error, LinkPattern, Partition, StandardTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Dims,
    Orbits,
    Duality,
    Evacuation,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Dims, Suite::Orbits, Suite::Duality, Suite::Evacuation],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Orbits => "orbits",
            Suite::Duality => "duality",
            Suite::Evacuation => "evacuation",
            Suite::All => "all",
        }
    }
}

#[derive(Debug)]
pub enum SweepError {
    /// A property failed; the message names the counterexample.
    Counterexample(String),
    Core(Error),
}

impl From<Error> for SweepError {
    fn from(e: Error) -> Self {
        SweepError::Core(e)
    }
}

pub type Sweep = Result<usize, SweepError>;

fn check<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Option<String>, Error> + Sync) -> Sweep {
    let first = items
        .par_iter()
        .map(&f)
        .find_map_first(|r| match r {
            Ok(None) => None,
            Ok(Some(msg)) => Some(SweepError::Counterexample(msg)),
            Err(e) => Some(SweepError::Core(e)),
        });
    match first {
        Some(e) => Err(e),
        None => Ok(items.len()),
    }
}

fn shapes(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(partitions_of).collect()
}

fn patterns(max_n: usize, bound: usize, filter: PatternFilter) -> Result<Vec<LinkPattern>, Error> {
    let mut out = Vec::new();
    for lam in shapes(max_n) {
        out.extend(enumerate_patterns_bounded(&lam, filter, bound)?);
    }
    Ok(out)
}

fn tableaux(max_n: usize, bound: usize) -> Result<Vec<StandardTableau>, Error> {
    let mut out = Vec::new();
    for lam in shapes(max_n) {
        out.extend(enumerate_standard_bounded(&lam, bound)?);
    }
    Ok(out)
}

/// Oracle dimensions against closed formulas: commutant, flag stabilizer and
/// Jordan chain.
pub fn dims(max_n: usize, bound: usize) -> Sweep {
    let oracle_bound = DEFAULT_FLAG_BOUND.min(DEFAULT_CHAIN_BOUND);
    if max_n > oracle_bound {
        return Err(Error::SizeBound {
            what: "oracle sweep",
            n: max_n,
            bound: oracle_bound,
        }
        .into());
    }
    let mut total = check(&shapes(max_n), |lam| {
        let oracle = commutant_dim(lam)?;
        let formula = lam.stabilizer_dim();
        Ok((oracle != formula).then(|| format!("shape {lam}: commutant {oracle}, formula {formula}")))
    })?;
    let all = patterns(max_n, bound, PatternFilter::All)?;
    total += check(&all, |p| {
        let oracle = flag_stabilizer_dim(p)?;
        let count = a_set(p).len() as u64;
        Ok((oracle != count).then(|| format!("pattern {p}: flag stabilizer {oracle}, |A| {count}")))
    })?;
    total += check(&all, |p| {
        let oracle = jordan_type_chain(p)?;
        let chain = p.tableau().shape_chain();
        Ok((oracle != chain).then(|| format!("pattern {p}: oracle chain {oracle:?}, tableau chain {chain:?}")))
    })?;
    Ok(total)
}

/// Density criterion and the inductive comparison with `π'`.
pub fn orbits(max_n: usize, bound: usize) -> Sweep {
    let all = patterns(max_n, bound, PatternFilter::All)?;
    let mut total = check(&all, |p| {
        let a = analyze_orbit(p);
        Ok(if a.orbit_dim > a.springer_dim {
            Some(format!("pattern {p}: orbit dim {} exceeds {}", a.orbit_dim, a.springer_dim))
        } else if a.dense != p.in_pi1() {
            Some(format!("pattern {p}: dense {} but in Pi^1 {}", a.dense, p.in_pi1()))
        } else {
            None
        })
    })?;
    let larger: Vec<_> = all.into_iter().filter(|p| p.n() >= 2).collect();
    total += check(&larger, |p| {
        let r = inductive_report(p)?;
        let ok = r.inequality_holds()
            && r.equality == r.witness.is_none()
            && r.centralizer_step_holds()
            && r.springer_step_holds()
            && r.codim_monotone();
        Ok((!ok).then(|| format!("pattern {p}: {r:?}")))
    })?;
    Ok(total)
}

/// Richardson versus transposed Bala-Carter, generalized duality and bundle
/// bookkeeping, shape by shape.
pub fn duality(max_n: usize, bound: usize) -> Sweep {
    check(&shapes(max_n), |lam| {
        let classified = classify_shape_bounded(lam, bound)?;
        let mut richardson: Vec<_> = classified
            .reports
            .iter()
            .filter(|r| r.is_richardson)
            .map(|r| r.tableau.clone())
            .collect();
        let mut dual: Vec<_> = lam
            .conjugate()
            .distinct_permutations()
            .iter()
            .map(|c| tableau_from_composition(c).transpose())
            .collect();
        richardson.sort();
        dual.sort();
        if richardson != dual {
            return Ok(Some(format!(
                "shape {lam}: Richardson {richardson:?} vs transposed Bala-Carter {dual:?}"
            )));
        }
        for r in &classified.reports {
            let t = r.tableau.transpose();
            if r.is_generalized_richardson != generalized_bc_pattern(&t).is_some()
                || r.is_richardson != bc_composition(&t).is_some()
            {
                return Ok(Some(format!("tableau {}: duality flags disagree", r.tableau)));
            }
            if let Some(base) = &r.bundle_base {
                if base.iter().sum::<usize>() as u64 != r.dim || fiber_bundle_base(&r.tableau)? != *base {
                    return Ok(Some(format!("tableau {}: bundle base {base:?}", r.tableau)));
                }
            }
        }
        Ok(None)
    })
}

/// Evacuation is an involution, and on `Π^1` it matches mirroring.
pub fn evacuation(max_n: usize, bound: usize) -> Sweep {
    let mut total = check(&tableaux(max_n, bound)?, |t| {
        let e = t.evacuation();
        Ok((e.evacuation() != *t || e.shape() != t.shape())
            .then(|| format!("tableau {t}: evacuation {e} is not an involution")))
    })?;
    total += check(&patterns(max_n, bound, PatternFilter::Dense)?, |p| {
        let lhs = p.tableau().evacuation();
        let rhs = p.mirror().tableau();
        Ok((lhs != rhs).then(|| format!("pattern {p}: evacuation {lhs}, mirror tableau {rhs}")))
    })?;
    Ok(total)
}

pub fn run(suite: Suite, max_n: usize, bound: usize) -> Sweep {
    match suite {
        Suite::Dims => dims(max_n, bound),
        Suite::Orbits => orbits(max_n, bound),
        Suite::Duality => duality(max_n, bound),
        Suite::Evacuation => evacuation(max_n, bound),
        Suite::All => {
            let mut total = 0;
            for s in suite.expand() {
                total += run(s, max_n, bound)?;
            }
            Ok(total)
        }
    }
}
