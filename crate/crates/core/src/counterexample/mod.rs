//! A woven set that cannot lose a single element.
//!
//! From a 4-regular graph `G` of girth at least 11 we build a lattice `L`
//! and a woven subset `P` such that `P - p` is not woven for any `p`. The
//! input graph is taken as given (for instance the (4,12)-cage on 728
//! vertices). Every claim about the result is checked by computation, and
//! graphs of smaller girth run through the same pipeline with a warning.

mod build;
mod double;
mod graph;
mod search;
mod verify;

use std::fmt::Write as _;
use std::path::Path;

pub use build::{build_lattice, StratifiedLattice, Stratum};
pub use double::{bipartite_double, two_factor_split, BipartiteDouble, EdgeColoring};
pub use graph::{load_graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6, Graph, GraphFormat};
pub use search::{high_girth_search, GirthSearch};
pub use verify::{
    corners_outside, naive_join, naive_meet, verify_counterexample, Outcome, RemovalWitness, Report,
};

use crate::error::{Error, Result};
use crate::order::format::to_dot;
use crate::sepsys::glue_universe;
use crate::weave::{is_woven_in, CriticalPairs};
use crate::Elem;

/// Girth the construction is proven for.
pub const REQUIRED_GIRTH: usize = 11;

/// Result of gluing `L` to its dual and trying every pair deletion.
#[derive(Clone, Debug)]
pub struct GlueSweep {
    pub universe_size: usize,
    pub system_size: usize,
    pub submodular: bool,
    /// Unoriented separations `{s, inv s}` of `S` whose deletion keeps `S`
    /// submodular, each confirmed by a full check.
    pub removable: Vec<(Elem, Elem)>,
    pub pairs_checked: usize,
}

impl GlueSweep {
    pub fn line(&self) -> String {
        if !self.submodular {
            return format!(
                "glue: fail S is not submodular in the universe ({} elements)",
                self.universe_size
            );
        }
        match self.removable.first() {
            None => format!(
                "glue: pass no removable pair among {} ({} elements, |S| = {})",
                self.pairs_checked, self.universe_size, self.system_size
            ),
            Some((s, t)) => format!(
                "glue: fail {} of {} pairs removable, first {s} {t}",
                self.removable.len(),
                self.pairs_checked
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub girth: Option<usize>,
    pub double_girth: Option<usize>,
    pub warnings: Vec<String>,
    pub construction: StratifiedLattice,
    pub report: Report,
    pub glue: Option<GlueSweep>,
}

impl PipelineReport {
    pub fn all_passed(&self) -> bool {
        self.report.all_passed() && self.glue.as_ref().map_or(true, |g| g.submodular && g.removable.is_empty())
    }

    pub fn render(&self, with_witnesses: bool) -> String {
        let fmt_girth = |g: Option<usize>| g.map_or("infinite".to_string(), |g| g.to_string());
        let mut out = String::new();
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let _ = writeln!(
            out,
            "graph: {} vertices, girth {}, double girth {}",
            self.construction.n(),
            fmt_girth(self.girth),
            fmt_girth(self.double_girth)
        );
        out.push_str(&self.report.render(with_witnesses));
        if let Some(g) = &self.glue {
            let _ = writeln!(out, "{}", g.line());
        }
        out
    }
}

/// Double, colour and build: the construction without certification.
pub fn construct(g: &Graph) -> Result<StratifiedLattice> {
    let double = bipartite_double(g)?;
    let coloring = two_factor_split(&double.graph)?;
    build_lattice(g, &coloring)
}

/// Glues `L` to its dual along top and bottom, with `S = P ∪ P'`, and
/// checks every unoriented separation of `S` for removability.
pub fn glue_sweep(sl: &StratifiedLattice) -> Result<GlueSweep> {
    let lattice = sl.lattice().map_err(|w| Error::NotLattice(w.clone()))?;
    let glued = glue_universe(lattice, &sl.woven_part())?;
    let u = &glued.universe;
    let system = &glued.system;
    let pairs: Vec<(Elem, Elem)> = system.ones().filter(|&s| s <= u.inv(s)).map(|s| (s, u.inv(s))).collect();
    let mut sweep = GlueSweep {
        universe_size: u.len(),
        system_size: system.count_ones(..),
        submodular: true,
        removable: Vec::new(),
        pairs_checked: pairs.len(),
    };
    let index = match CriticalPairs::build(u.lattice(), system) {
        Ok(index) => index,
        Err(_) => {
            sweep.submodular = false;
            return Ok(sweep);
        }
    };
    for (s, t) in pairs {
        let group = if s == t { vec![s] } else { vec![s, t] };
        let mut rest = system.clone();
        for &x in &group {
            rest.set(x, false);
        }
        match index.removal_witness(&group) {
            Some((q, r)) => {
                if !corners_outside(u.lattice().poset(), &rest, q, r) {
                    return Err(Error::InvariantViolation(format!(
                        "witness ({q}, {r}) against deleting {s}, {t} keeps a corner"
                    )));
                }
            }
            None => {
                if let Err((a, b)) = is_woven_in(u.lattice(), &rest) {
                    return Err(Error::InvariantViolation(format!(
                        "deleting {s}, {t} was indexed as safe but ({a}, {b}) loses both corners"
                    )));
                }
                sweep.removable.push((s, t));
            }
        }
    }
    Ok(sweep)
}

/// Checks, builds, certifies and optionally glues. A girth below
/// [`REQUIRED_GIRTH`] only produces a warning.
pub fn pipeline(g: &Graph, glue: bool) -> Result<PipelineReport> {
    if let Some((vertex, degree)) = g.regularity_defect(4) {
        return Err(Error::NotFourRegular { vertex, degree });
    }
    let girth = g.girth();
    let mut warnings = Vec::new();
    if girth.is_some_and(|x| x < REQUIRED_GIRTH) {
        warnings.push(format!(
            "girth {} is below {REQUIRED_GIRTH}; the certificates below decide the outcome",
            girth.unwrap()
        ));
    }
    let construction = construct(g)?;
    let double_girth = construction.double.graph.girth();
    let report = verify_counterexample(&construction);
    let glue = if glue && construction.lattice().is_ok() {
        Some(glue_sweep(&construction)?)
    } else {
        if glue {
            warnings.push("not a lattice, gluing skipped".into());
        }
        None
    };
    Ok(PipelineReport {
        girth,
        double_girth,
        warnings,
        construction,
        report,
        glue,
    })
}

pub fn run_pipeline(path: &Path, format: GraphFormat, glue: bool) -> Result<PipelineReport> {
    pipeline(&load_graph(path, format)?, glue)
}

/// Hasse diagram with one rank per stratum.
pub fn stratified_dot(sl: &StratifiedLattice) -> String {
    let ranks: Vec<Vec<Elem>> = Stratum::ALL.iter().map(|&s| sl.stratum(s)).collect();
    to_dot(sl.poset(), &|e| sl.label(e), &ranks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn robertson() -> Graph {
        parse_graph6(include_str!("../../data/robertson.g6")).unwrap()
    }

    #[test]
    fn robertson_pipeline_runs() {
        let g = robertson();
        assert_eq!((g.len(), g.girth()), (19, Some(5)));
        let r = pipeline(&g, true).unwrap();
        assert_eq!(r.construction.len(), 78);
        assert_eq!(r.warnings.len(), 1 + r.construction.lattice().is_err() as usize);
        assert!(r.double_girth.unwrap() % 2 == 0 && r.double_girth >= r.girth);
        assert!(!matches!(r.report.lattice, Outcome::Unconfirmed(_)));
        assert!(!matches!(r.report.woven, Outcome::Unconfirmed(_)));
        assert!(!matches!(r.report.irreducible, Outcome::Unconfirmed(_)));
        assert!(r.render(false).contains("graph: 19 vertices, girth 5"));
    }

    #[test]
    fn rejects_irregular_input() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(pipeline(&c4, false), Err(Error::NotFourRegular { .. })));
    }

    #[test]
    fn dot_has_strata() {
        let k5 = parse_graph6("D~{").unwrap();
        let dot = stratified_dot(&construct(&k5).unwrap());
        assert_eq!(dot.matches("rank=same").count(), 6);
        assert!(dot.contains("label=\"W+:4\""));
    }
}
