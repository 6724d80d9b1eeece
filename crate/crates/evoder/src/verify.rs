//! Corpus cross-validation: run both solver routes and the whole
//! property battery over every connected simple graph up to a size
//! bound, and summarize any disagreement.
//!
//! This is the empirical backbone of the crate: the closed form's span
//! must equal the oracle's kernel span on every graph, the dimension
//! must follow the twin-class formula, graphs with no size->=3 twin
//! class must have a zero derivation space, and full-rank structure
//! matrices must shortcut to zero. A failure of any of these on any
//! graph is a bug, never data.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::StructureMatrix;
use crate::checks::{
    check_diagonal_conditions, check_leibniz, check_neighborhood_conditions,
    check_twin_class_support, check_zero_when_gamma3_empty,
};
use crate::closed_form::{closed_form_derivations, closed_form_dimension};
use crate::derivation::oracle_derivations;
use crate::enumerate::{connected_graphs_up_to_iso, edge_code, labeled_connected_graphs};
use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::spans_equal;
use crate::Rational;
use num_traits::Zero;

/// Verdict for one graph. `problems` is empty exactly when every
/// cross-check passed; the boolean fields expose which group failed.
#[derive(Clone, Debug)]
pub struct GraphCheck {
    pub n: usize,
    /// Edge-subset code, used for deterministic ordering.
    pub code: u64,
    /// 1-based edges, for failure messages.
    pub edges: Vec<[usize; 2]>,
    pub dimension: usize,
    pub formula_dimension: usize,
    pub gamma3_empty: bool,
    pub adjacency_rank: usize,
    /// Closed-form span equals the oracle kernel span.
    pub spans_agree: bool,
    /// No size->=3 twin class if and only if dimension zero (checked
    /// for n >= 3; smaller graphs pass vacuously).
    pub gamma3_law_ok: bool,
    /// Oracle dimension equals the twin-class formula.
    pub formula_ok: bool,
    /// Every basis element passed every property check.
    pub battery_ok: bool,
    /// Full rank implies an empty basis.
    pub nonsingular_ok: bool,
    pub problems: Vec<String>,
}

impl GraphCheck {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Runs both routes and the property battery on one connected graph.
pub fn check_graph(g: &Graph) -> Result<GraphCheck> {
    let n = g.n();
    let c = StructureMatrix::<Rational>::from_graph(g)?;
    let oracle = oracle_derivations(&c);
    let closed = closed_form_derivations::<Rational>(g)?;
    let tp = g.twin_partition();
    let g3 = tp.gamma3();

    let dimension = oracle.dimension();
    let formula_dimension = closed_form_dimension(g)?;
    let gamma3_empty = g3.is_empty();
    let adjacency_rank = c.rank();
    let mut problems = Vec::new();

    let spans_agree = spans_equal(closed.mats(), oracle.mats())?;
    if !spans_agree {
        problems.push(format!(
            "closed-form span differs from oracle span (dims {} vs {})",
            closed.dimension(),
            dimension
        ));
    }

    let gamma3_law_ok = n < 3 || (gamma3_empty == (dimension == 0));
    if !gamma3_law_ok {
        problems.push(format!(
            "gamma3-empty = {gamma3_empty} but dimension = {dimension}"
        ));
    }

    let formula_ok = dimension == formula_dimension;
    if !formula_ok {
        problems.push(format!(
            "oracle dimension {dimension} != formula dimension {formula_dimension}"
        ));
    }

    let nonsingular_ok = adjacency_rank < n || dimension == 0;
    if !nonsingular_ok {
        problems.push(format!(
            "full-rank structure matrix but dimension = {dimension}"
        ));
    }

    let mut battery_ok = true;
    for (which, mats) in [("oracle", oracle.mats()), ("closed-form", closed.mats())] {
        for (idx, d) in mats.iter().enumerate() {
            if !check_leibniz(&c, d)?.passed() {
                battery_ok = false;
                problems.push(format!("{which} element {idx} fails leibniz"));
            }
            if n >= 3 {
                for (report_name, report) in [
                    ("neighborhood", check_neighborhood_conditions(g, d)?),
                    ("diagonal", check_diagonal_conditions(g, d)?),
                ] {
                    if !report.passed() {
                        battery_ok = false;
                        problems.push(format!(
                            "{which} element {idx} fails a {report_name} condition"
                        ));
                    }
                }
                for class in tp.classes() {
                    if !check_twin_class_support(g, class, d)?.passed() {
                        battery_ok = false;
                        problems.push(format!(
                            "{which} element {idx} fails the class battery on {class:?}"
                        ));
                    }
                }
                // Off-diagonal support forces twin classes of size >= 3
                // on both indices of any nonzero entry.
                for i in 0..n {
                    for j in 0..n {
                        if i != j && !d[(i, j)].is_zero() {
                            let same = tp.same_class(i, j);
                            let big = tp
                                .class_of(i)
                                .map(|cl| tp.classes()[cl].len() >= 3)
                                .unwrap_or(false);
                            if !(same && big) {
                                battery_ok = false;
                                problems.push(format!(
                                    "{which} element {idx} has entry ({},{}) outside a big twin class",
                                    i + 1,
                                    j + 1
                                ));
                            }
                        }
                    }
                }
                // A derivation with zero off-diagonal part must vanish.
                let offdiag_zero = (0..n)
                    .all(|i| (0..n).all(|j| i == j || d[(i, j)].is_zero()));
                if offdiag_zero && !d.is_zero() {
                    battery_ok = false;
                    problems.push(format!("{which} element {idx} is diagonal but nonzero"));
                }
                // Column sums vanish inside every size->=3 class.
                for class in g3.classes() {
                    for &i in class {
                        let sum = class
                            .iter()
                            .fold(Rational::zero(), |acc, &k| acc + d[(k, i)].clone());
                        if !sum.is_zero() {
                            battery_ok = false;
                            problems.push(format!(
                                "{which} element {idx} has nonzero column sum in class {class:?}"
                            ));
                        }
                    }
                }
            }
        }
    }

    if n >= 3 && !check_zero_when_gamma3_empty(g, &oracle).passed() {
        battery_ok = false;
        problems.push("zero-space check failed".into());
    }

    Ok(GraphCheck {
        n,
        code: edge_code(g),
        edges: g.edges_1based(),
        dimension,
        formula_dimension,
        gamma3_empty,
        adjacency_rank,
        spans_agree,
        gamma3_law_ok,
        formula_ok,
        battery_ok,
        nonsingular_ok,
        problems,
    })
}

/// Checks every connected simple graph with `1 <= n <= n_max`,
/// labeled when `prune_iso` is false, one representative per
/// isomorphism class when true. Results are sorted by `(n, code)`, so
/// parallel and sequential runs produce identical output.
pub fn sweep_corpus(n_max: usize, prune_iso: bool, parallel: bool) -> Result<Vec<GraphCheck>> {
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        if prune_iso {
            graphs.extend(connected_graphs_up_to_iso(n));
        } else {
            graphs.extend(labeled_connected_graphs(n));
        }
    }
    let mut checks = if parallel {
        graphs.par_iter().map(check_graph).collect::<Result<Vec<_>>>()?
    } else {
        graphs.iter().map(check_graph).collect::<Result<Vec<_>>>()?
    };
    checks.sort_by_key(|c| (c.n, c.code));
    Ok(checks)
}

/// Per-size graph count in a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub n: usize,
    pub graphs: usize,
}

/// Summary of a corpus sweep: counts plus a description of every
/// failing graph (normally none).
#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub n_max: usize,
    pub isomorphism_pruned: bool,
    pub graphs_checked: usize,
    pub graphs_per_size: Vec<SizeCount>,
    pub graphs_with_derivations: usize,
    pub failures: Vec<String>,
    pub all_passed: bool,
}

/// Condenses sweep results into the summary report.
pub fn summarize(n_max: usize, prune_iso: bool, checks: &[GraphCheck]) -> VerifySummary {
    let mut graphs_per_size: Vec<SizeCount> = Vec::new();
    for check in checks {
        match graphs_per_size.last_mut() {
            Some(entry) if entry.n == check.n => entry.graphs += 1,
            _ => graphs_per_size.push(SizeCount { n: check.n, graphs: 1 }),
        }
    }
    let failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| {
            let edges: Vec<String> =
                c.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            format!("n={} edges [{}]: {}", c.n, edges.join(" "), c.problems.join("; "))
        })
        .collect();
    VerifySummary {
        n_max,
        isomorphism_pruned: prune_iso,
        graphs_checked: checks.len(),
        graphs_per_size,
        graphs_with_derivations: checks.iter().filter(|c| c.dimension > 0).count(),
        failures,
        all_passed: checks.iter().all(GraphCheck::passed),
    }
}

/// Plain-text rendering of a sweep summary.
pub fn render_summary(summary: &VerifySummary) -> String {
    let mut out = String::new();
    let mode = if summary.isomorphism_pruned { "up to isomorphism" } else { "labeled" };
    out.push_str(&format!(
        "checked {} connected graphs ({mode}) with n <= {}\n",
        summary.graphs_checked, summary.n_max
    ));
    for entry in &summary.graphs_per_size {
        out.push_str(&format!("  n = {}: {} graphs\n", entry.n, entry.graphs));
    }
    out.push_str(&format!(
        "graphs with a nonzero derivation space: {}\n",
        summary.graphs_with_derivations
    ));
    if summary.all_passed {
        out.push_str("all cross-checks passed\n");
    } else {
        out.push_str(&format!("{} FAILURES:\n", summary.failures.len()));
        for failure in &summary.failures {
            out.push_str(&format!("  {failure}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn single_graph_check_passes_on_k33() {
        let check = check_graph(&families::complete_multipartite(&[3, 3]).unwrap()).unwrap();
        assert!(check.passed());
        assert_eq!(check.dimension, 2);
        assert!(!check.gamma3_empty);
        assert_eq!(check.adjacency_rank, 2);
    }

    #[test]
    fn sweep_to_n4_passes_and_finds_the_star() {
        let checks = sweep_corpus(4, false, false).unwrap();
        assert!(checks.iter().all(GraphCheck::passed));
        // 1 + 1 + 4 + 38 labeled connected graphs.
        assert_eq!(checks.len(), 44);
        // Of the n = 4 graphs, exactly the four labelings of the
        // three-leaf star carry a derivation (dimension 1).
        let with_derivations: Vec<_> =
            checks.iter().filter(|c| c.n >= 3 && c.dimension > 0).collect();
        assert_eq!(with_derivations.len(), 4);
        assert!(with_derivations.iter().all(|c| c.n == 4 && c.dimension == 1));
        // ... and the single-vertex graph's one-dimensional space.
        assert_eq!(checks.iter().filter(|c| c.dimension > 0).count(), 5);
    }

    #[test]
    fn pruned_sweep_matches_unpruned_conclusions() {
        let checks = sweep_corpus(5, true, false).unwrap();
        assert!(checks.iter().all(GraphCheck::passed));
        // 1 + 1 + 2 + 6 + 21 representatives.
        assert_eq!(checks.len(), 31);
    }

    #[test]
    fn parallel_and_sequential_sweeps_agree() {
        let seq = sweep_corpus(4, false, false).unwrap();
        let par = sweep_corpus(4, false, true).unwrap();
        assert_eq!(seq.len(), par.len());
        for (a, b) in seq.iter().zip(&par) {
            assert_eq!((a.n, a.code, a.dimension, a.passed()), (b.n, b.code, b.dimension, b.passed()));
        }
    }

    #[test]
    fn summary_reflects_the_sweep() {
        let checks = sweep_corpus(3, false, false).unwrap();
        let summary = summarize(3, false, &checks);
        assert!(summary.all_passed);
        assert_eq!(summary.graphs_checked, 6);
        assert_eq!(summary.graphs_per_size, vec![
            SizeCount { n: 1, graphs: 1 },
            SizeCount { n: 2, graphs: 1 },
            SizeCount { n: 3, graphs: 4 },
        ]);
        let rendered = render_summary(&summary);
        assert!(rendered.contains("all cross-checks passed"));
    }
}
