//! Executable predicates over candidate derivation matrices: the raw
//! Leibniz identity plus the neighborhood, diagonal, and twin-class
//! conditions every derivation of a graph evolution algebra must
//! satisfy. Each predicate reports per-condition pass/fail with a
//! witness pinpointing the violated indices, so the two solver routes
//! can be debugged against each other.
//!
//! All comparisons are exact; there are no tolerances anywhere.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::StructureMatrix;
use crate::derivation::{leibniz_defect, DerivationBasis};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Location and values of a violated condition. Vertex indices are
/// 1-based, matching every input and output format.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub values: Vec<String>,
}

impl Witness {
    fn pair(i: usize, j: usize, values: Vec<String>) -> Self {
        Witness { i: Some(i + 1), j: Some(j + 1), k: None, values }
    }

    fn triple(i: usize, j: usize, k: usize, values: Vec<String>) -> Self {
        Witness { i: Some(i + 1), j: Some(j + 1), k: Some(k + 1), values }
    }

    fn vertex(i: usize, values: Vec<String>) -> Self {
        Witness { i: Some(i + 1), j: None, k: None, values }
    }
}

/// Outcome of one named condition. A failed check always carries a
/// witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn from_witness(check: &str, witness: Option<Witness>) -> Self {
        CheckResult { check: check.into(), passed: witness.is_none(), witness }
    }
}

/// A bundle of condition outcomes for one candidate matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub checks: Vec<CheckResult>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(mut self, other: PropertyReport) -> PropertyReport {
        self.checks.extend(other.checks);
        self
    }
}

fn require_square<T>(d: &Matrix<T>, n: usize) -> Result<()> {
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "candidate matrix is {}x{}, expected {n}x{n}",
            d.rows(),
            d.cols()
        )));
    }
    Ok(())
}

fn render<T: fmt::Display>(values: &[&T]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// Leibniz identity through the algebra product: `d(uv) = d(u)v + u d(v)`
/// on all basis pairs. Independent of the assembled linear system, so it
/// cross-checks the oracle's own construction.
pub fn check_leibniz<T: Scalar + fmt::Display>(
    c: &StructureMatrix<T>,
    d: &Matrix<T>,
) -> Result<PropertyReport> {
    let witness = leibniz_defect(c, d)?.map(|defect| {
        let lhs: Vec<String> = defect.lhs.iter().map(T::to_string).collect();
        let rhs: Vec<String> = defect.rhs.iter().map(T::to_string).collect();
        Witness::pair(
            defect.i,
            defect.j,
            vec![format!("[{}]", lhs.join(", ")), format!("[{}]", rhs.join(", "))],
        )
    });
    Ok(PropertyReport { checks: vec![CheckResult::from_witness("leibniz", witness)] })
}

/// The four neighborhood conditions a derivation matrix satisfies on a
/// graph with at least three vertices:
///
/// 1. a shared neighbor forces antisymmetry, `d_ij = -d_ji`;
/// 2. a vertex adjacent to `i` but not to `j` forces `d_ji = 0`;
/// 3. disjoint neighborhoods force `d_ij = d_ji = 0`;
/// 4. the neighbor sums `sum_{k in N(i)} d_kj` equal `0` for
///    `j` outside `N(i)` and `2 d_ii` for `j` inside.
pub fn check_neighborhood_conditions<T: Scalar + fmt::Display>(
    g: &Graph,
    d: &Matrix<T>,
) -> Result<PropertyReport> {
    let n = g.n();
    require_square(d, n)?;
    let neighbors: Vec<Vec<usize>> =
        (0..n).map(|v| g.neighbors(v).expect("v < n")).collect();

    let mut shared = None;
    let mut gap = None;
    let mut disjoint = None;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let common = neighbors[i].iter().any(|k| neighbors[j].contains(k));
            if common && shared.is_none() && d[(i, j)] != -d[(j, i)].clone() {
                shared = Some(Witness::pair(i, j, render(&[&d[(i, j)], &d[(j, i)]])));
            }
            let witness_k = neighbors[i].iter().find(|k| !neighbors[j].contains(k));
            if let Some(&k) = witness_k {
                if gap.is_none() && !d[(j, i)].is_zero() {
                    gap = Some(Witness::triple(i, j, k, render(&[&d[(j, i)]])));
                }
            }
            if !common && disjoint.is_none() && !(d[(i, j)].is_zero() && d[(j, i)].is_zero()) {
                disjoint = Some(Witness::pair(i, j, render(&[&d[(i, j)], &d[(j, i)]])));
            }
        }
    }

    let mut sums = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let sum = neighbors[i]
                .iter()
                .fold(T::zero(), |acc, &k| acc + d[(k, j)].clone());
            let expected = if g.has_edge(i, j) {
                d[(i, i)].clone() + d[(i, i)].clone()
            } else {
                T::zero()
            };
            if sum != expected {
                sums = Some(Witness::pair(i, j, render(&[&sum, &expected])));
                break 'outer;
            }
        }
    }

    Ok(PropertyReport {
        checks: vec![
            CheckResult::from_witness("shared-neighbor-antisymmetry", shared),
            CheckResult::from_witness("neighborhood-gap-zero", gap),
            CheckResult::from_witness("disjoint-neighborhood-zero", disjoint),
            CheckResult::from_witness("neighbor-sum", sums),
        ],
    })
}

/// The two diagonal conditions: `2 deg(i) d_ii = sum_{k in N(i)} d_kk`
/// for every vertex (stated multiplied through, so an isolated vertex
/// makes it vacuous instead of dividing by zero), and equal diagonal
/// entries across twins.
pub fn check_diagonal_conditions<T: Scalar + fmt::Display>(
    g: &Graph,
    d: &Matrix<T>,
) -> Result<PropertyReport> {
    let n = g.n();
    require_square(d, n)?;

    let mut average = None;
    for i in 0..n {
        let nbrs = g.neighbors(i).expect("i < n");
        let lhs = T::from_int(2 * nbrs.len() as i64) * d[(i, i)].clone();
        let rhs = nbrs.iter().fold(T::zero(), |acc, &k| acc + d[(k, k)].clone());
        if lhs != rhs {
            average = Some(Witness::vertex(i, render(&[&lhs, &rhs])));
            break;
        }
    }

    let mut twins = None;
    'outer: for class in g.twin_partition().classes() {
        for &i in class {
            for &j in class {
                if i < j && d[(i, i)] != d[(j, j)] {
                    twins = Some(Witness::pair(i, j, render(&[&d[(i, i)], &d[(j, j)]])));
                    break 'outer;
                }
            }
        }
    }

    Ok(PropertyReport {
        checks: vec![
            CheckResult::from_witness("diagonal-average", average),
            CheckResult::from_witness("twin-diagonal-equality", twins),
        ],
    })
}

/// The four conditions a derivation matrix satisfies relative to one
/// twin class `T`:
///
/// 1. zero support across the class boundary (`d_ik = d_ki = 0` for
///    `i` in `T`, `k` outside);
/// 2. zero diagonal on the class;
/// 3. zero diagonal on the class's neighborhood;
/// 4. antisymmetry within the class.
///
/// `class` is given 0-based and must be exactly one class of the twin
/// partition.
pub fn check_twin_class_support<T: Scalar + fmt::Display>(
    g: &Graph,
    class: &[usize],
    d: &Matrix<T>,
) -> Result<PropertyReport> {
    let n = g.n();
    require_square(d, n)?;

    let mut sorted = class.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if !g.twin_partition().classes().contains(&sorted) {
        return Err(Error::InvalidClass(format!(
            "{:?} is not a twin class of the graph",
            class.iter().map(|v| v + 1).collect::<Vec<_>>()
        )));
    }
    let in_class = |v: usize| sorted.binary_search(&v).is_ok();

    let mut boundary = None;
    'outer: for &i in &sorted {
        for k in (0..n).filter(|&k| !in_class(k)) {
            if !(d[(i, k)].is_zero() && d[(k, i)].is_zero()) {
                boundary = Some(Witness::pair(i, k, render(&[&d[(i, k)], &d[(k, i)]])));
                break 'outer;
            }
        }
    }

    let diagonal = sorted
        .iter()
        .find(|&&i| !d[(i, i)].is_zero())
        .map(|&i| Witness::vertex(i, render(&[&d[(i, i)]])));

    let mut hood = None;
    'outer: for &i in &sorted {
        for k in g.neighbors(i).expect("i < n") {
            if !d[(k, k)].is_zero() {
                hood = Some(Witness::vertex(k, render(&[&d[(k, k)]])));
                break 'outer;
            }
        }
    }

    let mut skew = None;
    'outer: for &i in &sorted {
        for &j in &sorted {
            if i < j && d[(i, j)] != -d[(j, i)].clone() {
                skew = Some(Witness::pair(i, j, render(&[&d[(i, j)], &d[(j, i)]])));
                break 'outer;
            }
        }
    }

    Ok(PropertyReport {
        checks: vec![
            CheckResult::from_witness("class-boundary-zero", boundary),
            CheckResult::from_witness("class-diagonal-zero", diagonal),
            CheckResult::from_witness("class-neighborhood-diagonal-zero", hood),
            CheckResult::from_witness("class-antisymmetry", skew),
        ],
    })
}

/// A graph with no twin class of size three or more admits only the
/// zero derivation: passes when the absence of such classes implies an
/// empty basis (vacuously true when a big class exists).
pub fn check_zero_when_gamma3_empty<T>(g: &Graph, basis: &DerivationBasis<T>) -> PropertyReport {
    let gamma3_empty = g.twin_partition().gamma3().is_empty();
    let witness = (gamma3_empty && !basis.is_empty()).then(|| Witness {
        i: None,
        j: None,
        k: None,
        values: vec![format!(
            "no twin class of size >= 3, yet the basis has dimension {}",
            basis.dimension()
        )],
    });
    PropertyReport {
        checks: vec![CheckResult::from_witness("zero-space-without-big-twin-class", witness)],
    }
}
