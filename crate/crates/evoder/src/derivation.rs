//! Brute-force derivation oracle.
//!
//! A linear map `d` with `d(e_i) = sum_k d_ik e_k` is a derivation of an
//! evolution algebra with structure constants `c_ik` exactly when
//!
//! * `c_jk d_ij + c_ik d_ji = 0` for all `i != j` and every `k`, and
//! * `sum_k c_ik d_kj = 2 c_ij d_ii` for all `i, j`.
//!
//! This module assembles those conditions into one homogeneous linear
//! system over the `n^2` unknowns `d_ij` and reads the derivation space
//! off its exact null space. It works for any square structure matrix,
//! graph-derived or not, and is the ground truth the closed-form
//! construction is checked against.

use crate::algebra::{apply_map, basis_element, evolution_product, StructureMatrix};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Basis of the derivation space: one `n x n` matrix per basis vector,
/// row `i` holding the image coordinates of `e_i`. The matrices are
/// linearly independent by construction; an empty list means the only
/// derivation is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBasis<T> {
    n: usize,
    mats: Vec<Matrix<T>>,
}

impl<T> DerivationBasis<T> {
    pub fn new(n: usize, mats: Vec<Matrix<T>>) -> Self {
        DerivationBasis { n, mats }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mats(&self) -> &[Matrix<T>] {
        &self.mats
    }

    pub fn into_mats(self) -> Vec<Matrix<T>> {
        self.mats
    }

    /// Dimension of the spanned space (= number of basis matrices).
    pub fn dimension(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }
}

/// Assembles the derivation conditions as a homogeneous system `M x = 0`
/// over the unknowns `d_ij` in row-major order (`x[i*n + j] = d_ij`).
///
/// Rows come in a fixed order: first one row per `(i, j, k)` with
/// `i != j` for the paired condition `c_jk d_ij + c_ik d_ji = 0`, then
/// one row per `(i, j)` for `sum_k c_ik d_kj - 2 c_ij d_ii = 0`. No
/// filtering is applied, so the matrix always has `n^3` rows; redundant
/// and zero rows are eliminated later by the RREF.
pub fn build_derivation_system<T: Scalar>(c: &StructureMatrix<T>) -> Matrix<T> {
    let n = c.n();
    let cm = c.constants();
    let idx = |r: usize, s: usize| r * n + s;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n * n * n);

    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for k in 0..n {
                let mut row = vec![T::zero(); n * n];
                row[idx(i, j)] = cm[(j, k)].clone();
                row[idx(j, i)] = cm[(i, k)].clone();
                rows.push(row);
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            let mut row = vec![T::zero(); n * n];
            for k in 0..n {
                row[idx(k, j)] = row[idx(k, j)].clone() + cm[(i, k)].clone();
            }
            let twice = cm[(i, j)].clone() + cm[(i, j)].clone();
            row[idx(i, i)] = row[idx(i, i)].clone() - twice;
            rows.push(row);
        }
    }

    Matrix::from_rows(rows).expect("system rows all have length n^2")
}

/// Derivation basis as the exact null space of the assembled system,
/// reshaped to `n x n` matrices under the canonical RREF
/// parameterization.
pub fn oracle_derivations<T: Scalar>(c: &StructureMatrix<T>) -> DerivationBasis<T> {
    let n = c.n();
    let mats = build_derivation_system(c)
        .null_space()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[(i * n + j, 0)].clone()))
        .collect();
    DerivationBasis { n, mats }
}

/// Dimension of the derivation space.
pub fn derivation_dimension<T: Scalar>(c: &StructureMatrix<T>) -> usize {
    oracle_derivations(c).dimension()
}

/// A basis pair where the Leibniz identity fails, with both sides'
/// coordinates. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizDefect<T> {
    pub i: usize,
    pub j: usize,
    pub lhs: Vec<T>,
    pub rhs: Vec<T>,
}

/// Tests the Leibniz identity `d(uv) = d(u)v + u d(v)` on every basis
/// pair, going through the algebra product rather than the assembled
/// system, so the two routes check each other. Returns the first
/// failing pair, or `None` if `d` is a derivation.
pub fn leibniz_defect<T: Scalar>(
    c: &StructureMatrix<T>,
    d: &Matrix<T>,
) -> Result<Option<LeibnizDefect<T>>> {
    let n = c.n();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "candidate derivation is {}x{}, algebra dimension is {n}",
            d.rows(),
            d.cols()
        )));
    }
    for i in 0..n {
        let ei = basis_element::<T>(n, i);
        let di = d.row(i).to_vec();
        for j in 0..n {
            let ej = basis_element::<T>(n, j);
            let dj = d.row(j).to_vec();

            let prod = evolution_product(c, &ei, &ej)?;
            let lhs = apply_map(d, &prod)?;

            let left = evolution_product(c, &di, &ej)?;
            let right = evolution_product(c, &ei, &dj)?;
            let rhs: Vec<T> =
                left.into_iter().zip(right).map(|(a, b)| a + b).collect();

            if lhs != rhs {
                return Ok(Some(LeibnizDefect { i, j, lhs, rhs }));
            }
        }
    }
    Ok(None)
}

/// Is `d` a derivation of the algebra with structure matrix `c`?
pub fn is_derivation<T: Scalar>(c: &StructureMatrix<T>, d: &Matrix<T>) -> Result<bool> {
    Ok(leibniz_defect(c, d)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrix::spans_equal;
    use crate::Rational;

    fn algebra(g: &Graph) -> StructureMatrix<Rational> {
        StructureMatrix::from_graph(g).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()
    }

    fn k33() -> Graph {
        Graph::parse(r#"{"n":6,"edges":[[1,4],[1,5],[1,6],[2,4],[2,5],[2,6],[3,4],[3,5],[3,6]]}"#)
            .unwrap()
    }

    #[test]
    fn system_shape_is_n_cubed_by_n_squared() {
        let system = build_derivation_system(&algebra(&path(3)));
        assert_eq!((system.rows(), system.cols()), (27, 9));
    }

    #[test]
    fn single_vertex_system_is_vacuous() {
        // One vertex, no edges: zero structure constants impose nothing,
        // so every 1x1 matrix is a derivation.
        let c = StructureMatrix::from_matrix(Matrix::<Rational>::zeros(1, 1)).unwrap();
        let system = build_derivation_system(&c);
        assert!(system.is_zero());
        let basis = oracle_derivations(&c);
        assert_eq!(basis.dimension(), 1);
        assert_eq!(basis.mats()[0], Matrix::from_int_rows(&[&[1]]));
    }

    #[test]
    fn single_edge_admits_only_the_zero_derivation() {
        // Hand-solved: the paired conditions give d_12 = d_21 = 0, and
        // the diagonal conditions give d_22 = 2 d_11 and d_11 = 2 d_22.
        assert_eq!(derivation_dimension(&algebra(&path(2))), 0);
    }

    #[test]
    fn bipartite_k33_has_dimension_two() {
        let basis = oracle_derivations(&algebra(&k33()));
        assert_eq!(basis.dimension(), 2);
    }

    #[test]
    fn star_with_four_leaves_has_dimension_three() {
        assert_eq!(derivation_dimension(&algebra(&star(4))), 3);
    }

    #[test]
    fn long_path_has_no_derivations() {
        assert_eq!(derivation_dimension(&algebra(&path(9))), 0);
    }

    #[test]
    fn oracle_output_satisfies_leibniz() {
        for g in [k33(), star(4), path(4)] {
            let c = algebra(&g);
            for d in oracle_derivations(&c).mats() {
                assert!(is_derivation(&c, d).unwrap());
            }
        }
    }

    #[test]
    fn non_derivation_is_rejected_with_a_witness() {
        let c = algebra(&path(2));
        let d: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let defect = leibniz_defect(&c, &d).unwrap().expect("should fail");
        assert_ne!(defect.lhs, defect.rhs);

        let wrong_shape: Matrix<Rational> = Matrix::zeros(3, 3);
        assert!(leibniz_defect(&c, &wrong_shape).is_err());
    }

    #[test]
    fn kernel_does_not_depend_on_row_order() {
        let c = algebra(&star(3));
        let system = build_derivation_system(&c);
        let reversed =
            Matrix::from_rows((0..system.rows()).rev().map(|r| system.row(r).to_vec()).collect())
                .unwrap();
        assert!(spans_equal(&system.null_space(), &reversed.null_space()).unwrap());
    }

    #[test]
    fn permuting_vertices_preserves_the_dimension() {
        let g = star(4);
        let perm = crate::graph::VertexPermutation::from_map(vec![2, 0, 4, 1, 3]).unwrap();
        let h = g.permuted(&perm);
        assert_eq!(
            derivation_dimension(&algebra(&g)),
            derivation_dimension(&algebra(&h))
        );
    }
}
