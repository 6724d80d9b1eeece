//! The evolution algebra attached to a graph: its structure matrix and
//! the product it induces on coordinate vectors.
//!
//! The algebra has a natural basis `e_1, ..., e_n` with `e_i * e_i =
//! sum_k c_ik e_k` and `e_i * e_j = 0` for `i != j`. For a graph the
//! structure constants are the adjacency entries, so `e_i * e_i` is the
//! sum of the neighbors of `i`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Coordinates of an algebra element over the natural basis.
pub type AlgebraElement<T> = Vec<T>;

/// Structure constants `c[i][k]` of an evolution algebra.
///
/// Graph-derived instances are 0/1, symmetric, with zero diagonal;
/// arbitrary square matrices are accepted so the same solver covers raw
/// (non-graph) evolution algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMatrix<T> {
    c: Matrix<T>,
}

impl<T: Scalar> StructureMatrix<T> {
    /// Structure matrix of the algebra attached to a connected graph:
    /// the adjacency matrix.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::ConnectivityError);
        }
        Ok(StructureMatrix { c: g.adjacency_matrix() })
    }

    /// Wraps an arbitrary square matrix of structure constants.
    pub fn from_matrix(c: Matrix<T>) -> Result<Self> {
        if c.rows() != c.cols() || c.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "structure matrix must be square and nonempty, got {}x{}",
                c.rows(),
                c.cols()
            )));
        }
        Ok(StructureMatrix { c })
    }

    pub fn n(&self) -> usize {
        self.c.rows()
    }

    pub fn constants(&self) -> &Matrix<T> {
        &self.c
    }

    /// Rank of the structure matrix over the exact scalar field.
    pub fn rank(&self) -> usize {
        self.c.rank()
    }
}

/// Coordinate vector of the basis element `e_i` (0-based).
pub fn basis_element<T: Scalar>(n: usize, i: usize) -> AlgebraElement<T> {
    let mut e = vec![T::zero(); n];
    e[i] = T::one();
    e
}

/// Product of two elements given by coordinates: bilinearity plus
/// `e_i * e_j = 0` for `i != j` gives `(u v)_k = sum_i u_i v_i c_ik`.
pub fn evolution_product<T: Scalar>(
    c: &StructureMatrix<T>,
    u: &[T],
    v: &[T],
) -> Result<AlgebraElement<T>> {
    let n = c.n();
    if u.len() != n || v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "product operands have lengths {} and {}, algebra dimension is {n}",
            u.len(),
            v.len()
        )));
    }
    let mut out = vec![T::zero(); n];
    for i in 0..n {
        let w = u[i].clone() * v[i].clone();
        if w.is_zero() {
            continue;
        }
        for k in 0..n {
            out[k] = out[k].clone() + w.clone() * c.constants()[(i, k)].clone();
        }
    }
    Ok(out)
}

/// Image of a coordinate vector under the linear map whose matrix row
/// `i` holds the image coordinates of `e_i`: `(u D)_k = sum_i u_i d_ik`.
pub fn apply_map<T: Scalar>(d: &Matrix<T>, u: &[T]) -> Result<AlgebraElement<T>> {
    if u.len() != d.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} does not match map with {} rows",
            u.len(),
            d.rows()
        )));
    }
    let mut out = vec![T::zero(); d.cols()];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for k in 0..d.cols() {
            out[k] = out[k].clone() + ui.clone() * d[(i, k)].clone();
        }
    }
    Ok(out)
}
