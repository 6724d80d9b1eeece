//! Closed-form derivation basis from the twin partition.
//!
//! For a connected simple graph every derivation is supported on the
//! diagonal blocks of the twin classes with at least three vertices,
//! is skew-symmetric there, has zero diagonal, and has zero column sums
//! within each block; conversely every such matrix is a derivation.
//! This module builds that space directly: a block of size `a`
//! contributes `(a-1)(a-2)/2` triangle generators, so no linear algebra
//! is needed. The result is cross-checked against the null-space oracle
//! elsewhere; here each emitted matrix is still validated through the
//! Leibniz identity so the construction can never silently drift.

use crate::algebra::StructureMatrix;
use crate::derivation::{is_derivation, oracle_derivations, DerivationBasis};
use crate::error::{Error, Result};
use crate::graph::{Gamma3, Graph, VertexPermutation};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// One size->=3 twin class as a diagonal block: its index in the
/// filtered partition, the block offset `s(l) = a_1 + .. + a_{l-1}`
/// after relabeling, and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    pub class_index: usize,
    pub offset: usize,
    pub size: usize,
}

/// Block layout of the size->=3 twin classes after relabeling.
pub fn block_layout(g3: &Gamma3) -> Vec<BlockLayout> {
    g3.sizes()
        .iter()
        .zip(g3.offsets())
        .enumerate()
        .map(|(class_index, (&size, &offset))| BlockLayout { class_index, offset, size })
        .collect()
}

/// Derivation basis produced by the block construction, expressed in
/// the graph's original vertex labels. `perm` is the relabeling that
/// packs the size->=3 twin classes into contiguous blocks; it is the
/// identity whenever the classes already sit in blocks (and always for
/// an empty basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormBasis<T> {
    n: usize,
    perm: VertexPermutation,
    mats: Vec<Matrix<T>>,
}

impl<T> ClosedFormBasis<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &VertexPermutation {
        &self.perm
    }

    pub fn mats(&self) -> &[Matrix<T>] {
        &self.mats
    }

    pub fn dimension(&self) -> usize {
        self.mats.len()
    }

    pub fn into_mats(self) -> Vec<Matrix<T>> {
        self.mats
    }
}

/// Basis of the derivation block for one twin class of size `a >= 3`:
/// the `(a-1)(a-2)/2` triangle generators `T_{1,j,k}` for
/// `2 <= j < k <= a` (1-based within the block), where `T_{1,j,k}` has
/// entries `+1` at `(1,j)`, `(j,k)`, `(k,1)` and `-1` at the three
/// transposed positions. Each generator is skew-symmetric with zero
/// column sums, and together they span all such matrices.
pub fn block_basis<T: Scalar>(a: usize) -> Result<Vec<Matrix<T>>> {
    if a < 3 {
        return Err(Error::SizeTooSmall(a));
    }
    let mut out = Vec::with_capacity((a - 1) * (a - 2) / 2);
    for j in 1..a {
        for k in j + 1..a {
            let mut t = Matrix::zeros(a, a);
            for (r, s) in [(0, j), (j, k), (k, 0)] {
                t[(r, s)] = T::one();
                t[(s, r)] = T::minus_one();
            }
            out.push(t);
        }
    }
    Ok(out)
}

/// Places an `a x a` block at diagonal offset `off` inside an `n x n`
/// zero matrix.
fn embed_block<T: Scalar>(n: usize, off: usize, block: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(n, n, |i, j| {
        if (off..off + block.rows()).contains(&i) && (off..off + block.cols()).contains(&j) {
            block[(i - off, j - off)].clone()
        } else {
            T::zero()
        }
    })
}

/// Derivation basis of the algebra attached to a connected graph, built
/// from the twin partition alone.
///
/// Graphs with fewer than three vertices fall back to the null-space
/// oracle (a single vertex has a one-dimensional derivation space; the
/// single edge has none). Otherwise: no size->=3 twin class means the
/// zero space; else each class contributes its triangle generators,
/// embedded at the class's block offset in relabeled coordinates and
/// conjugated back to the original labels. Every matrix is validated
/// against the Leibniz identity before being returned.
pub fn closed_form_derivations<T: Scalar>(g: &Graph) -> Result<ClosedFormBasis<T>> {
    let c = StructureMatrix::from_graph(g)?;
    let n = g.n();

    if n < 3 {
        let mats = oracle_derivations(&c).into_mats();
        return Ok(ClosedFormBasis { n, perm: VertexPermutation::identity(n), mats });
    }

    let g3 = g.twin_partition().gamma3();
    let perm = g.block_relabeling(&g3);
    let mut mats = Vec::new();
    for block_desc in block_layout(&g3) {
        for block in block_basis::<T>(block_desc.size)? {
            let in_new_labels = embed_block(n, block_desc.offset, &block);
            mats.push(perm.pull_back_matrix(&in_new_labels));
        }
    }

    for d in &mats {
        if !is_derivation(&c, d)? {
            return Err(Error::InternalInconsistency(
                "block construction emitted a matrix that fails the Leibniz identity".into(),
            ));
        }
    }
    Ok(ClosedFormBasis { n, perm, mats })
}

/// Dimension of the derivation space predicted by the block
/// construction: the sum of `(a-1)(a-2)/2` over size->=3 twin classes.
/// Sizes below three fall back to the oracle, like
/// [`closed_form_derivations`].
pub fn closed_form_dimension(g: &Graph) -> Result<usize> {
    if g.n() < 3 {
        let c: StructureMatrix<crate::Rational> = StructureMatrix::from_graph(g)?;
        return Ok(oracle_derivations(&c).dimension());
    }
    if !g.is_connected() {
        return Err(Error::ConnectivityError);
    }
    Ok(g.twin_partition()
        .gamma3()
        .sizes()
        .iter()
        .map(|&a| (a - 1) * (a - 2) / 2)
        .sum())
}

/// Turns a closed-form basis into the engine-level basis type.
pub fn as_derivation_basis<T>(basis: ClosedFormBasis<T>) -> DerivationBasis<T> {
    let n = basis.n();
    DerivationBasis::new(n, basis.into_mats())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::spans_equal;
    use crate::Rational;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()
    }

    fn multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn k33() -> Graph {
        multipartite(&[3, 3])
    }

    #[test]
    fn smallest_block_is_the_three_cycle_pattern() {
        let basis = block_basis::<Rational>(3).unwrap();
        assert_eq!(basis, vec![Matrix::from_int_rows(&[
            &[0, 1, -1],
            &[-1, 0, 1],
            &[1, -1, 0],
        ])]);
    }

    #[test]
    fn block_basis_counts_and_constraints() {
        for a in 3..=6 {
            let basis = block_basis::<Rational>(a).unwrap();
            assert_eq!(basis.len(), (a - 1) * (a - 2) / 2);
            for t in &basis {
                assert_eq!(t.transpose().scale(&Rational::from_integer((-1).into())), *t);
                for col in 0..a {
                    let sum: Rational = (0..a).map(|row| t[(row, col)].clone()).sum();
                    assert!(num_traits::Zero::is_zero(&sum));
                }
            }
            // Linear independence: the flattened stack has full rank.
            assert_eq!(crate::matrix::stack_flattened(&basis).unwrap().rank(), basis.len());
        }
    }

    #[test]
    fn undersized_block_is_rejected() {
        assert_eq!(block_basis::<Rational>(2).unwrap_err(), Error::SizeTooSmall(2));
    }

    #[test]
    fn graph_without_big_twin_classes_gives_the_zero_space() {
        let basis: ClosedFormBasis<Rational> = closed_form_derivations(&path(9)).unwrap();
        assert_eq!(basis.dimension(), 0);
        assert!(basis.perm().is_identity());
        assert_eq!(closed_form_dimension(&path(9)).unwrap(), 0);
    }

    #[test]
    fn k33_reproduces_the_two_block_patterns() {
        let basis: ClosedFormBasis<Rational> = closed_form_derivations(&k33()).unwrap();
        assert!(basis.perm().is_identity());
        let block = &block_basis::<Rational>(3).unwrap()[0];
        assert_eq!(basis.mats(), &[embed_block(6, 0, block), embed_block(6, 3, block)]);
    }

    #[test]
    fn closed_form_matches_oracle_spans() {
        for g in [k33(), star(4), star(7), multipartite(&[3, 4, 5]), path(6)] {
            let c = StructureMatrix::from_graph(&g).unwrap();
            let closed: ClosedFormBasis<Rational> = closed_form_derivations(&g).unwrap();
            let oracle = oracle_derivations(&c);
            assert!(spans_equal(closed.mats(), oracle.mats()).unwrap());
            assert_eq!(closed.dimension(), closed_form_dimension(&g).unwrap());
        }
    }

    #[test]
    fn dimension_formula_on_known_graphs() {
        assert_eq!(closed_form_dimension(&k33()).unwrap(), 2);
        assert_eq!(closed_form_dimension(&star(4)).unwrap(), 3);
        assert_eq!(closed_form_dimension(&multipartite(&[3, 4, 5])).unwrap(), 10);
    }

    #[test]
    fn tiny_graphs_fall_back_to_the_oracle() {
        let single = Graph::new(1, &[]).unwrap();
        let basis: ClosedFormBasis<Rational> = closed_form_derivations(&single).unwrap();
        assert_eq!(basis.dimension(), 1);
        assert_eq!(closed_form_dimension(&single).unwrap(), 1);

        let edge = path(2);
        let basis: ClosedFormBasis<Rational> = closed_form_derivations(&edge).unwrap();
        assert_eq!(basis.dimension(), 0);
        assert_eq!(closed_form_dimension(&edge).unwrap(), 0);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            closed_form_derivations::<Rational>(&g).unwrap_err(),
            Error::ConnectivityError
        );
        assert_eq!(closed_form_dimension(&g).unwrap_err(), Error::ConnectivityError);
    }

    #[test]
    fn output_respects_block_support_skew_and_column_sums() {
        let g = star(5); // twins are the leaves 2..6 (1-based)
        let tp = g.twin_partition();
        let closed: ClosedFormBasis<Rational> = closed_form_derivations(&g).unwrap();
        assert!(!closed.perm().is_identity()); // center is vertex 1, so leaves must be packed
        for d in closed.mats() {
            for i in 0..g.n() {
                assert!(num_traits::Zero::is_zero(&d[(i, i)]));
                for j in 0..g.n() {
                    if !num_traits::Zero::is_zero(&d[(i, j)]) {
                        assert!(tp.same_class(i, j));
                        assert_eq!(d[(i, j)], -d[(j, i)].clone());
                    }
                }
            }
            // Column sums within the leaf class vanish.
            for class in tp.classes().iter().filter(|c| c.len() >= 3) {
                for &i in class {
                    let sum: Rational = class.iter().map(|&k| d[(k, i)].clone()).sum();
                    assert!(num_traits::Zero::is_zero(&sum));
                }
            }
        }
    }
}
