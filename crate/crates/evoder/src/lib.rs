//! Exact computation of the derivation space of the evolution algebra
//! attached to a finite simple connected graph.
//!
//! Two independent routes produce the same answer and are cross-validated:
//!
//! * a brute-force solver that assembles the linear derivation conditions
//!   of the algebra and takes their exact rational null space, valid for
//!   any evolution algebra; and
//! * a closed-form construction driven purely by the twin partition of the
//!   graph: block skew-symmetric matrices with zero column sums, supported
//!   on the twin classes with at least three vertices.
//!
//! All arithmetic is over arbitrary-precision rationals; there are no
//! tolerances anywhere. The linear-algebra and algebra layers are generic
//! over a [`scalar::Scalar`]; the concrete aliases below are what every
//! shipped pipeline uses.

pub mod algebra;
pub mod checks;
pub mod closed_form;
pub mod derivation;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod verify;

pub use algebra::StructureMatrix;
pub use closed_form::ClosedFormBasis;
pub use derivation::DerivationBasis;
pub use error::{Error, Result};
pub use graph::{Gamma3, Graph, TwinPartition, VertexPermutation};
pub use matrix::Matrix;

/// Arbitrary-precision rational scalar: lowest terms, positive denominator.
pub type Rational = num_rational::BigRational;

/// Dense matrix over [`Rational`], the substrate for every exact pipeline.
pub type RationalMatrix = Matrix<Rational>;

/// Parses the `p/q` (or plain `p`) rational literal form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::MalformedInput(format!("bad rational literal {s:?}")))
}
