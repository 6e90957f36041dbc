//! Dense 3×3 linear algebra: complex matrices for operators and rotations,
//! real 3-vectors, and symmetric real matrices with a Jacobi eigensolver.

mod complex_matrix;
mod eigen;
mod vec3;

pub use complex_matrix::ComplexMatrix3;
pub use eigen::{eig_sym3, hermitian_eigenvalues, EigenDecomposition3, RealSymMatrix3, DEGENERACY_GAP};
pub use vec3::RealVec3;

pub use num_complex::Complex64 as Complex;

/// Default tolerance for Hermiticity checks on inputs.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Tolerance on `max |U†U − I|` accepted by [`ComplexMatrix3::conjugate_by`].
pub const UNITARY_TOL: f64 = 1e-8;
