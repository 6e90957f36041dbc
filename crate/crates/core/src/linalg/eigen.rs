// float methods are inherent only when std is linked
use super::{ComplexMatrix3, RealVec3};
#[allow(unused_imports)]
use num_traits::Float as _;

/// Eigenvalues closer than this are treated as degenerate by callers that
/// need a tie-break.
pub const DEGENERACY_GAP: f64 = 1e-8;

const MAX_SWEEPS: usize = 64;

/// Symmetric real 3×3 matrix stored as its upper triangle.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RealSymMatrix3 {
    pub xx: f64,
    pub xy: f64,
    pub xz: f64,
    pub yy: f64,
    pub yz: f64,
    pub zz: f64,
}

impl RealSymMatrix3 {
    pub const fn from_upper(xx: f64, xy: f64, xz: f64, yy: f64, yz: f64, zz: f64) -> Self {
        Self { xx, xy, xz, yy, yz, zz }
    }

    pub const fn diag(a: f64, b: f64, c: f64) -> Self {
        Self::from_upper(a, 0.0, 0.0, b, 0.0, c)
    }

    /// Takes the upper triangle of `rows` and mirrors it.
    pub fn from_rows_upper(rows: [[f64; 3]; 3]) -> Self {
        Self::from_upper(rows[0][0], rows[0][1], rows[0][2], rows[1][1], rows[1][2], rows[2][2])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        match (i.min(j), i.max(j)) {
            (0, 0) => self.xx,
            (0, 1) => self.xy,
            (0, 2) => self.xz,
            (1, 1) => self.yy,
            (1, 2) => self.yz,
            (2, 2) => self.zz,
            _ => panic!("index ({i}, {j}) out of range for a 3x3 matrix"),
        }
    }

    pub fn to_rows(&self) -> [[f64; 3]; 3] {
        [[self.xx, self.xy, self.xz], [self.xy, self.yy, self.yz], [self.xz, self.yz, self.zz]]
    }

    pub fn mul_vec(&self, v: RealVec3) -> RealVec3 {
        RealVec3::new(
            self.xx * v.x + self.xy * v.y + self.xz * v.z,
            self.xy * v.x + self.yy * v.y + self.yz * v.z,
            self.xz * v.x + self.yz * v.y + self.zz * v.z,
        )
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: RealVec3) -> f64 {
        v.dot(self.mul_vec(v))
    }

    pub fn trace(&self) -> f64 {
        self.xx + self.yy + self.zz
    }

    pub fn determinant(&self) -> f64 {
        self.xx * (self.yy * self.zz - self.yz * self.yz) - self.xy * (self.xy * self.zz - self.yz * self.xz)
            + self.xz * (self.xy * self.yz - self.yy * self.xz)
    }

    /// `det(M − λI)`.
    pub fn characteristic(&self, lambda: f64) -> f64 {
        let shifted = Self { xx: self.xx - lambda, yy: self.yy - lambda, zz: self.zz - lambda, ..*self };
        shifted.determinant()
    }
}

/// Eigenvalues in ascending order with their orthonormal eigenvectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenDecomposition3 {
    pub eigenvalues: [f64; 3],
    pub eigenvectors: [RealVec3; 3],
}

impl EigenDecomposition3 {
    pub fn min(&self) -> (f64, RealVec3) {
        (self.eigenvalues[0], self.eigenvectors[0])
    }

    /// `Σ λ_k v_k v_kᵀ`.
    pub fn reconstruct(&self) -> [[f64; 3]; 3] {
        let mut m = [[0.0; 3]; 3];
        for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            let o = v.outer(*v);
            for i in 0..3 {
                for j in 0..3 {
                    m[i][j] += lambda * o[i][j];
                }
            }
        }
        m
    }
}

/// Cyclic Jacobi eigensolver for a symmetric 3×3 matrix.
///
/// Converges to machine precision in a handful of sweeps and returns an
/// orthonormal basis even for repeated eigenvalues. Eigenvalues are sorted
/// ascending.
pub fn eig_sym3(m: &RealSymMatrix3) -> EigenDecomposition3 {
    let (values, vectors) = jacobi(m.to_rows());
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));

    let column = |k: usize| RealVec3::new(vectors[0][k], vectors[1][k], vectors[2][k]);
    EigenDecomposition3 { eigenvalues: order.map(|k| values[k]), eigenvectors: order.map(column) }
}

/// Sorted eigenvalues of a Hermitian matrix.
///
/// Runs Jacobi on the real 6×6 embedding `[[Re, −Im], [Im, Re]]`, whose
/// spectrum is that of `m` with every eigenvalue doubled. The imaginary
/// part is antisymmetrised first, so small Hermiticity errors are ignored.
pub fn hermitian_eigenvalues(m: &ComplexMatrix3) -> [f64; 3] {
    let mut big = [[0.0; 6]; 6];
    for i in 0..3 {
        for j in 0..3 {
            let re = 0.5 * (m[(i, j)].re + m[(j, i)].re);
            let im = 0.5 * (m[(i, j)].im - m[(j, i)].im);
            big[i][j] = re;
            big[i + 3][j + 3] = re;
            big[i][j + 3] = -im;
            big[i + 3][j] = im;
        }
    }
    let (mut values, _) = jacobi(big);
    values.sort_by(f64::total_cmp);
    [0.5 * (values[0] + values[1]), 0.5 * (values[2] + values[3]), 0.5 * (values[4] + values[5])]
}

// Returns the diagonalised entries (unsorted) and the accumulated rotation,
// whose columns are the eigenvectors.
#[allow(clippy::needless_range_loop)]
fn jacobi<const N: usize>(mut a: [[f64; N]; N]) -> ([f64; N], [[f64; N]; N]) {
    let mut v = [[0.0; N]; N];
    for (k, row) in v.iter_mut().enumerate() {
        row[k] = 1.0;
    }

    let scale = a.iter().flatten().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    if scale > 0.0 && scale.is_finite() {
        for _ in 0..MAX_SWEEPS {
            let mut off = 0.0;
            for p in 0..N {
                for q in (p + 1)..N {
                    off += a[p][q].abs();
                }
            }
            if off <= f64::EPSILON * 1e-3 * scale {
                break;
            }
            for p in 0..N {
                for q in (p + 1)..N {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }
    (core::array::from_fn(|k| a[k][k]), v)
}

// One Jacobi rotation zeroing a[p][q]; accumulates the rotation into v's
// columns.
#[allow(clippy::needless_range_loop)]
fn rotate<const N: usize>(a: &mut [[f64; N]; N], v: &mut [[f64; N]; N], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for row in a.iter_mut() {
        let akp = row[p];
        let akq = row[q];
        row[p] = c * akp - s * akq;
        row[q] = s * akp + c * akq;
    }
    for k in 0..N {
        let apk = a[p][k];
        let aqk = a[q][k];
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;

    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_invariants(m: &RealSymMatrix3, e: &EigenDecomposition3) {
        let rows = m.to_rows();
        let rec = e.reconstruct();
        for i in 0..3 {
            for j in 0..3 {
                assert!((rows[i][j] - rec[i][j]).abs() < 1e-9, "reconstruction {i},{j}");
            }
        }
        for k in 0..3 {
            let v = e.eigenvectors[k];
            assert!((v.norm() - 1.0).abs() < 1e-12);
            let r = m.mul_vec(v) - v * e.eigenvalues[k];
            assert!(r.norm() < 1e-10, "residual {}", r.norm());
            for l in (k + 1)..3 {
                assert!(v.dot(e.eigenvectors[l]).abs() < 1e-10);
            }
        }
        assert!(e.eigenvalues[0] <= e.eigenvalues[1] && e.eigenvalues[1] <= e.eigenvalues[2]);
    }

    #[test]
    fn diagonal_matrix() {
        let m = RealSymMatrix3::diag(3.0, 1.0, 2.0);
        let e = eig_sym3(&m);
        assert_eq!(e.eigenvalues, [1.0, 2.0, 3.0]);
        assert_eq!(e.eigenvectors[0].y.abs(), 1.0);
        assert_eq!(e.eigenvectors[1].z.abs(), 1.0);
        assert_eq!(e.eigenvectors[2].x.abs(), 1.0);
    }

    #[test]
    fn zero_and_scalar_matrices() {
        let e = eig_sym3(&RealSymMatrix3::default());
        assert_eq!(e.eigenvalues, [0.0; 3]);
        let e = eig_sym3(&RealSymMatrix3::diag(-2.0, -2.0, -2.0));
        check_invariants(&RealSymMatrix3::diag(-2.0, -2.0, -2.0), &e);
    }

    #[test]
    fn degenerate_pair_gets_orthonormal_basis() {
        // all-ones matrix plus identity: eigenvalues 1, 1, 4
        let m = RealSymMatrix3::from_upper(2.0, 1.0, 1.0, 2.0, 1.0, 2.0);
        let e = eig_sym3(&m);
        check_invariants(&m, &e);
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-12);
        assert!((e.eigenvalues[2] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_spectrum_of_spin_matrices() {
        let s = crate::spin::spin_matrices();
        for m in [s.sx, s.sy, s.sz] {
            let e = hermitian_eigenvalues(&m);
            assert!((e[0] + 1.0).abs() < 1e-14 && e[1].abs() < 1e-14 && (e[2] - 1.0).abs() < 1e-14);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn random_symmetric(entries in proptest::array::uniform6(-10.0f64..10.0)) {
            let [a, b, c, d, e, f] = entries;
            let m = RealSymMatrix3::from_upper(a, b, c, d, e, f);
            let dec = eig_sym3(&m);
            check_invariants(&m, &dec);
            for lambda in dec.eigenvalues {
                prop_assert!(m.characteristic(lambda).abs() < 1e-9);
            }
        }
    }
}
