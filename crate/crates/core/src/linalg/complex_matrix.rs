use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::{Complex, RealSymMatrix3, RealVec3, HERMITIAN_TOL, UNITARY_TOL};
use crate::{Error, Result};

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// A 3×3 complex matrix indexed `(row, col)`.
///
/// When it holds a spin-1 operator the basis order is `|1⟩, |0⟩, |−1⟩`.
/// Hermiticity and unitarity are predicates checked on demand, not type
/// guarantees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix3 {
    pub entries: [[Complex; 3]; 3],
}

impl Default for ComplexMatrix3 {
    fn default() -> Self {
        Self::zero()
    }
}

impl ComplexMatrix3 {
    pub const fn new(entries: [[Complex; 3]; 3]) -> Self {
        Self { entries }
    }

    pub const fn zero() -> Self {
        Self::new([[ZERO; 3]; 3])
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]])
    }

    pub fn diag(d: [Complex; 3]) -> Self {
        let mut m = Self::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.entries[k][k] = v;
        }
        m
    }

    pub fn from_real(m: [[f64; 3]; 3]) -> Self {
        Self::new(m.map(|row| row.map(|v| Complex::new(v, 0.0))))
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.entries.map(|row| row.map(|v| v * s)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                t.entries[j][i] = self.entries[i][j];
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                t.entries[j][i] = self.entries[i][j].conj();
            }
        }
        t
    }

    /// `self · other − other · self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn trace(&self) -> Complex {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flatten().fold(0.0, |acc: f64, v| acc.max(v.norm()))
    }

    /// `max |self − other|` over entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// `max |M − M†|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// `max |M†M − I|`.
    pub fn unitarity_deviation(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// `u† · self · u`, with `u` checked for unitarity first.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        let deviation = u.unitarity_deviation();
        if deviation > UNITARY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(self.conjugate_by_unchecked(u))
    }

    pub(crate) fn conjugate_by_unchecked(&self, u: &Self) -> Self {
        u.adjoint() * *self * *u
    }

    pub fn mul_vec(&self, v: &[Complex; 3]) -> [Complex; 3] {
        let mut out = [ZERO; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.entries[i][0] * v[0] + self.entries[i][1] * v[1] + self.entries[i][2] * v[2];
        }
        out
    }

    /// `⟨u|self|v⟩` without any Hermiticity assumption.
    pub fn sandwich(&self, u: &[Complex; 3], v: &[Complex; 3]) -> Complex {
        let mv = self.mul_vec(v);
        u[0].conj() * mv[0] + u[1].conj() * mv[1] + u[2].conj() * mv[2]
    }

    /// Entrywise real part of a Hermitian matrix as a symmetric matrix.
    ///
    /// For real `ψ`, `ψᵀ Re(M) ψ = ⟨ψ|M|ψ⟩`; the imaginary part of a
    /// Hermitian matrix is antisymmetric and drops out of real quadratic
    /// forms.
    pub fn real_part_sym(&self) -> Result<RealSymMatrix3> {
        let deviation = self.hermiticity_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let e = &self.entries;
        Ok(RealSymMatrix3::from_upper(e[0][0].re, e[0][1].re, e[0][2].re, e[1][1].re, e[1][2].re, e[2][2].re))
    }

    /// Symmetrised entrywise real part, `(Re M + Re Mᵀ)/2`, with no
    /// Hermiticity check.
    pub(crate) fn symmetric_real_part(&self) -> RealSymMatrix3 {
        let e = &self.entries;
        let avg = |i: usize, j: usize| 0.5 * (e[i][j].re + e[j][i].re);
        RealSymMatrix3::from_upper(e[0][0].re, avg(0, 1), avg(0, 2), e[1][1].re, avg(1, 2), e[2][2].re)
    }

    /// Real part of `⟨ψ|self|ψ⟩` for a real amplitude vector.
    pub fn real_quadratic_form(&self, v: RealVec3) -> f64 {
        let a = v.to_array();
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                acc += a[i] * self.entries[i][j].re * a[j];
            }
        }
        acc
    }
}

impl Index<(usize, usize)> for ComplexMatrix3 {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.entries[r][c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix3 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.entries[r][c]
    }
}

impl Mul for ComplexMatrix3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = ZERO;
                for k in 0..3 {
                    acc += self.entries[i][k] * rhs.entries[k][j];
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }
}

impl Add for ComplexMatrix3 {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..3 {
            for j in 0..3 {
                self.entries[i][j] += rhs.entries[i][j];
            }
        }
        self
    }
}

impl Sub for ComplexMatrix3 {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..3 {
            for j in 0..3 {
                self.entries[i][j] -= rhs.entries[i][j];
            }
        }
        self
    }
}

impl Neg for ComplexMatrix3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.entries.map(|row| row.map(|v| -v)))
    }
}

impl Mul<f64> for ComplexMatrix3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.entries.map(|row| row.map(|v| v * s)))
    }
}
