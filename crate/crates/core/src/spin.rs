//! Spin-1 operators and rotations in the `|1⟩, |0⟩, |−1⟩` basis (ħ = 1).
//!
//! [`wigner_d`] is written out entry by entry and is the reference for the
//! rotation convention; it factors as `rot_z(γ) · rot_y(β) · rot_z(α)`,
//! i.e. `e^{−iS_zγ} e^{−iS_yβ} e^{−iS_zα}`.

use core::f64::consts::FRAC_1_SQRT_2;

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use crate::linalg::{Complex, ComplexMatrix3, RealVec3};

/// Euler angles in radians. No range restriction.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EulerAngles {
    pub const fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma }
    }

    /// Angles with `γ = 0`; the KCBS expectation does not depend on `γ`.
    pub const fn alpha_beta(alpha: f64, beta: f64) -> Self {
        Self::new(alpha, beta, 0.0)
    }
}

/// The spin-1 matrices `S_x, S_y, S_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinOperators {
    pub sx: ComplexMatrix3,
    pub sy: ComplexMatrix3,
    pub sz: ComplexMatrix3,
}

impl SpinOperators {
    /// `S_x² + S_y² + S_z²`, which is `s(s+1) I = 2 I`.
    pub fn casimir(&self) -> ComplexMatrix3 {
        self.sx * self.sx + self.sy * self.sy + self.sz * self.sz
    }
}

pub fn spin_matrices() -> SpinOperators {
    let r = FRAC_1_SQRT_2;
    let z = Complex::new(0.0, 0.0);
    let re = |v: f64| Complex::new(v, 0.0);
    let im = |v: f64| Complex::new(0.0, v);
    SpinOperators {
        sx: ComplexMatrix3::new([[z, re(r), z], [re(r), z, re(r)], [z, re(r), z]]),
        sy: ComplexMatrix3::new([[z, im(-r), z], [im(r), z, im(-r)], [z, im(r), z]]),
        sz: ComplexMatrix3::diag([re(1.0), z, re(-1.0)]),
    }
}

/// `e^{−iS_zα} = diag(e^{−iα}, 1, e^{iα})`.
pub fn rot_z(alpha: f64) -> ComplexMatrix3 {
    ComplexMatrix3::diag([Complex::cis(-alpha), Complex::new(1.0, 0.0), Complex::cis(alpha)])
}

/// The closed form of the Z-rotation obtained by summing the exponential
/// series: `I − S_z²(1 − cos α) − i S_z sin α`.
pub fn rot_z_series(alpha: f64) -> ComplexMatrix3 {
    let sz = spin_matrices().sz;
    ComplexMatrix3::identity() - (sz * sz) * (1.0 - alpha.cos()) - sz.scale(Complex::new(0.0, alpha.sin()))
}

/// `e^{−iS_yβ}`, the real Wigner small-d matrix for spin 1.
pub fn rot_y(beta: f64) -> ComplexMatrix3 {
    let (s, c) = beta.sin_cos();
    let half = beta / 2.0;
    let c2 = half.cos().powi(2);
    let s2 = half.sin().powi(2);
    let t = s * FRAC_1_SQRT_2;
    ComplexMatrix3::from_real([[c2, -t, s2], [t, c, -t], [s2, t, c2]])
}

/// The full rotation matrix `D(α, β, γ)`.
pub fn wigner_d(angles: EulerAngles) -> ComplexMatrix3 {
    let EulerAngles { alpha, beta, gamma } = angles;
    let half = beta / 2.0;
    let c2 = half.cos().powi(2);
    let s2 = half.sin().powi(2);
    let t = beta.sin() * FRAC_1_SQRT_2;
    let e = Complex::cis;
    ComplexMatrix3::new([
        [e(-alpha - gamma) * c2, e(-gamma) * -t, e(alpha - gamma) * s2],
        [e(-alpha) * t, Complex::new(beta.cos(), 0.0), e(alpha) * -t],
        [e(gamma - alpha) * s2, e(gamma) * t, e(alpha + gamma) * c2],
    ])
}

/// Image of the Z symmetry axis: `(sin β cos γ, sin β sin γ, cos β)`.
pub fn rotated_axis(angles: EulerAngles) -> RealVec3 {
    RealVec3::from_spherical(angles.beta, angles.gamma)
}
