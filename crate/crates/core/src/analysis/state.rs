use core::f64::consts::{FRAC_1_SQRT_2, TAU};

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use crate::linalg::{Complex, ComplexMatrix3, RealVec3, HERMITIAN_TOL};
use crate::{Error, Result};

/// Allowed deviation of `Σ|amp|²` from 1.
pub const NORM_TOL: f64 = 1e-12;

/// Imaginary residue of `⟨ψ|op|ψ⟩` above which the expectation is rejected.
const IMAG_RESIDUE_TOL: f64 = 1e-8;

/// Normalised amplitudes over `|1⟩, |0⟩, |−1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritState {
    amps: [Complex; 3],
}

impl QutritState {
    pub fn new(amps: [Complex; 3]) -> Result<Self> {
        let norm_sqr = norm_sqr(&amps);
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amps })
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(amps: [Complex; 3]) -> Result<Self> {
        let norm_sqr = norm_sqr(&amps);
        if !(norm_sqr > 0.0 && norm_sqr.is_finite()) {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let inv = 1.0 / norm_sqr.sqrt();
        Ok(Self { amps: amps.map(|a| a * inv) })
    }

    pub fn from_real(v: RealVec3) -> Result<Self> {
        Self::new(v.to_array().map(|x| Complex::new(x, 0.0)))
    }

    pub fn amps(&self) -> &[Complex; 3] {
        &self.amps
    }

    pub fn plus_one() -> Self {
        Self::basis(0)
    }

    pub fn zero() -> Self {
        Self::basis(1)
    }

    pub fn minus_one() -> Self {
        Self::basis(2)
    }

    /// `(|1⟩ + |−1⟩)/√2`.
    pub fn psi_plus() -> Self {
        let r = Complex::new(FRAC_1_SQRT_2, 0.0);
        Self { amps: [r, Complex::new(0.0, 0.0), r] }
    }

    fn basis(k: usize) -> Self {
        let mut amps = [Complex::new(0.0, 0.0); 3];
        amps[k] = Complex::new(1.0, 0.0);
        Self { amps }
    }
}

fn norm_sqr(amps: &[Complex; 3]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

/// A real-amplitude qutrit `(sin θ cos φ, sin θ sin φ, cos θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RetritState {
    pub theta: f64,
    pub phi: f64,
}

impl RetritState {
    pub const fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    pub fn vector(&self) -> RealVec3 {
        RealVec3::from_spherical(self.theta, self.phi)
    }

    /// Spherical angles of a unit vector: `θ = arccos z`, `φ = atan2(y, x)`
    /// reduced to `[0, 2π)`.
    pub fn from_vector(v: RealVec3) -> Self {
        let theta = v.z.clamp(-1.0, 1.0).acos();
        let mut phi = v.y.atan2(v.x);
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }
}

pub fn retrit_to_state(r: RetritState) -> QutritState {
    let v = r.vector();
    QutritState { amps: v.to_array().map(|x| Complex::new(x, 0.0)) }
}

/// `⟨ψ|op|ψ⟩` for a Hermitian operator.
pub fn expectation(state: &QutritState, op: &ComplexMatrix3) -> Result<f64> {
    let deviation = op.hermiticity_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let value = op.sandwich(&state.amps, &state.amps);
    if value.im.abs() > IMAG_RESIDUE_TOL {
        return Err(Error::NonRealExpectation { residue: value.im });
    }
    Ok(value.re)
}
