//! The KCBS pentagram, its dichotomic observables and the five-term operator.
//!
//! Observables are built in the Cartesian representation of spin 1, where
//! the spin-0 state along a unit direction `n` is `n` itself and
//! `2S_n² − 1 = I − 2 n nᵀ`, then moved once into the `|1⟩, |0⟩, |−1⟩`
//! basis.

use core::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use crate::linalg::{Complex, ComplexMatrix3, RealVec3};
use crate::spin::{wigner_d, EulerAngles};
use crate::{Error, Result, KCBS_UPPER_EIGENVALUE, QUANTUM_MINIMUM};

/// Tolerance for the check that the assembled operator is the expected
/// diagonal.
pub const CONSTRUCTION_TOL: f64 = 1e-10;

/// Five unit directions with `d_i ⟂ d_{i+1}` (cyclically), sharing a common
/// polar angle about Z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentagramDirections {
    pub dirs: [RealVec3; 5],
}

impl PentagramDirections {
    pub fn successor(i: usize) -> usize {
        (i + 1) % 5
    }
}

/// `d_k = (sin Θ cos(4πk/5), sin Θ sin(4πk/5), cos Θ)` with
/// `cos²Θ = cos(π/5) / (1 + cos(π/5)) = 1/√5`.
pub fn pentagram_directions() -> PentagramDirections {
    let c = (PI / 5.0).cos();
    let cos_theta = (c / (1.0 + c)).sqrt();
    let theta = cos_theta.acos();
    let dirs = core::array::from_fn(|k| RealVec3::from_spherical(theta, 2.0 * TAU * k as f64 / 5.0));
    PentagramDirections { dirs }
}

/// Unitary whose columns are `|1⟩, |0⟩, |−1⟩` written in the Cartesian
/// basis: `(−x̂ − iŷ)/√2`, `ẑ`, `(x̂ − iŷ)/√2`.
fn cartesian_to_spherical_unitary() -> ComplexMatrix3 {
    let r = FRAC_1_SQRT_2;
    let z = Complex::new(0.0, 0.0);
    ComplexMatrix3::new([
        [Complex::new(-r, 0.0), z, Complex::new(r, 0.0)],
        [Complex::new(0.0, -r), z, Complex::new(0.0, -r)],
        [z, Complex::new(1.0, 0.0), z],
    ])
}

/// `U† · m_cart · U`, expressing a Cartesian spin-1 operator in the
/// `|1⟩, |0⟩, |−1⟩` basis.
pub fn basis_change_cartesian_to_spherical(m_cart: &ComplexMatrix3) -> ComplexMatrix3 {
    m_cart.conjugate_by_unchecked(&cartesian_to_spherical_unitary())
}

fn observable_cartesian(d: RealVec3) -> ComplexMatrix3 {
    let mut m = d.outer(d);
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = if i == j { 1.0 } else { 0.0 } - 2.0 * *v;
        }
    }
    ComplexMatrix3::from_real(m)
}

/// `A_i = 2S_i² − 1` for pentagram direction `i`.
pub fn observable_a(i: usize, dirs: &PentagramDirections) -> Result<ComplexMatrix3> {
    let d = dirs.dirs.get(i).ok_or(Error::IndexOutOfRange { index: i })?;
    Ok(basis_change_cartesian_to_spherical(&observable_cartesian(*d)))
}

/// The five observables `A_0..A_4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KcbsObservables {
    pub a: [ComplexMatrix3; 5],
}

impl KcbsObservables {
    pub fn new(dirs: &PentagramDirections) -> Self {
        Self { a: dirs.dirs.map(|d| basis_change_cartesian_to_spherical(&observable_cartesian(d))) }
    }

    /// `A_i · A_{i+1}`.
    pub fn correlator(&self, i: usize) -> ComplexMatrix3 {
        self.a[i % 5] * self.a[PentagramDirections::successor(i % 5)]
    }

    /// `Σ_i A_i A_{i+1}`.
    pub fn sum(&self) -> ComplexMatrix3 {
        (0..5).fold(ComplexMatrix3::zero(), |acc, i| acc + self.correlator(i))
    }
}

/// The expected KCBS operator: `diag(−5+2√5, 5−4√5, −5+2√5)`.
pub fn kcbs_diagonal() -> ComplexMatrix3 {
    let u = Complex::new(KCBS_UPPER_EIGENVALUE, 0.0);
    ComplexMatrix3::diag([u, Complex::new(QUANTUM_MINIMUM, 0.0), u])
}

/// The assembled KCBS operator, with an optional cached rotated copy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KcbsOperator {
    pub s: ComplexMatrix3,
    rotated: Option<(EulerAngles, ComplexMatrix3)>,
}

impl KcbsOperator {
    /// `D† S D`, cached for repeated calls with the same angles.
    pub fn rotated(&mut self, angles: EulerAngles) -> ComplexMatrix3 {
        match self.rotated {
            Some((cached, m)) if cached == angles => m,
            _ => {
                let m = self.s.conjugate_by_unchecked(&wigner_d(angles));
                self.rotated = Some((angles, m));
                m
            }
        }
    }

    pub fn cached_rotation(&self) -> Option<&(EulerAngles, ComplexMatrix3)> {
        self.rotated.as_ref()
    }
}

fn assembled_operator() -> ComplexMatrix3 {
    KcbsObservables::new(&pentagram_directions()).sum()
}

/// Builds `S = Σ A_i A_{i+1}` from the pentagram and checks it against the
/// expected diagonal.
pub fn kcbs_operator() -> Result<KcbsOperator> {
    let s = assembled_operator();
    let deviation = s.max_abs_diff(&kcbs_diagonal());
    if deviation > CONSTRUCTION_TOL {
        return Err(Error::ConstructionMismatch { deviation });
    }
    Ok(KcbsOperator { s, rotated: None })
}

/// `S′ = D†(α, β, γ) · S · D(α, β, γ)`.
pub fn rotated_kcbs(angles: EulerAngles) -> ComplexMatrix3 {
    assembled_operator().conjugate_by_unchecked(&wigner_d(angles))
}
