//! Closed-form expectation values of the rotated KCBS operator.
//!
//! Each formula is an independent route to a number the matrix path
//! (`expectation` of `D†SD`) also produces; the tests pin the two together.

use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use crate::{Error, Result, SQRT_5};

/// `3√5 − 5`, the coefficient that recurs through the retrit formulas.
const K: f64 = 3.0 * SQRT_5 - 5.0;

/// `⟨0|S′|0⟩ = (5 − 3√5) cos 2β − √5`.
pub fn exp_zero_closed(beta: f64) -> f64 {
    (5.0 - 3.0 * SQRT_5) * (2.0 * beta).cos() - SQRT_5
}

/// `⟨±1|S′|±1⟩ = ½((3√5 − 5) cos 2β + √5 − 5)`.
pub fn exp_pm_closed(beta: f64) -> f64 {
    0.5 * (K * (2.0 * beta).cos() + SQRT_5 - 5.0)
}

/// `⟨ψ|S′|ψ⟩` for `ψ = (|1⟩ + |−1⟩)/√2`.
pub fn exp_psi_closed(alpha: f64, beta: f64) -> f64 {
    let (sa, ca) = alpha.sin_cos();
    (-5.0 + 2.0 * SQRT_5) * ca * ca + (K * (2.0 * beta).cos() - SQRT_5) * sa * sa
}

/// `⟨ψ|D†(α, β, γ) S D(α, β, γ)|ψ⟩` for the retrit `ψ(θ, φ)`.
pub fn f_closed(theta: f64, phi: f64, beta: f64, alpha: f64) -> f64 {
    let (st, ct) = theta.sin_cos();
    let st2 = st * st;
    let ct2 = ct * ct;
    let (sp, cp) = phi.sin_cos();
    let (sb, cb) = beta.sin_cos();
    let ca = alpha.cos();
    let c2a = (2.0 * alpha).cos();
    let c2b = (2.0 * beta).cos();
    let s2b = (2.0 * beta).sin();
    let c2p = (2.0 * phi).cos();
    let s2p = (2.0 * phi).sin();
    let s2t = (2.0 * theta).sin();

    let t1 = 2.0 * (K * c2b + SQRT_5 - 5.0) * ct2;
    let t2 = K * st2 * (c2b * (3.0 * c2p - 1.0) - 2.0 * SQRT_2 * s2b * ca * s2p);
    let t3 = 4.0 * K * sb * s2t * (sb * c2a * cp + SQRT_2 * cb * ca * sp);
    let t4 = st2 * (K * c2p - SQRT_5 - 5.0);
    0.25 * (t1 + t2 + t3 + t4)
}

/// Rotations with a hand-reduced form of [`f_closed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    /// `β = 0, α = 0`.
    NoRotation,
    /// `β = π/2, α = 0`.
    QuarterTurnY,
    /// `β = π/4, α = 0`.
    EighthTurnY,
    /// `β = π/4, α = π/4`.
    EighthTurnYZ,
}

impl SpecialCase {
    pub const ALL: [Self; 4] = [Self::NoRotation, Self::QuarterTurnY, Self::EighthTurnY, Self::EighthTurnYZ];

    /// `(β, α)` of this case.
    pub fn rotation(self) -> (f64, f64) {
        match self {
            Self::NoRotation => (0.0, 0.0),
            Self::QuarterTurnY => (FRAC_PI_2, 0.0),
            Self::EighthTurnY => (FRAC_PI_4, 0.0),
            Self::EighthTurnYZ => (FRAC_PI_4, FRAC_PI_4),
        }
    }

    pub fn from_rotation(beta: f64, alpha: f64) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| {
                let (b, a) = c.rotation();
                (b - beta).abs() < 1e-12 && (a - alpha).abs() < 1e-12
            })
            .ok_or(Error::UnknownCase { beta, alpha })
    }
}

/// [`f_closed`] evaluated through the reduced formula for `case`.
pub fn f_special(case: SpecialCase, theta: f64, phi: f64) -> f64 {
    let st2 = theta.sin().powi(2);
    let ct2 = theta.cos().powi(2);
    let s2t = (2.0 * theta).sin();
    let c2t = (2.0 * theta).cos();
    let (sp, cp) = phi.sin_cos();
    let c2p = (2.0 * phi).cos();
    let s2p = (2.0 * phi).sin();
    match case {
        SpecialCase::NoRotation => {
            0.25 * (st2 * (K * c2p - SQRT_5 - 5.0) + K * st2 * (3.0 * c2p - 1.0) + 2.0 * (4.0 * SQRT_5 - 10.0) * ct2)
        }
        SpecialCase::QuarterTurnY => {
            0.25 * (st2 * (K * c2p - SQRT_5 - 5.0) + K * st2 * (1.0 - 3.0 * c2p) + 4.0 * K * s2t * cp
                - 4.0 * SQRT_5 * ct2)
        }
        SpecialCase::EighthTurnY => {
            (2.0 * K * st2 * (c2p - 2.0 * SQRT_2 * s2p) + 4.0 * K * s2t * (SQRT_2 * sp + cp) + K * c2t + SQRT_5 - 15.0)
                / 8.0
        }
        SpecialCase::EighthTurnYZ => {
            (4.0 * K * s2t * sp + 2.0 * K * st2 * (c2p - 2.0 * s2p) + K * c2t + SQRT_5 - 15.0) / 8.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{expectation, retrit_to_state, QutritState, RetritState};
    use crate::kcbs::rotated_kcbs;
    use crate::spin::EulerAngles;
    use crate::{KCBS_UPPER_EIGENVALUE, QUANTUM_MINIMUM};
    use core::f64::consts::{PI, TAU};
    use proptest::prelude::*;

    #[test]
    fn zero_state_curve() {
        assert!((exp_zero_closed(0.0) - QUANTUM_MINIMUM).abs() < 1e-14);
        assert!((exp_zero_closed(FRAC_PI_2) - KCBS_UPPER_EIGENVALUE).abs() < 1e-14);
        assert!((exp_zero_closed(31.717_f64.to_radians()) + 3.0).abs() < 1e-4);
    }

    #[test]
    fn pm_curve() {
        assert!((exp_pm_closed(0.0) - KCBS_UPPER_EIGENVALUE).abs() < 1e-14);
        assert!((exp_pm_closed(FRAC_PI_2) + SQRT_5).abs() < 1e-14);
    }

    #[test]
    fn psi_curve() {
        assert!((exp_psi_closed(FRAC_PI_2, FRAC_PI_2) - QUANTUM_MINIMUM).abs() < 1e-14);
        for beta in [0.0, 0.4, 2.0, 5.0] {
            assert!((exp_psi_closed(0.0, beta) - KCBS_UPPER_EIGENVALUE).abs() < 1e-14);
        }
        let boundary = exp_psi_closed(58.282_f64.to_radians(), FRAC_PI_2);
        assert!((boundary + 3.0).abs() < 2e-4);
    }

    #[test]
    fn f_at_reference_points() {
        assert!((f_closed(FRAC_PI_2, 1.5 * PI, 0.0, 0.0) - QUANTUM_MINIMUM).abs() < 1e-14);
        assert!((f_special(SpecialCase::NoRotation, FRAC_PI_2, FRAC_PI_2) - QUANTUM_MINIMUM).abs() < 1e-14);
    }

    #[test]
    fn special_case_lookup() {
        assert_eq!(SpecialCase::from_rotation(FRAC_PI_4, FRAC_PI_4).unwrap(), SpecialCase::EighthTurnYZ);
        assert!(matches!(SpecialCase::from_rotation(0.3, 0.0), Err(Error::UnknownCase { .. })));
    }

    #[test]
    fn special_cases_match_general_formula() {
        for case in SpecialCase::ALL {
            let (beta, alpha) = case.rotation();
            for i in 0..50 {
                for j in 0..50 {
                    let theta = PI * i as f64 / 49.0;
                    let phi = TAU * j as f64 / 50.0;
                    let d = f_special(case, theta, phi) - f_closed(theta, phi, beta, alpha);
                    assert!(d.abs() < 1e-12, "{case:?} at ({theta}, {phi}): {d}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn closed_forms_match_matrix_path(
            theta in 0.0..PI, phi in 0.0..TAU, beta in -TAU..TAU, alpha in -TAU..TAU, gamma in -TAU..TAU
        ) {
            let s = rotated_kcbs(EulerAngles::new(alpha, beta, gamma));
            let psi = retrit_to_state(RetritState::new(theta, phi));
            let f = f_closed(theta, phi, beta, alpha);
            prop_assert!((expectation(&psi, &s).unwrap() - f).abs() < 1e-10);
            prop_assert!((expectation(&QutritState::zero(), &s).unwrap() - exp_zero_closed(beta)).abs() < 1e-10);
            prop_assert!((expectation(&QutritState::plus_one(), &s).unwrap() - exp_pm_closed(beta)).abs() < 1e-10);
            prop_assert!((expectation(&QutritState::minus_one(), &s).unwrap() - exp_pm_closed(beta)).abs() < 1e-10);
            prop_assert!((expectation(&QutritState::psi_plus(), &s).unwrap() - exp_psi_closed(alpha, beta)).abs() < 1e-10);

            prop_assert!((f_closed(0.0, phi, beta, alpha) - exp_pm_closed(beta)).abs() < 1e-10);
            prop_assert!((f_closed(FRAC_PI_2, FRAC_PI_2, beta, alpha) - exp_zero_closed(beta)).abs() < 1e-10);
            prop_assert!(f >= QUANTUM_MINIMUM - 1e-9);
            prop_assert!(f <= KCBS_UPPER_EIGENVALUE + 1e-9);
        }
    }
}
