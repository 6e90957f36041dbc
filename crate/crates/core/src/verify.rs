//! Operator-identity self checks.
//!
//! Sample angles come from a fixed low-discrepancy (golden-ratio Weyl)
//! sequence, so every run checks the same points.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use crate::analysis::{
    exp_pm_closed, exp_psi_closed, exp_zero_closed, expectation, f_closed, retrit_to_state, QutritState, RetritState,
};
use crate::kcbs::{kcbs_diagonal, kcbs_operator, pentagram_directions, rotated_kcbs, KcbsObservables};
use crate::linalg::{hermitian_eigenvalues, Complex, ComplexMatrix3};
use crate::spin::{rot_y, rot_z, rot_z_series, spin_matrices, wigner_d, EulerAngles};
use crate::{KCBS_UPPER_EIGENVALUE, QUANTUM_MINIMUM};

/// Samples per randomised check.
pub const SAMPLES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

/// Point `n` of the `d`-dimensional Weyl sequence in `[0, 1)^d`.
pub fn weyl<const D: usize>(n: usize) -> [f64; D] {
    // generalised golden ratio: the positive root of x^{D+1} = x + 1
    let mut g = 2.0_f64;
    for _ in 0..64 {
        g = (1.0 + g).powf(1.0 / (D as f64 + 1.0));
    }
    let mut out = [0.0; D];
    let mut a = 1.0;
    for x in out.iter_mut() {
        a /= g;
        *x = (0.5 + a * (n as f64 + 1.0)).fract();
    }
    out
}

fn max_over(n: usize, mut f: impl FnMut(usize) -> f64) -> f64 {
    (0..n).map(&mut f).fold(0.0, f64::max)
}

pub fn run_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let sp = spin_matrices();
    let i = Complex::new(0.0, 1.0);

    out.push(Check {
        name: "rot_z matches its series form",
        max_deviation: max_over(SAMPLES, |n| {
            let alpha = TAU * weyl::<1>(n)[0];
            rot_z(alpha).max_abs_diff(&rot_z_series(alpha))
        }),
        tolerance: 1e-12,
    });

    out.push(Check {
        name: "D(alpha,beta,gamma) = Rz(gamma) Ry(beta) Rz(alpha)",
        max_deviation: max_over(SAMPLES, |n| {
            let [a, b, g] = weyl::<3>(n).map(|u| TAU * u);
            let product = rot_z(g) * rot_y(b) * rot_z(a);
            wigner_d(EulerAngles::new(a, b, g)).max_abs_diff(&product)
        }),
        tolerance: 1e-12,
    });

    out.push(Check {
        name: "spin commutators and casimir",
        max_deviation: [
            (sp.sx * sp.sy - sp.sy * sp.sx).max_abs_diff(&sp.sz.scale(i)),
            (sp.sy * sp.sz - sp.sz * sp.sy).max_abs_diff(&sp.sx.scale(i)),
            (sp.sz * sp.sx - sp.sx * sp.sz).max_abs_diff(&sp.sy.scale(i)),
            sp.casimir().max_abs_diff(&(ComplexMatrix3::identity() * 2.0)),
        ]
        .into_iter()
        .fold(0.0, f64::max),
        tolerance: 1e-12,
    });

    let obs = KcbsObservables::new(&pentagram_directions());
    out.push(Check {
        name: "adjacent observables commute",
        max_deviation: max_over(5, |k| obs.a[k].commutator(&obs.a[(k + 1) % 5]).max_abs()),
        tolerance: 1e-10,
    });

    out.push(Check {
        name: "KCBS operator reconstruction",
        max_deviation: match kcbs_operator() {
            Ok(op) => op.s.max_abs_diff(&kcbs_diagonal()),
            Err(_) => f64::INFINITY,
        },
        tolerance: 1e-10,
    });

    let s = kcbs_diagonal();
    out.push(Check {
        name: "invariance under Z rotation",
        max_deviation: max_over(SAMPLES, |n| {
            let g = TAU * weyl::<1>(n)[0];
            rotated_kcbs(EulerAngles::new(0.0, 0.0, g)).max_abs_diff(&s)
        }),
        tolerance: 1e-12,
    });

    out.push(Check {
        name: "rotated operator independent of gamma",
        max_deviation: max_over(SAMPLES, |n| {
            let [a, b, g] = weyl::<3>(n).map(|u| TAU * u);
            rotated_kcbs(EulerAngles::new(a, b, g)).max_abs_diff(&rotated_kcbs(EulerAngles::alpha_beta(a, b)))
        }),
        tolerance: 1e-12,
    });

    let expected = [QUANTUM_MINIMUM, KCBS_UPPER_EIGENVALUE, KCBS_UPPER_EIGENVALUE];
    out.push(Check {
        name: "spectrum invariance",
        max_deviation: max_over(SAMPLES, |n| {
            let [a, b, g] = weyl::<3>(n).map(|u| TAU * u);
            let ev = hermitian_eigenvalues(&rotated_kcbs(EulerAngles::new(a, b, g)));
            ev.iter().zip(expected).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
        }),
        tolerance: 1e-9,
    });

    out.push(Check {
        name: "closed forms match matrix path",
        max_deviation: max_over(SAMPLES, |n| {
            let [u0, u1, u2, u3] = weyl::<4>(n);
            let (alpha, beta) = (TAU * u0, TAU * u1);
            let (theta, phi) = (PI * u2, TAU * u3);
            let sp = rotated_kcbs(EulerAngles::alpha_beta(alpha, beta));
            let e = |state: &QutritState| expectation(state, &sp).unwrap_or(f64::INFINITY);
            [
                e(&QutritState::zero()) - exp_zero_closed(beta),
                e(&QutritState::plus_one()) - exp_pm_closed(beta),
                e(&QutritState::minus_one()) - exp_pm_closed(beta),
                e(&QutritState::psi_plus()) - exp_psi_closed(alpha, beta),
                e(&retrit_to_state(RetritState::new(theta, phi))) - f_closed(theta, phi, beta, alpha),
            ]
            .into_iter()
            .map(f64::abs)
            .fold(0.0, f64::max)
        }),
        tolerance: 1e-10,
    });

    out
}
