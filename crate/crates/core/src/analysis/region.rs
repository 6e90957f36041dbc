//! Contextuality classification, grid scans and angle windows.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use super::closed_form::f_closed;
use super::minimize::min_over_retrits;
use crate::{Error, Result, CLASSICAL_BOUND, KCBS_UPPER_EIGENVALUE, SQRT_5};

/// Largest β step accepted by [`no_violation_windows`]: 0.1°.
pub const MAX_BETA_STEP: f64 = 0.1 * PI / 180.0;

/// Width to which window endpoints are bisected, in radians.
pub const WINDOW_TOL: f64 = 1e-9;

/// Contextual iff the KCBS sum lies strictly below −3.
pub fn classify(value: f64) -> bool {
    value < CLASSICAL_BOUND
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionSample {
    pub theta: f64,
    pub phi: f64,
    pub value: f64,
    pub contextual: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    Contextual,
    NoViolation,
}

impl WindowKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Contextual => "contextual",
            Self::NoViolation => "no-violation",
        }
    }
}

/// An angle interval `[lo, hi]` in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleWindow {
    pub lo: f64,
    pub hi: f64,
    pub kind: WindowKind,
}

impl AngleWindow {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Splits `[lo, hi]` into maximal intervals on which `f < 0` or `f ≥ 0`.
///
/// `f` is sampled every `step` and each sign change is bisected down to
/// [`WINDOW_TOL`]. Returns `(window_lo, window_hi, negative)` in order.
/// Sign changes narrower than `step` may be missed.
pub fn sign_windows<F>(f: F, lo: f64, hi: f64, step: f64) -> Vec<(f64, f64, bool)>
where
    F: Fn(f64) -> f64,
{
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    let at = |k: usize| if k == n { hi } else { lo + step * k as f64 };
    let negative = |x: f64| f(x) < 0.0;

    let mut out = Vec::new();
    let mut start = lo;
    let mut prev_x = lo;
    let mut prev_neg = negative(lo);
    for k in 1..=n {
        let x = at(k);
        let neg = negative(x);
        if neg != prev_neg {
            let edge = bisect(&negative, prev_x, x, prev_neg);
            out.push((start, edge, prev_neg));
            start = edge;
        }
        prev_x = x;
        prev_neg = neg;
    }
    out.push((start, hi, prev_neg));
    out
}

fn bisect(negative: &impl Fn(f64) -> bool, mut a: f64, mut b: f64, neg_at_a: bool) -> f64 {
    while b - a > WINDOW_TOL {
        let mid = 0.5 * (a + b);
        if negative(mid) == neg_at_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Uniform `(θ, φ)` grid over the retrit sphere for the rotation `(α, β)`.
///
/// `θ` runs over `[0, π]` inclusive and `φ` over `[0, 2π)`; samples are in
/// row-major order (θ outer, φ inner).
pub fn scan_sphere(alpha: f64, beta: f64, n_theta: usize, n_phi: usize) -> Result<Vec<RegionSample>> {
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::InvalidGrid { n_theta, n_phi });
    }
    let mut out = Vec::with_capacity(n_theta * n_phi);
    for i in 0..n_theta {
        let theta = PI * i as f64 / (n_theta - 1) as f64;
        for j in 0..n_phi {
            let phi = TAU * j as f64 / n_phi as f64;
            let value = f_closed(theta, phi, beta, alpha);
            out.push(RegionSample { theta, phi, value, contextual: classify(value) });
        }
    }
    Ok(out)
}

/// The β at which `⟨0|S′|0⟩` first reaches −3:
/// `½ arccos((√5 − 3) / (5 − 3√5))`.
pub fn zero_state_boundary() -> f64 {
    0.5 * ((SQRT_5 - 3.0) / (5.0 - 3.0 * SQRT_5)).acos()
}

/// Partition of `β ∈ [0, 2π)` into contextual and non-contextual windows for
/// the state `|0⟩`. The contextual window around β = 0 wraps and appears as
/// its two halves at either end.
pub fn zero_state_windows() -> Vec<AngleWindow> {
    let b = zero_state_boundary();
    let c = WindowKind::Contextual;
    let n = WindowKind::NoViolation;
    [(0.0, b, c), (b, PI - b, n), (PI - b, PI + b, c), (PI + b, TAU - b, n), (TAU - b, TAU, c)]
        .into_iter()
        .map(|(lo, hi, kind)| AngleWindow { lo, hi, kind })
        .collect()
}

/// Maximal β-intervals in `[0, 2π]` on which no retrit violates the
/// inequality for the given α.
pub fn no_violation_windows(alpha: f64, beta_step: f64) -> Result<Vec<AngleWindow>> {
    if !(beta_step > 0.0 && beta_step <= MAX_BETA_STEP * (1.0 + 1e-12)) {
        return Err(Error::InvalidStep { step: beta_step, max: MAX_BETA_STEP });
    }
    let g = |beta: f64| min_over_retrits(alpha, beta).value - CLASSICAL_BOUND;
    Ok(sign_windows(g, 0.0, TAU, beta_step)
        .into_iter()
        .filter(|&(_, _, negative)| !negative)
        .map(|(lo, hi, _)| AngleWindow { lo, hi, kind: WindowKind::NoViolation })
        .collect())
}

/// Contextual α-windows in `[0, 2π)` of `(|1⟩ + |−1⟩)/√2` at fixed β.
pub fn psi_alpha_windows(beta: f64) -> Vec<AngleWindow> {
    let a = KCBS_UPPER_EIGENVALUE;
    let b = (3.0 * SQRT_5 - 5.0) * (2.0 * beta).cos() - SQRT_5;
    if b >= CLASSICAL_BOUND {
        return Vec::new();
    }
    // a cos²α + b sin²α < −3  ⇔  sin²α > (−3 − a)/(b − a)
    let threshold = (CLASSICAL_BOUND - a) / (b - a);
    let a0 = threshold.sqrt().asin();
    symmetric_windows(a0)
}

/// Contextual β-windows in `[0, 2π)` of `(|1⟩ + |−1⟩)/√2` at fixed α.
pub fn psi_beta_windows(alpha: f64) -> Vec<AngleWindow> {
    let (s, c) = alpha.sin_cos();
    let (s2, c2) = (s * s, c * c);
    if s2 == 0.0 {
        return Vec::new();
    }
    // cos 2β < r
    let r = (CLASSICAL_BOUND - KCBS_UPPER_EIGENVALUE * c2 + SQRT_5 * s2) / ((3.0 * SQRT_5 - 5.0) * s2);
    if r <= -1.0 {
        return Vec::new();
    }
    if r >= 1.0 {
        return alloc::vec![AngleWindow { lo: 0.0, hi: TAU, kind: WindowKind::Contextual }];
    }
    symmetric_windows(0.5 * r.acos())
}

// (x0, π − x0) and (π + x0, 2π − x0)
fn symmetric_windows(x0: f64) -> Vec<AngleWindow> {
    alloc::vec![
        AngleWindow { lo: x0, hi: PI - x0, kind: WindowKind::Contextual },
        AngleWindow { lo: PI + x0, hi: TAU - x0, kind: WindowKind::Contextual },
    ]
}
