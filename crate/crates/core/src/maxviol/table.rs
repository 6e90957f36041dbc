use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use crate::analysis::{min_over_retrits, min_over_retrits_near, RetritState};
use crate::QUANTUM_MINIMUM;

/// Rows in the table: β = kπ/16 for k = 0..=32.
pub const TABLE1_ROWS: usize = 33;

/// Tolerance for an α to count as reaching the quantum minimum.
const ATTAIN_TOL: f64 = 1e-7;

/// Allowed distance of an attaining α from 0 or π.
const ALPHA_SET_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub beta: f64,
    pub theta_min: f64,
    /// Continued from the previous row without reduction mod 2π; may be
    /// negative.
    pub phi_min: f64,
}

/// Which of the two antipodal minimiser branches to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    /// Seeded at `(θ, φ) = (π/2, 3π/2)`, i.e. `−|0⟩`, at β = 0.
    #[default]
    Primary,
    /// Seeded at `(π/2, π/2)`, i.e. `|0⟩`.
    Antipodal,
}

impl Branch {
    fn seed(self) -> RetritState {
        match self {
            Self::Primary => RetritState::new(FRAC_PI_2, 1.5 * PI),
            Self::Antipodal => RetritState::new(FRAC_PI_2, FRAC_PI_2),
        }
    }
}

pub fn generate_table1() -> Vec<Table1Row> {
    generate_table1_branch(Branch::Primary)
}

/// Minimisers at α = 0 for β = kπ/16, tracked continuously from the seed.
///
/// Each row's eigenvector sign is chosen to point along the previous row's
/// minimiser, and φ is unwrapped against the previous φ.
pub fn generate_table1_branch(branch: Branch) -> Vec<Table1Row> {
    let seed = branch.seed();
    let mut prev_vec = seed.vector();
    let mut prev_phi = seed.phi;
    let mut rows = Vec::with_capacity(TABLE1_ROWS);
    for k in 0..TABLE1_ROWS {
        let beta = PI * k as f64 / 16.0;
        let m = min_over_retrits_near(0.0, beta, Some(prev_vec));
        let raw = m.argmin.phi;
        let phi = raw + TAU * ((prev_phi - raw) / TAU).round();
        rows.push(Table1Row { beta, theta_min: m.argmin.theta, phi_min: phi });
        prev_vec = m.vector;
        prev_phi = phi;
    }
    rows
}

/// α values on the scan grid that reach the quantum minimum for one β.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaScan {
    pub beta: f64,
    pub minimizers: Vec<f64>,
    /// Every α on the grid attains the minimum (β ≡ 0 mod π, where the
    /// rotation reduces to one about Z).
    pub degenerate: bool,
    /// Every attaining α lies near 0 or π.
    pub restricted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaRestriction {
    pub scans: Vec<AlphaScan>,
}

impl AlphaRestriction {
    /// True iff every non-degenerate β attains the minimum, and only near
    /// α ∈ {0, π}.
    pub fn holds(&self) -> bool {
        self.scans.iter().filter(|s| !s.degenerate).all(|s| s.restricted && !s.minimizers.is_empty())
    }

    /// The non-degenerate β values for which [`holds`](Self::holds) fails.
    pub fn exceptions(&self) -> Vec<f64> {
        self.scans
            .iter()
            .filter(|s| !s.degenerate && !(s.restricted && !s.minimizers.is_empty()))
            .map(|s| s.beta)
            .collect()
    }
}

/// Scans α over `n_alpha` uniform points in `[0, 2π)` for each β and records
/// where `min_over_retrits` reaches `5 − 4√5`.
pub fn verify_alpha_restriction(beta_grid: &[f64], n_alpha: usize) -> AlphaRestriction {
    let n_alpha = n_alpha.max(2);
    let scans = beta_grid
        .iter()
        .map(|&beta| {
            let minimizers: Vec<f64> = (0..n_alpha)
                .map(|j| TAU * j as f64 / n_alpha as f64)
                .filter(|&alpha| min_over_retrits(alpha, beta).value - QUANTUM_MINIMUM < ATTAIN_TOL)
                .collect();
            let degenerate = minimizers.len() == n_alpha;
            let restricted = minimizers.iter().all(|&a| {
                let d0 = a.min(TAU - a);
                let dpi = (a - PI).abs();
                d0.min(dpi) < ALPHA_SET_TOL
            });
            AlphaScan { beta, minimizers, degenerate, restricted }
        })
        .collect();
    AlphaRestriction { scans }
}
