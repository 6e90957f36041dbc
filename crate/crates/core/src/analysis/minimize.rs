//! Exact minimum of `⟨ψ|S′(α, β)|ψ⟩` over real unit vectors `ψ`.
//!
//! For real `ψ` the expectation equals `ψᵀ Re(S′) ψ`, so the minimum is the
//! smallest eigenvalue of the symmetric matrix `Re(S′)` and the minimiser is
//! its eigenvector. The eigenvector is only defined up to sign (and up to a
//! rotation inside the eigenspace when the smallest eigenvalue repeats),
//! which is settled either by a continuation hint or by a fixed sign rule.

use crate::analysis::RetritState;
use crate::kcbs::rotated_kcbs;
use crate::linalg::{eig_sym3, RealVec3, DEGENERACY_GAP};
use crate::spin::EulerAngles;

/// Components smaller than this count as zero in the sign rule.
const SIGN_TIE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RetritMinimum {
    pub value: f64,
    pub argmin: RetritState,
    /// Unit minimiser in the `|1⟩, |0⟩, |−1⟩` basis; `argmin` is its
    /// spherical form.
    pub vector: RealVec3,
    /// Whether the smallest eigenvalue of `Re(S′)` is repeated.
    pub degenerate: bool,
}

/// Minimum over retrits with the standalone sign rule: `v_y ≥ 0`, then
/// `v_z ≥ 0`, then `v_x ≥ 0` on ties.
pub fn min_over_retrits(alpha: f64, beta: f64) -> RetritMinimum {
    min_over_retrits_near(alpha, beta, None)
}

/// Minimum over retrits, choosing the minimiser closest to `hint` when one
/// is given.
pub fn min_over_retrits_near(alpha: f64, beta: f64, hint: Option<RealVec3>) -> RetritMinimum {
    let s = rotated_kcbs(EulerAngles::alpha_beta(alpha, beta));
    let eig = eig_sym3(&s.symmetric_real_part());
    let (value, first) = eig.min();
    let degenerate = eig.eigenvalues[1] - value < DEGENERACY_GAP;

    let vector = match hint {
        Some(h) => {
            let v = if degenerate { project_onto_min_space(&eig, h).unwrap_or(first) } else { first };
            if v.dot(h) < 0.0 {
                -v
            } else {
                v
            }
        }
        None => canonical_sign(first),
    };

    RetritMinimum { value, argmin: RetritState::from_vector(vector), vector, degenerate }
}

fn project_onto_min_space(eig: &crate::linalg::EigenDecomposition3, hint: RealVec3) -> Option<RealVec3> {
    let floor = eig.eigenvalues[0];
    let projected = eig
        .eigenvalues
        .iter()
        .zip(&eig.eigenvectors)
        .filter(|(lambda, _)| **lambda - floor < DEGENERACY_GAP)
        .fold(RealVec3::default(), |acc, (_, v)| acc + *v * v.dot(hint));
    if projected.norm() < SIGN_TIE {
        return None;
    }
    projected.normalized()
}

fn canonical_sign(v: RealVec3) -> RealVec3 {
    let key = [v.y, v.z, v.x];
    match key.into_iter().find(|c| c.abs() > SIGN_TIE) {
        Some(c) if c < 0.0 => -v,
        _ => v,
    }
}
