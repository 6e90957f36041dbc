//! Kernel for the five-measurement KCBS contextuality scenario on spin-1
//! systems.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`linalg`]: dense 3×3 complex matrices and a symmetric real eigensolver,
//! - [`spin`]: spin-1 operators, Z/Y rotations and the Wigner matrix `D(α, β, γ)`,
//! - [`kcbs`]: the pentagram, the dichotomic observables `A_i = 2S_i² − 1`
//!   and the KCBS operator `S = Σ A_i A_{i+1}` with its rotated form `D†SD`,
//! - [`analysis`]: states, expectation values, closed-form expectation curves,
//!   classification against the classical bound −3, region scans, window
//!   extraction and the exact minimiser over real-amplitude qutrits,
//! - [`maxviol`]: the table of maximally violating retrits along β and the
//!   least-squares trendlines fitted to it,
//! - [`verify`]: the operator-identity self checks run by the CLI.
//!
//! All angles are radians and ħ = 1. The basis order is `|1⟩, |0⟩, |−1⟩`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
mod error;
pub mod kcbs;
pub mod linalg;
pub mod maxviol;
pub mod spin;
pub mod verify;

pub use error::{Error, Result};

/// The classical (non-contextual) lower bound of the KCBS sum.
pub const CLASSICAL_BOUND: f64 = -3.0;

/// `5 − 4√5`, the smallest eigenvalue of the KCBS operator and the maximal
/// quantum violation.
pub const QUANTUM_MINIMUM: f64 = 5.0 - 4.0 * SQRT_5;

/// `−5 + 2√5`, the doubly degenerate eigenvalue of the KCBS operator.
pub const KCBS_UPPER_EIGENVALUE: f64 = -5.0 + 2.0 * SQRT_5;

pub(crate) const SQRT_5: f64 = 2.236_067_977_499_79;
