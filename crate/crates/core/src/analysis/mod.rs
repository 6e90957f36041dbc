//! Expectation values of the (rotated) KCBS operator and classification of
//! states and rotations as contextual or not.

mod closed_form;
mod minimize;
mod region;
mod state;

pub use closed_form::{exp_pm_closed, exp_psi_closed, exp_zero_closed, f_closed, f_special, SpecialCase};
pub use minimize::{min_over_retrits, min_over_retrits_near, RetritMinimum};
pub use region::{
    classify, no_violation_windows, psi_alpha_windows, psi_beta_windows, scan_sphere, sign_windows,
    zero_state_boundary, zero_state_windows, AngleWindow, RegionSample, WindowKind, MAX_BETA_STEP, WINDOW_TOL,
};
pub use state::{expectation, retrit_to_state, QutritState, RetritState, NORM_TOL};
