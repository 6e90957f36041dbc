//! Maximally violating retrits along β at α = 0, and trendlines through
//! them.

mod fit;
mod table;

pub use fit::{fit_phi_model, fit_theta_model, least_squares, FitModel, FitResult};
pub use table::{
    generate_table1, generate_table1_branch, verify_alpha_restriction, AlphaRestriction, AlphaScan, Branch, Table1Row,
    TABLE1_ROWS,
};
