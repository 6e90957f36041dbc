use alloc::vec::Vec;

// float methods are inherent only when std is linked
#[allow(unused_imports)]
use num_traits::Float as _;

use super::Table1Row;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitModel {
    /// `φ = c0 + c1 β`
    PhiLinear,
    /// `φ = c0 + c1 β + c2 sin 2β`
    PhiCorrected,
    /// `θ = d0 + d1 sin β`
    ThetaSine,
}

impl FitModel {
    pub fn id(self) -> &'static str {
        match self {
            Self::PhiLinear => "phi_linear",
            Self::PhiCorrected => "phi_corrected",
            Self::ThetaSine => "theta_sine",
        }
    }

    pub fn coefficient_names(self) -> &'static [&'static str] {
        match self {
            Self::PhiLinear => &["c0", "c1"],
            Self::PhiCorrected => &["c0", "c1", "c2"],
            Self::ThetaSine => &["d0", "d1"],
        }
    }

    fn basis(self, beta: f64) -> [f64; 3] {
        match self {
            Self::PhiLinear => [1.0, beta, 0.0],
            Self::PhiCorrected => [1.0, beta, (2.0 * beta).sin()],
            Self::ThetaSine => [1.0, beta.sin(), 0.0],
        }
    }

    fn observed(self, row: &Table1Row) -> f64 {
        match self {
            Self::PhiLinear | Self::PhiCorrected => row.phi_min,
            Self::ThetaSine => row.theta_min,
        }
    }

    fn min_rows(self) -> usize {
        match self {
            Self::PhiLinear | Self::PhiCorrected => 3,
            Self::ThetaSine => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub model: FitModel,
    pub coefficients: Vec<f64>,
    pub residual_rms: f64,
}

impl FitResult {
    pub fn predict(&self, beta: f64) -> f64 {
        let b = self.model.basis(beta);
        self.coefficients.iter().zip(b).map(|(c, x)| c * x).sum()
    }

    /// `(name, value)` pairs in model order.
    pub fn named(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.model.coefficient_names().iter().copied().zip(self.coefficients.iter().copied())
    }
}

pub fn fit_phi_model(rows: &[Table1Row], corrected: bool) -> Result<FitResult> {
    fit(rows, if corrected { FitModel::PhiCorrected } else { FitModel::PhiLinear })
}

pub fn fit_theta_model(rows: &[Table1Row]) -> Result<FitResult> {
    fit(rows, FitModel::ThetaSine)
}

fn fit(rows: &[Table1Row], model: FitModel) -> Result<FitResult> {
    let needed = model.min_rows();
    if rows.len() < needed {
        return Err(Error::TooFewRows { needed, got: rows.len() });
    }
    let p = model.coefficient_names().len();
    let design: Vec<Vec<f64>> = rows.iter().map(|r| model.basis(r.beta)[..p].to_vec()).collect();
    let ys: Vec<f64> = rows.iter().map(|r| model.observed(r)).collect();
    let coefficients = least_squares(&design, &ys)?;

    let mut result = FitResult { model, coefficients, residual_rms: 0.0 };
    let ss: f64 = rows
        .iter()
        .map(|r| {
            let e = model.observed(r) - result.predict(r.beta);
            e * e
        })
        .sum();
    result.residual_rms = (ss / rows.len() as f64).sqrt();
    Ok(result)
}

/// Ordinary least squares through the normal equations.
///
/// Sums are accumulated row by row in input order, so identical input gives
/// bitwise-identical coefficients.
#[allow(clippy::needless_range_loop)]
pub fn least_squares(design: &[Vec<f64>], ys: &[f64]) -> Result<Vec<f64>> {
    let p = design.first().map_or(0, Vec::len);
    if p == 0 || design.len() < p || design.len() != ys.len() || design.iter().any(|r| r.len() != p) {
        return Err(Error::DegenerateDesignMatrix);
    }

    // augmented [XᵀX | Xᵀy]
    let mut a = alloc::vec![alloc::vec![0.0; p + 1]; p];
    for (row, &y) in design.iter().zip(ys) {
        for i in 0..p {
            for j in 0..p {
                a[i][j] += row[i] * row[j];
            }
            a[i][p] += row[i] * y;
        }
    }

    let scale = (0..p).fold(0.0_f64, |m, i| m.max(a[i][i].abs()));
    for col in 0..p {
        let pivot = (col..p).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap_or(col);
        let mag = a[pivot][col].abs();
        if mag.is_nan() || mag <= 1e-12 * scale {
            return Err(Error::DegenerateDesignMatrix);
        }
        a.swap(col, pivot);
        for r in (col + 1)..p {
            let factor = a[r][col] / a[col][col];
            for c in col..=p {
                a[r][c] -= factor * a[col][c];
            }
        }
    }

    let mut x = alloc::vec![0.0; p];
    for i in (0..p).rev() {
        let tail: f64 = ((i + 1)..p).map(|j| a[i][j] * x[j]).sum();
        x[i] = (a[i][p] - tail) / a[i][i];
    }
    Ok(x)
}
