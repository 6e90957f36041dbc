use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not unitary (max |U†U − I| = {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("matrix is not Hermitian (max |M − M†| = {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("expectation value has imaginary residue {residue:e}")]
    NonRealExpectation { residue: f64 },
    #[error("state is not normalised (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("observable index {index} out of range 0..5")]
    IndexOutOfRange { index: usize },
    #[error("assembled KCBS operator deviates from the expected diagonal by {deviation:e}")]
    ConstructionMismatch { deviation: f64 },
    #[error("no closed-form special case for (β, α) = ({beta}, {alpha})")]
    UnknownCase { beta: f64, alpha: f64 },
    #[error("grid needs at least 2 points per axis, got {n_theta}×{n_phi}")]
    InvalidGrid { n_theta: usize, n_phi: usize },
    #[error("scan step {step} rad is outside (0, {max}]")]
    InvalidStep { step: f64, max: f64 },
    #[error("least-squares fit needs at least {needed} rows, got {got}")]
    TooFewRows { needed: usize, got: usize },
    #[error("design matrix is rank deficient")]
    DegenerateDesignMatrix,
}
