use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix inverse was requested but the determinant is below the
    /// scale-aware singularity threshold.
    #[error("matrix is numerically singular (|det| = {abs_det:.3e})")]
    SingularMatrix { abs_det: f64 },

    /// A Hermitian positive-definite input was required.
    #[error("matrix is not Hermitian positive definite")]
    NotPositiveDefinite,

    /// A basis or generator index was outside `0..=3`.
    #[error("index {index} out of range (expected 0..=3)")]
    IndexOutOfRange { index: usize },

    /// `mass_representative` was called with a vanishing squared mass.
    #[error("squared mass is zero; the massive orbit family needs z_m^2 != 0")]
    ZeroMass,

    /// The zero matrix has no transporter: its orbit is a single point.
    #[error("point lies on the zero-point orbit; no transporter exists")]
    ZeroPointOrbit,

    /// The rank-one factors of a null-orbit point are isotropic, so the
    /// closed-form transporter construction degenerates.
    #[error("rank-one factorization is degenerate (isotropic factor)")]
    DegenerateFactorization,

    /// A would-be group element has a component whose determinant is not 1
    /// within the construction tolerance.
    #[error("matrix determinant differs from 1 by {residual:.3e}")]
    NotUnimodular { residual: f64 },

    /// A four-vector does not satisfy eta(v, v) = z_m^2 within tolerance,
    /// or the stated z_m is not the principal square root of eta(v, v).
    #[error("point is off the mass orbit (residual {residual:.3e})")]
    OffOrbit { residual: f64 },

    /// The boost square root degenerates on the cut z_m + v_0 = 0, which
    /// contains the antipode -v_ring of the standard vector.
    #[error("boost square root undefined at the antipodal cut z_m + v_0 = 0")]
    AntipodalPoint,

    /// A real four-momentum does not satisfy eta(p, p) = m^2 within tolerance.
    #[error("momentum is off the real mass shell (residual {residual:.3e})")]
    OffShell { residual: f64 },

    /// The Wigner boost needs a forward (p_0 > 0) mass-shell point.
    #[error("momentum has non-positive energy component")]
    NonPositiveEnergy,

    /// A chart operation hit the excluded set |v22| <= chart_floor.
    #[error("point left the orbit chart (|v22| = {abs_v22:.3e})")]
    ChartSingular { abs_v22: f64 },

    /// The two components of a would-be Wigner rotation disagree, which
    /// signals a broken embedding rather than bad input.
    #[error("cocycle components disagree by {residual:.3e}; embedding is inconsistent")]
    CocycleNotDiagonal { residual: f64 },

    /// Mismatched dimensions between a representation and an orbit function.
    #[error("dimension mismatch: representation dim {rep}, function dim {func}")]
    DimensionMismatch { rep: usize, func: usize },

    /// An invalid sampling box (empty extent or overlap with the chart floor).
    #[error("invalid box domain: {reason}")]
    InvalidDomain { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
