//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Bloch vector outside the unit ball.
    #[error("Bloch vector norm {0} exceeds 1")]
    InvalidBloch(f64),

    /// Rotation axis is not unit length.
    #[error("rotation axis must be unit length, got norm {0}")]
    InvalidAxis(f64),

    /// Encoding-axis angle outside [0, π].
    #[error("axis angle {0} outside [0, pi]")]
    InvalidAngle(f64),

    /// Total rotation angle B ≈ 0: the rotation axis is undefined.
    #[error("degenerate rotation: B = {0} leaves the axis undefined")]
    DegenerateRotation(f64),

    /// The (B, φ) chart is singular here (B = 0 or sin θ = 0).
    #[error("reparameterization singular: B = {b}, sin(theta) = {sin_theta}")]
    SingularReparam { b: f64, sin_theta: f64 },

    /// Operation defined only for pure states.
    #[error("operation requires a pure state, got |r| = {0}")]
    RequiresPureState(f64),

    /// Qutrit amplitudes fail the normalization requirement.
    #[error("qutrit amplitudes not normalized, got norm {0}")]
    InvalidKet(f64),

    /// QFIM not invertible for this probe/encoding combination.
    #[error("singular QFIM: estimation infeasible for this probe")]
    SingularQfim,

    /// Encoding generators commute; no probe makes both phases estimable.
    #[error("commuting encodings: estimation infeasible")]
    NoOptimalProbe,

    /// Weight matrix fails positive-definiteness.
    #[error("weight matrix not positive definite")]
    InvalidWeight,

    /// Scan grid needs at least two points.
    #[error("scan requires at least 2 steps, got {0}")]
    ScanSteps(usize),

    /// Scan angle range violates 0 ≤ min < max ≤ π.
    #[error("invalid scan range [{0}, {1}]: need 0 <= min < max <= pi")]
    ScanRange(f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
