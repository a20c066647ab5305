//! Numeric tolerances and switch-over thresholds, collected in one place.
//!
//! Every identity check, feasibility cutoff, and series switch in the crate
//! reads from here so that the choices stay consistent and auditable.

/// Tolerance for exact operator identities (unitarity, commutators,
/// orthogonality). Double precision leaves ~1e-13 of headroom on dim ≤ 3
/// matrices; 1e-10 absorbs accumulation over a few hundred operations.
pub const TOL_IDENTITY: f64 = 1e-10;

/// Tolerance for state normalization and Hermiticity checks.
pub const TOL_NORMALIZATION: f64 = 1e-12;

/// Below this total rotation angle B, the η closed forms switch to 4th-order
/// Taylor expansions of (B − sin B)/B³ and sin²(B/2)/B². At B = 1e-4 the
/// truncation error is ~1e-26 while direct evaluation has already lost
/// ~8 digits to cancellation.
pub const TAYLOR_SWITCH_B: f64 = 1e-4;

/// Rotation axis is considered undefined below this B.
pub const DEGENERATE_B: f64 = 1e-12;

/// |r·(η₁×η₂)| below this is treated as a singular QFIM: the corresponding
/// bounds exceed 1e20 and carry no numerical meaning.
pub const SINGULAR_TRIPLE: f64 = 1e-10;

/// Density-matrix eigenvalues below this cutoff are treated as outside the
/// support when constructing SLDs; those blocks are indeterminate and do not
/// contribute to the information matrices.
pub const SUPPORT_CUTOFF: f64 = 1e-12;

/// Default central-difference step for the numerical effective Hamiltonians.
/// Balances O(h²) truncation against O(ε/h) rounding for magnitudes ~1.
pub const FD_STEP: f64 = 1e-5;

/// A dominance scan passes when the smallest eigenvalue of the matrix
/// difference stays above this floor; it absorbs floating-point noise on
/// eigenvalues that are exactly zero in exact arithmetic.
pub const LOEWNER_FLOOR: f64 = -1e-9;
