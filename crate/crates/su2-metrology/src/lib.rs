//! Optimal probes and attainable precision bounds for the joint estimation of
//! two phases encoded by SU(2) unitaries.
//!
//! The encoding is U(φ₁, φ₂) = exp(−i(φ₁H₁ + φ₂H₂)) with H_i = ½ a_i·σ on a
//! qubit or a_i·J on a qutrit (spin-1), where a₁, a₂ are unit axes separated
//! by an angle θ. The crate provides:
//!
//! - closed-form effective-Hamiltonian vectors η₁, η₂ and their
//!   re-parameterized counterparts η̃_B, η̃_φ ([`encoding`]);
//! - the qubit Fisher information matrix, Uhlmann element, Holevo bound,
//!   and the optimal Bloch-vector probe ([`qubit`]);
//! - the qutrit ansatz probe, re-parameterized QFIM, optimal probe, and the
//!   commuting-Hamiltonian special case ([`qutrit`]);
//! - an independent numerical oracle (finite differences, SLD construction,
//!   brute-force grid searches) that cross-checks every closed form
//!   ([`oracle`]);
//! - θ-scans over encoding-axis angles as CSV ([`scan`]) and a small CLI
//!   ([`cli`]).
//!
//! Basis conventions: the spin-1 J_z eigenbasis is ordered (m_z = +1, 0, −1)
//! everywhere; angles are radians.

pub mod cli;
pub mod consts;
pub mod encoding;
pub mod error;
pub mod oracle;
pub mod qubit;
pub mod qutrit;
pub mod scan;
pub mod su2;

pub use encoding::{EncodingConfig, EtaPair, Jacobian2, ReparamCoords};
pub use error::{Error, Result};
pub use qubit::WeightMatrix;
pub use su2::QutritKet;

/// Probe dimension selector shared by the oracle, scans, and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Qubit,
    Qutrit,
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Model::Qubit => "qubit",
            Model::Qutrit => "qutrit",
        })
    }
}
