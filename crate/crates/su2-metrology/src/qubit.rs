//! Qubit-probe precision bounds for the two-phase encoding.
//!
//! For a pure probe with Bloch vector r, the information quantities reduce
//! to vector algebra in the η vectors:
//!
//! - QFIM:      F_ij = η_i·η_j − (r·η_i)(r·η_j), with det F = (r·(η₁×η₂))²;
//! - Uhlmann:   D₁₂ = r·(η₁×η₂);
//! - Holevo bound: C = Q/D₁₂² + 2√(det W)/|D₁₂|,
//!   Q = w₁₁|r×η₂|² + w₂₂|r×η₁|² − 2w₁₂(r×η₁)·(r×η₂).
//!
//! The bound is minimized, for every positive-definite weight, by
//! r = ±(η₁×η₂)/|η₁×η₂|, which also maximizes det F. Mixed probes scale the
//! QFIM by the purity factor |r|² and the Uhlmann element by |r|³.

use nalgebra::Matrix2;

use crate::consts::{SINGULAR_TRIPLE, TOL_IDENTITY};
use crate::encoding::{reparam, EncodingConfig, EtaPair};
use crate::error::{Error, Result};
use crate::su2::V3;

/// Real symmetric positive-definite 2×2 cost matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightMatrix {
    w11: f64,
    w12: f64,
    w22: f64,
}

impl WeightMatrix {
    pub fn new(w11: f64, w12: f64, w22: f64) -> Result<Self> {
        if !(w11 > 0.0 && w22 > 0.0 && w11 * w22 - w12 * w12 > 0.0) {
            return Err(Error::InvalidWeight);
        }
        Ok(Self { w11, w12, w22 })
    }

    pub fn identity() -> Self {
        Self { w11: 1.0, w12: 0.0, w22: 1.0 }
    }

    pub fn w11(&self) -> f64 {
        self.w11
    }

    pub fn w12(&self) -> f64 {
        self.w12
    }

    pub fn w22(&self) -> f64 {
        self.w22
    }

    pub fn det(&self) -> f64 {
        self.w11 * self.w22 - self.w12 * self.w12
    }

    pub fn matrix(&self) -> Matrix2<f64> {
        Matrix2::new(self.w11, self.w12, self.w12, self.w22)
    }

    /// Principal square root (symmetric PD).
    pub fn sqrt(&self) -> Matrix2<f64> {
        // closed form: (W + sqrt(det W) I) / sqrt(tr W + 2 sqrt(det W))
        let sd = self.det().sqrt();
        let denom = (self.w11 + self.w22 + 2.0 * sd).sqrt();
        (self.matrix() + Matrix2::identity() * sd) / denom
    }
}

fn require_pure(r: &V3) -> Result<()> {
    let n = r.norm();
    if (n - 1.0).abs() > TOL_IDENTITY {
        return Err(Error::RequiresPureState(n));
    }
    Ok(())
}

/// QFIM of a pure qubit probe.
pub fn qfim_pure_qubit(r: &V3, etas: &EtaPair) -> Result<Matrix2<f64>> {
    require_pure(r)?;
    let (e1, e2) = (&etas.eta1, &etas.eta2);
    let (p1, p2) = (r.dot(e1), r.dot(e2));
    Ok(Matrix2::new(
        e1.dot(e1) - p1 * p1,
        e1.dot(e2) - p1 * p2,
        e1.dot(e2) - p1 * p2,
        e2.dot(e2) - p2 * p2,
    ))
}

/// Uhlmann element D₁₂ of a pure qubit probe.
pub fn uhlmann_pure_qubit(r: &V3, etas: &EtaPair) -> Result<f64> {
    require_pure(r)?;
    Ok(r.dot(&etas.cross()))
}

/// Holevo bound for a pure qubit probe and weight W.
pub fn hcrb_qubit(r: &V3, etas: &EtaPair, w: &WeightMatrix) -> Result<f64> {
    require_pure(r)?;
    let d = r.dot(&etas.cross());
    if d.abs() < SINGULAR_TRIPLE {
        return Err(Error::SingularQfim);
    }
    let c1 = r.cross(&etas.eta1);
    let c2 = r.cross(&etas.eta2);
    let q = w.w11 * c2.norm_squared() + w.w22 * c1.norm_squared() - 2.0 * w.w12 * c1.dot(&c2);
    Ok(q / (d * d) + 2.0 * w.det().sqrt() / d.abs())
}

/// Optimal pure probes ±(η₁×η₂)/|η₁×η₂|, identical bound for either sign.
///
/// The first returned vector is the canonical representative: non-negative
/// z-component, ties broken by y, then x.
pub fn optimal_qubit_probe(etas: &EtaPair) -> Result<(V3, V3)> {
    let x = etas.cross();
    let n = x.norm();
    if n < 1e-12 {
        return Err(Error::NoOptimalProbe);
    }
    let r = x / n;
    let flip = if r.z != 0.0 {
        r.z < 0.0
    } else if r.y != 0.0 {
        r.y < 0.0
    } else {
        r.x < 0.0
    };
    let canonical = if flip { -r } else { r };
    Ok((canonical, -canonical))
}

/// Minimum Holevo bound over all probes:
/// [w₁₁|η₂|² + w₂₂|η₁|² − 2w₁₂ η₁·η₂]/|η₁×η₂|² + 2√(det W)/|η₁×η₂|.
pub fn min_hcrb_qubit(etas: &EtaPair, w: &WeightMatrix) -> Result<f64> {
    let x = etas.cross();
    let n2 = x.norm_squared();
    if n2.sqrt() < 1e-12 {
        return Err(Error::NoOptimalProbe);
    }
    let q = w.w11 * etas.eta2.norm_squared() + w.w22 * etas.eta1.norm_squared()
        - 2.0 * w.w12 * etas.eta1.dot(&etas.eta2);
    Ok(q / n2 + 2.0 * w.det().sqrt() / n2.sqrt())
}

/// Bounds for a (possibly mixed) probe with Bloch vector r, |r| ≤ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedBounds {
    /// QFIM, scaled by the purity factor |r|².
    pub qfim: Matrix2<f64>,
    /// Uhlmann element, scaled by |r|³ with the sign of the majority
    /// eigenstate (the one along +r).
    pub d12: f64,
    /// Holevo bound.
    pub hcrb: f64,
}

/// Information quantities for a mixed qubit probe.
///
/// With purity factor p = 2Tr ρ² − 1 = |r|², the pure-state quantities of
/// the eigenstate direction r̂ scale as F → pF, D₁₂ → p^{3/2}D₁₂; the two
/// Holevo-bound terms pick up 1/p and 1/√p respectively.
pub fn mixed_state_bounds(r: &V3, etas: &EtaPair, w: &WeightMatrix) -> Result<MixedBounds> {
    let len = r.norm();
    if len > 1.0 + crate::consts::TOL_NORMALIZATION {
        return Err(Error::InvalidBloch(len));
    }
    let p = len * len;
    if p < 1e-12 {
        return Err(Error::SingularQfim);
    }
    let rhat = r / len;
    let d_pure = rhat.dot(&etas.cross());
    if d_pure.abs() < SINGULAR_TRIPLE {
        return Err(Error::SingularQfim);
    }
    let f_pure = qfim_pure_qubit(&rhat, etas)?;
    let hcrb_pure = hcrb_qubit(&rhat, etas, w)?;
    let second_pure = 2.0 * w.det().sqrt() / d_pure.abs();
    let first_pure = hcrb_pure - second_pure;
    Ok(MixedBounds {
        qfim: f_pure * p,
        d12: p * len * d_pure,
        hcrb: first_pure / p + second_pure / len,
    })
}

/// Leading-order optimal probe for small phases, in the canonical frame
/// (a₁ = x̂, a₂ in the xy-plane):
/// r ≈ (−φ₂ sinθ, φ₁ + φ₂ cosθ, 2)/√(4 + B²).
///
/// This is the z ≥ 0 branch; the antipode is equally optimal. The angle to
/// the exact optimum vanishes as max(φ₁, φ₂) → 0.
pub fn small_param_optimal_probe(cfg: &EncodingConfig) -> V3 {
    let st = cfg.theta().sin();
    let f2 = cfg.phi1 + cfg.phi2 * cfg.theta().cos();
    let b = reparam(cfg).b;
    V3::new(-cfg.phi2 * st, f2, 2.0) / (4.0 + b * b).sqrt()
}
