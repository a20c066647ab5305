//! Scans of the minimum attainable bound over the encoding-axis angle θ.
//!
//! Each grid point evaluates the probe-optimized bound for the chosen model
//! at fixed phases and weight. Commuting configurations (θ = 0 or π, or a
//! vanishing total rotation) are reported as infeasible rows rather than
//! errors, so a scan can sweep straight across them.

use std::io::Write;

use crate::encoding::{eta_pair, EncodingConfig};
use crate::error::{Error, Result};
use crate::qubit::{min_hcrb_qubit, WeightMatrix};
use crate::qutrit::min_qcrb_qutrit;
use crate::Model;

/// Validated θ-scan description.
#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub theta_min: f64,
    pub theta_max: f64,
    pub steps: usize,
    pub phi1: f64,
    pub phi2: f64,
    pub weight: WeightMatrix,
    pub model: Model,
}

impl ScanSpec {
    pub fn new(
        model: Model,
        theta_min: f64,
        theta_max: f64,
        steps: usize,
        phi1: f64,
        phi2: f64,
        weight: WeightMatrix,
    ) -> Result<Self> {
        if steps < 2 {
            return Err(Error::ScanSteps(steps));
        }
        if !(0.0 <= theta_min && theta_min < theta_max && theta_max <= std::f64::consts::PI) {
            return Err(Error::ScanRange(theta_min, theta_max));
        }
        Ok(Self { theta_min, theta_max, steps, phi1, phi2, weight, model })
    }

    /// Uniform grid point i of steps, endpoints included.
    // complementary-weight form lands exactly on both endpoints
    pub fn theta_at(&self, i: usize) -> f64 {
        let frac = i as f64 / (self.steps - 1) as f64;
        self.theta_min * (1.0 - frac) + self.theta_max * frac
    }
}

/// One scan grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub theta: f64,
    /// Minimum bound over probes; infinite when estimation is infeasible.
    pub bound: f64,
    pub feasible: bool,
}

/// Probe-optimized bound at a single planar configuration.
pub fn min_bound_at(
    model: Model,
    theta: f64,
    phi1: f64,
    phi2: f64,
    weight: &WeightMatrix,
) -> Result<f64> {
    let cfg = EncodingConfig::planar(theta, phi1, phi2)?;
    match model {
        Model::Qubit => min_hcrb_qubit(&eta_pair(&cfg), weight),
        Model::Qutrit => min_qcrb_qutrit(&cfg, weight),
    }
}

/// Evaluates the scan grid in order. Infeasible points become rows with an
/// infinite bound instead of failing the scan.
pub fn run_scan(spec: &ScanSpec) -> Vec<ScanRow> {
    (0..spec.steps)
        .map(|i| {
            let theta = spec.theta_at(i);
            match min_bound_at(spec.model, theta, spec.phi1, spec.phi2, &spec.weight) {
                Ok(bound) => ScanRow { theta, bound, feasible: true },
                Err(_) => ScanRow { theta, bound: f64::INFINITY, feasible: false },
            }
        })
        .collect()
}

/// CSV serialization: header `theta,bound,feasible`, LF line endings,
/// 17 significant digits, `.` decimal separator, `inf` for infeasible
/// bounds. Identical rows serialize to identical bytes.
pub fn write_csv<W: Write>(rows: &[ScanRow], out: &mut W) -> std::io::Result<()> {
    out.write_all(b"theta,bound,feasible\n")?;
    for row in rows {
        if row.feasible {
            writeln!(out, "{:.16e},{:.16e},1", row.theta, row.bound)?;
        } else {
            writeln!(out, "{:.16e},inf,0", row.theta)?;
        }
    }
    Ok(())
}
