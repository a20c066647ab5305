//! Effective-Hamiltonian vectors for the two-phase encoding
//! U(φ₁, φ₂) = exp(−i(φ₁ a₁ + φ₂ a₂)·T), with T the spin generators.
//!
//! The generators of parameter sensitivity are ℋ_j = i(∂_{φ_j}U†)U. They are
//! elements of su(2) and therefore fully described by real 3-vectors:
//! ℋ_j = ½ η_j·σ on a qubit, η_j·J on a qutrit. This module provides the
//! closed forms for η₁, η₂, the total-rotation coordinates (B, φ), the
//! re-parameterized vectors η̃_B, η̃_φ, and the Jacobian linking the two
//! parameterizations.

use nalgebra::Matrix2;

use crate::consts::{DEGENERATE_B, TAYLOR_SWITCH_B, TOL_NORMALIZATION};
use crate::error::{Error, Result};
use crate::su2::V3;

/// Two encoding axes with their phases.
///
/// Axes are unit vectors; `theta` is the angle between them, kept consistent
/// with `a1·a2` by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodingConfig {
    a1: V3,
    a2: V3,
    theta: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl EncodingConfig {
    /// General axes. Both must be unit length.
    pub fn new(a1: V3, a2: V3, phi1: f64, phi2: f64) -> Result<Self> {
        for a in [&a1, &a2] {
            let n = a.norm();
            if (n - 1.0).abs() > TOL_NORMALIZATION {
                return Err(Error::InvalidAxis(n));
            }
        }
        let theta = a1.dot(&a2).clamp(-1.0, 1.0).acos();
        Ok(Self { a1, a2, theta, phi1, phi2 })
    }

    /// Axes in the canonical frame: a₁ = x̂, a₂ = (cos θ, sin θ, 0).
    pub fn planar(theta: f64, phi1: f64, phi2: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::InvalidAngle(theta));
        }
        Ok(Self {
            a1: V3::x(),
            a2: V3::new(theta.cos(), theta.sin(), 0.0),
            theta,
            phi1,
            phi2,
        })
    }

    pub fn a1(&self) -> &V3 {
        &self.a1
    }

    pub fn a2(&self) -> &V3 {
        &self.a2
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// φ₁a₁ + φ₂a₂; its norm is the total rotation angle B.
    pub fn total_generator(&self) -> V3 {
        self.a1 * self.phi1 + self.a2 * self.phi2
    }

    /// Same axes, different phases.
    pub fn with_phases(&self, phi1: f64, phi2: f64) -> Self {
        Self { phi1, phi2, ..self.clone() }
    }

    /// f₁ = φ₁cosθ + φ₂ and f₂ = φ₁ + φ₂cosθ.
    fn f_pair(&self) -> (f64, f64) {
        (
            self.phi1 * self.theta.cos() + self.phi2,
            self.phi1 + self.phi2 * self.theta.cos(),
        )
    }

    fn b_squared(&self) -> f64 {
        let (f1, f2) = self.f_pair();
        // phi1*f2 + phi2*f1 = phi1^2 + phi2^2 + 2 phi1 phi2 cos(theta)
        (self.phi1 * f2 + self.phi2 * f1).max(0.0)
    }
}

/// Effective-Hamiltonian vectors η₁, η₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaPair {
    pub eta1: V3,
    pub eta2: V3,
}

impl EtaPair {
    pub fn cross(&self) -> V3 {
        self.eta1.cross(&self.eta2)
    }
}

/// Total rotation magnitude B and effective axis angle φ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReparamCoords {
    pub b: f64,
    pub phi: f64,
}

/// Rows ∂(B, φ)/∂(φ₁, φ₂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobian2 {
    m: Matrix2<f64>,
}

impl Jacobian2 {
    pub fn matrix(&self) -> &Matrix2<f64> {
        &self.m
    }

    pub fn det(&self) -> f64 {
        self.m.determinant()
    }
}

/// Unit rotation axis n̂ = (φ₁a₁ + φ₂a₂)/B.
pub fn rotation_axis(cfg: &EncodingConfig) -> Result<V3> {
    let g = cfg.total_generator();
    let b = g.norm();
    if b < DEGENERATE_B {
        return Err(Error::DegenerateRotation(b));
    }
    Ok(g / b)
}

/// (B, φ) coordinates. B = |φ₁a₁ + φ₂a₂|; φ is the axis angle in the
/// encoding plane, measured from a₁: φ = atan2(φ₂ sinθ, φ₁ + φ₂ cosθ).
///
/// Returned φ lies in (−π, π]; at B = 0 the axis is undefined and φ = 0 by
/// convention.
pub fn reparam(cfg: &EncodingConfig) -> ReparamCoords {
    let b = cfg.b_squared().sqrt();
    if b < DEGENERATE_B {
        return ReparamCoords { b, phi: 0.0 };
    }
    let (_, f2) = cfg.f_pair();
    let y = cfg.phi2 * cfg.theta.sin();
    let mut phi = y.atan2(f2);
    if phi == -std::f64::consts::PI {
        phi = std::f64::consts::PI;
    }
    ReparamCoords { b, phi }
}

fn g_series(b: f64) -> f64 {
    let b2 = b * b;
    1.0 / 6.0 - b2 / 120.0 + b2 * b2 / 5040.0
}

fn s_series(b: f64) -> f64 {
    let b2 = b * b;
    0.25 - b2 / 48.0 + b2 * b2 / 1440.0
}

/// (B − sin B)/B³ with a 4th-order series below the switch point, where the
/// direct form loses most of its digits to cancellation.
fn g_factor(b: f64) -> f64 {
    if b < TAYLOR_SWITCH_B {
        g_series(b)
    } else {
        (b - b.sin()) / (b * b * b)
    }
}

/// sin²(B/2)/B² with a 4th-order series below the switch point.
fn s_factor(b: f64) -> f64 {
    if b < TAYLOR_SWITCH_B {
        s_series(b)
    } else {
        let sh = (b / 2.0).sin();
        sh * sh / (b * b)
    }
}

/// Closed-form η₁, η₂:
///
/// η₁ = −a₁ + (φ₂/B³)(B − sin B)(f₁a₁ − f₂a₂) − (2φ₂/B²)sin²(B/2)(a₁×a₂),
/// η₂ = −a₂ − (φ₁/B³)(B − sin B)(f₁a₁ − f₂a₂) + (2φ₁/B²)sin²(B/2)(a₁×a₂).
///
/// The B → 0 limit is analytic; the singular-looking factors are evaluated
/// by series there.
pub fn eta_pair(cfg: &EncodingConfig) -> EtaPair {
    let (f1, f2) = cfg.f_pair();
    let b = cfg.b_squared().sqrt();
    let g = g_factor(b);
    let s = s_factor(b);
    let fvec = cfg.a1 * f1 - cfg.a2 * f2;
    let cross = cfg.a1.cross(&cfg.a2);
    EtaPair {
        eta1: -cfg.a1 + fvec * (cfg.phi2 * g) - cross * (2.0 * cfg.phi2 * s),
        eta2: -cfg.a2 - fvec * (cfg.phi1 * g) + cross * (2.0 * cfg.phi1 * s),
    }
}

/// Re-parameterized effective vectors (η̃_φ, η̃_B):
///
/// η̃_φ = 2 sin(B/2) (cos(B/2) sin φ, −cos(B/2) cos φ, sin(B/2)),
/// η̃_B = −(cos φ, sin φ, 0).
pub fn eta_reparam(coords: &ReparamCoords) -> (V3, V3) {
    let (sh, ch) = (coords.b / 2.0).sin_cos();
    let (sp, cp) = coords.phi.sin_cos();
    let eta_phi = V3::new(ch * sp, -ch * cp, sh) * (2.0 * sh);
    let eta_b = V3::new(-cp, -sp, 0.0);
    (eta_phi, eta_b)
}

/// Jacobian ∂(B, φ)/∂(φ₁, φ₂) of [`reparam`].
///
/// ∂B/∂φ₁ = f₂/B, ∂B/∂φ₂ = f₁/B, ∂φ/∂φ₁ = −φ₂ sinθ/B²,
/// ∂φ/∂φ₂ = φ₁ sinθ/B²; det = sinθ/B.
pub fn jacobian(cfg: &EncodingConfig) -> Result<Jacobian2> {
    let b = cfg.b_squared().sqrt();
    let st = cfg.theta.sin();
    if b < 1e-12 || st < 1e-12 {
        return Err(Error::SingularReparam { b, sin_theta: st });
    }
    let (f1, f2) = cfg.f_pair();
    let b2 = b * b;
    Ok(Jacobian2 {
        m: Matrix2::new(f2 / b, f1 / b, -cfg.phi2 * st / b2, cfg.phi1 * st / b2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::{dot_sigma, herm_eigen2, pauli_matrices, qubit_rotation, M2};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64 as C64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn rand_cfg(rng: &mut impl Rng) -> EncodingConfig {
        EncodingConfig::planar(
            rng.gen_range(0.05..PI - 0.05),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        )
        .unwrap()
    }

    #[test]
    fn zero_phases_give_negated_axes() {
        let cfg = EncodingConfig::planar(1.234, 0.0, 0.0).unwrap();
        let etas = eta_pair(&cfg);
        assert!((etas.eta1 + cfg.a1()).norm() < 1e-15);
        assert!((etas.eta2 + cfg.a2()).norm() < 1e-15);
    }

    #[test]
    fn parallel_axes_commute() {
        let cfg = EncodingConfig::planar(0.0, 0.7, -0.3).unwrap();
        let etas = eta_pair(&cfg);
        assert!(etas.cross().norm() < 1e-14);
    }

    #[test]
    fn rotation_axis_symmetry_and_limits() {
        let cfg = EncodingConfig::planar(FRAC_PI_2, 0.4, 0.4).unwrap();
        let n = rotation_axis(&cfg).unwrap();
        let want = V3::new(1.0, 1.0, 0.0) / 2.0f64.sqrt();
        assert!((n - want).norm() < 1e-14);

        let cfg = EncodingConfig::planar(1.1, 0.9, 0.0).unwrap();
        assert!((rotation_axis(&cfg).unwrap() - cfg.a1()).norm() < 1e-14);

        let cfg = EncodingConfig::planar(0.4, 0.0, 0.0).unwrap();
        assert!(matches!(rotation_axis(&cfg), Err(Error::DegenerateRotation(_))));
    }

    /// The axis extracted from a numerically exponentiated encoding unitary
    /// must agree: Tr(U σ_a) = −2i sin(B/2) n_a.
    #[test]
    fn rotation_axis_matches_unitary_eigenaxis() {
        let cfg = EncodingConfig::planar(PI / 3.0, 0.4, 0.9).unwrap();
        let n = rotation_axis(&cfg).unwrap();
        let b = reparam(&cfg).b;
        // U = exp(-i (phi1 H1 + phi2 H2)) via eigendecomposition, no axis input
        let h = dot_sigma(&cfg.total_generator()) * C64::new(0.5, 0.0);
        let (vals, vecs) = herm_eigen2(&h);
        let d = M2::from_diagonal(&nalgebra::Vector2::new(
            C64::new(vals[0].cos(), -vals[0].sin()),
            C64::new(vals[1].cos(), -vals[1].sin()),
        ));
        let u = vecs * d * vecs.adjoint();
        assert!((u - qubit_rotation(&n, b).unwrap()).iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-12);
        for (a, sig) in pauli_matrices().iter().enumerate() {
            let tr = (u * sig).trace();
            let got = -tr.im / (2.0 * (b / 2.0).sin());
            assert_abs_diff_eq!(got, n[a], epsilon = 1e-12);
        }
    }

    #[test]
    fn reparam_examples() {
        let cfg = EncodingConfig::planar(1.0, 0.0, 0.0).unwrap();
        let rc = reparam(&cfg);
        assert_eq!((rc.b, rc.phi), (0.0, 0.0));

        let cfg = EncodingConfig::planar(FRAC_PI_2, 3.0, 4.0).unwrap();
        let rc = reparam(&cfg);
        assert_abs_diff_eq!(rc.b, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rc.phi, 4.0f64.atan2(3.0), epsilon = 1e-12);

        let cfg = EncodingConfig::planar(2.0, 1.0, 2.0).unwrap();
        let rc = reparam(&cfg);
        assert_abs_diff_eq!(rc.b * rc.b, 5.0 + 4.0 * 2.0f64.cos(), epsilon = 1e-12);
        // direction consistency: (cos phi, sin phi) is the normalized
        // (f2, phi2 sin theta) pair
        let f2 = 1.0 + 2.0 * 2.0f64.cos();
        let y = 2.0 * 2.0f64.sin();
        assert_abs_diff_eq!(rc.phi.cos(), f2 / rc.b, epsilon = 1e-12);
        assert_abs_diff_eq!(rc.phi.sin(), y / rc.b, epsilon = 1e-12);
    }

    #[test]
    fn b_squared_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let cfg = rand_cfg(&mut rng);
            let rc = reparam(&cfg);
            let direct = cfg.phi1 * cfg.phi1
                + cfg.phi2 * cfg.phi2
                + 2.0 * cfg.phi1 * cfg.phi2 * cfg.theta().cos();
            assert_abs_diff_eq!(rc.b * rc.b, direct.max(0.0), epsilon = 1e-10);
        }
    }

    #[test]
    fn eta_reparam_plugins() {
        let (ep, eb) = eta_reparam(&ReparamCoords { b: 0.0, phi: 0.9 });
        assert!(ep.norm() < 1e-15);
        assert!((eb - V3::new(-0.9f64.cos(), -0.9f64.sin(), 0.0)).norm() < 1e-15);

        let (ep, _) = eta_reparam(&ReparamCoords { b: PI, phi: 0.0 });
        assert!((ep - V3::new(0.0, 0.0, 2.0)).norm() < 1e-15);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let rc = ReparamCoords {
                b: rng.gen_range(0.0..2.0 * PI),
                phi: rng.gen_range(-PI..PI),
            };
            let (ep, eb) = eta_reparam(&rc);
            assert!(ep.dot(&eb).abs() < 1e-14);
            assert_abs_diff_eq!(ep.norm_squared(), 4.0 * (rc.b / 2.0).sin().powi(2), epsilon = 1e-12);
            assert_abs_diff_eq!(eb.norm(), 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn orthogonality_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let cfg = rand_cfg(&mut rng);
            let etas = eta_pair(&cfg);
            if let Ok(n) = rotation_axis(&cfg) {
                assert!(etas.cross().dot(&n).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn jacobian_entries_and_determinant() {
        let cfg = EncodingConfig::planar(FRAC_PI_2, 3.0, 4.0).unwrap();
        let j = jacobian(&cfg).unwrap();
        assert_abs_diff_eq!(j.matrix()[(0, 0)], 3.0 / 5.0, epsilon = 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let cfg = rand_cfg(&mut rng);
            let rc = reparam(&cfg);
            if rc.b < 0.05 {
                continue;
            }
            let j = jacobian(&cfg).unwrap();
            assert_abs_diff_eq!(j.det(), cfg.theta().sin() / rc.b, epsilon = 1e-10);

            // central differences of reparam reproduce all entries
            let h = 1e-6;
            for (col, (d1, d2)) in [(0usize, (h, 0.0)), (1usize, (0.0, h))] {
                let mut cp = cfg.clone();
                cp.phi1 += d1;
                cp.phi2 += d2;
                let mut cm = cfg.clone();
                cm.phi1 -= d1;
                cm.phi2 -= d2;
                let (rp, rm) = (reparam(&cp), reparam(&cm));
                let db = (rp.b - rm.b) / (2.0 * h);
                let mut dphi = rp.phi - rm.phi;
                if dphi > PI {
                    dphi -= 2.0 * PI;
                } else if dphi < -PI {
                    dphi += 2.0 * PI;
                }
                let dphi = dphi / (2.0 * h);
                assert_abs_diff_eq!(j.matrix()[(0, col)], db, epsilon = 1e-6);
                assert_abs_diff_eq!(j.matrix()[(1, col)], dphi, epsilon = 1e-6);
            }
        }
    }

    /// η_i = (∂B/∂φ_i) η̃_B + (∂φ/∂φ_i) η̃_φ.
    #[test]
    fn eta_decomposes_along_reparam_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..300 {
            let cfg = rand_cfg(&mut rng);
            let rc = reparam(&cfg);
            if rc.b < 0.02 {
                continue;
            }
            let j = match jacobian(&cfg) {
                Ok(j) => j,
                Err(_) => continue,
            };
            let (ep, eb) = eta_reparam(&rc);
            let etas = eta_pair(&cfg);
            for (i, eta) in [etas.eta1, etas.eta2].into_iter().enumerate() {
                let lin = eb * j.matrix()[(0, i)] + ep * j.matrix()[(1, i)];
                assert!((lin - eta).norm() < 1e-8, "component error {}", (lin - eta).norm());
            }
        }
    }

    /// Validate the series coefficients where both routes are accurate
    /// (direct evaluation is cancellation-limited only below ~1e-3).
    #[test]
    fn taylor_series_matches_direct_form() {
        for (b, eps) in [(1e-3f64, 1e-9), (1e-2, 1e-10), (0.05, 1e-11), (0.1, 5e-11)] {
            let direct_g = (b - b.sin()) / (b * b * b);
            let direct_s = (b / 2.0).sin().powi(2) / (b * b);
            assert_abs_diff_eq!(g_series(b), direct_g, epsilon = eps);
            assert_abs_diff_eq!(s_series(b), direct_s, epsilon = eps);
        }
        // continuity across the switch point, limited by the direct branch
        assert_abs_diff_eq!(g_factor(0.99999e-4), g_factor(1.00001e-4), epsilon = 1e-7);
        assert_abs_diff_eq!(s_factor(0.99999e-4), s_factor(1.00001e-4), epsilon = 1e-7);
    }

    #[test]
    fn cross_norm_degenerates_monotonically_at_endpoints() {
        let sample = |theta: f64| {
            let cfg = EncodingConfig::planar(theta, 0.5, 0.5).unwrap();
            eta_pair(&cfg).cross().norm()
        };
        let mut prev = sample(1e-3);
        for k in 1..20 {
            let cur = sample(1e-3 + k as f64 * 0.01);
            assert!(cur > prev);
            prev = cur;
        }
        let mut prev = sample(PI - 1e-3);
        for k in 1..20 {
            let cur = sample(PI - 1e-3 - k as f64 * 0.01);
            assert!(cur > prev);
            prev = cur;
        }
    }
}
