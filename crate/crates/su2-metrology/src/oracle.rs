//! Independent numerical ground truth for every closed form in the crate.
//!
//! Three routes that share no algebra with the analytic code:
//!
//! - effective Hamiltonians from central finite differences of the
//!   propagator, in both representations;
//! - QFIM and Uhlmann elements from numerically constructed symmetric
//!   logarithmic derivatives of the encoded density matrix;
//! - brute-force grid searches over probe space that bound the closed-form
//!   optima from above.
//!
//! Each suite condenses to an [`OracleReport`]; [`verify_all`] runs the lot
//! deterministically from a single seed.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

use crate::consts::{FD_STEP, SINGULAR_TRIPLE, SUPPORT_CUTOFF};
use crate::encoding::{eta_pair, jacobian, reparam, EncodingConfig, EtaPair};
use crate::error::Result;
use crate::qubit::{
    hcrb_qubit, min_hcrb_qubit, mixed_state_bounds, optimal_qubit_probe, qfim_pure_qubit,
    small_param_optimal_probe, uhlmann_pure_qubit, WeightMatrix,
};
use crate::qutrit::{
    commuting_optimal_amplitudes, min_qcrb_qutrit, optimal_qutrit_probe, qcrb_trace,
    qfim_qutrit_general, su2_expectation,
};
use crate::su2::{bloch_to_density, pauli_matrices, qubit_rotation, qutrit_rotation, spin1_generators, QutritKet, V3, V3c};
use crate::Model;

/// Outcome of one verification suite. JSON output carries exactly the
/// fields name, max_abs_error, tolerance, pass; the worst-instance value
/// pair is kept for the text report only.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub name: String,
    #[serde(skip)]
    pub closed_form: f64,
    #[serde(skip)]
    pub numerical: f64,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OracleReport {
    fn new(
        name: impl Into<String>,
        closed_form: f64,
        numerical: f64,
        max_abs_error: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            name: name.into(),
            closed_form,
            numerical,
            max_abs_error,
            tolerance,
            pass: max_abs_error <= tolerance,
        }
    }

    /// One line of the text report.
    pub fn line(&self) -> String {
        format!(
            "{}  {:<58} max|err| {:9.3e}  tol {:7.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.max_abs_error,
            self.tolerance,
        )
    }
}

/// Running worst-case tracker that remembers the offending value pair.
struct Worst {
    err: f64,
    closed: f64,
    numerical: f64,
}

impl Worst {
    fn new() -> Self {
        Self { err: 0.0, closed: 0.0, numerical: 0.0 }
    }

    fn update(&mut self, closed: f64, numerical: f64) {
        let e = (closed - numerical).abs();
        if e > self.err {
            *self = Self { err: e, closed, numerical };
        }
    }

    fn update_err(&mut self, closed: f64, numerical: f64, err: f64) {
        if err > self.err {
            *self = Self { err, closed, numerical };
        }
    }

    fn report(self, name: impl Into<String>, tolerance: f64) -> OracleReport {
        OracleReport::new(name, self.closed, self.numerical, self.err, tolerance)
    }
}

fn to_dyn2(m: &crate::su2::M2) -> DMatrix<C64> {
    DMatrix::from_fn(2, 2, |i, j| m[(i, j)])
}

fn to_dyn3(m: &crate::su2::M3) -> DMatrix<C64> {
    DMatrix::from_fn(3, 3, |i, j| m[(i, j)])
}

/// Propagator exp(−i(φ₁H₁ + φ₂H₂)) as a dynamically sized matrix.
pub fn propagator(cfg: &EncodingConfig, model: Model) -> DMatrix<C64> {
    let g = cfg.total_generator();
    let b = g.norm();
    let dim = match model {
        Model::Qubit => 2,
        Model::Qutrit => 3,
    };
    if b < 1e-300 {
        return DMatrix::identity(dim, dim);
    }
    let n = g / b;
    match model {
        Model::Qubit => to_dyn2(&qubit_rotation(&n, b).expect("axis normalized here")),
        Model::Qutrit => to_dyn3(&qutrit_rotation(&n, b).expect("axis normalized here")),
    }
}

/// Effective Hamiltonians i(∂_{φ_j}U†)U from central differences on U†.
pub fn numerical_effective_hamiltonians(
    cfg: &EncodingConfig,
    h: f64,
    model: Model,
) -> (DMatrix<C64>, DMatrix<C64>) {
    assert!(
        (1e-8..=1e-3).contains(&h),
        "finite-difference step {h} outside [1e-8, 1e-3]"
    );
    let u0 = propagator(cfg, model);
    let mut heff = Vec::with_capacity(2);
    for j in 0..2 {
        let shift = |s: f64| match j {
            0 => cfg.with_phases(cfg.phi1 + s, cfg.phi2),
            _ => cfg.with_phases(cfg.phi1, cfg.phi2 + s),
        };
        let dudag = (propagator(&shift(h), model).adjoint()
            - propagator(&shift(-h), model).adjoint())
            * C64::from(1.0 / (2.0 * h));
        heff.push(dudag * &u0 * C64::i());
    }
    let h2 = heff.pop().expect("two elements pushed");
    let h1 = heff.pop().expect("two elements pushed");
    (h1, h2)
}

/// η components of an effective Hamiltonian: Tr(H σ_a) for spin-1/2,
/// Tr(H J_a)/2 for spin-1.
pub fn eta_from_effective(h_eff: &DMatrix<C64>, model: Model) -> V3 {
    let component = |gen: &DMatrix<C64>, scale: f64| (h_eff * gen).trace().re * scale;
    match model {
        Model::Qubit => {
            let s: Vec<_> = pauli_matrices().iter().map(to_dyn2).collect();
            V3::new(component(&s[0], 1.0), component(&s[1], 1.0), component(&s[2], 1.0))
        }
        Model::Qutrit => {
            let j: Vec<_> = spin1_generators().iter().map(to_dyn3).collect();
            V3::new(component(&j[0], 0.5), component(&j[1], 0.5), component(&j[2], 0.5))
        }
    }
}

/// Finite-difference η pair.
pub fn numerical_eta_pair(cfg: &EncodingConfig, h: f64, model: Model) -> EtaPair {
    let (h1, h2) = numerical_effective_hamiltonians(cfg, h, model);
    EtaPair {
        eta1: eta_from_effective(&h1, model),
        eta2: eta_from_effective(&h2, model),
    }
}

/// Symmetric logarithmic derivatives: in the eigenbasis of ρ,
/// (L)_μν = 2(∂ρ)_μν/(λ_μ + λ_ν); pairs with λ_μ + λ_ν below the support
/// cutoff contribute nothing and are zeroed.
pub fn sld_from_state(rho: &DMatrix<C64>, drhos: &[DMatrix<C64>]) -> Vec<DMatrix<C64>> {
    let eig = nalgebra::SymmetricEigen::new(rho.clone());
    let v = &eig.eigenvectors;
    let lam = &eig.eigenvalues;
    drhos
        .iter()
        .map(|dr| {
            let m = v.adjoint() * dr * v;
            let n = lam.len();
            let mut l = DMatrix::<C64>::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let s = lam[i] + lam[j];
                    if s > SUPPORT_CUTOFF {
                        l[(i, j)] = m[(i, j)] * C64::from(2.0 / s);
                    }
                }
            }
            v * l * v.adjoint()
        })
        .collect()
}

/// QFIM and Uhlmann element from a state and its two SLDs:
/// F_ij = Re Tr(ρ L_i L_j), D₁₂ = Im Tr(ρ L₁ L₂).
pub fn qfim_uhlmann_from_slds(
    rho: &DMatrix<C64>,
    slds: &[DMatrix<C64>],
) -> (Matrix2<f64>, f64) {
    assert_eq!(slds.len(), 2, "exactly two parameters");
    let t = |i: usize, j: usize| (rho * &slds[i] * &slds[j]).trace();
    let (t01, t10) = (t(0, 1), t(1, 0));
    let off = (t01.re + t10.re) / 2.0;
    let f = Matrix2::new(t(0, 0).re, off, off, t(1, 1).re);
    (f, (t01.im - t10.im) / 2.0)
}

/// Encoded qubit density matrix U ρ₀ U† for a (possibly mixed) Bloch
/// vector.
pub fn encoded_qubit_state(r: &V3, cfg: &EncodingConfig) -> Result<DMatrix<C64>> {
    let rho0 = to_dyn2(&bloch_to_density(r)?);
    let u = propagator(cfg, Model::Qubit);
    Ok(&u * rho0 * u.adjoint())
}

/// Encoded pure qutrit density matrix.
pub fn encoded_qutrit_state(ket: &QutritKet, cfg: &EncodingConfig) -> DMatrix<C64> {
    let amps = ket.as_vector();
    let psi = propagator(cfg, Model::Qutrit)
        * DVector::from_iterator(3, amps.iter().cloned());
    &psi * psi.adjoint()
}

/// Central differences in (φ₁, φ₂) with one Richardson step,
/// D ≈ (4 D_{h/2} − D_h)/3, pushing the truncation error to O(h⁴).
pub fn state_derivatives<F>(state: F, cfg: &EncodingConfig, h: f64) -> [DMatrix<C64>; 2]
where
    F: Fn(&EncodingConfig) -> DMatrix<C64>,
{
    let mut out = Vec::with_capacity(2);
    for j in 0..2 {
        let central = |step: f64| {
            let shift = |s: f64| match j {
                0 => cfg.with_phases(cfg.phi1 + s, cfg.phi2),
                _ => cfg.with_phases(cfg.phi1, cfg.phi2 + s),
            };
            (state(&shift(step)) - state(&shift(-step))) * C64::from(1.0 / (2.0 * step))
        };
        out.push((central(h / 2.0) * C64::from(4.0) - central(h)) * C64::from(1.0 / 3.0));
    }
    let d2 = out.pop().expect("two elements pushed");
    let d1 = out.pop().expect("two elements pushed");
    [d1, d2]
}

/// Which probe-space search to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridProblem {
    QubitHcrb,
    QutritQcrb,
}

/// Argmin probe of a grid search.
#[derive(Debug, Clone)]
pub enum GridProbe {
    Bloch(V3),
    Ket(QutritKet),
}

/// Grid-search outcome; `margin = best_value − closed_form_min` should be a
/// small non-negative number when the closed form is truly the minimum.
#[derive(Debug, Clone)]
pub struct GridSearchOutcome {
    pub feasible: bool,
    pub best_value: f64,
    pub closed_form_min: f64,
    pub margin: f64,
    pub probe: Option<GridProbe>,
}

impl GridSearchOutcome {
    fn infeasible() -> Self {
        Self {
            feasible: false,
            best_value: f64::INFINITY,
            closed_form_min: f64::INFINITY,
            margin: f64::NAN,
            probe: None,
        }
    }

    pub fn describe(&self) -> String {
        if !self.feasible {
            return "infeasible: |eta1 x eta2| = 0".to_string();
        }
        format!(
            "best {:.12e}, closed form {:.12e}, margin {:.3e}",
            self.best_value, self.closed_form_min, self.margin
        )
    }
}

/// Brute-force probe-space minimization of the scalar bound.
///
/// Qubit: one pass over a midpoint (χ, ς) sphere grid with `resolution`
/// polar times 2·`resolution` azimuthal points. Qutrit: the four-angle
/// chart (θ₀, θ₁, φ₁, φ₋₁) at `resolution` points per axis, plus two
/// deterministic local refinement passes around the running argmin.
pub fn grid_search_min_bound(
    problem: GridProblem,
    cfg: &EncodingConfig,
    w: &WeightMatrix,
    resolution: usize,
) -> GridSearchOutcome {
    assert!(resolution >= 20, "resolution below 20 points per angle");
    match problem {
        GridProblem::QubitHcrb => grid_qubit(cfg, w, resolution),
        GridProblem::QutritQcrb => grid_qutrit(cfg, w, resolution),
    }
}

fn grid_qubit(cfg: &EncodingConfig, w: &WeightMatrix, resolution: usize) -> GridSearchOutcome {
    let etas = eta_pair(cfg);
    let x = etas.cross();
    if x.norm() < 1e-12 {
        return GridSearchOutcome::infeasible();
    }
    let closed = min_hcrb_qubit(&etas, w).expect("cross product checked nonzero");
    let (e1, e2) = (etas.eta1, etas.eta2);
    let (w11, w12, w22, sqrt_det_w) = (w.w11(), w.w12(), w.w22(), w.det().sqrt());
    let mut best = f64::INFINITY;
    let mut best_r = V3::z();
    for k in 0..resolution {
        let chi = PI * (k as f64 + 0.5) / resolution as f64;
        let (schi, cchi) = chi.sin_cos();
        for j in 0..2 * resolution {
            let sig = PI * j as f64 / resolution as f64;
            let r = V3::new(schi * sig.cos(), schi * sig.sin(), cchi);
            let d = r.dot(&x);
            if d.abs() < SINGULAR_TRIPLE {
                continue;
            }
            let c1 = r.cross(&e1);
            let c2 = r.cross(&e2);
            let q = w11 * c2.norm_squared() + w22 * c1.norm_squared() - 2.0 * w12 * c1.dot(&c2);
            let v = q / (d * d) + 2.0 * sqrt_det_w / d.abs();
            if v < best {
                best = v;
                best_r = r;
            }
        }
    }
    GridSearchOutcome {
        feasible: true,
        best_value: best,
        closed_form_min: closed,
        margin: best - closed,
        probe: Some(GridProbe::Bloch(best_r)),
    }
}

fn chart_ket(t0: f64, t1: f64, p1: f64, pm1: f64) -> QutritKet {
    let amps = V3c::new(
        C64::from_polar(t0.sin() * t1.cos(), p1),
        C64::from(t0.cos()),
        C64::from_polar(t0.sin() * t1.sin(), pm1),
    );
    QutritKet::from_vector(amps).expect("chart amplitudes are normalized by construction")
}

fn grid_qutrit(cfg: &EncodingConfig, w: &WeightMatrix, resolution: usize) -> GridSearchOutcome {
    let etas = eta_pair(cfg);
    if etas.cross().norm() < 1e-12 {
        return GridSearchOutcome::infeasible();
    }
    let closed = match min_qcrb_qutrit(cfg, w) {
        Ok(v) => v,
        Err(_) => return GridSearchOutcome::infeasible(),
    };
    let bound_of = |ket: &QutritKet| -> Option<f64> {
        let f = Matrix2::new(
            qfim_qutrit_general(ket, &etas.eta1, &etas.eta1),
            qfim_qutrit_general(ket, &etas.eta1, &etas.eta2),
            qfim_qutrit_general(ket, &etas.eta1, &etas.eta2),
            qfim_qutrit_general(ket, &etas.eta2, &etas.eta2),
        );
        qcrb_trace(&f, w).ok()
    };

    let full: [(f64, f64); 4] = [(0.0, PI), (0.0, PI), (0.0, 2.0 * PI), (0.0, 2.0 * PI)];
    let mut windows = full;
    let mut best = f64::INFINITY;
    let mut best_angles = [0.0f64; 4];
    for _pass in 0..3 {
        let res = resolution;
        let mut angles = [0.0f64; 4];
        for i0 in 0..res {
            angles[0] = grid_point(windows[0], i0, res);
            for i1 in 0..res {
                angles[1] = grid_point(windows[1], i1, res);
                for i2 in 0..res {
                    angles[2] = grid_point(windows[2], i2, res);
                    for i3 in 0..res {
                        angles[3] = grid_point(windows[3], i3, res);
                        let ket = chart_ket(angles[0], angles[1], angles[2], angles[3]);
                        if let Some(v) = bound_of(&ket) {
                            if v < best {
                                best = v;
                                best_angles = angles;
                            }
                        }
                    }
                }
            }
        }
        // shrink each window to ±1.5 grid steps around the argmin
        for (axis, win) in windows.iter_mut().enumerate() {
            let step = (win.1 - win.0) / res as f64;
            let lo = (best_angles[axis] - 1.5 * step).max(full[axis].0);
            let hi = (best_angles[axis] + 1.5 * step).min(full[axis].1);
            *win = (lo, hi);
        }
    }
    GridSearchOutcome {
        feasible: true,
        best_value: best,
        closed_form_min: closed,
        margin: best - closed,
        probe: Some(GridProbe::Ket(chart_ket(
            best_angles[0],
            best_angles[1],
            best_angles[2],
            best_angles[3],
        ))),
    }
}

fn grid_point(window: (f64, f64), index: usize, res: usize) -> f64 {
    window.0 + (window.1 - window.0) * (index as f64 + 0.5) / res as f64
}

fn random_config(rng: &mut impl Rng) -> EncodingConfig {
    EncodingConfig::planar(
        rng.gen_range(0.05..PI - 0.05),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
    .expect("theta sampled in range")
}

fn random_unit(rng: &mut impl Rng) -> V3 {
    loop {
        let v = V3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

fn random_weight(rng: &mut impl Rng) -> WeightMatrix {
    let w11 = rng.gen_range(0.2..3.0);
    let w22 = rng.gen_range(0.2..3.0f64);
    let w12 = rng.gen_range(-0.9..0.9) * (w11 * w22).sqrt();
    WeightMatrix::new(w11, w12, w22).expect("sampled within the PD cone")
}

/// Closed-form η vectors against finite differences, one representation.
pub fn eta_fd_report(model: Model, seed: u64, instances: usize) -> OracleReport {
    eta_fd_impl(
        format!("eta closed form vs finite differences ({model})"),
        eta_pair,
        model,
        seed,
        instances,
    )
}

fn eta_fd_impl(
    name: String,
    closed_fn: impl Fn(&EncodingConfig) -> EtaPair,
    model: Model,
    seed: u64,
    instances: usize,
) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let cfg = random_config(&mut rng);
        let closed = closed_fn(&cfg);
        let numerical = numerical_eta_pair(&cfg, FD_STEP, model);
        for (c, n) in [(closed.eta1, numerical.eta1), (closed.eta2, numerical.eta2)] {
            for k in 0..3 {
                worst.update(c[k], n[k]);
            }
        }
    }
    worst.report(name, 1e-6)
}

/// Finite-difference η in the two representations against each other.
pub fn eta_representation_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let cfg = random_config(&mut rng);
        let a = numerical_eta_pair(&cfg, FD_STEP, Model::Qubit);
        let b = numerical_eta_pair(&cfg, FD_STEP, Model::Qutrit);
        for (u, v) in [(a.eta1, b.eta1), (a.eta2, b.eta2)] {
            for k in 0..3 {
                worst.update(u[k], v[k]);
            }
        }
    }
    worst.report("eta representation independence (spin-1/2 vs spin-1)", 1e-6)
}

/// Error ratio between steps h = 1e-3 and 1e-4; second-order central
/// differences give a ratio near 100.
pub fn fd_convergence_report() -> OracleReport {
    let cfg = EncodingConfig::planar(1.2, 0.7, -0.4).expect("fixed config valid");
    let closed = eta_pair(&cfg);
    let max_err = |h: f64| {
        let numerical = numerical_eta_pair(&cfg, h, Model::Qubit);
        let d1 = (closed.eta1 - numerical.eta1).amax();
        let d2 = (closed.eta2 - numerical.eta2).amax();
        d1.max(d2)
    };
    let ratio = max_err(1e-3) / max_err(1e-4);
    OracleReport::new(
        "finite-difference convergence order (error ratio near 100)",
        100.0,
        ratio,
        (ratio - 100.0).abs(),
        50.0,
    )
}

/// Residual of the defining equation ∂ρ = (Lρ + ρL)/2 over pure and mixed
/// qubit states and pure qutrit states.
pub fn sld_residual_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for i in 0..instances {
        let cfg = random_config(&mut rng);
        let (rho, drhos) = if i % 3 == 2 {
            let ket = QutritKet::haar_random(&mut rng);
            let rho = encoded_qutrit_state(&ket, &cfg);
            let d = state_derivatives(|c| encoded_qutrit_state(&ket, c), &cfg, 1e-4);
            (rho, d)
        } else {
            let scale = if i % 3 == 0 { 1.0 } else { rng.gen_range(0.2..0.95) };
            let r = random_unit(&mut rng) * scale;
            let rho = encoded_qubit_state(&r, &cfg).expect("|r| <= 1");
            let d = state_derivatives(
                |c| encoded_qubit_state(&r, c).expect("|r| <= 1"),
                &cfg,
                1e-4,
            );
            (rho, d)
        };
        let slds = sld_from_state(&rho, &drhos);
        for (l, dr) in slds.iter().zip(drhos.iter()) {
            let residual = dr - (l * &rho + &rho * l) * C64::from(0.5);
            worst.update_err(0.0, residual.norm(), residual.norm());
        }
    }
    worst.report("sld defining-equation residual", 1e-9)
}

fn qubit_sld_instance(
    rng: &mut impl Rng,
) -> (EncodingConfig, V3, EtaPair, Matrix2<f64>, f64) {
    let cfg = random_config(rng);
    let r = random_unit(rng);
    let etas = eta_pair(&cfg);
    let rho = encoded_qubit_state(&r, &cfg).expect("unit Bloch vector");
    let drhos = state_derivatives(|c| encoded_qubit_state(&r, c).expect("unit"), &cfg, 1e-4);
    let slds = sld_from_state(&rho, &drhos);
    let (f, d12) = qfim_uhlmann_from_slds(&rho, &slds);
    (cfg, r, etas, f, d12)
}

/// Closed-form pure-qubit QFIM against the SLD route.
pub fn qubit_sld_qfim_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let (_, r, etas, f_num, _) = qubit_sld_instance(&mut rng);
        let f_closed = qfim_pure_qubit(&r, &etas).expect("unit Bloch vector");
        for i in 0..2 {
            for j in 0..2 {
                worst.update(f_closed[(i, j)], f_num[(i, j)]);
            }
        }
    }
    worst.report("qubit qfim closed form vs sld route", 1e-9)
}

/// Closed-form Uhlmann element r·(η₁×η₂) against Im Tr(ρ L₁ L₂).
pub fn qubit_sld_uhlmann_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let (_, r, etas, _, d_num) = qubit_sld_instance(&mut rng);
        let d_closed = uhlmann_pure_qubit(&r, &etas).expect("unit Bloch vector");
        worst.update(d_closed, d_num);
    }
    worst.report("qubit uhlmann element closed form vs sld route", 1e-9)
}

/// det F = (r·(η₁×η₂))² for pure qubit probes.
pub fn det_identity_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let cfg = random_config(&mut rng);
        let r = random_unit(&mut rng);
        let etas = eta_pair(&cfg);
        let f = qfim_pure_qubit(&r, &etas).expect("unit Bloch vector");
        let d = uhlmann_pure_qubit(&r, &etas).expect("unit Bloch vector");
        worst.update(f.determinant(), d * d);
    }
    worst.report("qubit qfim determinant identity", 1e-10)
}

/// Mixed-probe QFIM and Uhlmann element against the purity-scaled closed
/// forms, via the SLD route on the mixed encoded state.
pub fn mixed_scaling_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = WeightMatrix::identity();
    let mut worst = Worst::new();
    for _ in 0..instances {
        let cfg = random_config(&mut rng);
        let etas = eta_pair(&cfg);
        let rhat = random_unit(&mut rng);
        if rhat.dot(&etas.cross()).abs() < 1e-3 {
            continue;
        }
        let r = rhat * rng.gen_range(0.2..0.95);
        let closed = mixed_state_bounds(&r, &etas, &w).expect("feasible instance");
        let rho = encoded_qubit_state(&r, &cfg).expect("|r| < 1");
        let drhos =
            state_derivatives(|c| encoded_qubit_state(&r, c).expect("|r| < 1"), &cfg, 1e-4);
        let slds = sld_from_state(&rho, &drhos);
        let (f_num, d_num) = qfim_uhlmann_from_slds(&rho, &slds);
        for i in 0..2 {
            for j in 0..2 {
                worst.update(closed.qfim[(i, j)], f_num[(i, j)]);
            }
        }
        worst.update(closed.d12, d_num);
    }
    worst.report("mixed-state purity scaling of qfim and uhlmann element", 1e-9)
}

fn trace_norm2(m: &Matrix2<f64>) -> f64 {
    let mtm = m.transpose() * m;
    let tr = mtm.trace();
    let det = mtm.determinant().max(0.0);
    let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
    (tr / 2.0 + disc).max(0.0).sqrt() + (tr / 2.0 - disc).max(0.0).sqrt()
}

/// Vector-algebra Holevo bound against the matrix route
/// Tr(WF⁻¹) + ‖√W F⁻¹DF⁻¹√W‖₁; relative error metric.
pub fn hcrb_two_route_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    let mut done = 0;
    while done < instances {
        let cfg = random_config(&mut rng);
        let etas = eta_pair(&cfg);
        let r = random_unit(&mut rng);
        let d = r.dot(&etas.cross());
        if d.abs() < 1e-3 {
            continue;
        }
        done += 1;
        let w = random_weight(&mut rng);
        let closed = hcrb_qubit(&r, &etas, &w).expect("feasible instance");
        let f = qfim_pure_qubit(&r, &etas).expect("unit Bloch vector");
        let fi = f.try_inverse().expect("determinant bounded away from zero");
        let dm = Matrix2::new(0.0, d, -d, 0.0);
        let sw = w.sqrt();
        let matrix_route = (w.matrix() * fi).trace() + trace_norm2(&(sw * fi * dm * fi * sw));
        worst.update_err(closed, matrix_route, (closed - matrix_route).abs() / closed.abs());
    }
    worst.report("qubit hcrb two-route agreement (relative)", 1e-8)
}

fn qutrit_sld_instance(
    rng: &mut impl Rng,
) -> (QutritKet, EtaPair, Matrix2<f64>, f64) {
    let cfg = random_config(rng);
    let ket = QutritKet::haar_random(rng);
    let etas = eta_pair(&cfg);
    let rho = encoded_qutrit_state(&ket, &cfg);
    let drhos = state_derivatives(|c| encoded_qutrit_state(&ket, c), &cfg, 1e-4);
    let slds = sld_from_state(&rho, &drhos);
    let (f, d12) = qfim_uhlmann_from_slds(&rho, &slds);
    (ket, etas, f, d12)
}

/// Covariance-form qutrit QFIM against the SLD route.
pub fn qutrit_sld_qfim_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let (ket, etas, f_num, _) = qutrit_sld_instance(&mut rng);
        let pairs = [
            (0usize, 0usize, &etas.eta1, &etas.eta1),
            (0, 1, &etas.eta1, &etas.eta2),
            (1, 1, &etas.eta2, &etas.eta2),
        ];
        for (i, j, a, b) in pairs {
            worst.update(qfim_qutrit_general(&ket, a, b), f_num[(i, j)]);
        }
    }
    worst.report("qutrit qfim covariance form vs sld route", 1e-9)
}

/// Closed-form qutrit Uhlmann element 2⟨(η₁×η₂)·J⟩ against the SLD route.
pub fn qutrit_sld_uhlmann_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    for _ in 0..instances {
        let (ket, etas, _, d_num) = qutrit_sld_instance(&mut rng);
        worst.update(2.0 * su2_expectation(&ket, &etas.cross()), d_num);
    }
    worst.report("qutrit uhlmann element closed form vs sld route", 1e-9)
}

/// Entrywise congruence F = 𝒥ᵀ F̃ 𝒥 between the phase-pair QFIM and the
/// (B, φ) QFIM of the same probe.
pub fn jacobian_congruence_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    let mut done = 0;
    while done < instances {
        let cfg = random_config(&mut rng);
        let j = match jacobian(&cfg) {
            Ok(j) => j,
            Err(_) => continue,
        };
        done += 1;
        let ket = QutritKet::haar_random(&mut rng);
        let etas = eta_pair(&cfg);
        let coords = reparam(&cfg);
        let (eta_phi, eta_b) = crate::encoding::eta_reparam(&coords);
        let f_orig = Matrix2::new(
            qfim_qutrit_general(&ket, &etas.eta1, &etas.eta1),
            qfim_qutrit_general(&ket, &etas.eta1, &etas.eta2),
            qfim_qutrit_general(&ket, &etas.eta1, &etas.eta2),
            qfim_qutrit_general(&ket, &etas.eta2, &etas.eta2),
        );
        // (B, φ) row order to match the Jacobian rows
        let f_tilde = Matrix2::new(
            qfim_qutrit_general(&ket, &eta_b, &eta_b),
            qfim_qutrit_general(&ket, &eta_b, &eta_phi),
            qfim_qutrit_general(&ket, &eta_b, &eta_phi),
            qfim_qutrit_general(&ket, &eta_phi, &eta_phi),
        );
        let pushed = j.matrix().transpose() * f_tilde * j.matrix();
        for a in 0..2 {
            for b in 0..2 {
                worst.update(f_orig[(a, b)], pushed[(a, b)]);
            }
        }
    }
    worst.report("reparameterization jacobian congruence of the qfim", 1e-8)
}

/// Closed-form Jacobian entries against central differences of the (B, φ)
/// map.
pub fn jacobian_fd_report(seed: u64, instances: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    let h = 1e-6;
    let mut done = 0;
    while done < instances {
        let cfg = random_config(&mut rng);
        if reparam(&cfg).b < 0.05 {
            continue;
        }
        let j = match jacobian(&cfg) {
            Ok(j) => j,
            Err(_) => continue,
        };
        done += 1;
        for col in 0..2 {
            let coords_at = |s: f64| {
                let shifted = match col {
                    0 => cfg.with_phases(cfg.phi1 + s, cfg.phi2),
                    _ => cfg.with_phases(cfg.phi1, cfg.phi2 + s),
                };
                reparam(&shifted)
            };
            let (p, m) = (coords_at(h), coords_at(-h));
            let db = (p.b - m.b) / (2.0 * h);
            let mut dphi = p.phi - m.phi;
            if dphi > PI {
                dphi -= 2.0 * PI;
            } else if dphi < -PI {
                dphi += 2.0 * PI;
            }
            worst.update(j.matrix()[(0, col)], db);
            worst.update(j.matrix()[(1, col)], dphi / (2.0 * h));
        }
    }
    worst.report("reparameterization jacobian vs finite differences", 1e-6)
}

/// Sphere-grid search against the closed-form qubit minimum: undercut
/// report and argmin-alignment report.
pub fn qubit_grid_reports(seed: u64, searches: usize, resolution: usize) -> [OracleReport; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut undercut = Worst::new();
    let mut align = Worst::new();
    for _ in 0..searches {
        let cfg = random_config(&mut rng);
        let etas = eta_pair(&cfg);
        if etas.cross().norm() < 1e-3 {
            continue;
        }
        let w = random_weight(&mut rng);
        let outcome = grid_search_min_bound(GridProblem::QubitHcrb, &cfg, &w, resolution);
        undercut.update_err(
            outcome.closed_form_min,
            outcome.best_value,
            (-outcome.margin).max(0.0),
        );
        let (r_opt, r_neg) = optimal_qubit_probe(&etas).expect("cross product nonzero");
        if let Some(GridProbe::Bloch(r)) = outcome.probe {
            let angle = |a: &V3| a.cross(&r).norm().atan2(a.dot(&r));
            align.update_err(0.0, angle(&r_opt).min(angle(&r_neg)), angle(&r_opt).min(angle(&r_neg)));
        }
    }
    [
        undercut.report("qubit grid search never undercuts the closed-form minimum", 1e-9),
        align.report(
            "qubit grid argmin aligns with the optimal probe",
            2.0 * PI / resolution as f64,
        ),
    ]
}

/// Four-angle-chart search against the closed-form qutrit minimum:
/// undercut report and argmin-fidelity report.
pub fn qutrit_grid_reports(seed: u64, searches: usize, resolution: usize) -> [OracleReport; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut undercut = Worst::new();
    let mut fidelity = Worst::new();
    for _ in 0..searches {
        let cfg = random_config(&mut rng);
        if reparam(&cfg).b < 0.3 {
            continue;
        }
        let w = random_weight(&mut rng);
        let outcome = grid_search_min_bound(GridProblem::QutritQcrb, &cfg, &w, resolution);
        if !outcome.feasible {
            continue;
        }
        undercut.update_err(
            outcome.closed_form_min,
            outcome.best_value,
            (-outcome.margin).max(0.0),
        );
        if let Some(GridProbe::Ket(ket)) = outcome.probe {
            let target = optimal_qutrit_probe(&reparam(&cfg));
            let f = ket.fidelity(&target);
            fidelity.update_err(1.0, f, 1.0 - f);
        }
    }
    [
        undercut.report("qutrit grid search never undercuts the closed-form minimum", 1e-9),
        fidelity.report("qutrit grid argmin fidelity with the optimal probe", 1e-3),
    ]
}

/// Löwner dominance of the ceiling QFIM over random probes.
pub fn loewner_report(seed: u64, samples: usize) -> OracleReport {
    let scan = crate::qutrit::loewner_dominance_scan(samples, seed);
    OracleReport::new(
        "loewner dominance of the ceiling qfim",
        0.0,
        scan.min_eigenvalue,
        (-scan.min_eigenvalue).max(0.0),
        -crate::consts::LOEWNER_FLOOR,
    )
}

/// Angle between the truncated small-phase probe and the exact optimum at
/// two magnitudes; quadratic (or better) shrinkage expected.
pub fn small_phase_reports() -> [OracleReport; 2] {
    let angle_at = |scale: f64| {
        let cfg = EncodingConfig::planar(std::f64::consts::FRAC_PI_2, scale, scale)
            .expect("fixed config valid");
        let etas = eta_pair(&cfg);
        let (r_opt, _) = optimal_qubit_probe(&etas).expect("feasible at right angle");
        let approx = small_param_optimal_probe(&cfg);
        r_opt.cross(&approx).norm().atan2(r_opt.dot(&approx))
    };
    let a3 = angle_at(1e-3);
    let a5 = angle_at(1e-5);
    [
        OracleReport::new("small-phase probe angle (phi = 1e-3)", 0.0, a3, a3, 1e-5),
        OracleReport::new("small-phase probe angle (phi = 1e-5)", 0.0, a5, a5, 1e-9),
    ]
}

/// Closed-form commuting-case minimizer against a dense simplex grid with
/// one local refinement pass.
pub fn commuting_grid_report(seed: u64, weights: usize) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    let mut ws = vec![WeightMatrix::new(1.0, 0.2, 1.0).expect("reference weight PD")];
    for _ in 1..weights.max(1) {
        ws.push(random_weight(&mut rng));
    }
    for w in ws {
        let closed = commuting_optimal_amplitudes(&w);
        let s = w.w11() + w.w22() + 2.0 * w.w12();
        let cost = |a: f64, b: f64| {
            let c = 1.0 - a - b;
            0.25 * (w.w22() / a + w.w11() / b + s / c)
        };
        // coarse pass
        let mut best = (f64::INFINITY, 0.0, 0.0);
        let coarse = 2e-3;
        let mut a = coarse / 2.0;
        while a < 1.0 {
            let mut b = coarse / 2.0;
            while a + b < 1.0 {
                let v = cost(a, b);
                if v < best.0 {
                    best = (v, a, b);
                }
                b += coarse;
            }
            a += coarse;
        }
        // refinement around the coarse argmin
        let fine = 5e-5;
        let (_, a0, b0) = best;
        let mut a = (a0 - coarse).max(fine);
        while a < (a0 + coarse).min(1.0) {
            let mut b = (b0 - coarse).max(fine);
            while b < (b0 + coarse).min(1.0 - a) {
                let v = cost(a, b);
                if v < best.0 {
                    best = (v, a, b);
                }
                b += fine;
            }
            a += fine;
        }
        let numerical = [best.1.sqrt(), best.2.sqrt(), (1.0 - best.1 - best.2).sqrt()];
        for k in 0..3 {
            worst.update(closed[k], numerical[k]);
        }
    }
    worst.report("commuting-case minimizer closed form vs grid", 1e-3)
}

/// Runs every verification suite with deterministic per-suite seeds.
/// `budget` scales the instance counts of the randomized suites; 0 skips
/// everything and returns an empty report.
pub fn verify_all(seed: u64, budget: usize) -> Vec<OracleReport> {
    if budget == 0 {
        return Vec::new();
    }
    let n = budget;
    let searches = (budget / 125).clamp(1, 4);
    let mut reports = vec![
        eta_fd_report(Model::Qubit, seed, n),
        eta_fd_report(Model::Qutrit, seed.wrapping_add(1), n),
        eta_representation_report(seed.wrapping_add(2), n),
        fd_convergence_report(),
        sld_residual_report(seed.wrapping_add(3), n),
        qubit_sld_qfim_report(seed.wrapping_add(4), n),
        qubit_sld_uhlmann_report(seed.wrapping_add(5), n),
        det_identity_report(seed.wrapping_add(6), n),
        mixed_scaling_report(seed.wrapping_add(7), n),
        hcrb_two_route_report(seed.wrapping_add(8), n),
        qutrit_sld_qfim_report(seed.wrapping_add(9), n),
        qutrit_sld_uhlmann_report(seed.wrapping_add(10), n),
        jacobian_congruence_report(seed.wrapping_add(11), n),
        jacobian_fd_report(seed.wrapping_add(12), n),
    ];
    reports.extend(qubit_grid_reports(seed.wrapping_add(13), searches, 60));
    reports.extend(qutrit_grid_reports(seed.wrapping_add(14), searches.min(2), 20));
    reports.push(loewner_report(
        seed.wrapping_add(15),
        budget.saturating_mul(20).max(100),
    ));
    reports.extend(small_phase_reports());
    reports.push(commuting_grid_report(seed.wrapping_add(16), 3));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn effective_hamiltonians_at_zero_phases() {
        // at the identity point the effective Hamiltonians are -H_i
        let cfg = EncodingConfig::planar(1.1, 0.0, 0.0).unwrap();
        let (h1, _) = numerical_effective_hamiltonians(&cfg, 1e-5, Model::Qubit);
        let expected = to_dyn2(&(crate::su2::dot_sigma(cfg.a1()) * C64::from(-0.5)));
        assert!((h1 - expected).norm() < 1e-9);

        let (_, h2) = numerical_effective_hamiltonians(&cfg, 1e-5, Model::Qutrit);
        let expected = to_dyn3(&(crate::su2::dot_j(cfg.a2()) * C64::from(-1.0)));
        assert!((h2 - expected).norm() < 1e-9);
    }

    #[test]
    fn effective_hamiltonians_hermitian_traceless() {
        let cfg = EncodingConfig::planar(FRAC_PI_2, 0.3, 0.7).unwrap();
        for model in [Model::Qubit, Model::Qutrit] {
            let (h1, h2) = numerical_effective_hamiltonians(&cfg, 1e-5, model);
            for h in [h1, h2] {
                assert!((&h - h.adjoint()).norm() < 1e-9);
                assert!(h.trace().norm() < 1e-9);
            }
        }
    }

    #[test]
    fn eta_suite_passes_and_detects_mutation() {
        let good = eta_fd_report(Model::Qubit, 11, 50);
        assert!(good.pass, "{}", good.line());

        // flipping the sign of the eta2 correction terms must trip the oracle
        let mutated = eta_fd_impl(
            "mutated eta2".into(),
            |cfg| {
                let mut etas = eta_pair(cfg);
                let base = -cfg.a2();
                etas.eta2 = base - (etas.eta2 - base);
                etas
            },
            Model::Qubit,
            11,
            50,
        );
        assert!(!mutated.pass);
        assert!(mutated.max_abs_error > 1e-3);
    }

    #[test]
    fn pure_state_sld_is_twice_the_derivative() {
        let cfg = EncodingConfig::planar(1.3, 0.4, -0.6).unwrap();
        let r = V3::new(0.48, -0.6, 0.64).normalize();
        let rho = encoded_qubit_state(&r, &cfg).unwrap();
        let drhos = state_derivatives(|c| encoded_qubit_state(&r, c).unwrap(), &cfg, 1e-4);
        let slds = sld_from_state(&rho, &drhos);
        for (l, dr) in slds.iter().zip(drhos.iter()) {
            assert!((l - dr * C64::from(2.0)).norm() < 1e-8);
            let residual = dr - (l * &rho + &rho * l) * C64::from(0.5);
            assert!(residual.norm() < 1e-12);
        }
    }

    #[test]
    fn maximally_mixed_state_has_zero_slds() {
        let cfg = EncodingConfig::planar(1.3, 0.4, -0.6).unwrap();
        let r = V3::zeros();
        let rho = encoded_qubit_state(&r, &cfg).unwrap();
        let drhos = state_derivatives(|c| encoded_qubit_state(&r, c).unwrap(), &cfg, 1e-4);
        let slds = sld_from_state(&rho, &drhos);
        for l in slds {
            assert!(l.norm() < 1e-10);
        }
    }

    #[test]
    fn sld_qfim_gram_matrix_case() {
        // probe orthogonal to both etas: QFIM is the Gram matrix
        let cfg = EncodingConfig::planar(FRAC_PI_2, 0.3, 0.7).unwrap();
        let etas = eta_pair(&cfg);
        let r = etas.cross().normalize();
        let rho = encoded_qubit_state(&r, &cfg).unwrap();
        let drhos = state_derivatives(|c| encoded_qubit_state(&r, c).unwrap(), &cfg, 1e-4);
        let (f, _) = qfim_uhlmann_from_slds(&rho, &sld_from_state(&rho, &drhos));
        assert_abs_diff_eq!(f[(0, 0)], etas.eta1.norm_squared(), epsilon = 1e-9);
        assert_abs_diff_eq!(f[(0, 1)], etas.eta1.dot(&etas.eta2), epsilon = 1e-9);
        assert_abs_diff_eq!(f[(1, 1)], etas.eta2.norm_squared(), epsilon = 1e-9);
    }

    #[test]
    fn small_suite_battery_passes() {
        // a fast, low-budget sweep through every randomized suite
        for report in verify_all(3, 40) {
            assert!(report.pass, "{}", report.line());
        }
        assert!(verify_all(3, 0).is_empty());
    }

    #[test]
    fn grid_search_qubit_matches_closed_form() {
        let cfg = EncodingConfig::planar(FRAC_PI_2, 0.5, 0.5).unwrap();
        let w = WeightMatrix::identity();
        let outcome = grid_search_min_bound(GridProblem::QubitHcrb, &cfg, &w, 100);
        assert!(outcome.feasible);
        assert!(outcome.margin >= -1e-9);
        assert!(outcome.margin < 1e-2 * outcome.closed_form_min);
        let etas = eta_pair(&cfg);
        let (r_opt, r_neg) = optimal_qubit_probe(&etas).unwrap();
        if let Some(GridProbe::Bloch(r)) = outcome.probe {
            let angle =
                |a: &V3| a.cross(&r).norm().atan2(a.dot(&r));
            assert!(angle(&r_opt).min(angle(&r_neg)) < 2.0 * PI / 100.0);
        } else {
            panic!("expected a Bloch-vector probe");
        }
    }

    #[test]
    fn grid_search_reports_infeasible_at_parallel_axes() {
        let cfg = EncodingConfig::planar(0.0, 0.4, 0.9).unwrap();
        let w = WeightMatrix::identity();
        for problem in [GridProblem::QubitHcrb, GridProblem::QutritQcrb] {
            let outcome = grid_search_min_bound(problem, &cfg, &w, 30);
            assert!(!outcome.feasible);
            assert_eq!(outcome.describe(), "infeasible: |eta1 x eta2| = 0");
        }
    }

    #[test]
    fn grid_search_qutrit_finds_optimal_probe() {
        // B = pi/2 via theta = pi/2, phi1 = phi2 chosen so B = pi/2
        let target_b = FRAC_PI_2;
        let phi = target_b / 2f64.sqrt();
        let cfg = EncodingConfig::planar(FRAC_PI_2, phi, phi).unwrap();
        assert_abs_diff_eq!(reparam(&cfg).b, target_b, epsilon = 1e-12);
        let w = WeightMatrix::identity();
        let outcome = grid_search_min_bound(GridProblem::QutritQcrb, &cfg, &w, 20);
        assert!(outcome.feasible);
        assert!(outcome.margin >= -1e-9);
        if let Some(GridProbe::Ket(ket)) = outcome.probe {
            let fid = ket.fidelity(&optimal_qutrit_probe(&reparam(&cfg)));
            assert!(fid > 0.999, "fidelity {fid}");
        } else {
            panic!("expected a ket probe");
        }
    }
}
