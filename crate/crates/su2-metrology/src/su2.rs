//! Small-dimension SU(2) algebra: Pauli and spin-1 generators, Bloch maps,
//! closed-form group elements, and extreme eigenvectors of in-plane
//! rotated generators.
//!
//! Basis order for spin-1 is fixed as (m_z = +1, 0, −1) throughout.

use nalgebra::{Matrix2, Matrix3, SymmetricEigen, Vector2, Vector3};
use num_complex::Complex64 as C64;

use crate::consts::{DEGENERATE_B, TOL_NORMALIZATION};
use crate::error::{Error, Result};

pub type M2 = Matrix2<C64>;
pub type M3 = Matrix3<C64>;
pub type V2c = Vector2<C64>;
pub type V3c = Vector3<C64>;
pub type V3 = Vector3<f64>;

const SQRT1_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Pauli matrices (σ_x, σ_y, σ_z).
pub fn pauli_matrices() -> [M2; 3] {
    [
        M2::new(c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)),
        M2::new(c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)),
        M2::new(c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)),
    ]
}

/// Spin-1 generators (J_x, J_y, J_z) in the J_z eigenbasis, order (+1, 0, −1).
pub fn spin1_generators() -> [M3; 3] {
    [
        dot_j(&V3::x()),
        dot_j(&V3::y()),
        dot_j(&V3::z()),
    ]
}

/// v·σ for a real 3-vector v.
pub fn dot_sigma(v: &V3) -> M2 {
    M2::new(c(v.z, 0.), c(v.x, -v.y), c(v.x, v.y), c(-v.z, 0.))
}

/// v·J in the spin-1 representation.
pub fn dot_j(v: &V3) -> M3 {
    let p = c(v.x, v.y) * SQRT1_2; // lowering-side entry
    let m = c(v.x, -v.y) * SQRT1_2;
    M3::new(
        c(v.z, 0.), m, c(0., 0.),
        p, c(0., 0.), m,
        c(0., 0.), p, c(-v.z, 0.),
    )
}

/// ρ = (I + r·σ)/2. Fails if r leaves the unit ball.
pub fn bloch_to_density(r: &V3) -> Result<M2> {
    let n = r.norm();
    if n > 1.0 + TOL_NORMALIZATION {
        return Err(Error::InvalidBloch(n));
    }
    Ok((M2::identity() + dot_sigma(r)) * c(0.5, 0.))
}

/// Inverse Bloch map: r_a = Re Tr(ρ σ_a).
pub fn density_to_bloch(rho: &M2) -> V3 {
    let [sx, sy, sz] = pauli_matrices();
    V3::new(
        (rho * sx).trace().re,
        (rho * sy).trace().re,
        (rho * sz).trace().re,
    )
}

fn check_axis(n: &V3) -> Result<()> {
    let len = n.norm();
    if (len - 1.0).abs() > TOL_NORMALIZATION {
        return Err(Error::InvalidAxis(len));
    }
    Ok(())
}

/// exp(−iB n·σ/2) = cos(B/2) I − i sin(B/2) n·σ.
pub fn qubit_rotation(n: &V3, b: f64) -> Result<M2> {
    check_axis(n)?;
    let (s, co) = (b / 2.0).sin_cos();
    Ok(M2::identity() * c(co, 0.) + dot_sigma(n) * c(0., -s))
}

/// exp(−iB n·J) via eigendecomposition of the Hermitian generator n·J.
///
/// Eigendecomposition (rather than a truncated series) keeps exact 2π
/// periodicity for integer spin.
pub fn qutrit_rotation(n: &V3, b: f64) -> Result<M3> {
    check_axis(n)?;
    Ok(exp_neg_i_herm(&(dot_j(n) * c(b, 0.))))
}

/// exp(−iH) for Hermitian H, dim 3.
pub fn exp_neg_i_herm(h: &M3) -> M3 {
    let eig = SymmetricEigen::new(*h);
    let mut d = M3::zeros();
    for k in 0..3 {
        let lam = eig.eigenvalues[k];
        d[(k, k)] = c(lam.cos(), -lam.sin());
    }
    eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

/// Eigenvalues (ascending) and eigenvectors of a Hermitian 3×3 matrix.
pub fn herm_eigen3(h: &M3) -> (V3, M3) {
    let eig = SymmetricEigen::new(*h);
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals = V3::new(
        eig.eigenvalues[idx[0]],
        eig.eigenvalues[idx[1]],
        eig.eigenvalues[idx[2]],
    );
    let vecs = M3::from_columns(&[
        eig.eigenvectors.column(idx[0]).into_owned(),
        eig.eigenvectors.column(idx[1]).into_owned(),
        eig.eigenvectors.column(idx[2]).into_owned(),
    ]);
    (vals, vecs)
}

/// Eigenvalues (ascending) and eigenvectors of a Hermitian 2×2 matrix.
pub fn herm_eigen2(h: &M2) -> (Vector2<f64>, M2) {
    let eig = SymmetricEigen::new(*h);
    if eig.eigenvalues[0] <= eig.eigenvalues[1] {
        (
            Vector2::new(eig.eigenvalues[0], eig.eigenvalues[1]),
            eig.eigenvectors,
        )
    } else {
        (
            Vector2::new(eig.eigenvalues[1], eig.eigenvalues[0]),
            M2::from_columns(&[
                eig.eigenvectors.column(1).into_owned(),
                eig.eigenvectors.column(0).into_owned(),
            ]),
        )
    }
}

/// Extreme eigenvectors (|λ_max⟩, |λ_min⟩) of the in-plane generator
/// n̂(φ)·J, n̂ = (cos φ, sin φ, 0), in the spin-1 representation.
///
/// |λ_max⟩ = ½ (e^{−iφ}, √2, e^{iφ}); |λ_min⟩ carries the extra alternating
/// sign (−1)^{1+m_z}. Eigenvalues are ±1.
pub fn extreme_eigenvectors_qutrit(phi: f64) -> (V3c, V3c) {
    let ep = c(phi.cos(), -phi.sin()); // e^{-i phi}
    let em = ep.conj();
    let r2 = std::f64::consts::SQRT_2;
    let vmax = V3c::new(ep * 0.5, c(r2 / 2.0, 0.), em * 0.5);
    let vmin = V3c::new(ep * 0.5, c(-r2 / 2.0, 0.), em * 0.5);
    (vmax, vmin)
}

/// Extreme eigenvectors of n̂(φ)·σ/2 (spin-½), eigenvalues ±½.
pub fn extreme_eigenvectors_qubit(phi: f64) -> (V2c, V2c) {
    let h = phi / 2.0;
    let ep = c(h.cos(), -h.sin()); // e^{-i phi/2}
    let em = ep.conj();
    let vmax = V2c::new(ep * SQRT1_2, em * SQRT1_2);
    let vmin = V2c::new(-ep * SQRT1_2, em * SQRT1_2);
    (vmax, vmin)
}

/// Normalized pure qutrit state, amplitudes (c₊₁, c₀, c₋₁) in the fixed
/// basis order (m_z = +1, 0, −1).
#[derive(Debug, Clone, PartialEq)]
pub struct QutritKet {
    amps: V3c,
}

impl QutritKet {
    /// Build from amplitudes, requiring normalization within tolerance.
    pub fn new(c_plus: C64, c_zero: C64, c_minus: C64) -> Result<Self> {
        let amps = V3c::new(c_plus, c_zero, c_minus);
        let n = amps.norm();
        if (n - 1.0).abs() > TOL_NORMALIZATION {
            return Err(Error::InvalidKet(n));
        }
        Ok(Self { amps })
    }

    /// Build from an amplitude vector, requiring normalization within
    /// tolerance.
    pub fn from_vector(amps: V3c) -> Result<Self> {
        Self::new(amps[0], amps[1], amps[2])
    }

    /// Haar-uniform random pure state: amplitudes drawn as independent
    /// complex Gaussians (one Box-Muller pair each), then normalized.
    pub fn haar_random(rng: &mut impl rand::Rng) -> Self {
        let mut amps = [C64::default(); 3];
        for a in &mut amps {
            let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = (-2.0 * u1.ln()).sqrt();
            *a = C64::new(r * u2.cos(), r * u2.sin());
        }
        Self::normalized(amps[0], amps[1], amps[2])
            .expect("Gaussian amplitudes are almost surely nonzero")
    }

    /// Build from arbitrary nonzero amplitudes, rescaling to unit norm.
    pub fn normalized(c_plus: C64, c_zero: C64, c_minus: C64) -> Result<Self> {
        let amps = V3c::new(c_plus, c_zero, c_minus);
        let n = amps.norm();
        if n < DEGENERATE_B {
            return Err(Error::InvalidKet(n));
        }
        Ok(Self { amps: amps / c(n, 0.) })
    }

    pub fn c_plus(&self) -> C64 {
        self.amps[0]
    }

    pub fn c_zero(&self) -> C64 {
        self.amps[1]
    }

    pub fn c_minus(&self) -> C64 {
        self.amps[2]
    }

    pub fn as_vector(&self) -> &V3c {
        &self.amps
    }

    /// |⟨self|other⟩| — global-phase-free overlap.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.amps.dotc(&other.amps).norm()
    }

    /// ⟨ψ|A|ψ⟩ for Hermitian A (real by construction).
    pub fn expect(&self, a: &M3) -> f64 {
        self.amps.dotc(&(a * self.amps)).re
    }
}
