//! Precision bounds for one encoding configuration, qubit vs qutrit.
//!
//! Run with: cargo run --example bounds

use std::f64::consts::FRAC_PI_2;

use su2_metrology::encoding::{eta_pair, reparam};
use su2_metrology::qubit::{hcrb_qubit, min_hcrb_qubit, optimal_qubit_probe};
use su2_metrology::qutrit::{min_qcrb_qutrit, optimal_qutrit_probe, qcrb_trace, reparam_qfim_ansatz, AnsatzParams};
use su2_metrology::su2::V3;
use su2_metrology::{EncodingConfig, WeightMatrix};

fn main() -> su2_metrology::Result<()> {
    // axes 90 degrees apart, both phases at 0.5 rad
    let cfg = EncodingConfig::planar(FRAC_PI_2, 0.5, 0.5)?;
    let w = WeightMatrix::new(1.0, 0.2, 1.0)?;
    let etas = eta_pair(&cfg);

    println!("configuration: theta = pi/2, phi1 = phi2 = 0.5");
    println!(
        "eta1 = ({:+.6}, {:+.6}, {:+.6})",
        etas.eta1.x, etas.eta1.y, etas.eta1.z
    );
    println!(
        "eta2 = ({:+.6}, {:+.6}, {:+.6})",
        etas.eta2.x, etas.eta2.y, etas.eta2.z
    );

    // qubit: Holevo bound minimized over pure Bloch probes
    let min_qubit = min_hcrb_qubit(&etas, &w)?;
    let (r_opt, _) = optimal_qubit_probe(&etas)?;
    println!("\nqubit minimum Holevo bound  {min_qubit:.6}");
    println!(
        "optimal Bloch probe         ({:+.6}, {:+.6}, {:+.6})",
        r_opt.x, r_opt.y, r_opt.z
    );

    // the same bound evaluated at a hand-picked probe is strictly worse
    let r_naive = V3::new(0.0, 0.0, 1.0);
    let at_naive = hcrb_qubit(&r_naive, &etas, &w)?;
    println!("bound at +z probe           {at_naive:.6}");

    // qutrit: SLD bound minimized over all pure probes; the optimum
    // saturates it because the weak-commutativity residual vanishes
    let coords = reparam(&cfg);
    let min_qutrit = min_qcrb_qutrit(&cfg, &w)?;
    let ket = optimal_qutrit_probe(&coords);
    println!("\nqutrit minimum trace bound  {min_qutrit:.6}");
    println!(
        "optimal amplitudes (m=+1,0,-1): {:+.6}{:+.6}i, {:+.6}{:+.6}i, {:+.6}{:+.6}i",
        ket.c_plus().re,
        ket.c_plus().im,
        ket.c_zero().re,
        ket.c_zero().im,
        ket.c_minus().re,
        ket.c_minus().im
    );
    println!("qubit/qutrit advantage      {:.2}x", min_qubit / min_qutrit);

    // an unbalanced ansatz probe pays for its smaller B-information
    let skewed = reparam_qfim_ansatz(&AnsatzParams::new(0.3, 1.0)?, coords.b);
    let jac = su2_metrology::encoding::jacobian(&cfg)?;
    // congruence works in (B, phi) row order, matching the Jacobian
    let f_tilde = nalgebra::Matrix2::new(skewed.b_b, skewed.phi_b, skewed.phi_b, skewed.phi_phi);
    let m = jac.matrix().transpose() * f_tilde * jac.matrix();
    println!("bound at skewed ansatz      {:.6}", qcrb_trace(&m, &w)?);
    Ok(())
}
