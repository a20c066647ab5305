//! Commuting pair of generators built from projectors: the phases are
//! jointly estimable without quantum incompatibility, and the optimal
//! amplitude split has a closed form.
//!
//! Run with: cargo run --example commuting

use num_complex::Complex64;
use su2_metrology::qutrit::{commuting_optimal_amplitudes, commuting_qfim, qcrb_trace, CommutingSpectra};
use su2_metrology::{QutritKet, WeightMatrix};

fn main() -> su2_metrology::Result<()> {
    // H1 projects onto the middle basis state, H2 onto the first; they
    // share an eigenbasis, so both SLDs commute with each other
    let spectra = CommutingSpectra::projector_pair();
    let w = WeightMatrix::new(1.0, 0.2, 1.0)?;

    let flat = QutritKet::normalized(
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
    )?;
    let f = commuting_qfim(&flat, &spectra);
    println!("QFIM at the flat probe:  [[{:.4}, {:.4}], [{:.4}, {:.4}]]", f[(0, 0)], f[(0, 1)], f[(1, 0)], f[(1, 1)]);
    println!("bound at the flat probe: {:.6}", qcrb_trace(&f, &w)?);

    let amps = commuting_optimal_amplitudes(&w);
    println!("\noptimal |c| amplitudes:  ({:.6}, {:.6}, {:.6})", amps[0], amps[1], amps[2]);
    let best = QutritKet::new(
        Complex64::new(amps[0], 0.0),
        Complex64::new(amps[1], 0.0),
        Complex64::new(amps[2], 0.0),
    )?;
    let f = commuting_qfim(&best, &spectra);
    println!("bound at the optimum:    {:.6}", qcrb_trace(&f, &w)?);

    // perturbing any amplitude pair raises the cost
    for eps in [0.05, -0.05] {
        let probe = QutritKet::normalized(
            Complex64::new(amps[0] + eps, 0.0),
            Complex64::new(amps[1] - eps, 0.0),
            Complex64::new(amps[2], 0.0),
        )?;
        let f = commuting_qfim(&probe, &spectra);
        println!("perturbed by {eps:+.2}:       {:.6}", qcrb_trace(&f, &w)?);
    }
    Ok(())
}
