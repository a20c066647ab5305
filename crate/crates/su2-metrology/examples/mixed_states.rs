//! How depolarization degrades the bound: shrinking the Bloch vector by
//! |r| scales the QFIM by |r|², the Uhlmann element by |r|³, and splits the
//! Holevo bound into a 1/|r|² part and a 1/|r| part.
//!
//! Run with: cargo run --example mixed_states

use su2_metrology::encoding::eta_pair;
use su2_metrology::qubit::{hcrb_qubit, mixed_state_bounds, optimal_qubit_probe};
use su2_metrology::{EncodingConfig, WeightMatrix};

fn main() -> su2_metrology::Result<()> {
    let cfg = EncodingConfig::planar(1.3, 0.6, 0.4)?;
    let w = WeightMatrix::identity();
    let etas = eta_pair(&cfg);
    let (r_hat, _) = optimal_qubit_probe(&etas)?;
    let pure_bound = hcrb_qubit(&r_hat, &etas, &w)?;

    println!("pure-state bound along the optimal direction: {pure_bound:.6}");
    println!(
        "\n{:>6}  {:>12}  {:>12}  {:>12}  {:>10}",
        "|r|", "bound", "QFIM det", "Uhlmann", "bound/pure"
    );
    for len in [1.0, 0.9, 0.7, 0.5, 0.3, 0.1] {
        let b = mixed_state_bounds(&(r_hat * len), &etas, &w)?;
        println!(
            "{len:>6.2}  {:>12.4}  {:>12.6}  {:>12.6}  {:>10.3}",
            b.hcrb,
            b.qfim.determinant(),
            b.d12,
            b.hcrb / pure_bound
        );
    }

    // the |r| -> 0 blowup is quadratic in the leading term: the first Holevo
    // summand scales as 1/|r|^2, the trace-norm summand only as 1/|r|
    let a = mixed_state_bounds(&(r_hat * 0.01), &etas, &w)?.hcrb;
    let b = mixed_state_bounds(&(r_hat * 0.005), &etas, &w)?.hcrb;
    println!("\nbound ratio when halving |r| near zero: {:.3} (quadratic limit 4)", b / a);
    Ok(())
}
