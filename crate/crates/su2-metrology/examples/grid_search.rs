//! Brute-force probe search vs the closed forms: a Bloch-sphere grid for
//! the qubit and a refined chart grid for the qutrit both land on the
//! analytic optimum without ever undercutting it.
//!
//! Run with: cargo run --example grid_search

use su2_metrology::encoding::{eta_pair, reparam};
use su2_metrology::oracle::{grid_search_min_bound, GridProblem, GridProbe};
use su2_metrology::qubit::optimal_qubit_probe;
use su2_metrology::qutrit::optimal_qutrit_probe;
use su2_metrology::{EncodingConfig, WeightMatrix};

fn main() -> su2_metrology::Result<()> {
    let cfg = EncodingConfig::planar(1.9, 0.35, 0.55)?;
    let w = WeightMatrix::new(1.0, 0.2, 1.0)?;

    let outcome = grid_search_min_bound(GridProblem::QubitHcrb, &cfg, &w, 120);
    println!("qubit grid search:  {}", outcome.describe());
    println!("margin over closed form: {:+.3e} (never negative)", outcome.margin);
    if let Some(GridProbe::Bloch(r)) = &outcome.probe {
        let (r_opt, _) = optimal_qubit_probe(&eta_pair(&cfg))?;
        let angle = r.cross(&r_opt).norm().atan2(r.dot(&r_opt));
        println!("argmin vs analytic probe: {angle:.3e} rad apart");
    }

    let outcome = grid_search_min_bound(GridProblem::QutritQcrb, &cfg, &w, 25);
    println!("\nqutrit grid search: {}", outcome.describe());
    println!("margin over closed form: {:+.3e}", outcome.margin);
    if let Some(GridProbe::Ket(ket)) = &outcome.probe {
        let fid = ket.fidelity(&optimal_qutrit_probe(&reparam(&cfg)));
        println!("argmin fidelity with analytic probe: {fid:.6}");
    }

    // at theta = 0 the encodings commute and no probe separates the phases
    let degenerate = EncodingConfig::planar(0.0, 0.35, 0.55)?;
    let outcome = grid_search_min_bound(GridProblem::QubitHcrb, &degenerate, &w, 40);
    println!("\ncollinear axes: {}", outcome.describe());
    Ok(())
}
