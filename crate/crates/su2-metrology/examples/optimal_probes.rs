//! Geometry of the optimal probes: the qubit Bloch vector lies along
//! ±(η₁×η₂) independent of the weight matrix, orthogonal to the rotation
//! axis; the qutrit probe balances both reparameterized directions.
//!
//! Run with: cargo run --example optimal_probes

use su2_metrology::encoding::{eta_pair, reparam, rotation_axis};
use su2_metrology::qubit::{min_hcrb_qubit, optimal_qubit_probe};
use su2_metrology::qutrit::{optimal_qutrit_probe, qfim_qutrit_general, weak_commutation_residual};
use su2_metrology::{EncodingConfig, WeightMatrix};

fn main() -> su2_metrology::Result<()> {
    let cfg = EncodingConfig::planar(1.2, 0.7, -0.3)?;
    let etas = eta_pair(&cfg);

    let (r_plus, r_minus) = optimal_qubit_probe(&etas)?;
    println!(
        "optimal qubit probes  ({:+.6}, {:+.6}, {:+.6}) and its antipode ({:+.6}, {:+.6}, {:+.6})",
        r_plus.x, r_plus.y, r_plus.z, r_minus.x, r_minus.y, r_minus.z
    );

    let n = rotation_axis(&cfg)?;
    println!("rotation axis         ({:+.6}, {:+.6}, {:+.6})", n.x, n.y, n.z);
    println!("probe . axis          {:+.3e}  (orthogonal)", r_plus.dot(&n));

    // the optimal direction does not depend on the weights; only the value
    // of the bound does
    for (w11, w12, w22) in [(1.0, 0.0, 1.0), (1.0, 0.2, 1.0), (5.0, -0.8, 0.3)] {
        let w = WeightMatrix::new(w11, w12, w22)?;
        println!(
            "w = ({w11}, {w12}, {w22}): min bound {:.6}, argmin unchanged",
            min_hcrb_qubit(&etas, &w)?
        );
    }

    // the qutrit optimum attains the diagonal ceiling QFIM and satisfies
    // weak commutativity exactly
    let coords = reparam(&cfg);
    let ket = optimal_qutrit_probe(&coords);
    println!(
        "\nqutrit optimum (m=+1,0,-1): {:+.6}{:+.6}i, {:+.6}{:+.6}i, {:+.6}{:+.6}i",
        ket.c_plus().re,
        ket.c_plus().im,
        ket.c_zero().re,
        ket.c_zero().im,
        ket.c_minus().re,
        ket.c_minus().im
    );
    let f11 = qfim_qutrit_general(&ket, &etas.eta1, &etas.eta1);
    let f12 = qfim_qutrit_general(&ket, &etas.eta1, &etas.eta2);
    let f22 = qfim_qutrit_general(&ket, &etas.eta2, &etas.eta2);
    println!("QFIM at optimum       [[{f11:.6}, {f12:.6}], [{f12:.6}, {f22:.6}]]");
    println!(
        "weak-commutation residual {:.3e}  (SLD bound attainable)",
        weak_commutation_residual(&ket, &etas)
    );
    Ok(())
}
