//! Behaviour of the optimal qubit probe as both phases shrink: it tends to
//! a simple closed direction with third-order error in the phase scale.
//!
//! Run with: cargo run --example small_phases

use su2_metrology::encoding::eta_pair;
use su2_metrology::qubit::{optimal_qubit_probe, small_param_optimal_probe};
use su2_metrology::EncodingConfig;

fn main() -> su2_metrology::Result<()> {
    let theta = 1.1;
    println!("{:>10}  {:>12}  {:>22}", "scale", "angle (rad)", "probe (exact)");
    let mut last: Option<f64> = None;
    for k in 0..7 {
        let s = 0.1f64.powi(k);
        let cfg = EncodingConfig::planar(theta, 0.8 * s, 0.6 * s)?;
        let (exact, _) = optimal_qubit_probe(&eta_pair(&cfg))?;
        let approx = small_param_optimal_probe(&cfg);
        // angle between unit vectors, stable near zero
        let angle = exact.cross(&approx).norm().atan2(exact.dot(&approx));
        println!(
            "{s:>10.1e}  {angle:>12.3e}  ({:+.4}, {:+.4}, {:+.4})",
            exact.x, exact.y, exact.z
        );
        if let Some(prev) = last {
            let order = (prev / angle.max(f64::MIN_POSITIVE)).log10();
            println!("{:>10}  convergence order per decade: {order:.2}", "");
        }
        last = Some(angle);
    }
    println!("\nat phi -> 0 the probe leans toward +z and the in-plane");
    println!("component follows the rotation axis rotated by 90 degrees");
    Ok(())
}
