//! Run the full numerical cross-check battery: finite differences vs the
//! closed-form effective Hamiltonians, SLD-based QFIM vs the analytic
//! expressions, two routes to the Holevo bound, grid searches vs the
//! optimal probes, and the small-phase and commuting special cases.
//!
//! Run with: cargo run --example verify

use su2_metrology::oracle::verify_all;

fn main() {
    // seed fixes the randomized suites; budget is the instance count per
    // suite (the grid suites scale it down internally)
    let reports = verify_all(7, 200);
    for report in &reports {
        println!("{}", report.line());
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("\n{} suites, {} failed", reports.len(), failed);
    if failed > 0 {
        std::process::exit(3);
    }
}
