//! Command-line front end.
//!
//! Subcommands: `bound` (probe-optimized or fixed-probe bound at one
//! configuration), `scan` (θ-sweep as CSV), `optimal-probe` (probe state
//! only), `verify` (numerical suites). Exit codes: 0 success, 1 usage or
//! configuration error, 2 infeasible encoding, 3 verification failure.

use std::fs::File;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::encoding::{eta_pair, reparam, EncodingConfig};
use crate::error::{Error, Result};
use crate::oracle::verify_all;
use crate::qubit::{
    hcrb_qubit, min_hcrb_qubit, mixed_state_bounds, optimal_qubit_probe, WeightMatrix,
};
use crate::qutrit::{min_qcrb_qutrit, optimal_qutrit_probe, qcrb_trace, qfim_qutrit_general};
use crate::scan::{run_scan, write_csv, ScanSpec};
use crate::su2::{QutritKet, V3};
use crate::Model;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Qubit,
    Qutrit,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Qubit => Model::Qubit,
            ModelArg::Qutrit => Model::Qutrit,
        }
    }
}

fn parse_weight(s: &str) -> std::result::Result<WeightMatrix, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected w11,w12,w22 (three numbers), got `{s}`"));
    }
    let mut vals = [0.0f64; 3];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p.trim().parse().map_err(|_| format!("invalid number `{p}` in weight"))?;
    }
    WeightMatrix::new(vals[0], vals[1], vals[2]).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(
    name = "su2-metrology",
    version,
    about = "Optimal probes and attainable precision bounds for joint two-phase estimation under SU(2) encodings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum attainable bound (Holevo for qubit, trace bound for qutrit)
    /// at one configuration, or the bound of a supplied probe
    Bound(BoundArgs),
    /// Sweep the encoding-axis angle theta and write the bound curve as CSV
    Scan(ScanArgs),
    /// Optimal probe state at one configuration
    OptimalProbe(ConfigArgs),
    /// Run the numerical verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConfigArgs {
    /// Probe dimension
    #[arg(long, value_enum)]
    model: ModelArg,
    /// First phase (radians)
    #[arg(long, allow_negative_numbers = true)]
    phi1: f64,
    /// Second phase (radians)
    #[arg(long, allow_negative_numbers = true)]
    phi2: f64,
    /// Angle between the two encoding axes (radians, in [0, pi])
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Weight matrix upper triangle w11,w12,w22
    #[arg(long, value_parser = parse_weight, default_value = "1,0.2,1", allow_hyphen_values = true)]
    w: WeightMatrix,
    /// Evaluate this probe instead of the optimum: 3 Bloch components
    /// (qubit; norm < 1 for a mixed probe) or 6 numbers re,im per amplitude
    /// in m = +1, 0, -1 order (qutrit)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    probe: Option<Vec<f64>>,
}

#[derive(Args)]
struct ScanArgs {
    /// Probe dimension
    #[arg(long, value_enum)]
    model: ModelArg,
    /// First phase (radians)
    #[arg(long, allow_negative_numbers = true)]
    phi1: f64,
    /// Second phase (radians)
    #[arg(long, allow_negative_numbers = true)]
    phi2: f64,
    /// Lower end of the theta grid (radians)
    #[arg(long, allow_negative_numbers = true)]
    theta_min: f64,
    /// Upper end of the theta grid (radians)
    #[arg(long, allow_negative_numbers = true)]
    theta_max: f64,
    /// Number of grid points (endpoints included)
    #[arg(long)]
    steps: usize,
    /// Weight matrix upper triangle w11,w12,w22
    #[arg(long, value_parser = parse_weight, default_value = "1,0.2,1", allow_hyphen_values = true)]
    w: WeightMatrix,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Instance count per randomized suite; 0 skips all suites
    #[arg(long, default_value_t = 500)]
    budget: usize,
    /// Also write the report as JSON records
    #[arg(long)]
    json: Option<PathBuf>,
}

/// Parses `std::env::args` and runs one subcommand; returns the process
/// exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Bound(args) => cmd_bound(args),
        Command::Scan(args) => cmd_scan(args),
        Command::OptimalProbe(args) => cmd_optimal_probe(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NoOptimalProbe
        | Error::SingularQfim
        | Error::SingularReparam { .. }
        | Error::DegenerateRotation(_) => 2,
        _ => 1,
    }
}

fn fail(e: Error) -> i32 {
    eprintln!("{e}");
    exit_code_for(&e)
}

fn config_header(model: Model, cfg: &EncodingConfig) -> String {
    format!(
        "model {model}\ntheta {:.16e}\nphi1 {:.16e}\nphi2 {:.16e}\n",
        cfg.theta(),
        cfg.phi1,
        cfg.phi2
    )
}

fn bloch_line(r: &V3) -> String {
    format!("probe bloch {:.16e} {:.16e} {:.16e}\n", r.x, r.y, r.z)
}

fn amplitude_line(ket: &QutritKet) -> String {
    let (p, z, m) = (ket.c_plus(), ket.c_zero(), ket.c_minus());
    format!(
        "probe amplitudes m=+1 {:.16e} {:.16e} m=0 {:.16e} {:.16e} m=-1 {:.16e} {:.16e}\n",
        p.re, p.im, z.re, z.im, m.re, m.im
    )
}

fn bound_report(args: &BoundArgs) -> Result<String> {
    let model: Model = args.config.model.into();
    let cfg = EncodingConfig::planar(args.config.theta, args.config.phi1, args.config.phi2)?;
    let mut out = config_header(model, &cfg);
    let (bound, probe_line) = match (&args.probe, model) {
        (None, Model::Qubit) => {
            let etas = eta_pair(&cfg);
            let (r_opt, _) = optimal_qubit_probe(&etas)?;
            (min_hcrb_qubit(&etas, &args.w)?, bloch_line(&r_opt))
        }
        (None, Model::Qutrit) => {
            let bound = min_qcrb_qutrit(&cfg, &args.w)?;
            (bound, amplitude_line(&optimal_qutrit_probe(&reparam(&cfg))))
        }
        (Some(p), Model::Qubit) => {
            if p.len() != 3 {
                eprintln!("--probe takes 3 Bloch components for the qubit model");
                return Err(Error::InvalidBloch(p.len() as f64));
            }
            let r = V3::new(p[0], p[1], p[2]);
            let etas = eta_pair(&cfg);
            let bound = if (r.norm() - 1.0).abs() <= 1e-10 {
                hcrb_qubit(&r, &etas, &args.w)?
            } else {
                mixed_state_bounds(&r, &etas, &args.w)?.hcrb
            };
            (bound, bloch_line(&r))
        }
        (Some(p), Model::Qutrit) => {
            if p.len() != 6 {
                eprintln!("--probe takes 6 numbers (re,im per amplitude) for the qutrit model");
                return Err(Error::InvalidKet(p.len() as f64));
            }
            let ket = QutritKet::new(
                num_complex::Complex64::new(p[0], p[1]),
                num_complex::Complex64::new(p[2], p[3]),
                num_complex::Complex64::new(p[4], p[5]),
            )?;
            let etas = eta_pair(&cfg);
            let f = nalgebra::Matrix2::new(
                qfim_qutrit_general(&ket, &etas.eta1, &etas.eta1),
                qfim_qutrit_general(&ket, &etas.eta1, &etas.eta2),
                qfim_qutrit_general(&ket, &etas.eta1, &etas.eta2),
                qfim_qutrit_general(&ket, &etas.eta2, &etas.eta2),
            );
            (qcrb_trace(&f, &args.w)?, amplitude_line(&ket))
        }
    };
    out.push_str(&format!("bound {bound:.16e}\nfeasible 1\n"));
    out.push_str(&probe_line);
    Ok(out)
}

fn cmd_bound(args: BoundArgs) -> i32 {
    match bound_report(&args) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => fail(e),
    }
}

fn probe_report(args: &ConfigArgs) -> Result<String> {
    let model: Model = args.model.into();
    let cfg = EncodingConfig::planar(args.theta, args.phi1, args.phi2)?;
    let mut out = config_header(model, &cfg);
    match model {
        Model::Qubit => {
            let (r_opt, _) = optimal_qubit_probe(&eta_pair(&cfg))?;
            out.push_str(&bloch_line(&r_opt));
            out.push_str("note antipodal probe equally optimal\n");
        }
        Model::Qutrit => {
            // the closed-form probe exists only where the (B, phi) chart does
            crate::encoding::jacobian(&cfg)?;
            out.push_str(&amplitude_line(&optimal_qutrit_probe(&reparam(&cfg))));
        }
    }
    Ok(out)
}

fn cmd_optimal_probe(args: ConfigArgs) -> i32 {
    match probe_report(&args) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => fail(e),
    }
}

fn cmd_scan(args: ScanArgs) -> i32 {
    let spec = match ScanSpec::new(
        args.model.into(),
        args.theta_min,
        args.theta_max,
        args.steps,
        args.phi1,
        args.phi2,
        args.w,
    ) {
        Ok(spec) => spec,
        Err(e) => return fail(e),
    };
    let rows = run_scan(&spec);
    let mut file = match File::create(&args.out) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("cannot write {}: {e}", args.out.display());
            return 1;
        }
    };
    if let Err(e) = write_csv(&rows, &mut file) {
        eprintln!("cannot write {}: {e}", args.out.display());
        return 1;
    }
    println!("wrote {} rows to {}", rows.len(), args.out.display());
    0
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if args.budget == 0 {
        eprintln!("warning: budget 0, no suites run");
    }
    let reports = verify_all(args.seed, args.budget);
    for report in &reports {
        println!("{}", report.line());
    }
    let failures = reports.iter().filter(|r| !r.pass).count();
    if !reports.is_empty() {
        println!("{} suites, {} failed", reports.len(), failures);
    }
    if let Some(path) = &args.json {
        let json = match serde_json::to_string_pretty(&reports) {
            Ok(j) => j,
            Err(e) => {
                eprintln!("cannot serialize report: {e}");
                return 1;
            }
        };
        if let Err(e) = std::fs::write(path, json + "\n") {
            eprintln!("cannot write {}: {e}", path.display());
            return 1;
        }
    }
    if failures > 0 {
        3
    } else {
        0
    }
}
