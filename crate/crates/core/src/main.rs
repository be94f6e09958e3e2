//! Command-line front end for the dimer library.
//!
//! Units: ħ = 1, energies in units of ε₁, time in ħ/ε₁. Output CSV is
//! byte-deterministic: fixed column order, 17 significant digits, `\n`
//! line endings. A gnuplot-compatible plot script is written next to each
//! CSV.

use clap::{Parser, Subcommand, ValueEnum};
use dimer::config;
use dimer::dynamics::{
    self, find_orthogonality_time, survival_amplitude, EnergyDistribution, ORTHOGONALITY_TOL,
};
use dimer::entanglement::concurrence;
use dimer::error::DimerError;
use dimer::families::{characteristic_time, family_distribution, FamilyKind};
use dimer::hamiltonian::{build_extended_matrix, build_tunneling_matrix, HamiltonianParams};
use dimer::simplex::sample_simplex;
use dimer::spectral::SpectralDecomposition;
use dimer::verify;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dimer",
    about = "Extended two-site Bose-Hubbard dimer: spectra, dynamics, mode entanglement",
    long_about = "Simulates two indistinguishable bosons on two sites under single- and \
two-particle tunneling. Unit convention: hbar = 1, energies in units of eps1, time in \
hbar/eps1."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fast,
    Slow,
    Ew,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Fast => FamilyKind::Fast,
            FamilyArg::Slow => FamilyKind::Slow,
            FamilyArg::Ew => FamilyKind::EquallyWeighted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VaryArg {
    J,
    K,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues, transition frequencies and phi over a parameter sweep
    Spectrum {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Amplitude to vary (the other is fixed by the config)
        #[arg(long, value_enum)]
        vary: Option<VaryArg>,
        /// Sweep values: start,stop,count,log|lin
        #[arg(long)]
        values: Option<String>,
    },
    /// Time evolution: populations, concurrence, occupation statistics
    Evolve {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Initial state family (overrides r1..r3 from the config)
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long, default_value_t = 400)]
        n_points: usize,
    },
    /// Barycentric grid over the 2-simplex with region and concurrence
    Simplex {
        #[arg(long)]
        out: PathBuf,
        /// Grid resolution
        #[arg(long, default_value_t = 100)]
        n_points: usize,
    },
    /// Concurrence time series per tunneling amplitude for a state family
    FamilySweep {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum)]
        vary: VaryArg,
        /// Sweep values: start,stop,count,log|lin
        #[arg(long)]
        values: String,
        #[arg(long, default_value_t = 400)]
        n_points: usize,
    },
    /// Run the self-verification suite
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, DimerError> {
    match cmd {
        Command::Spectrum {
            config,
            out,
            vary,
            values,
        } => {
            let params = load_params(config.as_deref())?;
            cmd_spectrum(&params, vary, values.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Evolve {
            config,
            out,
            family,
            t_max,
            n_points,
        } => {
            if t_max <= 0.0 || n_points < 2 {
                return Err(DimerError::Config(
                    "need t_max > 0 and n_points >= 2".into(),
                ));
            }
            let map = load_map(config.as_deref())?;
            let params = config::params_from_map(&map);
            let m = build_extended_matrix(&params);
            let decomp = SpectralDecomposition::compute(&m)?;
            let dist = match family {
                Some(f) => family_distribution(f.into()),
                None => config::distribution_from_map(&map)?.ok_or_else(|| {
                    DimerError::Config("no --family and no r1..r3 in the config".into())
                })?,
            };
            cmd_evolve(&dist, &decomp, t_max, n_points, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Simplex { out, n_points } => {
            if n_points < 2 {
                return Err(DimerError::Config("need n_points >= 2".into()));
            }
            cmd_simplex(n_points, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::FamilySweep {
            config,
            out,
            family,
            vary,
            values,
            n_points,
        } => {
            if n_points < 2 {
                return Err(DimerError::Config("need n_points >= 2".into()));
            }
            let params = load_params(config.as_deref())?;
            let amps = parse_values(&values)?;
            cmd_family_sweep(&params, family.into(), vary, &amps, n_points, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let mut all_ok = true;
            for group in verify::run_all() {
                let tag = if group.passed { "PASS" } else { "FAIL" };
                println!("{tag} {}: {}", group.name, group.detail);
                all_ok &= group.passed;
            }
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn load_map(path: Option<&Path>) -> Result<std::collections::BTreeMap<String, f64>, DimerError> {
    match path {
        Some(p) => config::load_config(p),
        None => Ok(Default::default()),
    }
}

fn load_params(path: Option<&Path>) -> Result<HamiltonianParams, DimerError> {
    Ok(config::params_from_map(&load_map(path)?))
}

/// 17 significant digits, locale-independent.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_output(path: &Path, csv: &str, plot: &str) -> Result<(), DimerError> {
    std::fs::write(path, csv)
        .map_err(|e| DimerError::Config(format!("{}: {e}", path.display())))?;
    let script_path = path.with_extension("gp");
    std::fs::write(&script_path, plot)
        .map_err(|e| DimerError::Config(format!("{}: {e}", script_path.display())))?;
    Ok(())
}

fn parse_values(spec: &str) -> Result<Vec<f64>, DimerError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 4 {
        return Err(DimerError::Config(format!(
            "expected start,stop,count,log|lin, got `{spec}`"
        )));
    }
    let start: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| DimerError::Config(format!("bad start `{}`", parts[0])))?;
    let stop: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| DimerError::Config(format!("bad stop `{}`", parts[1])))?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| DimerError::Config(format!("bad count `{}`", parts[2])))?;
    if start <= 0.0 || stop <= start || count < 1 {
        return Err(DimerError::Config(
            "need 0 < start < stop and count >= 1".into(),
        ));
    }
    let vals = match parts[3].trim() {
        "log" => (0..count)
            .map(|i| {
                if count == 1 {
                    start
                } else {
                    (start.ln() + (stop.ln() - start.ln()) * i as f64 / (count as f64 - 1.0)).exp()
                }
            })
            .collect(),
        "lin" => (0..count)
            .map(|i| {
                if count == 1 {
                    start
                } else {
                    start + (stop - start) * i as f64 / (count as f64 - 1.0)
                }
            })
            .collect(),
        other => {
            return Err(DimerError::Config(format!(
                "spacing must be log or lin, got `{other}`"
            )))
        }
    };
    Ok(vals)
}

fn cmd_spectrum(
    params: &HamiltonianParams,
    vary: Option<VaryArg>,
    values: Option<&str>,
    out: &Path,
) -> Result<(), DimerError> {
    let points: Vec<(f64, f64)> = match (vary, values) {
        (Some(v), Some(spec)) => parse_values(spec)?
            .into_iter()
            .map(|a| match v {
                VaryArg::J => (a, params.k),
                VaryArg::K => (params.j, a),
            })
            .collect(),
        (None, None) => vec![(params.j, params.k)],
        _ => {
            return Err(DimerError::Config(
                "--vary and --values must be given together".into(),
            ))
        }
    };
    let mut csv = String::from("J,K,E1,E2,E3,omega21,omega32,omega31,phi,degenerate\n");
    for (j, k) in points {
        let p = HamiltonianParams { j, k, ..*params };
        let m = build_extended_matrix(&p);
        match SpectralDecomposition::compute(&m) {
            Ok(d) => {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{},{},0",
                    fmt(j),
                    fmt(k),
                    fmt(d.energies[0]),
                    fmt(d.energies[1]),
                    fmt(d.energies[2]),
                    fmt(d.freqs.omega21),
                    fmt(d.freqs.omega32),
                    fmt(d.freqs.omega31),
                    fmt(d.phi),
                );
            }
            Err(DimerError::DegenerateSpectrum { .. }) => {
                let _ = writeln!(csv, "{},{},,,,,,,,1", fmt(j), fmt(k));
            }
            Err(e) => return Err(e),
        }
    }
    let plot = plot_script(
        out,
        "spectrum",
        "set datafile separator ','\nset logscale x\nset xlabel 'J'\nset ylabel 'E'\n\
plot csvfile using 1:3 with lines title 'E1', \\\n     csvfile using 1:4 with lines title 'E2', \\\n     csvfile using 1:5 with lines title 'E3'\n",
    );
    write_output(out, &csv, &plot)
}

fn cmd_evolve(
    dist: &EnergyDistribution,
    decomp: &SpectralDecomposition,
    t_max: f64,
    n_points: usize,
    out: &Path,
) -> Result<(), DimerError> {
    let tau = find_orthogonality_time(dist, &decomp.energies, t_max, ORTHOGONALITY_TOL);
    let mut csv = String::from("t,t_over_tau,R0,R1,R2,C,mean_n1,var_n1,|survival|\n");
    for i in 0..n_points {
        let t = t_max * i as f64 / (n_points as f64 - 1.0);
        let fock = dynamics::evolve_to_fock(dist, decomp, t);
        let pops = dynamics::populations(&fock);
        let c = concurrence(&pops);
        let (mean, var) = dynamics::mode_occupation_stats(&fock);
        let surv = survival_amplitude(dist, &decomp.energies, t).norm();
        let t_over_tau = tau.map(|tau| fmt(t / tau)).unwrap_or_default();
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{}",
            fmt(t),
            t_over_tau,
            fmt(pops.0[0]),
            fmt(pops.0[1]),
            fmt(pops.0[2]),
            fmt(c),
            fmt(mean),
            fmt(var),
            fmt(surv),
        );
    }
    let plot = plot_script(
        out,
        "evolve",
        "set datafile separator ','\nset xlabel 't'\nset ylabel 'C'\n\
plot csvfile using 1:6 with lines title 'C(t)'\n",
    );
    write_output(out, &csv, &plot)
}

fn cmd_simplex(n: usize, out: &Path) -> Result<(), DimerError> {
    let mut csv = String::from("r1,r2,r3,region,concurrence\n");
    for p in sample_simplex(n) {
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            fmt(p.r[0]),
            fmt(p.r[1]),
            fmt(p.r[2]),
            p.region.as_str(),
            fmt(p.concurrence),
        );
    }
    let plot = plot_script(
        out,
        "simplex",
        "set datafile separator ','\nset xlabel 'r1'\nset ylabel 'r2'\n\
plot csvfile using 1:2:5 with points palette title 'C'\n",
    );
    write_output(out, &csv, &plot)
}

fn cmd_family_sweep(
    params: &HamiltonianParams,
    family: FamilyKind,
    vary: VaryArg,
    amps: &[f64],
    n_points: usize,
    out: &Path,
) -> Result<(), DimerError> {
    let span = match family {
        FamilyKind::EquallyWeighted => 3.0,
        _ => 2.0,
    };
    let dist = family_distribution(family);
    let mut csv = String::from("amp,t_over_tau,C\n");
    for &amp in amps {
        let (j, k) = match vary {
            VaryArg::J => (amp, params.k),
            VaryArg::K => (params.j, amp),
        };
        let m = build_tunneling_matrix(params.eps1, j, k);
        let decomp = SpectralDecomposition::compute(&m)?;
        let tau = characteristic_time(family, &decomp.freqs);
        for i in 0..n_points {
            let u = span * i as f64 / (n_points as f64 - 1.0);
            let fock = dynamics::evolve_to_fock(&dist, &decomp, u * tau);
            let c = concurrence(&dynamics::populations(&fock));
            let _ = writeln!(csv, "{},{},{}", fmt(amp), fmt(u), fmt(c));
        }
    }
    let plot = plot_script(
        out,
        "family-sweep",
        "set datafile separator ','\nset xlabel 't/tau'\nset ylabel 'C'\n\
plot csvfile using 2:3 with points pt 7 ps 0.3 title 'C(t/tau)'\n",
    );
    write_output(out, &csv, &plot)
}

fn plot_script(csv_path: &Path, title: &str, body: &str) -> String {
    format!(
        "# gnuplot script for {title}\ncsvfile = '{}'\nset key top right\nset title '{title}'\n{body}",
        csv_path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    )
}
