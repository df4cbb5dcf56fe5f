//! `razavy` — algebraic spectra of the double well V(x) = (ζ cosh 2x − M)²
//! and its periodic partner U(x) = −(ζ cos 2x − M)², with numerical
//! cross-checks. Every subcommand writes exactly one JSON or CSV artifact
//! (byte-deterministic for identical arguments) and a short summary on
//! standard output. Exit codes: 0 success, 1 usage or validation error,
//! 2 a mathematical check failed or a computation refused.

mod artifact;
mod checks;
mod options;

use std::path::Path;

use clap::{Args, Parser, Subcommand};

use artifact::{
    BandsArtifact, EdgeRecord, MomentsArtifact, PolyArtifact, PolyRecord, SpectrumArtifact,
    SweepArtifact, SweepRow, VerifyArtifact, WavefunctionArtifact,
};
use checks::OracleOverrides;
use options::{resolve, CliError, CommonArgs, Format};

use razavy_core::bands::{classify, fig_sweep, BandRow};
use razavy_core::spectrum::{algebraic_energies, moment_functional};
use razavy_core::wavefunc::{period_grid, symmetric_grid, TrigForm};
use razavy_core::{EigenfunctionSeries, Error, PolyFamilyHandle};

#[derive(Parser)]
#[command(
    name = "razavy",
    version,
    about = "Algebraic spectra of the hyperbolic double well (zeta*cosh(2x) - M)^2 \
             and its periodic partner, with independent numerical cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the monic recurrence polynomials P_0..P_k of a family
    Poly(PolyCmd),
    /// Emit the algebraic energies (critical-polynomial roots) of a family
    Spectrum(SimpleCmd),
    /// Emit the moment-functional nodes and weights of a family
    Moments(SimpleCmd),
    /// Sample one algebraic eigenfunction on a grid
    Wavefunction(WavefunctionCmd),
    /// Match the algebraic energies to band edges and the gaps they bound
    Bands(SimpleCmd),
    /// Re-check every property at one (M, zeta); exits 2 on any failure
    Verify(VerifyCmd),
    /// Tabulate band edges over a zeta grid with algebraic/numeric edge tags
    Sweep(SweepCmd),
}

#[derive(Args)]
struct SimpleCmd {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct PolyCmd {
    #[command(flatten)]
    common: CommonArgs,
    /// Highest polynomial index (default: the family's critical index)
    #[arg(long, value_name = "INT")]
    k: Option<usize>,
}

#[derive(Args)]
struct WavefunctionCmd {
    #[command(flatten)]
    common: CommonArgs,
    /// Level index within the family's algebraic spectrum, lowest first
    #[arg(long, default_value_t = 0, value_name = "INT")]
    level: usize,
    /// Half-width of the sampling window (hyperbolic problem only)
    #[arg(long, default_value_t = 2.0, value_name = "REAL")]
    half_width: f64,
    /// Number of sample points
    #[arg(long, default_value_t = 1024, value_name = "INT")]
    points: usize,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    common: CommonArgs,
    /// Override the finite-difference box half-width L
    #[arg(long, value_name = "REAL")]
    fd_half_width: Option<f64>,
    /// Override the finite-difference interior point count N
    #[arg(long, value_name = "INT")]
    fd_points: Option<usize>,
    /// Override the plane-wave basis cut K
    #[arg(long, value_name = "INT")]
    basis: Option<usize>,
}

#[derive(Args)]
struct SweepCmd {
    #[command(flatten)]
    common: CommonArgs,
    /// Smallest zeta of the sweep grid
    #[arg(long, default_value_t = 0.1, value_name = "REAL")]
    zeta_min: f64,
    /// Largest zeta of the sweep grid
    #[arg(long, default_value_t = 3.0, value_name = "REAL")]
    zeta_max: f64,
    /// Number of uniformly spaced zeta points
    #[arg(long, default_value_t = 30, value_name = "INT")]
    steps: usize,
    /// Number of bands per zeta point
    #[arg(long, default_value_t = 5, value_name = "INT")]
    bands: usize,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version go to stdout with success; usage errors exit 1
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Poly(cmd) => cmd_poly(&cmd),
        Command::Spectrum(cmd) => cmd_spectrum(&cmd),
        Command::Moments(cmd) => cmd_moments(&cmd),
        Command::Wavefunction(cmd) => cmd_wavefunction(&cmd),
        Command::Bands(cmd) => cmd_bands(&cmd),
        Command::Verify(cmd) => return cmd_verify(&cmd),
        Command::Sweep(cmd) => cmd_sweep(&cmd),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn write_artifact(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn problem_name(periodic: bool) -> &'static str {
    if periodic {
        "periodic"
    } else {
        "hyperbolic"
    }
}

fn cmd_poly(cmd: &PolyCmd) -> Result<(), CliError> {
    let r = resolve(&cmd.common, "poly")?;
    let p = r.params()?;
    let spec = r.family_spec()?;
    let handle = PolyFamilyHandle::new(spec);
    let k_max = cmd.k.unwrap_or_else(|| spec.critical_index());
    let mut polynomials = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        polynomials.push(PolyRecord { k, coefficients: handle.poly_coeffs(k)?.coeffs });
    }
    let art = PolyArtifact {
        command: "poly",
        m: p.m_int(),
        zeta: p.zeta(),
        family: r.family_label(),
        periodic: r.periodic,
        polynomials,
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "P_0..P_{k_max} of the {} {} family (M={}, zeta={}); wrote {}",
        problem_name(r.periodic),
        r.family_label(),
        p.m_int(),
        p.zeta(),
        r.output.display()
    );
    Ok(())
}

fn cmd_spectrum(cmd: &SimpleCmd) -> Result<(), CliError> {
    let r = resolve(&cmd.common, "spectrum")?;
    let p = r.params()?;
    let spec = r.family_spec()?;
    let energies = algebraic_energies(&PolyFamilyHandle::new(spec))?.energies;
    let art = SpectrumArtifact {
        command: "spectrum",
        m: p.m_int(),
        zeta: p.zeta(),
        family: r.family_label(),
        periodic: r.periodic,
        energies,
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "{} algebraic energies of the {} {} family (M={}, zeta={}): {:?}; wrote {}",
        art.energies.len(),
        problem_name(r.periodic),
        r.family_label(),
        p.m_int(),
        p.zeta(),
        art.energies,
        r.output.display()
    );
    Ok(())
}

fn cmd_moments(cmd: &SimpleCmd) -> Result<(), CliError> {
    let r = resolve(&cmd.common, "moments")?;
    let p = r.params()?;
    let spec = r.family_spec()?;
    let mf = moment_functional(&PolyFamilyHandle::new(spec))?;
    let negative = mf.weights.iter().filter(|&&w| w < 0.0).count();
    let art = MomentsArtifact {
        command: "moments",
        m: p.m_int(),
        zeta: p.zeta(),
        family: r.family_label(),
        periodic: r.periodic,
        nodes: mf.nodes,
        weights: mf.weights,
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "moment functional of the {} {} family (M={}, zeta={}): {} nodes, {} negative weight(s); wrote {}",
        problem_name(r.periodic),
        r.family_label(),
        p.m_int(),
        p.zeta(),
        art.nodes.len(),
        negative,
        r.output.display()
    );
    Ok(())
}

fn cmd_wavefunction(cmd: &WavefunctionCmd) -> Result<(), CliError> {
    let r = resolve(&cmd.common, "wavefunction")?;
    let p = r.params()?;
    let spec = r.family_spec()?;
    let energies = algebraic_energies(&PolyFamilyHandle::new(spec))?.energies;
    let energy = *energies.get(cmd.level).ok_or_else(|| {
        CliError::Usage(format!(
            "level {} out of range: this family has {} algebraic level(s)",
            cmd.level,
            energies.len()
        ))
    })?;
    if cmd.points < 16 {
        return Err(CliError::Usage("need at least 16 sample points".into()));
    }
    let series = if spec.kind.is_periodic() {
        if spec.kind.is_hat() {
            let form = TrigForm::from_branch(spec.sigma, spec.eta).ok_or_else(|| {
                CliError::Usage("this hat branch has no real trigonometric shape".into())
            })?;
            EigenfunctionSeries::periodic_real(spec, energy, form)?
        } else {
            EigenfunctionSeries::periodic_complex(spec, energy)?
        }
    } else {
        EigenfunctionSeries::hyperbolic(spec, energy)?
    };
    let xs = if spec.kind.is_periodic() {
        period_grid(cmd.points)
    } else {
        if !(cmd.half_width > 0.0) || !cmd.half_width.is_finite() {
            return Err(CliError::Usage("half-width must be positive".into()));
        }
        symmetric_grid(cmd.half_width, cmd.points)
    };
    let f = series.sample(&xs)?;
    let mut re = Vec::with_capacity(f.len());
    let mut im = Vec::with_capacity(f.len());
    for i in 0..f.len() {
        let c = f.complex_value(i);
        re.push(c.re);
        im.push(c.im);
    }
    let art = WavefunctionArtifact {
        command: "wavefunction",
        m: p.m_int(),
        zeta: p.zeta(),
        family: r.family_label(),
        periodic: r.periodic,
        level: cmd.level,
        energy,
        realization: format!("{:?}", series.realization),
        xs: xs.clone(),
        re,
        im,
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "level {} of the {} {} family (M={}, zeta={}) at E={}: {} samples ({:?}); wrote {}",
        cmd.level,
        problem_name(r.periodic),
        r.family_label(),
        p.m_int(),
        p.zeta(),
        energy,
        xs.len(),
        series.realization,
        r.output.display()
    );
    Ok(())
}

fn cmd_bands(cmd: &SimpleCmd) -> Result<(), CliError> {
    let r = resolve(&cmd.common, "bands")?;
    let p = r.params()?;
    let c = classify(p)?;
    let edges: Vec<EdgeRecord> = c
        .matched_edges
        .iter()
        .map(|e| EdgeRecord {
            edge_label: e.edge_label.clone(),
            oracle_value: e.oracle_value,
            algebraic_value: e.algebraic_value,
            abs_error: e.abs_error,
        })
        .collect();
    let art = BandsArtifact {
        command: "bands",
        m: c.m_int,
        zeta: c.zeta,
        gap_indices: c.gap_indices.clone(),
        includes_ground_state: c.includes_ground_state,
        edges,
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "M={}, zeta={}: {} algebraic energies match band edges; bounded gaps {:?}{}; wrote {}",
        c.m_int,
        c.zeta,
        art.edges.len(),
        c.gap_indices,
        if c.includes_ground_state { " plus the ground band bottom" } else { "" },
        r.output.display()
    );
    Ok(())
}

fn cmd_verify(cmd: &VerifyCmd) -> i32 {
    match verify_inner(cmd) {
        Ok(passed) => {
            if passed {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn verify_inner(cmd: &VerifyCmd) -> Result<bool, CliError> {
    let r = resolve(&cmd.common, "verify")?;
    let p = r.params()?;
    let ov = OracleOverrides {
        fd_half_width: cmd.fd_half_width,
        fd_points: cmd.fd_points,
        basis: cmd.basis,
    };
    let records = checks::run_suite(p, &ov);
    for c in &records {
        println!("{} - {} ({})", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    let passed_count = records.iter().filter(|c| c.passed).count();
    let total = records.len();
    let passed = passed_count == total;
    let art = VerifyArtifact {
        command: "verify",
        m: p.m_int(),
        zeta: p.zeta(),
        passed,
        checks: records,
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "M={}, zeta={}: {passed_count}/{total} checks passed; wrote {}",
        p.m_int(),
        p.zeta(),
        r.output.display()
    );
    Ok(passed)
}

/// Run the sweep, splitting the ζ grid over `jobs` worker threads. Rows are
/// concatenated in grid order, so the output does not depend on `jobs`.
fn sweep_rows(m: u32, grid: &[f64], bands: usize, jobs: usize) -> Result<Vec<BandRow>, Error> {
    if jobs <= 1 || grid.len() <= 1 {
        return fig_sweep(m, grid, bands);
    }
    let jobs = jobs.min(grid.len());
    let chunk = grid.len().div_ceil(jobs);
    let mut results: Vec<Result<Vec<BandRow>, Error>> = Vec::new();
    std::thread::scope(|scope| {
        let workers: Vec<_> = grid
            .chunks(chunk)
            .map(|sub| scope.spawn(move || fig_sweep(m, sub, bands)))
            .collect();
        for w in workers {
            results.push(w.join().expect("sweep worker panicked"));
        }
    });
    let mut rows = Vec::with_capacity(grid.len() * bands);
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

fn cmd_sweep(cmd: &SweepCmd) -> Result<(), CliError> {
    let r = resolve(&cmd.common, "sweep")?;
    if !(cmd.zeta_min > 0.0) || !cmd.zeta_min.is_finite() || !cmd.zeta_max.is_finite() {
        return Err(CliError::Usage("zeta grid bounds must be positive and finite".into()));
    }
    if cmd.steps == 0 {
        return Err(CliError::Usage("steps must be at least 1".into()));
    }
    if cmd.steps > 1 && cmd.zeta_max <= cmd.zeta_min {
        return Err(CliError::Usage("zeta-max must exceed zeta-min".into()));
    }
    let grid: Vec<f64> = if cmd.steps == 1 {
        vec![cmd.zeta_min]
    } else {
        (0..cmd.steps)
            .map(|i| {
                cmd.zeta_min
                    + (cmd.zeta_max - cmd.zeta_min) * i as f64 / (cmd.steps - 1) as f64
            })
            .collect()
    };
    let rows = sweep_rows(r.m, &grid, cmd.bands, r.jobs)?;
    let art = SweepArtifact {
        command: "sweep",
        m: r.m,
        zeta_min: cmd.zeta_min,
        zeta_max: cmd.zeta_max,
        steps: cmd.steps,
        bands: cmd.bands,
        rows: rows
            .into_iter()
            .map(|b| SweepRow {
                zeta: b.zeta,
                band: b.band_index,
                edge_lo: b.edge_lo,
                edge_hi: b.edge_hi,
                lo_tag: b.lo_tag,
                hi_tag: b.hi_tag,
            })
            .collect(),
    };
    let bytes = match r.format {
        Format::Json => artifact::json_bytes(&art),
        Format::Csv => art.csv_bytes(),
    };
    write_artifact(&r.output, &bytes)?;
    println!(
        "M={}: {} band rows over {} zeta point(s) in [{}, {}]; wrote {}",
        r.m,
        art.rows.len(),
        cmd.steps,
        cmd.zeta_min,
        cmd.zeta_max,
        r.output.display()
    );
    Ok(())
}
