//! `wavetor`: command-line driver for the verification and simulation
//! toolkit.
//!
//! Every subcommand reads an optional `key = value` config file, applies
//! flag overrides, writes a `manifest.json` echoing the fully resolved
//! configuration into the output directory, and exits 0 on success, 1 on a
//! verification failure, 2 on a usage error. Outputs are deterministic
//! given the seed.

mod config;
mod plot;
mod report;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use config::FileConfig;
use report::{print_reports, RunDir, ScanRow};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use wavetor::suite::{self, ChiMode, IdentityReport};

#[derive(Parser)]
#[command(
    name = "wavetor",
    about = "verification and simulation toolkit for gravity water waves on a large torus",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Plain-text `key = value` configuration file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory for manifest, CSV, JSON and plots.
    #[arg(long, default_value = ".", global = true)]
    out: PathBuf,
    /// Base seed for every randomized sweep.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Also write static SVG plots.
    #[arg(long, global = true)]
    plots: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify vanishing of the symmetrized quartic symbol on the resonant
    /// family: exact polynomial certificate by default, numeric sampling
    /// with --numeric.
    VerifyBf {
        #[command(flatten)]
        common: Common,
        /// Sample the identity numerically instead of reducing polynomials.
        #[arg(long)]
        numeric: bool,
        /// Points per numeric sweep.
        #[arg(long)]
        points: Option<usize>,
        /// Cutoff stand-in for the numeric sweep: `random` or `true`.
        #[arg(long)]
        chi_mode: Option<String>,
        /// Run the deliberate-failure control and exit 1 by design.
        #[arg(long)]
        negative_control: bool,
    },
    /// Closed-form identity suite for the symbol catalog plus the
    /// same-sign ellipticity margin.
    VerifySymbols {
        #[command(flatten)]
        common: Common,
        /// Points per identity.
        #[arg(long)]
        points: Option<usize>,
    },
    /// Consistency of the two symbol families under full symmetrization,
    /// plus structural checks of the degenerate resonant family.
    VerifyResonance {
        #[command(flatten)]
        common: Common,
        /// Hyperplane points for the family comparison.
        #[arg(long)]
        points: Option<usize>,
    },
    /// Dirichlet-Neumann cross-checks: two-route operators, exact
    /// identities, series-vs-oracle convergence order.
    DnCheck {
        #[command(flatten)]
        common: Common,
        /// Grid size for the two-route comparisons.
        #[arg(long)]
        modes: Option<usize>,
    },
    /// Time-step the water-wave system and record energy diagnostics.
    Simulate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sim: SimArgs,
    },
    /// Amplitude-scaling study of the corrected energies on a ten-period
    /// window.
    EnergyScan {
        #[command(flatten)]
        common: Common,
        /// Comma-separated amplitude list, e.g. `0.02,0.01,0.005`.
        #[arg(long)]
        eps: Option<String>,
        /// Grid size.
        #[arg(long)]
        modes: Option<usize>,
        /// Time step.
        #[arg(long)]
        dt: Option<f64>,
    },
    /// Dispersive kernel decay and Strichartz quotients over dyadic
    /// shells and torus radii.
    Strichartz {
        #[command(flatten)]
        common: Common,
        /// Shell indices: a range `0..6` or a list `0,3,6`.
        #[arg(long)]
        k: Option<String>,
        /// Torus radii, comma separated.
        #[arg(long = "R")]
        radii: Option<String>,
        /// Points of the log-spaced time grid per shell.
        #[arg(long)]
        t_points: Option<usize>,
        /// Random coefficient vectors per (k, R) cell.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Args)]
struct SimArgs {
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long)]
    modes: Option<usize>,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    /// Steps between diagnostic rows.
    #[arg(long)]
    diag_every: Option<usize>,
    /// Active initial modes as `lo,hi`.
    #[arg(long)]
    band: Option<String>,
    /// Initial size in the weighted Sobolev norm.
    #[arg(long)]
    amplitude: Option<f64>,
    /// Integrate the linearization only.
    #[arg(long)]
    linear_only: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_config(common: &Common) -> Result<FileConfig> {
    match &common.config {
        Some(path) => FileConfig::load(path),
        None => Ok(FileConfig::empty()),
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::VerifyBf {
            common,
            numeric,
            points,
            chi_mode,
            negative_control,
        } => verify_bf(common, numeric, points, chi_mode, negative_control),
        Command::VerifySymbols { common, points } => verify_symbols(common, points),
        Command::VerifyResonance { common, points } => verify_resonance(common, points),
        Command::DnCheck { common, modes } => dn_check(common, modes),
        Command::Simulate { common, sim } => simulate(common, sim),
        Command::EnergyScan {
            common,
            eps,
            modes,
            dt,
        } => energy_scan(common, eps, modes, dt),
        Command::Strichartz {
            common,
            k,
            radii,
            t_points,
            samples,
        } => strichartz(common, k, radii, t_points, samples),
    }
}

fn verify_bf(
    common: Common,
    numeric: bool,
    points: Option<usize>,
    chi_mode: Option<String>,
    negative_control: bool,
) -> Result<bool> {
    let mut cfg = load_config(&common)?;
    let seed = cfg.resolve("seed", common.seed, 2026u64)?;
    let points = cfg.resolve("points", points, 100usize)?;
    let chi_mode = cfg.resolve("chi_mode", chi_mode, "random".to_string())?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&json!({
        "subcommand": "verify-bf",
        "numeric": numeric,
        "negative_control": negative_control,
        "points": points,
        "chi_mode": chi_mode,
        "seed": seed,
    }))?;

    if negative_control {
        // This path is supposed to fail: it checks that the machinery can
        // tell a corrupted table from the real one.
        if wavetor::exact::negative_control() {
            println!(
                "negative control: leading unweighted coefficient at \
                 (x2, x3, x4) = (1, 2, 3) evaluates to -448 off the resonant \
                 set; corrupted table rejected by both routes"
            );
            println!("exiting nonzero by design");
        } else {
            println!("negative control FAILED: corruption was not detected");
        }
        return Ok(false);
    }

    if numeric {
        let mode = match chi_mode.as_str() {
            "random" => ChiMode::Random,
            "true" => ChiMode::True,
            other => anyhow::bail!("chi_mode must be `random` or `true`, got {other:?}"),
        };
        let mut reports = vec![suite::resonant_vanishing_sweep(
            points,
            seed,
            mode,
            (0.05, 1.0),
        )];
        if mode == ChiMode::True {
            // the small-b corner stresses the cutoff arguments hardest
            reports.push(suite::resonant_vanishing_sweep(
                points,
                seed + 1,
                mode,
                (2.0f64.powi(-12), 2.0f64.powi(-9)),
            ));
        }
        let ok = print_reports(&reports);
        dir.write_json("bf_numeric.json", &serde_json::to_value(&reports)?)?;
        return Ok(ok);
    }

    let cert = wavetor::exact::verify();
    let m_tags: std::collections::BTreeSet<&str> =
        cert.groups.iter().map(|g| g.m_tag.as_str()).collect();
    dir.write_json("bf_certificate.json", &serde_json::to_value(&cert)?)?;
    if cert.verified {
        println!("ALL GROUPS ZERO ({} m-tags)", m_tags.len());
        println!(
            "  {} grouped coefficients, both substitution routes, tables match",
            cert.group_count
        );
        Ok(true)
    } else {
        println!("VERIFICATION FAILED");
        for g in cert.groups.iter().filter(|g| !g.route_a_zero || !g.route_b_zero) {
            println!(
                "  residual group {} * {}: {} terms survive",
                g.m_tag, g.chi_tag, g.residual_terms
            );
        }
        if !cert.matches_published_tables {
            println!("  transcribed tables disagree with the symbol expansion");
        }
        Ok(false)
    }
}

fn verify_symbols(common: Common, points: Option<usize>) -> Result<bool> {
    let mut cfg = load_config(&common)?;
    let seed = cfg.resolve("seed", common.seed, 2026u64)?;
    let points = cfg.resolve("points", points, 10_000usize)?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&json!({
        "subcommand": "verify-symbols",
        "points": points,
        "seed": seed,
    }))?;

    let mut reports = suite::closed_form_suite(points, seed);
    // the pointwise inequality gets an order of magnitude more samples:
    // it is cheap and a sign error would be localized
    reports.push(suite::same_sign_margin_suite(10 * points, seed + 1));
    let ok = print_reports(&reports);
    dir.write_csv("identities.csv", &reports)?;
    Ok(ok)
}

fn verify_resonance(common: Common, points: Option<usize>) -> Result<bool> {
    use wavetor::resonance::{bf_from_pair, bf_quadruple, check_config, phase_ppmm};

    let mut cfg = load_config(&common)?;
    let seed = cfg.resolve("seed", common.seed, 2026u64)?;
    let points = cfg.resolve("points", points, 1_000usize)?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&json!({
        "subcommand": "verify-resonance",
        "points": points,
        "seed": seed,
    }))?;

    let mut reports = vec![suite::mk_consistency_suite(points, seed)];

    // structural sweep of the degenerate family itself: every quadruple
    // from either parametrization must sit on the resonant variety with
    // the expected sign pattern. Low-discrepancy (lambda, b) samples keep
    // this deterministic without a generator.
    let mut worst = 0.0f64;
    let mut shape_ok = true;
    for i in 0..points {
        let frac = |a: f64| (i as f64 * a).fract();
        let lambda = 0.2 + 3.8 * frac(0.618_033_988_749_894_9);
        let b = 0.05 + 0.95 * frac(0.414_213_562_373_095_1);
        for y in [bf_quadruple(lambda, b), bf_from_pair(y3y4(lambda, b).0, y3y4(lambda, b).1)] {
            shape_ok &= check_config(y);
            let scale: f64 = y.iter().map(|v| v.abs().sqrt()).sum();
            worst = worst.max(phase_ppmm(y[0], y[1], y[2], y[3]).abs() / scale);
            worst = worst.max(y.iter().sum::<f64>().abs() / y.iter().map(|v| v.abs()).sum::<f64>());
        }
    }
    reports.push(IdentityReport {
        name: "bf_family_on_variety".to_string(),
        points: 2 * points,
        max_rel_err: if shape_ok { worst } else { f64::INFINITY },
        tol: 1e-9,
    });

    let ok = print_reports(&reports);
    dir.write_csv("resonance.csv", &reports)?;
    Ok(ok)
}

/// The two positive outer frequencies of the rational family, used to
/// cross-feed one parametrization into the other.
fn y3y4(lambda: f64, b: f64) -> (f64, f64) {
    let y = wavetor::resonance::bf_quadruple(lambda, b);
    (y[2], y[3])
}

fn dn_check(common: Common, modes: Option<usize>) -> Result<bool> {
    let mut cfg = load_config(&common)?;
    let seed = cfg.resolve("seed", common.seed, 2026u64)?;
    let modes = cfg.resolve("modes", modes, 256usize)?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&json!({
        "subcommand": "dn-check",
        "modes": modes,
        "seed": seed,
    }))?;

    let reports = suite::dn_suite(modes, seed);
    let ok = print_reports(&reports);
    dir.write_csv("dn.csv", &reports)?;
    Ok(ok)
}

fn resolve_sim(cfg: &mut FileConfig, common: &Common, sim: SimArgs) -> Result<wavetor::sim::SimConfig> {
    let defaults = wavetor::sim::SimConfig::default();
    let band = cfg.resolve("band", sim.band, String::new())?;
    let band = if band.is_empty() {
        defaults.band
    } else {
        config::parse_band(&band)?
    };
    let mut dn = defaults.dn.clone();
    dn.r1_quadrature = cfg.resolve("r1_quadrature", None, dn.r1_quadrature)?;
    dn.n_max = cfg.resolve("n_max", None, dn.n_max)?;
    Ok(wavetor::sim::SimConfig {
        radius: cfg.resolve("radius", sim.radius, defaults.radius)?,
        modes: cfg.resolve("modes", sim.modes, defaults.modes)?,
        dt: cfg.resolve("dt", sim.dt, defaults.dt)?,
        t_final: cfg.resolve("t_final", sim.t_final, defaults.t_final)?,
        diag_every: cfg.resolve("diag_every", sim.diag_every, defaults.diag_every)?,
        band,
        amplitude: cfg.resolve("amplitude", sim.amplitude, defaults.amplitude)?,
        seed: cfg.resolve("seed", common.seed, defaults.seed)?,
        linear_only: cfg.resolve(
            "linear_only",
            if sim.linear_only { Some(true) } else { None },
            defaults.linear_only,
        )?,
        dn,
    })
}

fn simulate(common: Common, sim: SimArgs) -> Result<bool> {
    let mut cfg = load_config(&common)?;
    let sim_cfg = resolve_sim(&mut cfg, &common, sim)?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&serde_json::to_value(&sim_cfg)?)?;

    let report = wavetor::sim::run(&sim_cfg).map_err(|e| anyhow::anyhow!("{e}"))?;
    dir.write_csv("energies.csv", &report.rows)?;

    let h0 = report.rows[0].hamiltonian;
    let drift = report
        .rows
        .iter()
        .map(|r| (r.hamiltonian - h0).abs())
        .fold(0.0, f64::max)
        / h0.abs().max(1e-300);
    println!(
        "{} steps to t = {}, Hamiltonian drift {:.3e}, imag residue {:.3e}{}",
        report.steps_taken,
        report.rows.last().map(|r| r.t).unwrap_or(0.0),
        drift,
        report.max_imag_residue,
        if report.completed {
            ""
        } else {
            " [STOPPED by blow-up guard]"
        }
    );

    if common.plots {
        let series = |f: &dyn Fn(&wavetor::sim::EnergyRow) -> f64, label: &str| plot::Series {
            label: label.to_string(),
            points: report.rows.iter().map(|r| (r.t, f(r))).collect(),
        };
        plot::line_plot(
            &dir.path("energies.svg"),
            &plot::PlotSpec {
                title: "energy diagnostics".into(),
                log_x: false,
                log_y: false,
            },
            &[
                series(&|r| r.e2, "E2"),
                series(&|r| r.e2 + r.e1, "E2+E1"),
                series(&|r| r.e2 + r.e1 - r.e2p - r.e3p, "corrected"),
                series(&|r| r.hamiltonian, "H"),
            ],
        )?;
    }
    Ok(report.completed)
}

fn energy_scan(
    common: Common,
    eps: Option<String>,
    modes: Option<usize>,
    dt: Option<f64>,
) -> Result<bool> {
    let mut cfg = load_config(&common)?;
    let eps = config::parse_f64_list(&cfg.resolve("eps", eps, "0.02,0.01,0.005".to_string())?)?;
    let mut base = wavetor::sim::SimConfig {
        modes: cfg.resolve("modes", modes, 512usize)?,
        // small enough that the integrator's own amplitude loss (~dt^5 per
        // unit time) sits well below the quartic energy increments being
        // measured at the smallest amplitude
        dt: cfg.resolve("dt", dt, 0.005f64)?,
        diag_every: cfg.resolve("diag_every", None, 200usize)?,
        seed: cfg.resolve("seed", common.seed, 1u64)?,
        ..wavetor::sim::SimConfig::default()
    };
    // at scan amplitudes the surface is so shallow that the second-order
    // layer operators fall below the series tolerance; truncating there
    // keeps every operator application at O(N log N)
    base.dn.n_max = cfg.resolve("n_max", None, 2u32)?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&json!({
        "subcommand": "energy-scan",
        "eps": eps,
        "base": serde_json::to_value(&base)?,
    }))?;

    let scan =
        wavetor::sim::scaling_study(&base, &eps).map_err(|e| anyhow::anyhow!("{e}"))?;
    let rows: Vec<ScanRow> = scan
        .amplitudes
        .iter()
        .zip(&scan.increments)
        .map(|(&eps, inc)| ScanRow {
            eps,
            inc_raw: inc[0],
            inc_first: inc[1],
            inc_full: inc[2],
        })
        .collect();
    dir.write_csv("scan.csv", &rows)?;
    dir.write_json("scan.json", &serde_json::to_value(&scan)?)?;

    let [p_raw, p_first, p_corr] = scan.slopes;
    println!("  level        increment exponent");
    println!("  raw E2       p_raw  = {p_raw:.3}");
    println!("  + E1         p_1    = {p_first:.3}");
    println!("  fully corr.  p_corr = {p_corr:.3}");
    println!(
        "  cubic comparability C = {:.3} (|E1 + E2' + E3'| <= C eps E2)",
        scan.cubic_comparability
    );
    let ok = p_corr >= p_raw + 0.7 && scan.cubic_comparability <= 20.0;
    println!("  {}", if ok { "pass" } else { "FAIL" });

    if common.plots {
        let series = |idx: usize, label: &str| plot::Series {
            label: label.to_string(),
            points: scan
                .amplitudes
                .iter()
                .zip(&scan.increments)
                .map(|(&e, inc)| (e, inc[idx]))
                .collect(),
        };
        plot::line_plot(
            &dir.path("scan.svg"),
            &plot::PlotSpec {
                title: "energy increment vs amplitude".into(),
                log_x: true,
                log_y: true,
            },
            &[series(0, "raw"), series(1, "+E1"), series(2, "corrected")],
        )?;
    }
    Ok(ok)
}

fn strichartz(
    common: Common,
    k: Option<String>,
    radii: Option<String>,
    t_points: Option<usize>,
    samples: Option<usize>,
) -> Result<bool> {
    use wavetor::dispersive;

    let mut cfg = load_config(&common)?;
    let ks = config::parse_k_spec(&cfg.resolve("k", k, "0..6".to_string())?)?;
    let radii = config::parse_f64_list(&cfg.resolve("R", radii, "8,64".to_string())?)?;
    let t_points = cfg.resolve("t_points", t_points, 33usize)?;
    let samples = cfg.resolve("samples", samples, 50usize)?;
    let seed = cfg.resolve("seed", common.seed, 2026u64)?;
    cfg.finish()?;
    let dir = RunDir::create(&common.out)?;
    dir.write_manifest(&json!({
        "subcommand": "strichartz",
        "k": ks,
        "R": radii,
        "t_points": t_points,
        "samples": samples,
        "seed": seed,
    }))?;

    let mut kernel_rows = Vec::new();
    let mut quotient_rows = Vec::new();
    let mut ok = true;
    for &radius in &radii {
        for &k in &ks {
            let grid = dispersive::default_t_grid(k, radius, t_points);
            let (ratio, rows) =
                dispersive::dispersive_ratio(k, radius, &grid).map_err(|e| anyhow::anyhow!("{e}"))?;
            kernel_rows.extend(rows);
            let quotient = dispersive::strichartz_quotient(k, radius, samples, seed)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            quotient_rows.push(dispersive::QuotientRow {
                k,
                radius,
                samples,
                quotient,
            });
            let cell_ok = ratio <= 10.0 && quotient <= 10.0;
            ok &= cell_ok;
            println!(
                "  k = {k}  R = {radius:>4}  kernel ratio {ratio:>6.3}  quotient {quotient:>6.3}  {}",
                if cell_ok { "pass" } else { "FAIL" }
            );
        }
    }
    dir.write_csv("kernel.csv", &kernel_rows)?;
    dir.write_csv("quotients.csv", &quotient_rows)?;

    if common.plots {
        let mut series = Vec::new();
        for &radius in &radii {
            for &k in &ks {
                series.push(plot::Series {
                    label: format!("k={k} R={radius}"),
                    points: kernel_rows
                        .iter()
                        .filter(|r| r.k == k && r.radius == radius)
                        .map(|r| (r.t, r.ratio.max(1e-12)))
                        .collect(),
                });
            }
        }
        plot::line_plot(
            &dir.path("kernel.svg"),
            &plot::PlotSpec {
                title: "decay-normalized kernel sup".into(),
                log_x: true,
                log_y: true,
            },
            &series,
        )?;
    }
    Ok(ok)
}
