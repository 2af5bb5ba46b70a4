//! End-to-end acceptance gate. Each criterion prints one pass/fail line;
//! the test fails if any criterion does.
//!
//! Run with `--nocapture` to see the lines on success.

use std::f64::consts::PI;
use std::time::Instant;

use wavetor::dispersive::{default_t_grid, dispersive_ratio, strichartz_quotient};
use wavetor::exact;
use wavetor::grid::SpectralField;
use wavetor::sim::{
    initial_data, rk4_step, run_from, scaling_study, u_field, SimConfig, WaveState,
};
use wavetor::suite::{
    closed_form_suite, dn_suite, mk_consistency_suite, resonant_vanishing_sweep,
    same_sign_margin_suite, ChiMode,
};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Gate { failures: Vec::new() }
    }

    fn record(&mut self, name: &str, pass: bool, detail: String) {
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {status} ({detail})");
        if !pass {
            self.failures.push(format!("{name}: {detail}"));
        }
    }
}

/// Exact vanishing of the grouped resonant combination by both
/// substitution routes, plus the negative control, inside a minute.
fn exact_vanishing(gate: &mut Gate) {
    let start = Instant::now();
    let cert = exact::verify();
    let control = exact::negative_control();
    let elapsed = start.elapsed().as_secs_f64();
    let pass = cert.verified && cert.matches_published_tables && control && elapsed < 60.0;
    gate.record(
        "exact-vanishing",
        pass,
        format!(
            "{} groups, routes zero: {}, tables match: {}, negative control: {}, {:.1}s",
            cert.group_count, cert.verified, cert.matches_published_tables, control, elapsed
        ),
    );
}

/// Numeric vanishing on the resonant family: random cutoff stand-ins and
/// the true cutoff, in the generic and small-b regimes.
fn numeric_vanishing(gate: &mut Gate) {
    let reports = [
        resonant_vanishing_sweep(100, 2026, ChiMode::Random, (0.05, 1.0)),
        resonant_vanishing_sweep(50, 2027, ChiMode::True, (0.05, 1.0)),
        resonant_vanishing_sweep(100, 2028, ChiMode::Random, (2.0f64.powi(-12), 2.0f64.powi(-9))),
        resonant_vanishing_sweep(50, 2029, ChiMode::True, (2.0f64.powi(-12), 2.0f64.powi(-9))),
    ];
    let worst = reports.iter().map(|r| r.max_rel_err).fold(0.0, f64::max);
    let pass = worst <= 1e-8;
    gate.record(
        "numeric-vanishing",
        pass,
        format!("worst residual {worst:.3e} over {} sweeps, tol 1e-8", reports.len()),
    );
}

/// Closed-form identities of the symbol catalog and ellipticity of the
/// same-sign phase.
fn closed_forms(gate: &mut Gate) {
    let mut pass = true;
    let mut worst = 0.0f64;
    for r in closed_form_suite(10_000, 2026) {
        pass &= r.max_rel_err <= 1e-10;
        worst = worst.max(r.max_rel_err);
    }
    let margin = same_sign_margin_suite(100_000, 2027);
    pass &= margin.passed();
    gate.record(
        "closed-forms",
        pass,
        format!(
            "worst identity error {worst:.3e} on 10^4 points, margin deficiency {:.3e} on 10^5",
            margin.max_rel_err
        ),
    );
}

/// Cross-consistency of the two quartic catalogs under symmetrization.
fn mk_consistency(gate: &mut Gate) {
    let r = mk_consistency_suite(1_000, 2026);
    gate.record(
        "mk-consistency",
        r.max_rel_err <= 1e-9,
        format!("worst gap {:.3e} on {} points, tol 1e-9", r.max_rel_err, r.points),
    );
}

/// Dirichlet-Neumann layer operators: two-route agreement, the exact
/// commutation identity, mean-freeness, and the truncation-order fit.
fn dn_checks(gate: &mut Gate) {
    let reports = dn_suite(256, 2026);
    let pass = reports.iter().all(|r| r.passed());
    let detail: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {:.2e}", r.name, r.max_rel_err))
        .collect();
    gate.record("dn-operators", pass, detail.join(", "));
}

/// Conservation and convergence of the time stepper: Hamiltonian drift
/// over ten periods, fourth-order phase error, and mass conservation.
fn stepper(gate: &mut Gate) {
    let cfg = SimConfig {
        modes: 64,
        amplitude: 0.01,
        band: (1, 2),
        dt: 0.01,
        t_final: 10.0 * 2.0 * PI,
        diag_every: 500,
        seed: 3,
        ..SimConfig::default()
    };
    let mut state = initial_data(&cfg);
    let mass0 = state.h.mean().re;
    let report = run_from(&cfg, &mut state).expect("run completes");
    let h0 = report.rows[0].hamiltonian;
    let drift = report
        .rows
        .iter()
        .map(|r| (r.hamiltonian - h0).abs() / h0.abs())
        .fold(0.0, f64::max);
    let mass_gap = (state.h.mean().re - mass0).abs();

    // phase error of a single linear mode over one period at two steps
    let xi: f64 = 4.0;
    let omega = xi.sqrt();
    let t_final = 2.0 * PI / omega;
    let mut errs = Vec::new();
    for &dt in &[t_final / 100.0, t_final / 200.0] {
        let lcfg = SimConfig {
            modes: 32,
            linear_only: true,
            dt,
            t_final,
            ..SimConfig::default()
        };
        let grid = lcfg.grid();
        let mut s = WaveState {
            h: SpectralField::from_fn(&grid, |x| (4.0 * x).cos()),
            phi: SpectralField::from_fn(&grid, |x| omega.recip() * (4.0 * x).sin()),
        };
        let u0 = u_field(&s.h, &s.phi).coeff(4);
        for _ in 0..(t_final / dt).round() as usize {
            s = rk4_step(&s, dt, &lcfg).unwrap();
        }
        errs.push((u_field(&s.h, &s.phi).coeff(4) - u0).norm() / u0.norm());
    }
    let ratio = errs[0] / errs[1];

    let pass = report.completed
        && drift <= 1e-8
        && mass_gap <= 1e-12
        && report.max_imag_residue <= 1e-12
        && (ratio - 16.0).abs() <= 3.0;
    gate.record(
        "time-stepper",
        pass,
        format!(
            "drift {drift:.3e}, mass gap {mass_gap:.3e}, imag {:.3e}, halving ratio {ratio:.2}",
            report.max_imag_residue
        ),
    );
}

/// Amplitude scaling of the energy increments: the corrected level gains
/// at least 0.7 in slope over the raw one, with a modest comparability
/// constant, within ten minutes at 512 modes.
fn energy_scaling(gate: &mut Gate) {
    let start = Instant::now();
    let mut base = SimConfig {
        modes: 512,
        dt: 0.005,
        diag_every: 200,
        seed: 1,
        ..SimConfig::default()
    };
    // at these amplitudes the second-order layer operators fall below the
    // series tolerance, so the truncated solve is both exact and fast
    base.dn.n_max = 2;
    let study = scaling_study(&base, &[0.02, 0.01, 0.005]).expect("study completes");
    let elapsed = start.elapsed().as_secs_f64();
    let [p_raw, _, p_full] = study.slopes;
    let c = study.cubic_comparability;
    let pass = p_full >= p_raw + 0.7 && c <= 20.0 && elapsed < 600.0;
    gate.record(
        "energy-scaling",
        pass,
        format!("p_raw {p_raw:.3}, p_corr {p_full:.3}, C {c:.3}, {elapsed:.0}s"),
    );
}

/// Dispersive kernel bound and discrete Strichartz quotients across dyadic
/// bands and torus sizes, within five minutes.
fn dispersive(gate: &mut Gate) {
    let start = Instant::now();
    let mut worst_kernel = 0.0f64;
    let mut worst_quotient = 0.0f64;
    for k in 0..=6 {
        for &radius in &[8.0, 64.0] {
            let grid = default_t_grid(k, radius, 33);
            let (ratio, _) = dispersive_ratio(k, radius, &grid).expect("band nonempty");
            worst_kernel = worst_kernel.max(ratio);
            let q = strichartz_quotient(k, radius, 50, 2026).expect("band nonempty");
            worst_quotient = worst_quotient.max(q);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_kernel <= 10.0 && worst_quotient <= 10.0 && elapsed < 300.0;
    gate.record(
        "dispersive-bounds",
        pass,
        format!("kernel ratio {worst_kernel:.3}, Strichartz quotient {worst_quotient:.3}, {elapsed:.0}s"),
    );
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();
    exact_vanishing(&mut gate);
    numeric_vanishing(&mut gate);
    closed_forms(&mut gate);
    mk_consistency(&mut gate);
    dn_checks(&mut gate);
    stepper(&mut gate);
    energy_scaling(&mut gate);
    dispersive(&mut gate);
    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}
