//! The defining property of the cubic corrections, checked along the true
//! flow: the time derivative of `E_2 + E^1` is cubic in the solution size
//! and equals the two bulk terms evaluated directly, while the derivative
//! of the fully corrected energy is quartic.

use wavetor::cutoff::CutoffProfile;
use wavetor::dn::{dn_series, good_unknowns, AlphaMode};
use wavetor::grid::SpectralField;
use wavetor::sim::{energies, initial_data, rk4_step, SimConfig};
use wavetor::symbols::{SymbolContext, SymbolParams};

/// Centered-difference derivatives of the four functionals plus the direct
/// bulk-term values at the same state.
fn derivatives(cfg: &SimConfig) -> ([f64; 4], f64, f64) {
    let state = initial_data(cfg);
    let dt = 0.005;
    let plus = rk4_step(&state, dt, cfg).unwrap();
    let minus = rk4_step(&state, -dt, cfg).unwrap();
    let ep = energies(&plus, &cfg.dn).unwrap();
    let em = energies(&minus, &cfg.dn).unwrap();
    let d = |a: f64, b: f64| (a - b) / (2.0 * dt);
    let ders = [
        d(ep.e2, em.e2),
        d(ep.e1, em.e1),
        d(ep.e2p, em.e2p),
        d(ep.e3p, em.e3p),
    ];

    let dn = dn_series(&state.h, &state.phi, &cfg.dn).unwrap();
    let gu = good_unknowns(&state.h, &state.phi, &dn, AlphaMode::Quadratic).unwrap();
    let ctx = SymbolContext::new(CutoffProfile::new(), SymbolParams::default());
    let guard = |x: f64, e: f64, r: f64| x != 0.0 && e != 0.0 && r != 0.0;
    let b7 = SpectralField::contract3(
        &gu.omega_star,
        &gu.omega_star,
        &gu.omega_star,
        |x, e, r| if guard(x, e, r) { ctx.a_sym(x, e, r) } else { 0.0 },
    )
    .re;
    let b8 = SpectralField::contract3(&gu.h_star, &gu.h_star, &gu.omega_star, |x, e, r| {
        if guard(x, e, r) {
            ctx.b_big(x, e, r)
        } else {
            0.0
        }
    })
    .re;
    (ders, b7, b8)
}

#[test]
fn corrections_cancel_the_cubic_bulk() {
    let base = SimConfig {
        modes: 64,
        band: (1, 3),
        amplitude: 0.01,
        ..SimConfig::default()
    };
    let mut full = Vec::new();
    for amp_scale in [1.0, 0.5] {
        let mut cfg = base.clone();
        cfg.amplitude = base.amplitude * amp_scale;
        let ([d_e2, d_e1, d_e2p, d_e3p], b7, b8) = derivatives(&cfg);

        // the derivative of E_2 + E^1 is exactly the two bulk terms, up to
        // quartic remainders
        let cubic = d_e2 + d_e1;
        assert!(
            ((b7 + b8) - cubic).abs() <= 0.02 * cubic.abs(),
            "bulk terms {b7:+.3e} + {b8:+.3e} vs d(E2+E1) {cubic:+.3e}"
        );
        // each correction reproduces its own bulk term
        assert!((d_e2p - b7).abs() <= 0.05 * b7.abs(), "{d_e2p:+.3e} vs {b7:+.3e}");
        assert!((d_e3p - b8).abs() <= 0.05 * b8.abs(), "{d_e3p:+.3e} vs {b8:+.3e}");

        // subtracting them leaves a much smaller derivative
        let residual = d_e2 + d_e1 - d_e2p - d_e3p;
        assert!(
            residual.abs() <= 0.1 * cubic.abs(),
            "corrected derivative {residual:+.3e} not small against {cubic:+.3e}"
        );
        full.push(residual.abs());
    }

    // halving the amplitude divides a quartic quantity by ~16 (the cubic
    // one only by ~8)
    let ratio = full[0] / full[1];
    assert!(
        (10.0..=26.0).contains(&ratio),
        "residual derivative scaled by {ratio:.2}, expected ~16"
    );
}
