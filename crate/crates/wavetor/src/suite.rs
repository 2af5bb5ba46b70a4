//! Randomized verification suites over the symbol catalog: closed-form
//! equivalences, catalog cross-consistency and the numeric vanishing of the
//! symmetrized quartic combination on the degenerate resonant family.
//!
//! Each suite samples seeded random frequency configurations and reports
//! the worst relative error per identity. The same drivers back the
//! command-line verification subcommands and the acceptance checks, so the
//! point counts are parameters rather than constants.

use crate::cutoff::{chi, chi_tilde};
use crate::resonance::{
    bf_quadruple, phase_factored_alternating, phase_factored_one_negative,
    phase_factored_two_positive, phase_ppmm, same_sign_margin,
};
use crate::symbols::{full_sym3, SymbolContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Worst-case result of one randomized identity check.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub points: usize,
    pub max_rel_err: f64,
    pub tol: f64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.max_rel_err <= self.tol
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-30)
}

/// Nonzero sample bounded away from the origin, either sign.
fn sample(rng: &mut ChaCha8Rng) -> f64 {
    let mag = rng.gen_range(0.05..10.0);
    if rng.gen_bool(0.5) {
        mag
    } else {
        -mag
    }
}

/// Closed-form equivalences of the cubic-symbol catalog, the phase
/// factorizations and the cutoff identities, each at `points` seeded
/// random configurations.
pub fn closed_form_suite(points: usize, seed: u64) -> Vec<IdentityReport> {
    let ctx = SymbolContext::default();
    let mut out = Vec::new();
    let mut report = |name: &str, tol: f64, worst: f64| {
        out.push(IdentityReport {
            name: name.to_string(),
            points,
            max_rel_err: worst,
            tol,
        });
    };

    // D: quadratic form against its factored evaluation on the hyperplane
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let x = sample(&mut rng);
        let y = sample(&mut rng);
        let z = -x - y;
        if z == 0.0 {
            continue;
        }
        worst = worst.max(rel_err(ctx.d_quadratic(x, y, z), ctx.d_factored(x, y, z)));
    }
    report("d_quadratic_vs_factored", 1e-10, worst);

    // A': weighted definition against the closed form
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 1);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let x = sample(&mut rng);
        let y = sample(&mut rng);
        let z = -x - y;
        if z == 0.0 {
            continue;
        }
        worst = worst.max(rel_err(ctx.a_prime(x, y, z), ctx.a_prime_closed(x, y, z)));
        worst = worst.max(rel_err(ctx.a_prime(x, y, z), ctx.a_prime_def(x, y, z)));
    }
    report("a_prime_closed_form", 1e-10, worst);

    // B': both closed-form branches, sampled so the stated argument is
    // largest in modulus
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 2);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let x: f64 = rng.gen_range(0.05..5.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let y = x.signum() * rng.gen_range(0.05..5.0);
        let z = -x - y;
        // same-sign x, y make |z| the maximum
        worst = worst.max(rel_err(
            ctx.b_prime(x, y, z),
            ctx.b_prime_closed_last_max(x, y, z),
        ));
        worst = worst.max(rel_err(
            ctx.b_prime(z, y, x),
            ctx.b_prime_closed_first_max(z, y, x),
        ));
        worst = worst.max(rel_err(ctx.b_prime(x, y, z), ctx.b_prime_def(x, y, z)));
    }
    report("b_prime_closed_forms", 1e-10, worst);

    // B'' and B''': closed forms on the max-argument branches
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 3);
    let mut worst2 = 0.0f64;
    let mut worst3 = 0.0f64;
    for _ in 0..points {
        let x: f64 = rng.gen_range(0.05..5.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let y = x.signum() * rng.gen_range(0.05..5.0);
        let z = -x - y;
        worst2 = worst2.max(rel_err(
            ctx.b_dprime(x, y, z),
            ctx.b_dprime_closed_z_max(x, y, z),
        ));
        worst2 = worst2.max(rel_err(
            ctx.b_dprime(z, y, x),
            ctx.b_dprime_closed_x_max(z, y, x),
        ));
        worst3 = worst3.max(rel_err(
            ctx.b_tprime(z, y, x),
            ctx.b_tprime_closed_x_max(z, y, x),
        ));
    }
    report("b_dprime_closed_forms", 1e-10, worst2);
    report("b_tprime_closed_form", 1e-10, worst3);

    // n2 tabulations against their defining combinations
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 4);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let rho = sample(&mut rng);
        let eta = sample(&mut rng);
        worst = worst.max(rel_err(ctx.n2_ri_def(rho, eta), ctx.n2_ri(rho, eta)));
        worst = worst.max(rel_err(ctx.n2_rr_def(rho, eta), ctx.n2_rr(rho, eta)));
        worst = worst.max(rel_err(ctx.n2_ii_def(rho, eta), ctx.n2_ii(rho, eta)));
    }
    report("n2_tabulations", 1e-10, worst);

    // phase factorizations on the three sign cones; errors are measured
    // against the sum of the four half-power magnitudes since the phase
    // itself vanishes on the resonant set inside the cone
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 5);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let a: f64 = rng.gen_range(0.01..10.0);
        let b: f64 = rng.gen_range(0.01..10.0);
        let c: f64 = rng.gen_range(0.01..10.0);
        let scale = |y: [f64; 4]| -> f64 { y.iter().map(|v| v.abs().sqrt()).sum() };

        let y = [-(a + b + c), a, b, c];
        let gap = (phase_ppmm(y[0], y[1], y[2], y[3]) - phase_factored_one_negative(a, b, c)).abs();
        worst = worst.max(gap / scale(y));

        let d = -rng.gen_range(0.005..(a + b - 0.001));
        let y = [a, b, d, -(a + b + d)];
        if y[3] <= 0.0 {
            let gap = (phase_ppmm(y[0], y[1], y[2], y[3])
                - phase_factored_two_positive(y[0], y[1], y[2], y[3]))
            .abs();
            worst = worst.max(gap / scale(y));
        }

        let e = -rng.gen_range(0.005..(a + b - 0.001));
        let y = [a, e, -(a + b + e), b];
        if y[2] <= 0.0 {
            let gap = (phase_ppmm(y[0], y[1], y[2], y[3])
                - phase_factored_alternating(y[0], y[1], y[2], y[3]))
            .abs();
            worst = worst.max(gap / scale(y));
        }
    }
    report("phase_factorizations", 1e-10, worst);

    // cutoff partition chi(x,y) + chi(y,x) + chi~(x,y) = 1 and the
    // translation property chi(x,y) = chi(x,z) on x + y + z = 0
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 6);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let x = sample(&mut rng);
        let y = sample(&mut rng);
        worst = worst.max((chi(x, y) + chi(y, x) + chi_tilde(x, y) - 1.0).abs());
        worst = worst.max((chi(x, y) - chi(x, -x - y)).abs());
    }
    report("chi_partition_translation", 1e-10, worst);

    out
}

/// Ellipticity margin of the same-sign phase: minimum over `points`
/// ordered triples, reported as a deficiency (0 when all are nonnegative).
pub fn same_sign_margin_suite(points: usize, seed: u64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deficiency = 0.0f64;
    for _ in 0..points {
        let mut v = [
            rng.gen_range(0.0..100.0f64),
            rng.gen_range(0.0..100.0f64),
            rng.gen_range(0.0..100.0f64),
        ];
        v.sort_by(|p, q| q.partial_cmp(p).unwrap());
        deficiency = deficiency.max(-same_sign_margin(v[0], v[1], v[2]));
    }
    IdentityReport {
        name: "same_sign_margin_nonnegative".to_string(),
        points,
        max_rel_err: deficiency,
        tol: 1e-14,
    }
}

/// Cross-consistency of the two quartic catalogs: fully symmetrized sums
/// must agree pointwise on the momentum hyperplane.
pub fn mk_consistency_suite(points: usize, seed: u64) -> IdentityReport {
    let ctx = SymbolContext::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let xi = sample(&mut rng);
        let eta = sample(&mut rng);
        let rho = sample(&mut rng);
        let sigma = -xi - eta - rho;
        if sigma == 0.0 {
            continue;
        }
        // the totals cancel internally between products of size comparable
        // to the largest catalog entry, and some of that cancellation is
        // exact inside a single piece; scale by the summed piece magnitudes
        // plus a surrogate for the internal term size, m(y)^2 |y|^{5/2} at
        // the largest frequency
        let abs_sym = |f: &dyn Fn(f64, f64, f64, f64) -> f64| -> f64 {
            full_sym3(|a, b, c, d| f(a, b, c, d).abs(), xi, eta, rho, sigma)
        };
        let y_max = xi.abs().max(eta.abs()).max(rho.abs()).max(sigma.abs());
        let internal = ctx.m(y_max).powi(2) * y_max.powf(2.5);
        let family1: [&dyn Fn(f64, f64, f64, f64) -> f64; 23] = [
            &|a, b, c, d| ctx.k1_1(a, b, c, d),
            &|a, b, c, d| ctx.k1_2(a, b, c, d),
            &|a, b, c, d| ctx.k1_3(a, b, c, d),
            &|a, b, c, d| ctx.k1_4(a, b, c, d),
            &|a, b, c, d| ctx.k1_5(a, b, c, d),
            &|a, b, c, d| ctx.k1_6(a, b, c, d),
            &|a, b, c, d| ctx.k1_7(a, b, c, d),
            &|a, b, c, d| ctx.k1_8(a, b, c, d),
            &|a, b, c, d| ctx.k1_9(a, b, c, d),
            &|a, b, c, d| ctx.m1_1(a, b, c, d),
            &|a, b, c, d| ctx.m1_2(a, b, c, d),
            &|a, b, c, d| ctx.m1_3(a, b, c, d),
            &|a, b, c, d| ctx.m1_4(a, b, c, d),
            &|a, b, c, d| ctx.m1_5(a, b, c, d),
            &|a, b, c, d| ctx.m1_6(a, b, c, d),
            &|a, b, c, d| ctx.m1_7(a, b, c, d),
            &|a, b, c, d| ctx.m1_8(a, b, c, d),
            &|a, b, c, d| ctx.m1_9(a, b, c, d),
            &|a, b, c, d| ctx.m1_10(a, b, c, d),
            &|a, b, c, d| ctx.m1_11(a, b, c, d),
            &|a, b, c, d| ctx.m1_12(a, b, c, d),
            &|a, b, c, d| ctx.m1_13(a, b, c, d),
            &|a, b, c, d| ctx.m1_14(a, b, c, d),
        ];
        let scale1 = family1.iter().map(|f| abs_sym(f)).sum::<f64>() + internal + 1.0;
        let fm = full_sym3(|a, b, c, d| ctx.m1_total(a, b, c, d), xi, eta, rho, sigma);
        let fk = full_sym3(|a, b, c, d| ctx.k1_total(a, b, c, d), xi, eta, rho, sigma);
        worst = worst.max((fm - fk).abs() / scale1);

        let family2: [&dyn Fn(f64, f64, f64, f64) -> f64; 10] = [
            &|a, b, c, d| ctx.k2_1(a, b, c, d),
            &|a, b, c, d| ctx.k2_2(a, b, c, d),
            &|a, b, c, d| ctx.k2_3(a, b, c, d),
            &|a, b, c, d| ctx.k2_4(a, b, c, d),
            &|a, b, c, d| ctx.m2_1(a, b, c, d),
            &|a, b, c, d| ctx.m2_2(a, b, c, d),
            &|a, b, c, d| ctx.m2_3(a, b, c, d),
            &|a, b, c, d| ctx.m2_4(a, b, c, d),
            &|a, b, c, d| ctx.m2_5(a, b, c, d),
            &|a, b, c, d| ctx.m2_6(a, b, c, d),
        ];
        let scale2 = family2.iter().map(|f| abs_sym(f)).sum::<f64>() + internal + 1.0;
        let gm = full_sym3(|a, b, c, d| ctx.m2_total(a, b, c, d), xi, eta, rho, sigma);
        let gk = full_sym3(|a, b, c, d| ctx.k2_total(a, b, c, d), xi, eta, rho, sigma);
        worst = worst.max((gm - gk).abs() / scale2);
    }
    IdentityReport {
        name: "symmetrized_m_vs_k".to_string(),
        points,
        max_rel_err: worst,
        tol: 1e-9,
    }
}

/// Which cutoff stand-in drives a numeric resonant-vanishing sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChiMode {
    /// Seeded random values on the five free cutoff pairs.
    Random,
    /// The genuine smooth cutoff profile.
    True,
}

/// Numeric vanishing of the symmetrized quartic combination on the
/// degenerate resonant family, sampled over `(lambda, b)` with `b` drawn
/// from `b_range`.
pub fn resonant_vanishing_sweep(
    points: usize,
    seed: u64,
    mode: ChiMode,
    b_range: (f64, f64),
) -> IdentityReport {
    use crate::cutoff::CutoffProfile;
    use crate::exact::numeric::RandomChi;
    use crate::symbols::SymbolParams;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for i in 0..points {
        let lambda: f64 = rng.gen_range(0.2..4.0);
        let b: f64 = rng.gen_range(b_range.0..b_range.1);
        let y = bf_quadruple(lambda, b);
        let (diff, scale) = match mode {
            ChiMode::Random => {
                let ctx = SymbolContext::new(
                    RandomChi::for_config(y, seed ^ (i as u64)),
                    SymbolParams::default(),
                );
                (
                    ctx.sk_difference(y[0], y[1], y[2], y[3]),
                    ctx.sk_scale(y[0], y[1], y[2], y[3]),
                )
            }
            ChiMode::True => {
                let ctx = SymbolContext::new(CutoffProfile::new(), SymbolParams::default());
                (
                    ctx.sk_difference(y[0], y[1], y[2], y[3]),
                    ctx.sk_scale(y[0], y[1], y[2], y[3]),
                )
            }
        };
        worst = worst.max(diff.abs() / (scale + 1.0));
    }
    IdentityReport {
        name: format!("resonant_vanishing_{mode:?}_b_{}_{}", b_range.0, b_range.1),
        points,
        max_rel_err: worst,
        tol: 1e-8,
    }
}

/// Dirichlet-Neumann cross-checks: two-route agreement for the first two
/// layer operators, the exact commutation identity for the leading one,
/// mean-freeness of the operator image, and the truncation-order fit of
/// the series solve against the harmonic collocation oracle.
pub fn dn_suite(modes: usize, seed: u64) -> Vec<IdentityReport> {
    use crate::dn::{self, DNConfig};
    use crate::grid::{SpectralField, TorusGrid};

    let mut out = Vec::new();

    // multiplier route vs periodized quadrature for R_0 and R_1
    let grid = TorusGrid::new(1.5, modes);
    let h = SpectralField::random_real(&grid, 12, seed, 0.05);
    let f = SpectralField::random_real(&grid, 12, seed + 1, 1.0);
    let m0 = dn::r0_apply(&h, &f);
    let e0 = m0.sub(&dn::rn_apply(&h, &f, 0)).l2_norm() / m0.l2_norm().max(1e-300);
    out.push(IdentityReport {
        name: "r0_two_routes".to_string(),
        points: modes,
        max_rel_err: e0,
        tol: 1e-8,
    });
    let m1 = dn::r1_apply(&h, &f);
    let e1 = m1.sub(&dn::rn_apply(&h, &f, 1)).l2_norm() / m1.l2_norm().max(1e-300);
    out.push(IdentityReport {
        name: "r1_two_routes".to_string(),
        points: modes,
        max_rel_err: e1,
        tol: 1e-7,
    });

    // d/dx R_0 H_0 phi = -d/dx(h d/dx phi) - |d/dx|(h |d/dx| phi)
    let grid = TorusGrid::new(2.0, 128);
    let h = SpectralField::random_real(&grid, 20, seed + 2, 0.8);
    let phi = SpectralField::random_real(&grid, 20, seed + 3, 1.1);
    let lhs = dn::r0_apply(&h, &phi.h0()).dx();
    let rhs = h
        .product(&phi.dx())
        .dx()
        .add(&h.product(&phi.abs_dx()).abs_dx())
        .scale(-1.0);
    out.push(IdentityReport {
        name: "r0_hilbert_identity".to_string(),
        points: 128,
        max_rel_err: lhs.sub(&rhs).l2_norm() / rhs.l2_norm().max(1.0),
        tol: 1e-12,
    });

    // mean of the operator image
    let h = SpectralField::random_real(&grid, 10, seed + 4, 0.05);
    let phi = SpectralField::random_real(&grid, 10, seed + 5, 1.0);
    let dn_res = dn::dn_series(&h, &phi, &DNConfig::default()).expect("series converges");
    out.push(IdentityReport {
        name: "g_phi_mean_free".to_string(),
        points: 128,
        max_rel_err: dn_res.g_phi.mean().norm() / dn_res.g_phi.l2_norm().max(1.0),
        tol: 1e-12,
    });

    // truncation order: keeping R_0..R_2 leaves an O(eps^4) gap to the
    // oracle, measured as consecutive dyadic slopes
    let grid = TorusGrid::new(1.0, 128);
    let cfg = DNConfig {
        n_max: 3,
        ..DNConfig::default()
    };
    let shape = SpectralField::random_real(&grid, 4, 50, 1.0);
    let phi = SpectralField::random_real(&grid, 4, 60, 1.0);
    let mut errs = Vec::new();
    for &eps in &[1e-2, 5e-3, 2.5e-3] {
        let h = shape.scale(eps);
        let dn_res = dn::dn_series(&h, &phi, &cfg).expect("series converges");
        let (oracle, _) = dn::dn_collocation_oracle(&h, &phi, 24);
        errs.push(dn_res.g_phi.sub(&oracle).l2_norm() / oracle.l2_norm());
    }
    let mut slope_dev = 0.0f64;
    for w in errs.windows(2) {
        slope_dev = slope_dev.max(((w[0] / w[1]).log2() - 4.0).abs());
    }
    out.push(IdentityReport {
        name: "series_truncation_slope_4".to_string(),
        points: 3,
        max_rel_err: slope_dev,
        tol: 0.3,
    });

    out
}
