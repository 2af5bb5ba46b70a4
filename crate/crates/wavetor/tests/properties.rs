//! Randomized structural properties of the cutoff calculus, the symbol
//! catalog, the resonant family and the spectral grid.

use proptest::prelude::*;
use wavetor::cutoff::{chi, phi_shell, shell_range, smooth_step};
use wavetor::grid::{SpectralField, TorusGrid};
use wavetor::resonance::{bf_from_pair, bf_quadruple, check_config, phase_ppmm, same_sign_margin};
use wavetor::symbols::{sk, SymbolContext};

/// Nonzero magnitude with a random sign.
fn signed(mag: f64, neg: bool) -> f64 {
    if neg {
        -mag
    } else {
        mag
    }
}

proptest! {
    // On the hyperplane the largest of the three moduli equals the sum of
    // the other two, which collapses the quadratic form of D to its
    // factored evaluation.
    #[test]
    fn d_forms_agree_on_the_hyperplane(
        xm in 0.1f64..5.0, xs: bool,
        em in 0.1f64..5.0, es: bool,
    ) {
        let xi = signed(xm, xs);
        let eta = signed(em, es);
        let rho = -xi - eta;
        prop_assume!(rho.abs() > 1e-6);
        let ctx = SymbolContext::default();
        let q = ctx.d_quadratic(xi, eta, rho);
        let f = ctx.d_factored(xi, eta, rho);
        let scale = xi * xi + eta * eta + rho * rho;
        prop_assert!((q - f).abs() <= 1e-12 * scale, "D gap {} at ({xi}, {eta}, {rho})", q - f);
    }

    // The two-parameter family sums to zero, annihilates the (+,+,-,-)
    // phase, and lands in the normalized configuration for moderate b.
    #[test]
    fn bf_family_is_resonant_and_admissible(lambda in 0.2f64..4.0, b in 0.05f64..1.0) {
        let y = bf_quadruple(lambda, b);
        let scale: f64 = y.iter().map(|v| v.abs()).sum();
        prop_assert!(y.iter().sum::<f64>().abs() <= 1e-12 * scale);
        prop_assert!(phase_ppmm(y[0], y[1], y[2], y[3]).abs() <= 1e-12 * scale.sqrt());
        prop_assert!(check_config(y), "configuration rejected at ({lambda}, {b}): {y:?}");
    }

    // Solving the resonance equations from an arbitrary nonnegative pair
    // produces a zero-sum quadruple on the same variety.
    #[test]
    fn bf_from_pair_closes_the_family(y3 in 0.01f64..50.0, y4 in 0.01f64..50.0) {
        let y = bf_from_pair(y3, y4);
        let scale: f64 = y.iter().map(|v| v.abs()).sum();
        prop_assert!(y.iter().sum::<f64>().abs() <= 1e-12 * scale);
        prop_assert!(phase_ppmm(y[0], y[1], y[2], y[3]).abs() <= 1e-11 * scale.sqrt());
    }

    // The antisymmetrized combination negates under exchanging the pairs,
    // for any symbol, and vanishes identically for a constant symbol.
    #[test]
    fn sk_is_antisymmetric_under_pair_exchange(
        m1 in 0.1f64..8.0, s1: bool,
        m2 in 0.1f64..8.0, s2: bool,
        m3 in 0.1f64..8.0, s3: bool,
        m4 in 0.1f64..8.0, s4: bool,
    ) {
        let (y1, y2, y3, y4) = (signed(m1, s1), signed(m2, s2), signed(m3, s3), signed(m4, s4));
        let ctx = SymbolContext::default();
        let fwd = ctx.sk_difference(y1, y2, y3, y4);
        let rev = ctx.sk_difference(y3, y4, y1, y2);
        let scale = ctx.sk_scale(y1, y2, y3, y4) + 1.0;
        prop_assert!((fwd + rev).abs() <= 1e-12 * scale, "SK not antisymmetric: {fwd} vs {rev}");
        prop_assert_eq!(sk(|_, _, _, _| 1.0, y1, y2, y3, y4), 0.0);
    }

    // Littlewood-Paley shells partition unity away from the origin.
    #[test]
    fn shells_partition_unity(m in 1e-3f64..1e3, neg: bool) {
        let x = signed(m, neg);
        let total: f64 = shell_range(x).map(|k| phi_shell(k, x)).sum();
        prop_assert!((total - 1.0).abs() <= 1e-12, "shell sum {total} at {x}");
    }

    // The paraproduct cutoff takes values in [0, 1] and its support is
    // disjoint from the transposed one: a frequency cannot be far below its
    // partner in both orders at once.
    #[test]
    fn chi_is_a_cutoff_with_disjoint_transpose(
        xm in 1e-2f64..1e2, xs: bool,
        ym in 1e-2f64..1e2, ys: bool,
    ) {
        let x = signed(xm, xs);
        let y = signed(ym, ys);
        let c = chi(x, y);
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert_eq!(c * chi(y, x), 0.0, "overlapping supports at ({}, {})", x, y);
    }

    // The transition profile is monotone with range [0, 1].
    #[test]
    fn smooth_step_is_monotone(a in -2.0f64..3.0, b in -2.0f64..3.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (slo, shi) = (smooth_step(lo), smooth_step(hi));
        prop_assert!((0.0..=1.0).contains(&slo) && (0.0..=1.0).contains(&shi));
        prop_assert!(slo <= shi + 1e-15);
    }

    // The quadratic surface symbol is built from (eta+rho) rho minus the
    // product of moduli, so it vanishes whenever the signs agree.
    #[test]
    fn q2_vanishes_on_same_sign_pairs(em in 0.05f64..10.0, rm in 0.05f64..10.0, neg: bool) {
        let eta = signed(em, neg);
        let rho = signed(rm, neg);
        prop_assert_eq!(SymbolContext::default().q2(rho, eta), 0.0);
    }

    // Ellipticity of the same-sign phase on ordered triples.
    #[test]
    fn same_sign_margin_is_nonnegative(a in 0.0f64..100.0, b in 0.0f64..100.0, c in 0.0f64..100.0) {
        let mut v = [a, b, c];
        v.sort_by(|p, q| q.partial_cmp(p).unwrap());
        prop_assert!(same_sign_margin(v[0], v[1], v[2]) >= -1e-12);
    }

    // Physical-spectral roundtrip and the Parseval normalization of the
    // inner product against plain quadrature of the samples.
    #[test]
    fn fft_roundtrip_and_parseval(radius in 0.5f64..4.0, band in 1i64..16, seed in 0u64..1000) {
        let grid = TorusGrid::new(radius, 64);
        let f = SpectralField::random_real(&grid, band, seed, 1.0);
        let vals = f.to_physical();
        let g = SpectralField::from_physical(&grid, &vals);
        let norm = f.l2_norm().max(1e-30);
        prop_assert!(f.sub(&g).l2_norm() <= 1e-12 * norm);
        let quad: f64 = vals.iter().map(|v| v * v).sum::<f64>() * grid.dx();
        prop_assert!((f.inner(&f).re - quad).abs() <= 1e-10 * quad.max(1e-30));
    }
}
