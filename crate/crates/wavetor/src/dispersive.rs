//! Dispersive kernel bounds and discrete Strichartz quotients for the
//! half-wave group `e^{-it Lambda}`, `Lambda(xi) = |xi|^{1/2}`, on the
//! torus of circumference `2 pi R`.
//!
//! The band kernel is the exact lattice sum
//!
//! ```text
//! K'_k(w, t) = 1/(2 pi R) sum_{xi in Z/R} phi_k^2(xi) e^{-it|xi|^{1/2}} e^{i xi w},
//! ```
//!
//! evaluated on an oversampled `w`-grid through an inverse FFT; no
//! stationary-phase approximation is involved. The quantities under test
//! are the decay ratio `max_w |K'_k| |t|^{1/2} 2^{-3k/4}` on the window
//! `t in [1, R 2^{k/2}]` and the quotient of the discrete
//! `L^4_t L^infty_x` norm of `e^{-it Lambda} P_k f` by
//! `2^{3k/8} ||f||_{L^2}`. Both stay bounded by a fixed constant on that
//! window; past `t = R 2^{k/2}` almost-periodic recurrence sets in and the
//! ratio grows, which is the expected failure outside the hypothesis.

use crate::cutoff::{phi_shell, pow2};
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DispersiveError {
    #[error("no lattice modes in band k = {k} at radius {radius}; need 2^k R > 1/2")]
    EmptyBand { k: i32, radius: f64 },
}

/// Oversampling factor of the `w`-grid relative to the band Nyquist rate.
const OVERSAMPLE: usize = 8;

/// Positive lattice modes `m` with `phi_k(m / R) != 0`, paired with the
/// shell value there. The shell is even, so the negative half of the band
/// is the mirror image.
pub fn band_modes(k: i32, radius: f64) -> Vec<(i64, f64)> {
    let hi = (1.6 * pow2(k) * radius).ceil() as i64;
    (1..=hi)
        .filter_map(|m| {
            let w = phi_shell(k, m as f64 / radius);
            (w != 0.0).then_some((m, w))
        })
        .collect()
}

/// Upper end of the admissible time window, `R 2^{k/2}`.
pub fn time_window(k: i32, radius: f64) -> f64 {
    radius * pow2(k).sqrt()
}

/// One evaluation of the band kernel at a fixed time.
#[derive(Debug, Clone)]
pub struct KernelSample {
    pub k: i32,
    pub radius: f64,
    pub t: f64,
    /// Spacing of the `w`-grid; the grid is `w_j = j * step`.
    pub step: f64,
    pub values: Vec<Complex64>,
    pub max_modulus: f64,
}

/// Direct lattice sum for `K'_k(., t)` on an 8x oversampled `w`-grid.
pub fn kprime_kernel(k: i32, t: f64, radius: f64) -> Result<KernelSample, DispersiveError> {
    let modes = band_modes(k, radius);
    let Some(&(m_hi, _)) = modes.last() else {
        return Err(DispersiveError::EmptyBand { k, radius });
    };
    let m = ((2 * m_hi as usize + 1) * OVERSAMPLE).next_power_of_two();
    let norm = 1.0 / (2.0 * PI * radius);
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for &(mode, w) in &modes {
        let lam = (mode as f64 / radius).sqrt();
        let c = Complex64::from_polar(w * w * norm, -t * lam);
        // Lambda is even, so the +-mode coefficients are equal
        buf[mode as usize] += c;
        buf[m - mode as usize] += c;
    }
    FftPlanner::new().plan_fft_inverse(m).process(&mut buf);
    let max_modulus = buf.iter().map(|v| v.norm()).fold(0.0, f64::max);
    Ok(KernelSample {
        k,
        radius,
        t,
        step: 2.0 * PI * radius / m as f64,
        values: buf,
        max_modulus,
    })
}

/// Logarithmically spaced time grid on `[1, R 2^{k/2}]`.
pub fn default_t_grid(k: i32, radius: f64, points: usize) -> Vec<f64> {
    let t_max = time_window(k, radius).max(1.0 + 1e-9);
    let lg = t_max.ln();
    (0..points)
        .map(|i| (lg * i as f64 / (points - 1).max(1) as f64).exp())
        .collect()
}

/// CSV row of the kernel sweep.
#[derive(Debug, Clone, Serialize)]
pub struct KernelRow {
    pub k: i32,
    pub radius: f64,
    pub t: f64,
    pub max_kernel: f64,
    pub ratio: f64,
}

/// `max_t max_w |K'_k(w, t)| |t|^{1/2} 2^{-3k/4}` over the given times,
/// with the per-time rows for reporting.
pub fn dispersive_ratio(
    k: i32,
    radius: f64,
    t_grid: &[f64],
) -> Result<(f64, Vec<KernelRow>), DispersiveError> {
    let scale = pow2(k).powf(-0.75);
    let rows: Result<Vec<KernelRow>, DispersiveError> = t_grid
        .par_iter()
        .map(|&t| {
            let sample = kprime_kernel(k, t, radius)?;
            Ok(KernelRow {
                k,
                radius,
                t,
                max_kernel: sample.max_modulus,
                ratio: sample.max_modulus * t.abs().sqrt() * scale,
            })
        })
        .collect();
    let rows = rows?;
    let max = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    Ok((max, rows))
}

/// Discrete `L^4_t L^infty_x` quotient for one coefficient vector `a` on
/// the positive band: evolve `P_k f` with `fhat = a` on the band over
/// `[0, R 2^{k/2}]` and divide the norm by `2^{3k/8} ||f||_{L^2}`.
///
/// The global phase `e^{-it Lambda_c}` at the band center does not affect
/// the modulus, so the evolution is demodulated in both space and time;
/// the time step then only needs to resolve the largest relative phase
/// speed across the band.
pub fn strichartz_quotient_for(
    k: i32,
    radius: f64,
    a: &[Complex64],
) -> Result<f64, DispersiveError> {
    let modes = band_modes(k, radius);
    if modes.is_empty() {
        return Err(DispersiveError::EmptyBand { k, radius });
    }
    assert_eq!(a.len(), modes.len(), "one coefficient per band mode");
    let lam: Vec<f64> = modes
        .iter()
        .map(|&(m, _)| (m as f64 / radius).sqrt())
        .collect();
    let lam_c = 0.5 * (lam[0] + lam[lam.len() - 1]);
    let dl: Vec<f64> = lam.iter().map(|l| l - lam_c).collect();
    let dl_max = dl.iter().fold(0.0f64, |m, &v| m.max(v.abs()));

    let t_max = time_window(k, radius);
    // four quadrature points per period of the fastest relative phase
    let dt = if dl_max > 0.0 {
        (2.0 * PI / (8.0 * dl_max)).min(t_max / 16.0)
    } else {
        t_max / 16.0
    };
    let steps = (t_max / dt).ceil() as usize;
    let dt = t_max / steps as f64;

    let m_lo = modes[0].0;
    let width = (modes[modes.len() - 1].0 - m_lo + 1) as usize;
    let m = (width * OVERSAMPLE).next_power_of_two();
    let fft = FftPlanner::new().plan_fft_inverse(m);
    let mut buf = vec![Complex64::new(0.0, 0.0); m];

    let mut f_l2_sq = 0.0;
    let mut fourth = 0.0;
    for step in 0..=steps {
        let t = step as f64 * dt;
        buf.fill(Complex64::new(0.0, 0.0));
        for (i, &(mode, w)) in modes.iter().enumerate() {
            let c = a[i] * Complex64::from_polar(w, -t * dl[i]);
            buf[(mode - m_lo) as usize] = c;
        }
        fft.process(&mut buf);
        let sup = buf.iter().map(|v| v.norm()).fold(0.0, f64::max);
        // trapezoid rule in time
        let weight = if step == 0 || step == steps { 0.5 } else { 1.0 };
        fourth += weight * dt * sup.powi(4);
        if step == 0 {
            f_l2_sq = 2.0 * PI * radius * a.iter().map(|c| c.norm_sqr()).sum::<f64>();
        }
    }
    Ok(fourth.powf(0.25) / (pow2(k).powf(3.0 / 8.0) * f_l2_sq.sqrt()))
}

/// Maximal Strichartz quotient over seeded random coefficient vectors.
pub fn strichartz_quotient(
    k: i32,
    radius: f64,
    samples: usize,
    seed: u64,
) -> Result<f64, DispersiveError> {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    let band = band_modes(k, radius);
    if band.is_empty() {
        return Err(DispersiveError::EmptyBand { k, radius });
    }
    let quotients: Result<Vec<f64>, DispersiveError> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let a: Vec<Complex64> = (0..band.len())
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            strichartz_quotient_for(k, radius, &a)
        })
        .collect();
    Ok(quotients?.into_iter().fold(0.0, f64::max))
}

/// CSV row of the Strichartz sweep.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientRow {
    pub k: i32,
    pub radius: f64,
    pub samples: usize,
    pub quotient: f64,
}
