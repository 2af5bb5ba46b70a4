//! Weighted dyadic norms used as diagnostics, plus the kernel-size
//! functional for multipliers.
//!
//! With `P_k` the dyadic projections of [`SpectralField`] and `P_mean` the
//! mean-value projection, the norms are
//!
//! ```text
//! ||f||_{H(N,b)}^2 = ||P_mean f||_{L2}^2 R^{-2b}
//!                    + sum_k ||P_k f||_{L2}^2 (2^{2Nk} + 2^{2bk})
//! ||f||_{W(N,b)}   = ||P_mean f||_{Linf} R^{-b}
//!                    + sum_k ||P_k f||_{Linf} (2^{Nk} + 2^{bk})
//! ||f||_{Wt(N)}    = ||f||_{Linf} + sum_{k >= 0} 2^{Nk} ||P_k f||_{Linf}
//! ```
//!
//! The dyadic sums run over the finitely many shells that meet the lattice.

use crate::cutoff::pow2;
use crate::grid::{SpectralField, TorusGrid};

/// Shell indices that can meet nonzero lattice frequencies of the grid:
/// `2^k R > 1/2` and the shell reaches below the Nyquist frequency.
pub fn active_shells(grid: &TorusGrid) -> Vec<i32> {
    let r = grid.radius();
    let max_freq = grid.len() as f64 / (2.0 * r);
    let mut ks = Vec::new();
    // lowest shell: first k with 2^k R > 1/2
    let mut k = -(2.0 * r).log2().floor() as i32 - 2;
    while pow2(k) * r <= 0.5 {
        k += 1;
    }
    while pow2(k - 1) * 1.25 < max_freq {
        ks.push(k);
        k += 1;
    }
    ks
}

/// `||f||_{H(N,b)}` (homogeneous-with-low-mode Sobolev scale).
pub fn h_norm(f: &SpectralField, n: f64, b: f64) -> f64 {
    let r = f.grid().radius();
    let mut total = f.lp_mean().l2_norm().powi(2) * r.powf(-2.0 * b);
    for k in active_shells(f.grid()) {
        let piece = f.lp_project(k).l2_norm();
        if piece > 0.0 {
            total += piece * piece * (pow2(k).powf(2.0 * n) + pow2(k).powf(2.0 * b));
        }
    }
    total.sqrt()
}

/// `||f||_{W(N,b)}` (dyadic sup-norm scale).
pub fn w_norm(f: &SpectralField, n: f64, b: f64) -> f64 {
    let r = f.grid().radius();
    let mut total = f.lp_mean().linf_norm() * r.powf(-b);
    for k in active_shells(f.grid()) {
        let piece = f.lp_project(k).linf_norm();
        if piece > 0.0 {
            total += piece * (pow2(k).powf(n) + pow2(k).powf(b));
        }
    }
    total
}

/// `||f||_{Wt(N)}`: sup norm plus high-frequency dyadic tail.
pub fn wt_norm(f: &SpectralField, n: f64) -> f64 {
    let mut total = f.linf_norm();
    for k in active_shells(f.grid()) {
        if k < 0 {
            continue;
        }
        total += pow2(k).powf(n) * f.lp_project(k).linf_norm();
    }
    total
}

/// Inhomogeneous Sobolev norm `(1/(2 pi R) sum <xi>^{2s} |fhat|^2)^{1/2}`.
pub fn sobolev_norm(f: &SpectralField, s: f64) -> f64 {
    let grid = f.grid();
    let mut total = 0.0;
    for (i, c) in f.hat().iter().enumerate() {
        let xi = grid.freq(i);
        total += (1.0 + xi * xi).powf(s) * c.norm_sqr();
    }
    (total / grid.period()).sqrt()
}

/// Measured constant in the dyadic Bernstein inequality
/// `||P_k f||_Linf <= C (2^{k/2} + R^{-1/2}) ||P_k f||_L2`:
/// returns the ratio for one shell (0 when the shell is empty).
pub fn bernstein_ratio(f: &SpectralField, k: i32) -> f64 {
    let piece = f.lp_project(k);
    let l2 = piece.l2_norm();
    if l2 == 0.0 {
        return 0.0;
    }
    let bound = pow2(k).sqrt() + f.grid().radius().powf(-0.5);
    piece.linf_norm() / (bound * l2)
}

/// Kernel-size functional of a lattice multiplier: the `L^1` norm of its
/// inverse Fourier transform, `integral |1/(2 pi R) sum m(xi) e^{i xi x}| dx`,
/// approximated on the grid.
pub fn sinfty_norm(grid: &TorusGrid, multiplier: impl Fn(f64) -> f64) -> f64 {
    let m: Vec<num_complex::Complex64> = (0..grid.len())
        .map(|i| num_complex::Complex64::new(multiplier(grid.freq(i)), 0.0))
        .collect();
    let field = SpectralField::from_hat(grid, m);
    let phys = field.to_physical_complex();
    phys.iter().map(|c| c.norm()).sum::<f64>() * grid.dx()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutoff::phi_shell;
    use approx::assert_abs_diff_eq;

    #[test]
    fn shells_cover_lattice() {
        let grid = TorusGrid::new(8.0, 256);
        let ks = active_shells(&grid);
        // every nonzero lattice frequency must receive total shell weight 1
        for m in 1..=(grid.len() as i64 / 2) {
            let xi = m as f64 / grid.radius();
            let s: f64 = ks.iter().map(|&k| phi_shell(k, xi)).sum();
            assert_abs_diff_eq!(s, 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn h_norm_single_mode() {
        // f = cos(4 x) on R = 1: one shell at k = 2 dominates
        let grid = TorusGrid::new(1.0, 128);
        let f = SpectralField::from_fn(&grid, |x| (4.0 * x).cos());
        let n0 = h_norm(&f, 0.0, 0.0);
        // ||f||_L2 = sqrt(pi), both weights are 1 => sqrt(2) * sqrt(pi)
        assert_abs_diff_eq!(n0, (2.0 * std::f64::consts::PI).sqrt(), epsilon = 1e-10);
    }

    #[test]
    fn bernstein_holds_with_modest_constant() {
        let grid = TorusGrid::new(4.0, 256);
        let f = SpectralField::from_fn(&grid, |x| {
            (2.0 * x).cos() + 0.3 * (5.25 * x).sin() + 0.01 * (13.0 * x).cos()
        });
        for k in active_shells(&grid) {
            let ratio = bernstein_ratio(&f, k);
            assert!(ratio <= 4.0, "bernstein ratio {ratio} too large at shell {k}");
        }
    }

    #[test]
    fn lp_kernel_l1_uniform() {
        // ||K_k||_{L1} stays bounded uniformly in k and R
        for &(r, n) in &[(1.0, 256), (8.0, 512)] {
            let grid = TorusGrid::new(r, n);
            for k in active_shells(&grid) {
                let norm = sinfty_norm(&grid, |xi| phi_shell(k, xi));
                assert!(norm <= 6.0, "shell kernel L1 = {norm} at k = {k}, R = {r}");
            }
        }
    }
}
