//! Torus grids and FFT-backed spectral fields.
//!
//! Conventions (fixed once, used verbatim everywhere):
//!
//! * the torus has circumference `2*pi*R`, grid points `x_j = 2*pi*R*j/N`;
//! * admissible frequencies are `xi = n / R`, `n` integer, `|n| <= N/2`;
//! * the transform pair is
//!   `fhat(xi) = (2*pi*R/N) * sum_j f(x_j) e^{-i xi x_j}` and
//!   `f(x_j) = 1/(2*pi*R) * sum_n fhat(xi_n) e^{i xi_n x_j}`;
//! * consequently a pointwise product turns into the twisted convolution
//!   `(fg)^(xi) = 1/(2*pi*R) * sum_eta fhat(xi - eta) ghat(eta)`.
//!
//! Fields are band-limited to `|n| <= N/4` (the "working band"); quadratic
//! and cubic expressions formed through the bilinear/trilinear appliers then
//! stay below the Nyquist frequency and no dealiasing error occurs.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

use crate::cutoff::{self, phi_shell};

/// Uniform grid on the torus of circumference `2*pi*R` with `N` points.
#[derive(Clone)]
pub struct TorusGrid {
    r: f64,
    n: usize,
    fft: Arc<dyn Fft<f64>>,
    ifft: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for TorusGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TorusGrid")
            .field("r", &self.r)
            .field("n", &self.n)
            .finish()
    }
}

impl TorusGrid {
    /// `r` is the torus radius parameter (circumference `2*pi*r`), `n` the
    /// number of grid points; `n` must be even.
    pub fn new(r: f64, n: usize) -> Self {
        assert!(r > 0.0, "torus radius must be positive");
        assert!(n >= 4 && n % 2 == 0, "grid size must be even and >= 4");
        let mut planner = FftPlanner::new();
        TorusGrid {
            r,
            n,
            fft: planner.plan_fft_forward(n),
            ifft: planner.plan_fft_inverse(n),
        }
    }

    pub fn radius(&self) -> f64 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Circumference `2*pi*R`.
    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.r
    }

    /// Grid spacing.
    pub fn dx(&self) -> f64 {
        self.period() / self.n as f64
    }

    /// Physical grid points.
    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.dx() * j as f64).collect()
    }

    /// Signed mode index for FFT bin `i` (`0..N`), in `-N/2+1 ..= N/2`.
    pub fn mode(&self, i: usize) -> i64 {
        let h = self.n as i64 / 2;
        let i = i as i64;
        if i <= h {
            i
        } else {
            i - self.n as i64
        }
    }

    /// FFT bin holding signed mode `m`.
    pub fn bin(&self, m: i64) -> usize {
        let n = self.n as i64;
        (((m % n) + n) % n) as usize
    }

    /// Frequency of FFT bin `i`: `xi = mode / R`.
    pub fn freq(&self, i: usize) -> f64 {
        self.mode(i) as f64 / self.r
    }

    /// Largest retained mode magnitude (the working band is `|n| <= N/4`).
    pub fn band_limit(&self) -> i64 {
        self.n as i64 / 4
    }

    /// Iterator over FFT bins inside the working band, excluding nothing.
    pub fn band_bins(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.mode(i).abs() <= self.band_limit())
    }
}

/// A complex field on a torus grid, stored by its spectral coefficients
/// `hat[i] = fhat(freq(i))` in FFT bin order. Real-valued fields keep the
/// conjugate symmetry `fhat(-xi) = conj(fhat(xi))` (enforced on request,
/// never silently).
#[derive(Clone, Debug)]
pub struct SpectralField {
    grid: TorusGrid,
    hat: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(grid: &TorusGrid) -> Self {
        SpectralField {
            grid: grid.clone(),
            hat: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    pub fn from_hat(grid: &TorusGrid, hat: Vec<Complex64>) -> Self {
        assert_eq!(hat.len(), grid.len());
        SpectralField {
            grid: grid.clone(),
            hat,
        }
    }

    /// Forward transform of physical samples.
    pub fn from_physical(grid: &TorusGrid, values: &[f64]) -> Self {
        assert_eq!(values.len(), grid.len());
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        grid.fft.process(&mut buf);
        let scale = grid.period() / grid.len() as f64;
        for c in buf.iter_mut() {
            *c *= scale;
        }
        SpectralField {
            grid: grid.clone(),
            hat: buf,
        }
    }

    /// Sample a closure on the grid and transform.
    pub fn from_fn(grid: &TorusGrid, f: impl Fn(f64) -> f64) -> Self {
        let vals: Vec<f64> = grid.points().iter().map(|&x| f(x)).collect();
        Self::from_physical(grid, &vals)
    }

    /// Seeded random real field supported on modes `1..=band` (and their
    /// conjugates), with coefficients of size `amp * period / band`.
    pub fn random_real(grid: &TorusGrid, band: i64, seed: u64, amp: f64) -> Self {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut f = Self::zeros(grid);
        for m in 1..=band {
            let re = rng.gen_range(-1.0..1.0);
            let im = rng.gen_range(-1.0..1.0);
            let c = Complex64::new(re, im) * amp * grid.period() / band as f64;
            f.set_coeff(m, c);
            f.set_coeff(-m, c.conj());
        }
        f
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn hat(&self) -> &[Complex64] {
        &self.hat
    }

    pub fn hat_mut(&mut self) -> &mut [Complex64] {
        &mut self.hat
    }

    /// Coefficient of signed mode `m` (zero outside the FFT range).
    pub fn coeff(&self, m: i64) -> Complex64 {
        if m.abs() > self.grid.len() as i64 / 2 {
            Complex64::new(0.0, 0.0)
        } else {
            self.hat[self.grid.bin(m)]
        }
    }

    pub fn set_coeff(&mut self, m: i64, v: Complex64) {
        let bin = self.grid.bin(m);
        self.hat[bin] = v;
    }

    /// Inverse transform; returns complex physical samples.
    pub fn to_physical_complex(&self) -> Vec<Complex64> {
        let mut buf = self.hat.clone();
        self.grid.ifft.process(&mut buf);
        let scale = 1.0 / self.grid.period();
        for c in buf.iter_mut() {
            *c *= scale;
        }
        buf
    }

    /// Inverse transform of a real field (imaginary parts are discarded; use
    /// `assert_real` first if in doubt).
    pub fn to_physical(&self) -> Vec<f64> {
        self.to_physical_complex().iter().map(|c| c.re).collect()
    }

    /// Largest imaginary residue of the physical samples, to detect symmetry
    /// violations in tests.
    pub fn imag_residue(&self) -> f64 {
        self.to_physical_complex()
            .iter()
            .map(|c| c.im.abs())
            .fold(0.0, f64::max)
    }

    /// Apply a frequency multiplier `sigma(xi)`.
    pub fn apply_multiplier(&self, sigma: impl Fn(f64) -> Complex64) -> Self {
        let mut out = self.clone();
        for i in 0..out.hat.len() {
            out.hat[i] *= sigma(self.grid.freq(i));
        }
        out
    }

    /// Real even multiplier helper.
    pub fn apply_real_multiplier(&self, sigma: impl Fn(f64) -> f64) -> Self {
        self.apply_multiplier(|xi| Complex64::new(sigma(xi), 0.0))
    }

    /// `d/dx`: multiplier `i xi`.
    pub fn dx(&self) -> Self {
        self.apply_multiplier(|xi| Complex64::new(0.0, xi))
    }

    /// `|d/dx|`: multiplier `|xi|`.
    pub fn abs_dx(&self) -> Self {
        self.apply_real_multiplier(|xi| xi.abs())
    }

    /// `|d/dx|^s` for real `s`; the zero mode is annihilated for `s != 0`.
    pub fn abs_dx_pow(&self, s: f64) -> Self {
        self.apply_real_multiplier(|xi| if xi == 0.0 { 0.0 } else { xi.abs().powf(s) })
    }

    /// Hilbert-type operator `H_0` with multiplier `i*sgn(xi)`, so that
    /// `-d/dx H_0 = |d/dx|`.
    pub fn h0(&self) -> Self {
        self.apply_multiplier(|xi| Complex64::new(0.0, cutoff::sgn(xi)))
    }

    /// Littlewood-Paley piece `P_k f`. Returns the zero field if
    /// `2^k * R <= 1/2` (the shell contains no lattice frequency).
    pub fn lp_project(&self, k: i32) -> Self {
        if cutoff::pow2(k) * self.grid.radius() <= 0.5 {
            return Self::zeros(&self.grid);
        }
        self.apply_real_multiplier(|xi| phi_shell(k, xi))
    }

    /// Low-frequency projection `P_{-inf} f`: the mean value as a constant
    /// field.
    pub fn lp_mean(&self) -> Self {
        let mut out = Self::zeros(&self.grid);
        out.hat[0] = self.hat[0];
        out
    }

    /// Mean value `1/(2 pi R) * integral of f`.
    pub fn mean(&self) -> Complex64 {
        self.hat[0] / self.grid.period()
    }

    /// `integral f * conj(g) dx = 1/(2 pi R) sum fhat conj(ghat)` (Parseval).
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.hat.len(), other.hat.len());
        let s: Complex64 = self
            .hat
            .iter()
            .zip(&other.hat)
            .map(|(a, b)| a * b.conj())
            .sum();
        s / self.grid.period()
    }

    /// `L^2` norm on the torus.
    pub fn l2_norm(&self) -> f64 {
        self.inner(self).re.max(0.0).sqrt()
    }

    /// Sup norm of the physical samples.
    pub fn linf_norm(&self) -> f64 {
        self.to_physical_complex()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Truncate to the working band `|n| <= N/4`.
    pub fn band_limited(&self) -> Self {
        let mut out = self.clone();
        let b = self.grid.band_limit();
        for i in 0..out.hat.len() {
            if self.grid.mode(i).abs() > b {
                out.hat[i] = Complex64::new(0.0, 0.0);
            }
        }
        out
    }

    pub fn scale(&self, a: f64) -> Self {
        let mut out = self.clone();
        for c in out.hat.iter_mut() {
            *c *= a;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, d) in out.hat.iter_mut().zip(&other.hat) {
            *c += d;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, d) in out.hat.iter_mut().zip(&other.hat) {
            *c -= d;
        }
        out
    }

    /// Pointwise product computed on a zero-padded grid of twice the size,
    /// then restricted back. Alias-free for band-limited inputs.
    pub fn product(&self, other: &Self) -> Self {
        let fine = TorusGrid::new(self.grid.radius(), self.grid.len() * 2);
        let a = self.prolong(&fine);
        let b = other.prolong(&fine);
        let pa = a.to_physical_complex();
        let pb = b.to_physical_complex();
        let prod: Vec<Complex64> = pa.iter().zip(&pb).map(|(x, y)| x * y).collect();
        let mut buf = prod;
        fine.fft.process(&mut buf);
        let scale = fine.period() / fine.len() as f64;
        for c in buf.iter_mut() {
            *c *= scale;
        }
        let fine_field = SpectralField {
            grid: fine,
            hat: buf,
        };
        fine_field.restrict(&self.grid)
    }

    /// Zero-padding onto a finer grid with the same radius.
    pub fn prolong(&self, fine: &TorusGrid) -> Self {
        assert!(fine.len() >= self.grid.len());
        assert_eq!(fine.radius(), self.grid.radius());
        let mut out = SpectralField::zeros(fine);
        let h = self.grid.len() as i64 / 2;
        for m in -h + 1..=h {
            out.set_coeff(m, self.coeff(m));
        }
        out
    }

    /// Spectral restriction onto a coarser grid with the same radius.
    pub fn restrict(&self, coarse: &TorusGrid) -> Self {
        assert!(coarse.len() <= self.grid.len());
        assert_eq!(coarse.radius(), self.grid.radius());
        if coarse.len() == self.grid.len() {
            return self.clone();
        }
        let mut out = SpectralField::zeros(coarse);
        let h = coarse.len() as i64 / 2;
        for m in -h + 1..h {
            out.set_coeff(m, self.coeff(m));
        }
        // Nyquist bin of the coarse grid: fold the two fine coefficients.
        out.set_coeff(h, self.coeff(h) + self.coeff(-h));
        out
    }

    /// Paraproduct `T_a f` with the standard cutoff:
    /// `(T_a f)^(xi) = 1/(2 pi R) sum_eta chi(xi - eta, eta) ahat(xi - eta) fhat(eta)`.
    pub fn paraproduct(a: &Self, f: &Self) -> Self {
        Self::bilinear(a, f, |rho, eta| cutoff::chi(rho, eta))
    }

    /// Balanced remainder `H(f, g) = f g - T_f g - T_g f`, computed directly
    /// with the multiplier `1 - chi(x, y) - chi(y, x)`.
    pub fn balanced_remainder(f: &Self, g: &Self) -> Self {
        Self::bilinear(f, g, |rho, eta| cutoff::chi_tilde(rho, eta))
    }

    /// Generic bilinear symbol application:
    /// `out^(xi) = 1/(2 pi R) sum_eta m(xi - eta, eta) fhat(xi - eta) ghat(eta)`,
    /// restricted to the working band of `f`'s grid. O(N^2) but exact.
    pub fn bilinear(f: &Self, g: &Self, sym: impl Fn(f64, f64) -> f64) -> Self {
        let grid = &f.grid;
        assert_eq!(grid.len(), g.grid.len());
        let b = grid.band_limit();
        let inv = 1.0 / grid.period();
        let mut out = Self::zeros(grid);
        for m_out in -b..=b {
            let mut acc = Complex64::new(0.0, 0.0);
            for m_eta in -b..=b {
                let m_rho = m_out - m_eta;
                if m_rho.abs() > b {
                    continue;
                }
                let fv = f.coeff(m_rho);
                let gv = g.coeff(m_eta);
                if fv == Complex64::new(0.0, 0.0) || gv == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let rho = m_rho as f64 / grid.radius();
                let eta = m_eta as f64 / grid.radius();
                acc += sym(rho, eta) * fv * gv;
            }
            out.set_coeff(m_out, acc * inv);
        }
        out
    }

    /// Generic trilinear symbol application:
    /// `out^(xi) = (2 pi R)^{-2} sum_{sigma+eta+rho=xi} m(sigma, eta, rho)
    ///             fhat(sigma) ghat(eta) hhat(rho)`.
    pub fn trilinear(
        f: &Self,
        g: &Self,
        h: &Self,
        sym: impl Fn(f64, f64, f64) -> f64,
    ) -> Self {
        let grid = &f.grid;
        let b = grid.band_limit();
        let inv = 1.0 / (grid.period() * grid.period());
        let mut out = Self::zeros(grid);
        for m_out in -b..=b {
            let mut acc = Complex64::new(0.0, 0.0);
            for m_sigma in -b..=b {
                let fv = f.coeff(m_sigma);
                if fv == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for m_eta in -b..=b {
                    let m_rho = m_out - m_sigma - m_eta;
                    if m_rho.abs() > b {
                        continue;
                    }
                    let gv = g.coeff(m_eta);
                    let hv = h.coeff(m_rho);
                    if gv == Complex64::new(0.0, 0.0) || hv == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let sigma = m_sigma as f64 / grid.radius();
                    let eta = m_eta as f64 / grid.radius();
                    let rho = m_rho as f64 / grid.radius();
                    acc += sym(sigma, eta, rho) * fv * gv * hv;
                }
            }
            out.set_coeff(m_out, acc * inv);
        }
        out
    }

    /// Scalar hyperplane contraction of three fields against a symbol:
    /// `(2 pi R)^{-2} sum_{xi+eta+rho=0} m(xi, eta, rho) fhat(xi) ghat(eta) hhat(rho)`.
    pub fn contract3(
        f: &Self,
        g: &Self,
        h: &Self,
        sym: impl Fn(f64, f64, f64) -> f64,
    ) -> Complex64 {
        let grid = &f.grid;
        let b = grid.band_limit();
        let inv = 1.0 / (grid.period() * grid.period());
        let mut acc = Complex64::new(0.0, 0.0);
        for m_xi in -b..=b {
            let fv = f.coeff(m_xi);
            if fv == Complex64::new(0.0, 0.0) {
                continue;
            }
            for m_eta in -b..=b {
                let m_rho = -m_xi - m_eta;
                if m_rho.abs() > b {
                    continue;
                }
                let gv = g.coeff(m_eta);
                let hv = h.coeff(m_rho);
                if gv == Complex64::new(0.0, 0.0) || hv == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let xi = m_xi as f64 / grid.radius();
                let eta = m_eta as f64 / grid.radius();
                let rho = m_rho as f64 / grid.radius();
                acc += sym(xi, eta, rho) * fv * gv * hv;
            }
        }
        acc * inv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn grid() -> TorusGrid {
        TorusGrid::new(1.0, 64)
    }

    #[test]
    fn transform_roundtrip() {
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| (3.0 * x).cos() + 0.25 * (5.0 * x).sin() - 1.5);
        let back = f.to_physical();
        let orig: Vec<f64> = g
            .points()
            .iter()
            .map(|&x| (3.0 * x).cos() + 0.25 * (5.0 * x).sin() - 1.5)
            .collect();
        for (a, b) in back.iter().zip(&orig) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-13);
        }
    }

    #[test]
    fn coefficient_normalization() {
        // f = e^{i 2 x} on R = 1: fhat(2) = 2 pi R = 2 pi, all else 0.
        let g = grid();
        let vals: Vec<f64> = g.points().iter().map(|&x| (2.0 * x).cos()).collect();
        let f = SpectralField::from_physical(&g, &vals);
        // cos(2x) = (e^{2ix} + e^{-2ix})/2 so fhat(+-2) = pi each
        assert_abs_diff_eq!(f.coeff(2).re, std::f64::consts::PI, epsilon = 1e-10);
        assert_abs_diff_eq!(f.coeff(-2).re, std::f64::consts::PI, epsilon = 1e-10);
        assert_abs_diff_eq!(f.coeff(3).norm(), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn fractional_radius_frequencies() {
        // R = 2: frequencies are half-integers, derivative of cos(x/2*3) etc.
        let g = TorusGrid::new(2.0, 64);
        let f = SpectralField::from_fn(&g, |x| (1.5 * x).sin());
        let d = f.dx().to_physical();
        let expect: Vec<f64> = g.points().iter().map(|&x| 1.5 * (1.5 * x).cos()).collect();
        for (a, b) in d.iter().zip(&expect) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn parseval() {
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| (4.0 * x).cos());
        // integral cos^2(4x) over [0, 2 pi) = pi
        assert_abs_diff_eq!(f.inner(&f).re, std::f64::consts::PI, epsilon = 1e-10);
    }

    #[test]
    fn h0_reference() {
        // H0 cos = -sin
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| x.cos());
        let h = f.h0().to_physical();
        for (v, &x) in h.iter().zip(g.points().iter()) {
            assert_abs_diff_eq!(*v, -x.sin(), epsilon = 1e-12);
        }
    }

    #[test]
    fn abs_dx_from_h0() {
        // -d/dx H0 = |d/dx|
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| (3.0 * x).cos() + (7.0 * x).sin());
        let a = f.h0().dx().scale(-1.0);
        let b = f.abs_dx();
        for (x, y) in a.hat().iter().zip(b.hat()) {
            assert_abs_diff_eq!((x - y).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn product_matches_physical() {
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| (2.0 * x).cos());
        let h = SpectralField::from_fn(&g, |x| (3.0 * x).sin() + 0.5);
        let p = f.product(&h).to_physical();
        for (v, &x) in p.iter().zip(g.points().iter()) {
            assert_abs_diff_eq!(*v, (2.0 * x).cos() * ((3.0 * x).sin() + 0.5), epsilon = 1e-12);
        }
    }

    #[test]
    fn bilinear_with_unit_symbol_is_product() {
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| (2.0 * x).cos() + 0.3).band_limited();
        let h = SpectralField::from_fn(&g, |x| (5.0 * x).sin() - 0.7).band_limited();
        let viafft = f.product(&h);
        let direct = SpectralField::bilinear(&f, &h, |_, _| 1.0);
        for m in -16..=16i64 {
            assert_abs_diff_eq!((viafft.coeff(m) - direct.coeff(m)).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn paraproduct_decomposition() {
        // T_f g + T_g f + H(f,g) = f g on the working band
        let g = grid();
        let f = SpectralField::from_fn(&g, |x| (2.0 * x).cos() + (9.0 * x).cos()).band_limited();
        let h = SpectralField::from_fn(&g, |x| (3.0 * x).sin() + 0.4 * x.cos()).band_limited();
        let sum = SpectralField::paraproduct(&f, &h)
            .add(&SpectralField::paraproduct(&h, &f))
            .add(&SpectralField::balanced_remainder(&f, &h));
        let prod = f.product(&h);
        for m in -16..=16i64 {
            assert_abs_diff_eq!((sum.coeff(m) - prod.coeff(m)).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn lp_shells_reassemble() {
        let g = TorusGrid::new(4.0, 128);
        let f = SpectralField::from_fn(&g, |x| (x / 4.0 * 3.0).cos() + (x / 4.0 * 11.0).sin());
        let mut total = f.lp_mean();
        for k in -8..12 {
            total = total.add(&f.lp_project(k));
        }
        for m in -32..=32i64 {
            assert_abs_diff_eq!((total.coeff(m) - f.coeff(m)).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn lp_small_shells_dropped() {
        // 2^k R <= 1/2 shells are defined to vanish
        let g = TorusGrid::new(1.0, 64);
        let f = SpectralField::from_fn(&g, |x| x.cos());
        assert_eq!(f.lp_project(-2).l2_norm(), 0.0);
    }
}
