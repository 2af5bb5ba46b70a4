//! Dirichlet-Neumann operator on the torus, two ways.
//!
//! The main route expands the operator around the flat surface: a Hilbert
//! transform plus a series of perturbation operators `R_n`, each of order
//! `n` in the surface elevation. Splitting the series into even and odd
//! parts `T_1` and `T_2` gives a fixed-point problem
//!
//! ```text
//! (I + T_1) psi = (H_0 + T_2) phi,        G(h) phi = -d/dx psi,
//! ```
//!
//! which contracts when the surface is small. The `R_n` come in two
//! independent implementations: exact frequency-space multipliers for
//! `n = 0, 1`, and a physical-space quadrature with a periodized kernel for
//! every `n`. The second route, [`dn_collocation_oracle`], bypasses the
//! series entirely by fitting a harmonic extension in the fluid domain and
//! reading off its normal derivative; it serves as the reference for
//! convergence studies of the series truncation.
//!
//! The module also carries the quadratic truncations of the derived
//! quantities (`B`, `V`, their time derivatives, and the Taylor coefficient
//! `alpha` of the good-unknown change of variables). These are diagnostic
//! formulas used by the tests and by the energy scans, not part of the
//! solver path.

use crate::cutoff::sgn;
use crate::grid::SpectralField;
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DnError {
    #[error("series divergence: residual grew from {previous:.3e} to {current:.3e} at iteration {iteration}")]
    SeriesDivergence {
        iteration: u32,
        previous: f64,
        current: f64,
    },
    #[error("fixed point did not reach tolerance: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { iterations: u32, residual: f64 },
    #[error("beta undefined: 1 + alpha reaches {min:.3e}, surface too steep for this regime")]
    BetaUndefined { min: f64 },
}

/// Truncation and iteration knobs for [`dn_series`].
#[derive(Debug, Clone)]
pub struct DNConfig {
    /// Expansion order in the surface elevation kept by the series. The
    /// operator `R_n` carries `n + 1` powers of the elevation, so order
    /// `n_max` retains `R_0 .. R_{n_max - 1}` and the truncation error is
    /// `O(amplitude^{n_max + 1})`.
    pub n_max: u32,
    /// Relative fixed-point tolerance on `psi`.
    pub tol: f64,
    /// Iteration cap for the fixed point.
    pub max_iters: u32,
    /// Bandwidth of the collocation oracle when driven from this config.
    pub collocation_bandwidth: usize,
    /// Evaluate `R_1` through the periodized quadrature instead of the
    /// multiplier composition [`r1_fast`]. The two routes agree to the
    /// quadrature accuracy; the flag exists for cross-checking, not speed.
    pub r1_quadrature: bool,
}

impl Default for DNConfig {
    fn default() -> Self {
        DNConfig {
            n_max: 4,
            tol: 1e-12,
            max_iters: 60,
            collocation_bandwidth: 16,
            r1_quadrature: false,
        }
    }
}

/// Output of the series solve.
#[derive(Debug, Clone)]
pub struct DNResult {
    /// `G(h) phi = -d/dx psi`.
    pub g_phi: SpectralField,
    /// Conjugate trace solving the fixed-point equation.
    pub psi: SpectralField,
    /// Vertical velocity component at the surface.
    pub b: SpectralField,
    /// Horizontal velocity component at the surface.
    pub v: SpectralField,
    pub iterations: u32,
    pub residual: f64,
}

/// The good-unknown package built on top of a DN solve.
#[derive(Debug, Clone)]
pub struct GoodUnknowns {
    /// `omega = phi - T_B h`.
    pub omega: SpectralField,
    pub alpha: SpectralField,
    /// `beta = sqrt(1 + alpha) - 1`, pointwise.
    pub beta: SpectralField,
    /// `h* = h + T_beta h`.
    pub h_star: SpectralField,
    /// `omega* = |d/dx|^{1/2} omega`.
    pub omega_star: SpectralField,
    /// Complex combination `h* + i omega*` sampled on the grid.
    pub u: Vec<Complex64>,
}

/// How to produce `alpha` in [`good_unknowns`].
pub enum AlphaMode<'a> {
    /// Centered finite difference of `B` from two adjacent snapshots, plus
    /// the transport term `V d/dx B`.
    FiniteDifference {
        b_minus: &'a SpectralField,
        b_plus: &'a SpectralField,
        dt: f64,
    },
    /// Quadratic truncation `-|d/dx| h + alpha_2(h, phi)`.
    Quadratic,
}

/// First perturbation operator as an exact bilinear multiplier:
///
/// ```text
/// (R_0 f)^(xi) = 1/(2 pi R) sum_eta [sgn(xi) - sgn(xi - eta)] (xi - eta)
///                fhat(xi - eta) hhat(eta).
/// ```
pub fn r0_apply(h: &SpectralField, f: &SpectralField) -> SpectralField {
    SpectralField::bilinear(f, h, |rho, eta| (sgn(rho + eta) - sgn(rho)) * rho)
}

/// Second perturbation operator as an exact trilinear multiplier, quadratic
/// in `h`. The symbol, with `sigma` the frequency of `f` and `eta, rho` the
/// two `h` frequencies, is
///
/// ```text
/// (i/2) sigma [ |sigma| + |sigma+eta+rho| - |sigma+eta| - |sigma+rho| ].
/// ```
pub fn r1_apply(h: &SpectralField, f: &SpectralField) -> SpectralField {
    let mut out = SpectralField::trilinear(f, h, h, |sigma, eta, rho| {
        let xi = sigma + eta + rho;
        0.5 * sigma * (sigma.abs() + xi.abs() - (sigma + eta).abs() - (sigma + rho).abs())
    });
    for c in out.hat_mut() {
        *c *= Complex64::new(0.0, 1.0);
    }
    out
}

/// `R_0` assembled from dealiased products and Fourier multipliers:
///
/// ```text
/// R_0 f = -H_0 (h f') - h |d/dx| f,
/// ```
///
/// which matches the bilinear multiplier of [`r0_apply`] term by term. At
/// `O(N log N)` this is the route the series solver takes; the explicit
/// frequency sum stays as the cross-check oracle.
pub fn r0_fast(h: &SpectralField, f: &SpectralField) -> SpectralField {
    h.product(&f.dx())
        .h0()
        .scale(-1.0)
        .sub(&h.product(&f.abs_dx()))
}

/// `R_1` assembled the same way:
///
/// ```text
/// R_1 f = (1/2) h^2 |d/dx| f' + (1/2) |d/dx| (h^2 f') - h |d/dx| (h f'),
/// ```
///
/// matching the trilinear multiplier of [`r1_apply`] after symmetrizing the
/// two elevation slots.
pub fn r1_fast(h: &SpectralField, f: &SpectralField) -> SpectralField {
    let fp = f.dx();
    let h2 = h.product(h);
    h2.product(&fp.abs_dx())
        .scale(0.5)
        .add(&h2.product(&fp).abs_dx().scale(0.5))
        .sub(&h.product(&h.product(&fp).abs_dx()))
}

/// Periodization of the line kernel `1/d^p`: the lattice sum
/// `S_p(d) = sum_m 1/(d - 2 pi R m)^p` in closed form, with `u = d/(2R)`
/// and `c = 1/(2R)`. Each is `-1/p` times the derivative of the previous
/// one, starting from the cotangent sum.
fn s_lattice(p: u32, u: f64, c: f64) -> f64 {
    let s = u.sin();
    let co = u.cos();
    match p {
        1 => c * co / s,
        2 => c.powi(2) / s.powi(2),
        3 => c.powi(3) * co / s.powi(3),
        4 => c.powi(4) * (1.0 + 2.0 * co * co) / (3.0 * s.powi(4)),
        5 => c.powi(5) * co * (2.0 + co * co) / (3.0 * s.powi(5)),
        6 => c.powi(6) * (2.0 + 11.0 * co * co + 2.0 * co.powi(4)) / (15.0 * s.powi(6)),
        _ => panic!("lattice kernel order {p} not tabulated (raise the table to go past n = 4)"),
    }
}

/// General perturbation operator by physical-space quadrature:
///
/// ```text
/// (R_n f)(a) = 1/pi int [h(a) - h(b) - h'(b)(a - b)] / (a - b)^2
///              * ((h(a) - h(b)) / (a - b))^n f(b) db,
/// ```
///
/// with the line kernel replaced by its periodization over all translates.
/// Writing `D = h(a) - h(b)`, the periodized integrand is
/// `f(b) [D^{n+1} S_{n+2}(a-b) - h'(b) D^n S_{n+1}(a-b)]`; it is smooth, so
/// the trapezoid rule over the grid converges spectrally. The coincidence
/// node carries the analytic limit `(1/2) h''(a) h'(a)^n f(a)`.
pub fn rn_apply(h: &SpectralField, f: &SpectralField, n: u32) -> SpectralField {
    let grid = h.grid().clone();
    assert_eq!(grid.len(), f.grid().len(), "grid mismatch");
    let hv = h.to_physical();
    let h1 = h.dx().to_physical();
    let h2 = h.dx().dx().to_physical();
    let fv = f.to_physical();
    let step = grid.dx();
    let c = 1.0 / (2.0 * grid.radius());
    let m = grid.len();
    // the lattice kernels depend only on the grid offset i - j; tabulating
    // them once turns the inner loop into plain arithmetic. S_p(-d) flips
    // sign with the parity of p.
    let sign_lo = if (n + 1) % 2 == 1 { -1.0 } else { 1.0 };
    let sign_hi = if (n + 2) % 2 == 1 { -1.0 } else { 1.0 };
    let mut s_lo = vec![0.0; m];
    let mut s_hi = vec![0.0; m];
    for k in 1..m {
        let u = c * k as f64 * step;
        s_lo[k] = s_lattice(n + 1, u, c);
        s_hi[k] = s_lattice(n + 2, u, c);
    }
    let mut out = vec![0.0; m];
    for i in 0..m {
        let mut acc = 0.0;
        for j in 0..m {
            if j == i {
                acc += 0.5 * h2[i] * h1[i].powi(n as i32) * fv[i];
                continue;
            }
            let (lo, hi) = if i > j {
                (s_lo[i - j], s_hi[i - j])
            } else {
                (sign_lo * s_lo[j - i], sign_hi * s_hi[j - i])
            };
            let delta = hv[i] - hv[j];
            let kernel = delta.powi(n as i32 + 1) * hi - h1[j] * delta.powi(n as i32) * lo;
            acc += fv[j] * kernel;
        }
        out[i] = acc * step / PI;
    }
    SpectralField::from_physical(&grid, &out)
}

/// Even part of the series, `T_1 = R_0 - R_2 + R_4 - ...`, truncated to
/// elevation order `n_max` (indices `n < n_max`). Fast multiplier route for
/// `R_0`, quadrature for the rest.
fn t1_apply(h: &SpectralField, psi: &SpectralField, n_max: u32) -> SpectralField {
    let mut out = r0_fast(h, psi);
    let mut sign = -1.0;
    let mut n = 2;
    while n < n_max {
        out = out.add(&rn_apply(h, psi, n).scale(sign));
        sign = -sign;
        n += 2;
    }
    out
}

/// Odd part of the series, `T_2 = R_1 - R_3 + ...`, truncated to elevation
/// order `n_max` (indices `n < n_max`).
fn t2_apply(h: &SpectralField, phi: &SpectralField, n_max: u32, r1_quadrature: bool) -> SpectralField {
    let mut out = SpectralField::zeros(h.grid());
    let mut sign = 1.0;
    let mut n = 1;
    while n < n_max {
        let term = if n == 1 && !r1_quadrature {
            r1_fast(h, phi)
        } else {
            rn_apply(h, phi, n)
        };
        out = out.add(&term.scale(sign));
        sign = -sign;
        n += 2;
    }
    out
}

/// Solve `(I + T_1) psi = (H_0 + T_2) phi` by fixed point and assemble the
/// surface quantities
///
/// ```text
/// G(h) phi = -d/dx psi,
/// V = (d/dx phi + h_x d/dx psi) / (1 + h_x^2),
/// B = (h_x d/dx phi - d/dx psi) / (1 + h_x^2).
/// ```
pub fn dn_series(
    h: &SpectralField,
    phi: &SpectralField,
    cfg: &DNConfig,
) -> Result<DNResult, DnError> {
    let rhs = phi.h0().add(&t2_apply(h, phi, cfg.n_max, cfg.r1_quadrature));
    let scale = rhs.l2_norm().max(1e-300);
    let mut psi = rhs.clone();
    let mut prev_residual = f64::INFINITY;
    let mut iterations = 0;
    let mut residual = f64::INFINITY;
    while iterations < cfg.max_iters {
        let next = rhs.sub(&t1_apply(h, &psi, cfg.n_max));
        residual = next.sub(&psi).l2_norm() / scale;
        psi = next;
        iterations += 1;
        if residual <= cfg.tol {
            break;
        }
        if iterations > 2 && residual > 1.5 * prev_residual {
            return Err(DnError::SeriesDivergence {
                iteration: iterations,
                previous: prev_residual,
                current: residual,
            });
        }
        prev_residual = residual;
    }
    if residual > cfg.tol {
        return Err(DnError::NoConvergence {
            iterations,
            residual,
        });
    }

    let psi_x = psi.dx();
    let g_phi = psi_x.scale(-1.0);
    let grid = h.grid();
    let hx = h.dx().to_physical();
    let phx = phi.dx().to_physical();
    let psx = psi_x.to_physical();
    let mut v = vec![0.0; grid.len()];
    let mut b = vec![0.0; grid.len()];
    for i in 0..grid.len() {
        let denom = 1.0 + hx[i] * hx[i];
        v[i] = (phx[i] + hx[i] * psx[i]) / denom;
        b[i] = (hx[i] * phx[i] - psx[i]) / denom;
    }
    Ok(DNResult {
        g_phi,
        psi,
        b: SpectralField::from_physical(grid, &b),
        v: SpectralField::from_physical(grid, &v),
        iterations,
        residual,
    })
}

/// Evaluate a field at an arbitrary point by direct Fourier summation.
fn eval_field(f: &SpectralField, x: f64) -> Complex64 {
    let grid = f.grid();
    let b = grid.band_limit();
    let mut acc = Complex64::new(0.0, 0.0);
    for m in -b..=b {
        let xi = m as f64 / grid.radius();
        acc += f.coeff(m) * Complex64::new(0.0, xi * x).exp();
    }
    acc / grid.period()
}

/// Independent oracle for `G(h) phi`: fit a harmonic function
/// `Phi(x, y) = a_0 + sum_{0 < |xi| <= K/R} a_xi e^{i xi x + |xi| y}`
/// (bounded in the fluid `y < h`) to the Dirichlet data `phi` at `4K`
/// collocation nodes on the surface, then return the conormal derivative
/// `(d/dy Phi - h_x d/dx Phi)` along the surface, sampled on `phi`'s grid.
///
/// Least squares with `2K + 1` unknowns and `4K` equations; the second
/// return value is the condition number of the collocation matrix, which
/// degrades as `K ||h||_inf / R` grows.
pub fn dn_collocation_oracle(
    h: &SpectralField,
    phi: &SpectralField,
    k: usize,
) -> (SpectralField, f64) {
    use nalgebra::{Complex, DMatrix, DVector};

    let grid = phi.grid();
    let r = grid.radius();
    let nodes = 4 * k;
    let ncols = 2 * k + 1;
    // column frequencies: 0, then +-1/R ... +-K/R
    let mut freqs = vec![0.0f64];
    for m in 1..=k as i64 {
        freqs.push(m as f64 / r);
        freqs.push(-(m as f64) / r);
    }

    let mut a = DMatrix::<Complex<f64>>::zeros(nodes, ncols);
    let mut rhs = DVector::<Complex<f64>>::zeros(nodes);
    for j in 0..nodes {
        let x = 2.0 * PI * r * j as f64 / nodes as f64;
        let y = eval_field(h, x).re;
        for (col, &xi) in freqs.iter().enumerate() {
            let z = Complex64::new(xi.abs() * y, xi * x).exp();
            a[(j, col)] = Complex::new(z.re, z.im);
        }
        let p = eval_field(phi, x);
        rhs[j] = Complex::new(p.re, p.im);
    }

    let svd = a.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = smax / smin.max(1e-300);
    let coeffs = svd.solve(&rhs, 0.0).expect("least squares solve");

    let hx = h.dx().to_physical();
    let hv = h.to_physical();
    let mut out = vec![0.0; grid.len()];
    for (i, &x) in grid.points().iter().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (col, &xi) in freqs.iter().enumerate() {
            let basis = Complex64::new(xi.abs() * hv[i], xi * x).exp();
            let weight = Complex64::new(xi.abs(), -hx[i] * xi);
            let c = Complex64::new(coeffs[col].re, coeffs[col].im);
            acc += c * weight * basis;
        }
        out[i] = acc.re;
    }
    (SpectralField::from_physical(grid, &out), condition)
}

/// Assemble the good unknowns from a DN solve.
pub fn good_unknowns(
    h: &SpectralField,
    phi: &SpectralField,
    dn: &DNResult,
    mode: AlphaMode,
) -> Result<GoodUnknowns, DnError> {
    let alpha = match mode {
        AlphaMode::FiniteDifference {
            b_minus,
            b_plus,
            dt,
        } => {
            let db = b_plus.sub(b_minus).scale(1.0 / (2.0 * dt));
            db.add(&dn.v.product(&dn.b.dx()))
        }
        AlphaMode::Quadratic => h.abs_dx().scale(-1.0).add(&alpha2(h, phi)),
    };

    let av = alpha.to_physical();
    let min = av.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= -1.0 {
        return Err(DnError::BetaUndefined { min: 1.0 + min });
    }
    let bv: Vec<f64> = av.iter().map(|&a| (1.0 + a).sqrt() - 1.0).collect();
    let beta = SpectralField::from_physical(h.grid(), &bv);

    let omega = phi.sub(&SpectralField::paraproduct(&dn.b, h));
    let h_star = h.add(&SpectralField::paraproduct(&beta, h));
    let omega_star = omega.abs_dx_pow(0.5);
    let u: Vec<Complex64> = h_star
        .to_physical()
        .iter()
        .zip(omega_star.to_physical())
        .map(|(&re, im)| Complex64::new(re, im))
        .collect();
    Ok(GoodUnknowns {
        omega,
        alpha,
        beta,
        h_star,
        omega_star,
        u,
    })
}

// ---------------------------------------------------------------------------
// Quadratic truncations of the derived surface quantities. All are exact
// through second order in the data; the dropped remainders are cubic.

/// Quadratic part of `d/dt h`: `-d/dx(h d/dx phi) - |d/dx|(h |d/dx| phi)`.
pub fn h_dot2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    let a = h.product(&phi.dx()).dx();
    let b = h.product(&phi.abs_dx()).abs_dx();
    a.add(&b).scale(-1.0)
}

/// Quadratic part of `d/dt phi`: `-(d/dx phi)^2/2 + (|d/dx| phi)^2/2`.
pub fn phi_dot2(phi: &SpectralField) -> SpectralField {
    let px = phi.dx();
    let pa = phi.abs_dx();
    pa.product(&pa).sub(&px.product(&px)).scale(0.5)
}

/// Quadratic part of `B`: `-|d/dx|(h |d/dx| phi) - h d^2/dx^2 phi`.
pub fn b2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    let a = h.product(&phi.abs_dx()).abs_dx();
    let b = h.product(&phi.dx().dx());
    a.add(&b).scale(-1.0)
}

/// Quadratic part of `V`: `-d/dx h |d/dx| phi`.
pub fn v2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    h.dx().product(&phi.abs_dx()).scale(-1.0)
}

/// Quadratic part of `d/dt B`.
pub fn b_dot2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    let px = phi.dx();
    let pa = phi.abs_dx();
    let ha = h.abs_dx();
    px.product(&px)
        .abs_dx()
        .scale(-0.5)
        .sub(&pa.product(&pa).abs_dx().scale(0.5))
        .sub(&pa.product(&phi.dx().dx()))
        .add(&h.product(&h.dx().dx()))
        .add(&h.product(&ha).abs_dx())
}

/// Quadratic part of `d/dt V`: `-d/dx (d/dx phi)^2 / 2 + d/dx h |d/dx| h`.
pub fn v_dot2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    let px = phi.dx();
    px.product(&px)
        .dx()
        .scale(-0.5)
        .add(&h.dx().product(&h.abs_dx()))
}

/// Quadratic part of `d^2/dt^2 B`.
pub fn b_ddot2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    let hx = h.dx();
    let ha = h.abs_dx();
    let px = phi.dx();
    let pa = phi.abs_dx();
    hx.product(&px)
        .abs_dx()
        .scale(2.0)
        .add(&ha.product(&pa).abs_dx().scale(2.0))
        .add(&h.dx().dx().product(&pa))
        .add(&ha.product(&phi.dx().dx()))
        .sub(&hx.product(&pa.dx()).scale(2.0))
}

/// Quadratic part of `alpha`; differs from [`b_dot2`] plus transport only
/// in the cross term `d/dx phi d/dx |d/dx| phi`.
pub fn alpha2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    b_dot2(h, phi).add(&phi.dx().product(&phi.abs_dx().dx()))
}

/// Quadratic part of `d/dt alpha`.
pub fn alpha_dot2(h: &SpectralField, phi: &SpectralField) -> SpectralField {
    let hx = h.dx();
    let ha = h.abs_dx();
    let px = phi.dx();
    let pa = phi.abs_dx();
    hx.product(&px)
        .add(&ha.product(&pa))
        .abs_dx()
        .scale(2.0)
        .add(&h.dx().dx().product(&pa))
        .add(&ha.product(&phi.dx().dx()))
        .sub(&hx.product(&pa.dx()).scale(3.0))
        .sub(&ha.dx().product(&px))
}
