//! The symbol catalog: quadratic, cubic and quartic multipliers of the
//! paradifferential water-wave analysis, together with independently coded
//! closed forms used for cross-checking.
//!
//! All symbols are evaluated pointwise on real frequencies. Everything is
//! generic over the cutoff implementation [`ChiEval`] so the exact-identity
//! verifier can substitute randomized cutoffs that obey the same functional
//! equations (evenness and the translation identity on hyperplanes).
//!
//! Conventions:
//! * `m` is the tempered growth weight of order `n0`;
//! * quartic symbols `K1^a`, `K2^a` and `M1^a`, `M2^a` take arguments
//!   `(xi, eta, rho, sigma)` on the hyperplane `xi+eta+rho+sigma = 0`;
//! * `SK` denotes the antisymmetrized combination entering the resonance
//!   identity, built from the cyclic symmetrization `Kt` of the first three
//!   arguments.

use crate::cutoff::{sgn, ChiEval, CutoffProfile};

/// Weight parameters: order `n0` and saturation `delta`.
#[derive(Debug, Clone, Copy)]
pub struct SymbolParams {
    pub n0: f64,
    pub delta: f64,
}

impl Default for SymbolParams {
    fn default() -> Self {
        SymbolParams {
            n0: 6.0,
            delta: 1e-6,
        }
    }
}

fn half(x: f64) -> f64 {
    x.abs().sqrt()
}

/// Symbol evaluation context: cutoff implementation plus weight parameters.
#[derive(Debug, Clone)]
pub struct SymbolContext<C: ChiEval = CutoffProfile> {
    pub cut: C,
    pub params: SymbolParams,
}

impl Default for SymbolContext<CutoffProfile> {
    fn default() -> Self {
        SymbolContext {
            cut: CutoffProfile,
            params: SymbolParams::default(),
        }
    }
}

impl<C: ChiEval> SymbolContext<C> {
    pub fn new(cut: C, params: SymbolParams) -> Self {
        SymbolContext { cut, params }
    }

    #[inline]
    fn chi(&self, x: f64, y: f64) -> f64 {
        self.cut.chi(x, y)
    }

    #[inline]
    fn chit(&self, x: f64, y: f64) -> f64 {
        self.cut.chi_tilde(x, y)
    }

    /// The saturated weight `m(xi) = phi_{>=0}(xi) <xi>^{n0} / (1 + delta <xi>^{n0})`.
    pub fn m(&self, xi: f64) -> f64 {
        let cut = crate::cutoff::phi_ge(0, xi);
        if cut == 0.0 {
            return 0.0;
        }
        let jap = (1.0 + xi * xi).sqrt().powf(self.params.n0);
        cut * jap / (1.0 + self.params.delta * jap)
    }

    fn m2(&self, xi: f64) -> f64 {
        let v = self.m(xi);
        v * v
    }

    // ---- quadratic layer ------------------------------------------------

    /// Quadratic symbol of the second-order piece of the Dirichlet-Neumann
    /// expansion: `(f, h)` frequencies `(rho, eta)`.
    pub fn q2(&self, rho: f64, eta: f64) -> f64 {
        self.chit(rho, eta) * ((eta + rho) * rho - (eta + rho).abs() * rho.abs())
    }

    /// Cubic symbol of the third-order piece; arguments `(sigma, eta, rho)`.
    pub fn q3(&self, sigma: f64, eta: f64, rho: f64) -> f64 {
        let out = sigma + eta + rho;
        let s = sgn(out);
        let t1 = (1.0 - self.chi(sigma + rho, eta))
            * ((sigma + rho).abs() - sigma.abs() - rho * s);
        let t2 = (1.0 - self.chi(sigma + eta, rho))
            * ((sigma + eta).abs() - sigma.abs() - eta * s);
        let t3 = sigma.abs() - sigma * s;
        out.abs() * sigma.abs() / 2.0 * (t1 + t2 + t3)
    }

    /// Quadratic symbol in the evolution of the reduced velocity potential.
    pub fn l2(&self, rho: f64, eta: f64) -> f64 {
        0.5 * self.chit(rho, eta) * (eta.abs() * rho.abs() + eta * rho)
    }

    /// Cubic symbol in the same evolution; arguments `(sigma, eta, rho)`.
    pub fn l3(&self, sigma: f64, eta: f64, rho: f64) -> f64 {
        eta * rho.abs()
            * ((sigma + rho) * self.chi(eta, sigma + rho) * self.chi(rho, sigma)
                + sigma * self.chi(sigma + rho, eta)
                - sigma * self.chi(rho, sigma + eta)
                - rho * self.chi(eta + rho, sigma)
                + (rho.abs() - (sigma + rho).abs()) * sgn(eta) * self.chit(sigma + rho, eta))
    }

    // ---- good-unknown quadratic symbols ---------------------------------

    pub fn n_ri(&self, rho: f64, eta: f64) -> f64 {
        self.chit(eta, rho) * ((rho + eta) * eta - (rho + eta).abs() * eta.abs()) / half(eta)
            - self.chi(eta, rho) * eta.abs().powf(1.5) / 2.0
    }

    pub fn n_rr(&self, rho: f64, eta: f64) -> f64 {
        self.chi(rho, eta) * (rho.abs() / 2.0) * (half(rho + eta) - half(eta))
    }

    pub fn n_ii(&self, rho: f64, eta: f64) -> f64 {
        self.chit(rho, eta) * half(rho + eta) * (eta.abs() * rho.abs() + eta * rho)
            / (2.0 * half(eta) * half(rho))
            + self.chi(rho, eta) * rho * (half(rho + eta) * eta - half(eta) * (rho + eta))
                / (half(eta) * half(rho))
    }

    /// Symmetrized quadratic symbol `n2_ri`, definitional route.
    pub fn n2_ri_def(&self, rho: f64, eta: f64) -> f64 {
        self.n_ri(rho, eta) - self.chi(rho, eta) * rho.abs() * half(eta) / 2.0
            + (rho + eta) * eta / half(eta) * self.chi(eta, rho)
    }

    /// Symmetrized quadratic symbol `n2_ri`, simplified route.
    pub fn n2_ri(&self, rho: f64, eta: f64) -> f64 {
        self.chit(eta, rho) * ((rho + eta) * eta - (rho + eta).abs() * eta.abs()) / half(eta)
            - rho.abs() * eta.abs() / (2.0 * half(eta)) * self.chi(rho, eta)
            + (2.0 * rho * eta + eta * eta) / (2.0 * half(eta)) * self.chi(eta, rho)
    }

    pub fn n2_rr_def(&self, rho: f64, eta: f64) -> f64 {
        0.5 * (self.n_rr(rho, eta)
            + self.n_rr(eta, rho)
            + 0.5 * self.chi(eta, rho) * eta.abs() * half(rho)
            + 0.5 * self.chi(rho, eta) * rho.abs() * half(eta))
    }

    pub fn n2_rr(&self, rho: f64, eta: f64) -> f64 {
        0.25 * half(rho + eta) * (self.chi(rho, eta) * rho.abs() + self.chi(eta, rho) * eta.abs())
    }

    pub fn n2_ii_def(&self, rho: f64, eta: f64) -> f64 {
        0.5 * (self.n_ii(rho, eta)
            + self.n_ii(eta, rho)
            + (rho + eta) * eta / half(eta) * self.chi(eta, rho)
            + (eta + rho) * rho / half(rho) * self.chi(rho, eta))
    }

    pub fn n2_ii(&self, rho: f64, eta: f64) -> f64 {
        half(rho + eta) * (eta.abs() * rho.abs() + eta * rho) / (2.0 * half(eta) * half(rho))
            - 0.5
                * (self.chi(rho, eta) + self.chi(eta, rho))
                * half(rho + eta)
                * half(eta)
                * half(rho)
    }

    // ---- iterated quadratic symbols -------------------------------------

    pub fn a2_rr(&self, rho: f64, eta: f64) -> f64 {
        0.25 * (rho + eta).abs()
            * (2.0 * rho.abs() + 2.0 * eta.abs()
                - rho.abs() * self.chi(rho, eta)
                - eta.abs() * self.chi(eta, rho))
            - (rho * rho + eta * eta) / 2.0
    }

    pub fn a2_ii(&self, rho: f64, eta: f64) -> f64 {
        ((rho + eta).abs() - rho.abs() - eta.abs()) * (rho * eta - rho.abs() * eta.abs())
            / (2.0 * half(rho) * half(eta))
    }

    pub fn b_sym(&self, rho: f64, eta: f64) -> f64 {
        (-(rho + eta).powi(2) * rho.abs() * self.chi(rho, eta)
            + (2.0 * (rho + eta).abs() - rho.abs() - eta.abs())
                * (rho.abs() * eta.abs() - rho * eta)
            + 2.0 * rho.abs() * rho * eta)
            / half(rho)
    }

    // ---- the cubic energy symbols A, B, D -------------------------------

    /// `D` in its quadratic (definitional) form.
    pub fn d_quadratic(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        let (a, b, c) = (xi.abs(), eta.abs(), rho.abs());
        a * a + b * b + c * c - 2.0 * a * b - 2.0 * a * c - 2.0 * b * c
    }

    /// `D` in factored form, valid only on the hyperplane `xi+eta+rho = 0`.
    pub fn d_factored(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        let (a, b, c) = (xi.abs(), eta.abs(), rho.abs());
        -4.0 * a * b * c / a.max(b).max(c)
    }

    fn a_tilde(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        self.m2(xi) * half(xi) * (eta * rho + self.chit(rho, eta) * eta.abs() * rho.abs())
            / (half(eta) * half(rho))
    }

    /// Fully symmetric cubic symbol `A`.
    pub fn a_sym(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        (self.a_tilde(xi, eta, rho) + self.a_tilde(eta, rho, xi) + self.a_tilde(rho, xi, eta))
            / 3.0
    }

    /// Cubic symbol `B`, symmetric in the first two arguments.
    pub fn b_big(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        let m2x = self.m2(xi);
        let m2e = self.m2(eta);
        let mx = self.m(xi);
        let me = self.m(eta);
        let mr = self.m(rho);
        -1.0 / half(rho)
            * (m2x * self.chit(rho, eta) * (xi * rho + xi.abs() * rho.abs())
                + m2e * self.chit(rho, xi) * (eta * rho + eta.abs() * rho.abs()))
            - rho / half(rho) * (m2x * xi * self.chi(rho, eta) + m2e * eta * self.chi(rho, xi))
            - mx * me * rho.abs().powf(1.5) * (self.chi(rho, eta) + self.chi(rho, xi)) / 2.0
            + mr * half(rho)
                * (xi.abs() * (mr - me) * self.chi(xi, eta)
                    + eta.abs() * (mr - mx) * self.chi(eta, xi))
    }

    /// `A' = A / D` with the factored `D` (hyperplane arguments only).
    pub fn a_prime(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        self.a_sym(xi, eta, rho) / self.d_factored(xi, eta, rho)
    }

    /// `A' = A / D` with the quadratic `D` (no hyperplane assumption).
    pub fn a_prime_def(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        self.a_sym(xi, eta, rho) / self.d_quadratic(xi, eta, rho)
    }

    /// Closed form of `A'` on the hyperplane.
    pub fn a_prime_closed(&self, x: f64, y: f64, z: f64) -> f64 {
        let mx = x.abs().max(y.abs()).max(z.abs());
        mx / (-12.0 * half(x) * half(y) * half(z))
            * (self.m2(x) * (sgn(y) * sgn(z) + self.chit(y, z))
                + self.m2(y) * (sgn(z) * sgn(x) + self.chit(z, x))
                + self.m2(z) * (sgn(x) * sgn(y) + self.chit(x, y)))
    }

    pub fn b_prime(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        self.b_big(xi, eta, rho) / self.d_factored(xi, eta, rho)
    }

    pub fn b_prime_def(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        self.b_big(xi, eta, rho) / self.d_quadratic(xi, eta, rho)
    }

    /// Closed form of `B'` when `|rho|` is the largest of the three.
    pub fn b_prime_closed_last_max(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        let mr = self.m(rho);
        mr * half(rho)
            * (xi.abs() * self.chi(xi, rho) * (mr - self.m(eta))
                + eta.abs() * self.chi(eta, rho) * (mr - self.m(xi)))
            / (-4.0 * xi.abs() * eta.abs())
    }

    /// Closed form of `B'` when `|xi|` is the largest of the three.
    pub fn b_prime_closed_first_max(&self, xi: f64, eta: f64, rho: f64) -> f64 {
        let mx = self.m(xi);
        let me = self.m(eta);
        let mr = self.m(rho);
        0.5 / half(rho) * me * me
            + 0.25 * self.chi(eta, xi) * mr / half(rho) * (mx - mr)
            - self.chi(rho, xi)
                * (xi.abs() * mx * mx + eta.abs() * me * me - rho.abs() * mx * me)
                / (4.0 * eta.abs() * half(rho))
    }

    /// `B''` from `B'` (definitional route; hyperplane arguments).
    pub fn b_dprime(&self, x: f64, y: f64, z: f64) -> f64 {
        -2.0 * self.b_prime(x, y, z) * half(x) * half(y) * half(z)
            + self.b_prime(z, x, y) * half(x) * (z.abs() + y.abs() - x.abs())
            + self.b_prime(z, y, x) * half(y) * (z.abs() + x.abs() - y.abs())
    }

    /// Closed form of `B''` when `|z|` is the largest.
    pub fn b_dprime_closed_z_max(&self, x: f64, y: f64, z: f64) -> f64 {
        half(x) * half(y)
            * ((1.0 - self.chi(y, z)) * self.m2(x) + (1.0 - self.chi(x, z)) * self.m2(y))
    }

    /// Closed form of `B''` when `|x|` is the largest.
    pub fn b_dprime_closed_x_max(&self, x: f64, y: f64, z: f64) -> f64 {
        -0.5 * half(x) * half(y)
            * (2.0 * self.m2(y) + self.chi(y, x) * (self.m2(x) - self.m2(z))
                - self.chi(z, x) * (self.m2(y) + self.m2(x)))
    }

    /// `B'''` from `B'` (definitional route; hyperplane arguments).
    pub fn b_tprime(&self, x: f64, y: f64, z: f64) -> f64 {
        self.b_prime(x, y, z) * half(z) * (x.abs() + y.abs() - z.abs())
            + self.b_prime(y, z, x) * half(x) * (y.abs() + z.abs() - x.abs())
            + self.b_prime(z, x, y) * half(y) * (z.abs() + x.abs() - y.abs())
    }

    /// Closed form of `B'''` when `|x|` is the largest.
    pub fn b_tprime_closed_x_max(&self, x: f64, y: f64, z: f64) -> f64 {
        let mx = self.m(x);
        let my = self.m(y);
        let mz = self.m(z);
        0.5 * (2.0 * y.abs() * my * my + 2.0 * z.abs() * mz * mz
            - self.chi(y, x) * (x.abs() * mx * mx + x.abs() * mz * mz - 2.0 * y.abs() * mx * mz)
            - self.chi(z, x) * (x.abs() * mx * mx + x.abs() * my * my - 2.0 * z.abs() * mx * my))
    }

    // ---- quartic symbols: the M catalog ---------------------------------

    pub fn m1_1(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.m2(xi)
            * half(sigma)
            * ((1.0 - self.chi(sigma + rho, eta))
                * ((sigma + rho).abs() * xi.abs() - sigma.abs() * xi.abs() + rho * xi)
                + (1.0 - self.chi(sigma + eta, rho))
                    * ((sigma + eta).abs() * xi.abs() - sigma.abs() * xi.abs() + eta * xi)
                + (sigma.abs() * xi.abs() + sigma * xi))
    }

    pub fn m1_2(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -self.m(xi + sigma) * self.m(eta) * (xi + sigma) * sigma / half(sigma)
            * rho.abs()
            * self.chi(sigma, xi)
            * self.chi(rho, eta)
            - self.m(eta + sigma) * self.m(xi) * (eta + sigma) * sigma / half(sigma)
                * rho.abs()
                * self.chi(sigma, eta)
                * self.chi(rho, xi)
    }

    pub fn m1_3(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -2.0 * self.m(xi + sigma) * self.m(eta)
            * ((xi + sigma) * sigma - (xi + sigma).abs() * sigma.abs())
            / half(sigma)
            * rho.abs()
            * self.chit(sigma, xi)
            * self.chi(rho, eta)
    }

    pub fn m1_4(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.m2(xi + eta)
            * self.chit(sigma, rho)
            * self.chi(eta, xi)
            * eta.abs()
            * ((rho + sigma) * sigma - (rho + sigma).abs() * sigma.abs())
            / half(sigma)
    }

    pub fn m1_5(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.m2(xi)
            * (rho.abs() * self.q2(sigma, eta + rho) * self.chi(rho, eta)
                + 2.0 * sigma.abs() * self.q2(rho + sigma, eta) * self.chi(sigma, rho))
            / half(sigma)
    }

    pub fn m1_6(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -0.5 * self.m2(xi + rho)
            * self.chi(sigma, eta)
            * self.chi(rho, xi)
            * (xi + rho)
            * rho.abs()
            * sigma
            / half(sigma)
            - 0.5
                * self.m2(eta + rho)
                * self.chi(sigma, xi)
                * self.chi(rho, eta)
                * (eta + rho)
                * rho.abs()
                * sigma
                / half(sigma)
    }

    pub fn m1_7(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -0.5 * xi * self.m2(xi) * self.chi(sigma, eta + rho) * self.chi(rho, eta) * rho.abs()
            * sigma
            / half(sigma)
            - 0.5 * eta * self.m2(eta) * self.chi(sigma, xi + rho) * self.chi(rho, xi) * rho.abs()
                * sigma
                / half(sigma)
    }

    pub fn m1_8(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -half(sigma)
            * ((sigma + rho) * self.chi(sigma, rho) - rho)
            * (xi * self.m2(xi) * self.chi(rho + sigma, eta)
                + eta * self.m2(eta) * self.chi(rho + sigma, xi))
    }

    pub fn m1_9(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.m(xi) * self.m(eta) * self.chi(rho + sigma, eta) * self.b_sym(sigma, rho)
    }

    pub fn m1_10(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -0.5 * self.m(xi + rho)
            * self.m(eta)
            * (self.chi(sigma, eta) + self.chi(sigma, xi + rho))
            * self.chi(rho, xi)
            * rho.abs()
            * sigma.abs().powf(1.5)
    }

    pub fn m1_11(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -self.m(sigma)
            * (self.m(xi + eta) - self.m(sigma))
            * self.chi(rho, xi + eta)
            * self.chi(xi, eta)
            * rho.abs()
            * half(sigma)
            * xi.abs()
    }

    pub fn m1_12(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        2.0 * self.m(sigma)
            * (self.m(eta) - self.m(sigma))
            * self.chi(rho + xi, eta)
            * half(sigma)
            * self.a2_rr(rho, xi)
    }

    pub fn m1_13(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        6.0 * self.a_prime(eta + rho, sigma, xi)
            * half(xi)
            * ((eta + rho).abs() + sigma.abs() - xi.abs())
            * self.n2_rr(eta, rho)
            + 6.0 * self.a_prime(xi, eta, rho + sigma)
                * half(xi)
                * half(eta)
                * half(rho + sigma)
                * self.n2_ri(rho, sigma)
    }

    pub fn m1_14(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        4.0 * self.b_prime(eta + rho, sigma, xi) * half(eta + rho) * half(xi) * half(sigma)
            * self.n2_rr(eta, rho)
            + 2.0 * self.b_prime(rho + sigma, eta, xi)
                * half(xi)
                * ((rho + sigma).abs() + eta.abs() - xi.abs())
                * self.n2_ri(rho, sigma)
            + self.b_prime(xi, eta, rho + sigma)
                * half(rho + sigma)
                * (xi.abs() + eta.abs() - (rho + sigma).abs())
                * self.n2_ri(rho, sigma)
            - 2.0 * self.b_prime(xi, eta + rho, sigma)
                * half(eta + rho)
                * (xi.abs() + sigma.abs() - (eta + rho).abs())
                * self.n2_rr(eta, rho)
            - 2.0 * self.b_prime(xi, sigma, eta + rho)
                * half(sigma)
                * (xi.abs() + (eta + rho).abs() - sigma.abs())
                * self.n2_rr(eta, rho)
    }

    pub fn m2_1(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        2.0 * self.m2(xi) * half(xi) * half(rho) / half(eta)
            * (eta * (sigma + rho) * self.chi(eta, sigma + rho) * self.chi(rho, sigma)
                + eta * sigma * self.chi(sigma + rho, eta)
                - eta * sigma * self.chi(rho, sigma + eta)
                - rho * eta * self.chi(eta + rho, sigma)
                + (rho.abs() - (sigma + rho).abs()) * eta.abs() * self.chit(sigma + rho, eta))
    }

    pub fn m2_2(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        2.0 * self.m2(xi)
            * self.chi(eta, sigma)
            * self.chit(rho, eta + sigma)
            * half(xi)
            * half(eta)
            * ((eta + sigma).abs() * rho.abs() + (eta + sigma) * rho)
            / half(rho)
    }

    pub fn m2_3(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        half(rho)
            * ((rho + sigma) * self.chi(rho, sigma) - sigma)
            * (half(xi) * self.m2(xi) * self.chi(rho + sigma, eta) * eta / half(eta)
                + half(eta) * self.m2(eta) * self.chi(rho + sigma, xi) * xi / half(xi))
    }

    pub fn m2_4(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        2.0 * self.m(xi)
            * (self.m(sigma) - self.m(xi))
            * self.chi(rho + eta, sigma)
            * half(xi)
            * self.a2_ii(rho, eta)
    }

    pub fn m2_5(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        6.0 * self.a_prime(xi + rho, eta, sigma)
            * half(sigma)
            * ((xi + rho).abs() + eta.abs() - sigma.abs())
            * self.n2_ii(xi, rho)
            + 3.0 * self.a_prime(xi, eta, rho + sigma)
                * half(rho + sigma)
                * (xi.abs() + eta.abs() - (rho + sigma).abs())
                * self.n2_ri(sigma, rho)
    }

    pub fn m2_6(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        4.0 * self.b_prime(xi + rho, eta, sigma) * half(xi + rho) * half(eta) * half(sigma)
            * self.n2_ii(xi, rho)
            + 2.0 * self.b_prime(xi, eta, rho + sigma) * half(xi) * half(eta) * half(rho + sigma)
                * self.n2_ri(sigma, rho)
            - 2.0 * self.b_prime(rho + sigma, eta, xi)
                * half(eta)
                * ((rho + sigma).abs() + xi.abs() - eta.abs())
                * self.n2_ri(sigma, rho)
            - 2.0 * self.b_prime(sigma, xi + rho, eta)
                * half(xi + rho)
                * (sigma.abs() + eta.abs() - (xi + rho).abs())
                * self.n2_ii(xi, rho)
            - 2.0 * self.b_prime(sigma, eta, xi + rho)
                * half(eta)
                * (sigma.abs() + (xi + rho).abs() - eta.abs())
                * self.n2_ii(xi, rho)
    }

    /// Sum of the 14 first-family quartic symbols.
    pub fn m1_total(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.m1_1(xi, eta, rho, sigma)
            + self.m1_2(xi, eta, rho, sigma)
            + self.m1_3(xi, eta, rho, sigma)
            + self.m1_4(xi, eta, rho, sigma)
            + self.m1_5(xi, eta, rho, sigma)
            + self.m1_6(xi, eta, rho, sigma)
            + self.m1_7(xi, eta, rho, sigma)
            + self.m1_8(xi, eta, rho, sigma)
            + self.m1_9(xi, eta, rho, sigma)
            + self.m1_10(xi, eta, rho, sigma)
            + self.m1_11(xi, eta, rho, sigma)
            + self.m1_12(xi, eta, rho, sigma)
            + self.m1_13(xi, eta, rho, sigma)
            + self.m1_14(xi, eta, rho, sigma)
    }

    /// Sum of the 6 second-family quartic symbols.
    pub fn m2_total(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.m2_1(xi, eta, rho, sigma)
            + self.m2_2(xi, eta, rho, sigma)
            + self.m2_3(xi, eta, rho, sigma)
            + self.m2_4(xi, eta, rho, sigma)
            + self.m2_5(xi, eta, rho, sigma)
            + self.m2_6(xi, eta, rho, sigma)
    }

    // ---- quartic symbols: the K catalog ---------------------------------

    pub fn k1_1(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        let xa = xi.abs();
        let sa = sigma.abs();
        let rs = rho + sigma;
        let es = eta + sigma;
        self.m2(xi) / half(sigma)
            * (sa * ((xa * rs.abs() + xi * rs) + (xa * es.abs() + xi * es)
                - (xa * sa + xi * sigma))
                - sa * self.chi(rs, eta) * (xa * rs.abs() - xa * sa)
                - sa * self.chi(es, rho) * (xa * es.abs() - xa * sa)
                - sa * self.chi(sigma, rho) * self.chit(rs, eta) * (xa * rs.abs() + xi * rs)
                - sa * self.chi(sigma, eta) * self.chit(es, rho) * (xa * es.abs() + xi * es)
                - sa * self.chi(sigma, rho) * self.chi(rs, eta) * xi * rs
                - sa * self.chi(sigma, eta) * self.chi(es, rho) * xi * es
                - 0.5
                    * (rho.abs() * self.chi(rho, eta) + eta.abs() * self.chi(eta, rho))
                    * (self.chit(sigma, eta + rho) * (xa * sa + xi * sigma)
                        + self.chi(sigma, eta + rho) * xi * sigma))
    }

    pub fn k1_2(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        let sa = sigma.abs();
        let rs = rho + sigma;
        let es = eta + sigma;
        -self.m(rs) * self.m(eta) * xi.abs() * self.chi(xi, eta)
            * (sigma * rs * (1.0 - self.chi(rho, sigma)) - sa * rs.abs() * self.chit(rho, sigma))
            / half(sigma)
            - self.m(es) * self.m(rho) * xi.abs() * self.chi(xi, rho)
                * (sigma * es * (1.0 - self.chi(eta, sigma))
                    - sa * es.abs() * self.chit(eta, sigma))
                / half(sigma)
    }

    pub fn k1_3(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        let xs = xi + sigma;
        self.m2(eta + rho)
            * (eta.abs() * self.chi(eta, rho) + rho.abs() * self.chi(rho, eta))
            / (2.0 * half(sigma))
            * ((xs * sigma - xs.abs() * sigma.abs()) * self.chit(sigma, xi)
                + xs * sigma * self.chi(sigma, xi))
    }

    pub fn k1_4(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        0.5 * self.m(eta)
            * self.m(rho)
            * self.b_sym(sigma, xi)
            * (self.chi(xi + sigma, eta) + self.chi(xi + sigma, rho))
    }

    pub fn k1_5(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -self.m(eta + rho)
            * self.m(xi)
            * sigma.abs().powf(1.5)
            * (self.chi(sigma, xi) + self.chi(sigma, eta + rho))
            * (rho.abs() * self.chi(rho, eta) + eta.abs() * self.chi(eta, rho))
            / 4.0
    }

    pub fn k1_6(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -0.5 * self.m(sigma)
            * (self.m(eta + rho) - self.m(sigma))
            * self.chi(xi, eta + rho)
            * half(sigma)
            * xi.abs()
            * (rho.abs() * self.chi(rho, eta) + eta.abs() * self.chi(eta, rho))
    }

    pub fn k1_7(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        2.0 * self.m(sigma)
            * (self.m(xi) - self.m(sigma))
            * self.chi(eta + rho, xi)
            * half(sigma)
            * self.a2_rr(eta, rho)
    }

    pub fn k1_8(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        6.0 * self.n2_rr(eta, rho)
            * self.a_prime(xi, sigma, eta + rho)
            * half(xi)
            * ((eta + rho).abs() + sigma.abs() - xi.abs())
            + 6.0 * self.n2_ri(xi, sigma)
                * self.a_prime(eta, rho, xi + sigma)
                * half(rho)
                * half(eta)
                * half(xi + sigma)
    }

    pub fn k1_9(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -2.0 * self.n2_rr(eta, rho) * self.b_dprime(eta + rho, sigma, xi)
            + self.n2_ri(xi, sigma) * self.b_tprime(eta, rho, xi + sigma)
    }

    pub fn k2_1(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        let sr = sigma + rho;
        let se = sigma + eta;
        self.m2(xi) * half(xi) * half(rho) / half(eta)
            * (self.chi(rho, sigma)
                * (eta * sr + eta.abs() * sr.abs() * self.chit(sr, eta))
                - eta * sigma * self.chi(rho, sigma + eta)
                - rho * eta * self.chi(eta + rho, sigma)
                + (rho.abs() - sr.abs()) * eta.abs() * self.chit(sr, eta))
            + self.m2(xi) * half(xi) * half(eta) / half(rho)
                * (self.chi(eta, sigma)
                    * (rho * se + rho.abs() * se.abs() * self.chit(se, rho))
                    - rho * sigma * self.chi(eta, sigma + rho)
                    - eta * rho * self.chi(rho + eta, sigma)
                    + (eta.abs() - se.abs()) * rho.abs() * self.chit(se, rho))
    }

    pub fn k2_2(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        2.0 * self.m(xi)
            * (self.m(sigma) - self.m(xi))
            * self.chi(eta + rho, sigma)
            * half(xi)
            * self.a2_ii(eta, rho)
    }

    pub fn k2_3(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        6.0 * self.n2_ii(eta, rho)
            * self.a_prime(xi, sigma, eta + rho)
            * half(sigma)
            * ((eta + rho).abs() + xi.abs() - sigma.abs())
            + 3.0 * self.n2_ri(sigma, xi)
                * self.a_prime(eta, rho, xi + sigma)
                * half(xi + sigma)
                * (rho.abs() + eta.abs() - (xi + sigma).abs())
    }

    pub fn k2_4(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        -2.0 * self.n2_ii(eta, rho) * self.b_dprime(eta + rho, xi, sigma)
            - self.n2_ri(sigma, xi) * self.b_dprime(eta, rho, xi + sigma)
    }

    pub fn k1_total(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.k1_1(xi, eta, rho, sigma)
            + self.k1_2(xi, eta, rho, sigma)
            + self.k1_3(xi, eta, rho, sigma)
            + self.k1_4(xi, eta, rho, sigma)
            + self.k1_5(xi, eta, rho, sigma)
            + self.k1_6(xi, eta, rho, sigma)
            + self.k1_7(xi, eta, rho, sigma)
            + self.k1_8(xi, eta, rho, sigma)
            + self.k1_9(xi, eta, rho, sigma)
    }

    pub fn k2_total(&self, xi: f64, eta: f64, rho: f64, sigma: f64) -> f64 {
        self.k2_1(xi, eta, rho, sigma)
            + self.k2_2(xi, eta, rho, sigma)
            + self.k2_3(xi, eta, rho, sigma)
            + self.k2_4(xi, eta, rho, sigma)
    }
}

/// Cyclic symmetrization of the first three arguments, scaled by 3:
/// `3 Kt(a,b,c,d) = K(a,b,c,d) + K(b,c,a,d) + K(c,a,b,d)`.
pub fn three_k_tilde(k: impl Fn(f64, f64, f64, f64) -> f64, a: f64, b: f64, c: f64, d: f64) -> f64 {
    k(a, b, c, d) + k(b, c, a, d) + k(c, a, b, d)
}

/// Full symmetrization over the first three arguments (all six orderings,
/// averaged). Used to compare symbol families that differ by rearrangement.
pub fn full_sym3(k: impl Fn(f64, f64, f64, f64) -> f64, a: f64, b: f64, c: f64, d: f64) -> f64 {
    (k(a, b, c, d) + k(a, c, b, d) + k(b, a, c, d) + k(b, c, a, d) + k(c, a, b, d)
        + k(c, b, a, d))
        / 6.0
}

/// The antisymmetrized resonant combination:
/// `SK(y1,y2,y3,y4) = 3Kt(y1,y2,y3,y4) + 3Kt(y1,y2,y4,y3)
///                    - 3Kt(y3,y4,y1,y2) - 3Kt(y3,y4,y2,y1)`.
pub fn sk(
    k: impl Fn(f64, f64, f64, f64) -> f64 + Copy,
    y1: f64,
    y2: f64,
    y3: f64,
    y4: f64,
) -> f64 {
    three_k_tilde(k, y1, y2, y3, y4) + three_k_tilde(k, y1, y2, y4, y3)
        - three_k_tilde(k, y3, y4, y1, y2)
        - three_k_tilde(k, y3, y4, y2, y1)
}

impl<C: ChiEval> SymbolContext<C> {
    /// `SK(K1) - SK(K2)` at a frequency quadruple: the combination that must
    /// vanish on degenerate resonances.
    pub fn sk_difference(&self, y1: f64, y2: f64, y3: f64, y4: f64) -> f64 {
        sk(|a, b, c, d| self.k1_total(a, b, c, d), y1, y2, y3, y4)
            - sk(|a, b, c, d| self.k2_total(a, b, c, d), y1, y2, y3, y4)
    }

    /// Magnitude scale for normalizing `sk_difference`: sum of the absolute
    /// values of the individual symmetrized pieces.
    pub fn sk_scale(&self, y1: f64, y2: f64, y3: f64, y4: f64) -> f64 {
        let pieces_1: [&dyn Fn(f64, f64, f64, f64) -> f64; 9] = [
            &|a, b, c, d| self.k1_1(a, b, c, d),
            &|a, b, c, d| self.k1_2(a, b, c, d),
            &|a, b, c, d| self.k1_3(a, b, c, d),
            &|a, b, c, d| self.k1_4(a, b, c, d),
            &|a, b, c, d| self.k1_5(a, b, c, d),
            &|a, b, c, d| self.k1_6(a, b, c, d),
            &|a, b, c, d| self.k1_7(a, b, c, d),
            &|a, b, c, d| self.k1_8(a, b, c, d),
            &|a, b, c, d| self.k1_9(a, b, c, d),
        ];
        let pieces_2: [&dyn Fn(f64, f64, f64, f64) -> f64; 4] = [
            &|a, b, c, d| self.k2_1(a, b, c, d),
            &|a, b, c, d| self.k2_2(a, b, c, d),
            &|a, b, c, d| self.k2_3(a, b, c, d),
            &|a, b, c, d| self.k2_4(a, b, c, d),
        ];
        let mut scale = 0.0;
        for p in pieces_1.iter() {
            scale += sk(|a, b, c, d| p(a, b, c, d), y1, y2, y3, y4).abs();
        }
        for p in pieces_2.iter() {
            scale += sk(|a, b, c, d| p(a, b, c, d), y1, y2, y3, y4).abs();
        }
        scale
    }
}


/// One catalog entry: function name, arity, one-line description.
pub type RegistryEntry = (&'static str, usize, &'static str);

/// Catalog of the symbol functions exposed by [`SymbolContext`] and the
/// free combinators in this module. The markdown registry in
/// `docs/symbols.md` is generated from this table; the
/// `registry_matches_docs` test keeps the two in sync.
pub fn registry() -> Vec<RegistryEntry> {
    let mut out: Vec<RegistryEntry> = vec![
        ("m", 1, "frequency weight: bracket to the power N0, mollified near zero"),
        ("q2", 2, "quadratic surface-operator symbol, smoothing off comparable frequencies"),
        ("q3", 3, "cubic surface-operator symbol"),
        ("l2", 2, "quadratic velocity-equation symbol"),
        ("l3", 3, "cubic velocity-equation symbol"),
        ("n_ri", 2, "real-imaginary quadratic interaction symbol"),
        ("n_rr", 2, "real-real quadratic interaction symbol"),
        ("n_ii", 2, "imaginary-imaginary quadratic interaction symbol"),
        ("n2_ri_def", 2, "normalized real-imaginary symbol, definitional route"),
        ("n2_ri", 2, "normalized real-imaginary symbol, tabulated closed form"),
        ("n2_rr_def", 2, "normalized real-real symbol, definitional route"),
        ("n2_rr", 2, "normalized real-real symbol, tabulated closed form"),
        ("n2_ii_def", 2, "normalized imaginary-imaginary symbol, definitional route"),
        ("n2_ii", 2, "normalized imaginary-imaginary symbol, tabulated closed form"),
        ("a2_rr", 2, "quadratic coefficient of the good-unknown weight, real part"),
        ("a2_ii", 2, "quadratic coefficient of the good-unknown weight, imaginary part"),
        ("b_sym", 2, "quadratic coefficient of the vertical surface velocity"),
        ("d_quadratic", 3, "normal-form denominator, quadratic form (no hyperplane assumption)"),
        ("d_factored", 3, "normal-form denominator, factored form on the hyperplane"),
        ("a_sym", 3, "fully symmetric cubic energy symbol A"),
        ("b_big", 3, "cubic energy symbol B, symmetric in the first two slots"),
        ("a_prime", 3, "A divided by the factored denominator"),
        ("a_prime_def", 3, "A divided by the quadratic denominator"),
        ("a_prime_closed", 3, "closed form of A-prime on the hyperplane"),
        ("b_prime", 3, "B divided by the factored denominator"),
        ("b_prime_def", 3, "B divided by the quadratic denominator"),
        ("b_prime_closed_last_max", 3, "closed form of B-prime when the third slot dominates"),
        ("b_prime_closed_first_max", 3, "closed form of B-prime when the first slot dominates"),
        ("b_dprime", 3, "second derived symbol, definitional route"),
        ("b_dprime_closed_z_max", 3, "closed form of the second derived symbol, third slot dominant"),
        ("b_dprime_closed_x_max", 3, "closed form of the second derived symbol, first slot dominant"),
        ("b_tprime", 3, "third derived symbol, definitional route"),
        ("b_tprime_closed_x_max", 3, "closed form of the third derived symbol, first slot dominant"),
        ("sk_difference", 4, "antisymmetrized resonant combination SK1 - SK2"),
        ("sk_scale", 4, "sum of absolute contributing terms, the natural scale for sk_difference"),
        ("m1_total", 4, "sum of the quartic family M1 (14 pieces)"),
        ("m2_total", 4, "sum of the quartic family M2 (6 pieces)"),
        ("k1_total", 4, "sum of the quartic family K1 (9 pieces)"),
        ("k2_total", 4, "sum of the quartic family K2 (4 pieces)"),
    ];
    for i in 1..=14u32 {
        out.push((family_name("m1_", i), 4, "quartic family M1 piece"));
    }
    for i in 1..=6u32 {
        out.push((family_name("m2_", i), 4, "quartic family M2 piece"));
    }
    for i in 1..=9u32 {
        out.push((family_name("k1_", i), 4, "quartic family K1 piece"));
    }
    for i in 1..=4u32 {
        out.push((family_name("k2_", i), 4, "quartic family K2 piece"));
    }
    out
}

fn family_name(prefix: &str, i: u32) -> &'static str {
    // leak a handful of small strings once; the registry is built rarely
    Box::leak(format!("{prefix}{i}").into_boxed_str())
}

/// Render [`registry`] as the markdown table stored in `docs/symbols.md`.
pub fn registry_markdown() -> String {
    let mut out = String::from(
        "# Symbol registry\n\nGenerated from `wavetor::symbols::registry()`. Do not edit by hand;\nupdate the table in `symbols.rs` and regenerate (see the\n`registry_matches_docs` test).\n\n| symbol | arity | description |\n|---|---|---|\n",
    );
    for (name, arity, desc) in registry() {
        out.push_str(&format!("| `{name}` | {arity} | {desc} |\n"));
    }
    out
}
