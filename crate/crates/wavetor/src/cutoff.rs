//! The smooth even bump profile and the derived dyadic / two-frequency
//! cutoffs.
//!
//! Everything here is scalar: the profile is a fixed smooth even function
//! `phi` with `phi = 1` on `[-5/4, 5/4]` and `phi = 0` outside
//! `(-8/5, 8/5)`. Dyadic pieces `phi_k(x) = phi(x/2^k) - phi(x/2^{k-1})`
//! telescope to a partition of unity on `R \ {0}`. The two-frequency cutoff
//!
//! ```text
//! chi(x, y) = sum_k phi_{<=k-20}(x) * phi_k(y + x/2)
//! ```
//!
//! localizes to the region where `|x|` is much smaller than `|y + x/2|`; it
//! drives every paraproduct in the crate. Note the exact translation
//! property `chi(x, y) = chi(x, z)` whenever `x + y + z = 0`, which holds
//! because `phi_k` is even and `y + x/2 = -(z + x/2)`.

/// Gap between the low-frequency cutoff index and the dyadic shell index in
/// the definition of `chi`.
pub const CHI_GAP: i32 = 20;

/// Inner edge of the bump plateau.
pub const PLATEAU: f64 = 1.25;
/// Outer edge of the bump support.
pub const SUPPORT: f64 = 1.6;

fn smooth_step_piece(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp()
    }
}

/// The basic `C^infinity` transition: 0 for `t <= 0`, 1 for `t >= 1`,
/// strictly monotone in between.
pub fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    let a = smooth_step_piece(t);
    let b = smooth_step_piece(1.0 - t);
    a / (a + b)
}

/// Evaluation of the fixed even bump `phi`: identically 1 on
/// `[-5/4, 5/4]`, supported in `(-8/5, 8/5)`.
pub fn bump(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= PLATEAU {
        1.0
    } else if ax >= SUPPORT {
        0.0
    } else {
        smooth_step((SUPPORT - ax) / (SUPPORT - PLATEAU))
    }
}

/// `phi_k(x) = phi(x / 2^k) - phi(x / 2^{k-1})`, supported in the dyadic
/// shell `(5/4) 2^{k-1} < |x| < (8/5) 2^k`.
pub fn phi_shell(k: i32, x: f64) -> f64 {
    bump(x * pow2(-k)) - bump(x * pow2(-(k - 1)))
}

/// `phi_{<=k}(x) = phi(x / 2^k)`.
pub fn phi_le(k: i32, x: f64) -> f64 {
    bump(x * pow2(-k))
}

/// `phi_{>=k}(x) = 1 - phi(x / 2^{k-1})`.
pub fn phi_ge(k: i32, x: f64) -> f64 {
    1.0 - bump(x * pow2(-(k - 1)))
}

/// Exact powers of two, valid far beyond the dyadic range we use.
pub fn pow2(k: i32) -> f64 {
    f64::powi(2.0, k)
}

/// Indices `k` with `phi_k(x)` possibly nonzero, with a safety margin.
pub fn shell_range(x: f64) -> std::ops::RangeInclusive<i32> {
    debug_assert!(x != 0.0);
    let l = x.abs().log2();
    (l.floor() as i32 - 2)..=(l.ceil() as i32 + 2)
}

/// Scalar evaluation interface for the two-frequency cutoff. The default
/// implementation is the true smooth cutoff; the exact-verification code
/// swaps in randomized or degenerate variants through this trait.
pub trait ChiEval {
    /// The cutoff `chi(x, y)`.
    fn chi(&self, x: f64, y: f64) -> f64;

    /// The complementary symbol `1 - chi(x, y) - chi(y, x)`.
    fn chi_tilde(&self, x: f64, y: f64) -> f64 {
        1.0 - self.chi(x, y) - self.chi(y, x)
    }
}

/// The standard smooth cutoff profile. Stateless; exists as a struct so it
/// can be passed where a `ChiEval` is expected.
#[derive(Debug, Clone, Copy, Default)]
pub struct CutoffProfile;

impl CutoffProfile {
    pub fn new() -> Self {
        CutoffProfile
    }

    /// `chi(x, y) = sum_k phi_{<= k-20}(x) phi_k(y + x/2)`.
    pub fn chi(x: f64, y: f64) -> f64 {
        let t = y + x / 2.0;
        if t == 0.0 {
            // every phi_k vanishes at the origin
            return 0.0;
        }
        // Quick reject: the sum is nonzero only when |x| is far below |t|.
        if x != 0.0 && x.abs() > SUPPORT * t.abs() * pow2(-CHI_GAP) {
            return 0.0;
        }
        let mut s = 0.0;
        for k in shell_range(t) {
            let shell = phi_shell(k, t);
            if shell != 0.0 {
                s += phi_le(k - CHI_GAP, x) * shell;
            }
        }
        s
    }

    pub fn chi_tilde_static(x: f64, y: f64) -> f64 {
        1.0 - Self::chi(x, y) - Self::chi(y, x)
    }
}

impl ChiEval for CutoffProfile {
    fn chi(&self, x: f64, y: f64) -> f64 {
        CutoffProfile::chi(x, y)
    }
}

/// Paraproduct localization weight on the convolution variables:
/// `chi(x, y)` applied to (output-minus-input, input) frequencies.
pub fn chi(x: f64, y: f64) -> f64 {
    CutoffProfile::chi(x, y)
}

/// `1 - chi(x, y) - chi(y, x)`: the balanced (high-high) region weight.
pub fn chi_tilde(x: f64, y: f64) -> f64 {
    CutoffProfile::chi_tilde_static(x, y)
}

/// Sign convention used throughout the symbol catalog: `sgn(0) = 0`.
pub fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bump_plateau_and_support() {
        assert_eq!(bump(0.0), 1.0);
        assert_eq!(bump(1.25), 1.0);
        assert_eq!(bump(-1.2), 1.0);
        assert_eq!(bump(1.6), 0.0);
        assert_eq!(bump(-2.0), 0.0);
        let mid = bump(1.4);
        assert!(mid > 0.0 && mid < 1.0);
        assert_eq!(bump(1.4), bump(-1.4));
    }

    #[test]
    fn bump_monotone_on_transition() {
        let mut prev = 1.0;
        let mut x = PLATEAU;
        while x <= SUPPORT {
            let v = bump(x);
            assert!(v <= prev + 1e-15);
            prev = v;
            x += 1e-3;
        }
    }

    #[test]
    fn shells_partition_unity() {
        // sum_k phi_k(x) = 1 for x != 0 (telescoping)
        for &x in &[1e-6, 0.37, 1.0, 5.5, 1234.5, 1e8] {
            let mut s = 0.0;
            for k in -80..80 {
                s += phi_shell(k, x);
            }
            assert_abs_diff_eq!(s, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn shell_range_covers_support() {
        for &x in &[1e-3, 0.9, 1.0, 1.3, 2.0, 77.7] {
            let mut full = 0.0;
            for k in shell_range(x) {
                full += phi_shell(k, x);
            }
            assert_abs_diff_eq!(full, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn chi_reference_values() {
        // deep paraproduct regime
        assert_abs_diff_eq!(chi(pow2(-25), 1.0), 1.0, epsilon = 1e-15);
        // reversed arguments: high-low, must vanish
        assert_eq!(chi(1.0, pow2(-25)), 0.0);
        // comparable frequencies: both cutoffs vanish
        assert_eq!(chi(1.0, 1.0), 0.0);
        assert_eq!(chi(-1.0, 3.0), 0.0);
        assert_eq!(chi(3.0, -1.0), 0.0);
        assert_abs_diff_eq!(chi_tilde(-1.0, 3.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn chi_translation_identity() {
        // chi(x, y) = chi(x, z) whenever x + y + z = 0
        let samples = [
            (1.0e-7, 3.0),
            (0.5, 100.0),
            (-2.0e-8, 1.7),
            (1.0e-5, -0.3),
            (3.0e-6, 2.5e-1),
        ];
        for &(x, y) in &samples {
            let z = -x - y;
            assert_abs_diff_eq!(chi(x, y), chi(x, z), epsilon = 1e-15);
        }
    }

    #[test]
    fn chi_partition() {
        // chi(x,y) + chi(y,x) + chi_tilde(x,y) = 1 identically
        let pts = [(0.1, 5.0), (5.0, 0.1), (2.0, 2.0), (1e-9, 1.0), (3.0, -1.0)];
        for &(x, y) in &pts {
            let s = chi(x, y) + chi(y, x) + chi_tilde(x, y);
            assert_abs_diff_eq!(s, 1.0, epsilon = 1e-15);
        }
    }
}
