//! Four-wave phase functions, their factorizations on sign-definite cones,
//! and the degenerate resonant quadruples of Benjamin-Feir type.
//!
//! The dispersion relation is `|xi|^{1/2}`. A quadruple `(y1, y2, y3, y4)`
//! with `y1 + y2 + y3 + y4 = 0` is resonant for the `(+,+,-,-)` interaction
//! when `|y1|^{1/2} + |y2|^{1/2} - |y3|^{1/2} - |y4|^{1/2} = 0`. On the cone
//! where one frequency is negative and three are positive, the resonant set
//! is an explicit two-parameter family, rational after the substitution
//! `x_j = |y_j|^{1/2}`.

/// `Phi(y) = s1 |y1|^{1/2} + s2 |y2|^{1/2} + s3 |y3|^{1/2} + s4 |y4|^{1/2}`.
pub fn phase(signs: [f64; 4], y: [f64; 4]) -> f64 {
    signs
        .iter()
        .zip(y.iter())
        .map(|(s, v)| s * v.abs().sqrt())
        .sum()
}

/// The `(+,+,-,-)` phase.
pub fn phase_ppmm(y1: f64, y2: f64, y3: f64, y4: f64) -> f64 {
    phase([1.0, 1.0, -1.0, -1.0], [y1, y2, y3, y4])
}

/// Factorized `(+,+,-,-)` phase on the cone `y1 <= 0 <= y2, y3, y4` with
/// `y1 = -(y2+y3+y4)`:
///
/// ```text
/// Phi = 2 (y2 (sqrt(y3)+sqrt(y4))^2 - y3 y4)
///       / [ (|y2+y3+y4|^{1/2} + y3^{1/2} + y4^{1/2} - y2^{1/2})
///           (sqrt(y2 y3) + sqrt(y2 y4) + sqrt(y3 y4)) ].
/// ```
pub fn phase_factored_one_negative(y2: f64, y3: f64, y4: f64) -> f64 {
    debug_assert!(y2 >= 0.0 && y3 >= 0.0 && y4 >= 0.0);
    let s2 = y2.sqrt();
    let s3 = y3.sqrt();
    let s4 = y4.sqrt();
    let num = 2.0 * (y2 * (s3 + s4).powi(2) - y3 * y4);
    let den = ((y2 + y3 + y4).sqrt() + s3 + s4 - s2) * (s2 * s3 + s2 * s4 + s3 * s4);
    num / den
}

/// Factorized `(+,+,-,-)` phase on the cone `y1, y2 >= 0 >= y3, y4` with
/// `y1 + y2 + y3 + y4 = 0`:
///
/// ```text
/// Phi = -2 (y2+y3)(y2+y4)
///       / [ (sqrt(y1 y2) + sqrt(y3 y4)) (sum |y_i|^{1/2}) ].
/// ```
pub fn phase_factored_two_positive(y1: f64, y2: f64, y3: f64, y4: f64) -> f64 {
    debug_assert!(y1 >= 0.0 && y2 >= 0.0 && y3 <= 0.0 && y4 <= 0.0);
    let num = -2.0 * (y2 + y3) * (y2 + y4);
    let sum = y1.abs().sqrt() + y2.abs().sqrt() + y3.abs().sqrt() + y4.abs().sqrt();
    let den = ((y1 * y2).sqrt() + (y3 * y4).sqrt()) * sum;
    num / den
}

/// Factorized `(+,+,-,-)` phase on the cone `y1, y4 >= 0 >= y2, y3` with
/// `y1 + y2 + y3 + y4 = 0`:
///
/// ```text
/// Phi = -(y2+y4) (sum |y_i|^{1/2})
///       / [ (|y1|^{1/2}+|y3|^{1/2}) (|y2|^{1/2}+|y4|^{1/2}) ].
/// ```
pub fn phase_factored_alternating(y1: f64, y2: f64, y3: f64, y4: f64) -> f64 {
    debug_assert!(y1 >= 0.0 && y4 >= 0.0 && y2 <= 0.0 && y3 <= 0.0);
    let sum = y1.abs().sqrt() + y2.abs().sqrt() + y3.abs().sqrt() + y4.abs().sqrt();
    -(y2 + y4) * sum / ((y1.abs().sqrt() + y3.abs().sqrt()) * (y2.abs().sqrt() + y4.abs().sqrt()))
}

/// Ellipticity margin `sqrt(a) + sqrt(b) + sqrt(c) - sqrt(a+b+c) - sqrt(b)/2`
/// for the `(+,+,+,-)` phase; nonnegative whenever `a >= b >= c >= 0`.
pub fn same_sign_margin(a: f64, b: f64, c: f64) -> f64 {
    debug_assert!(a >= b && b >= c && c >= 0.0);
    a.sqrt() + b.sqrt() + c.sqrt() - (a + b + c).sqrt() - b.sqrt() / 2.0
}

/// The rational two-parameter family of degenerate resonances:
/// for `lambda > 0` and `b > 0`,
///
/// ```text
/// (y1, y2, y3, y4) = ( -lambda (b^2+b+1)^2,
///                       lambda b^2,
///                       lambda (b+1)^2,
///                       lambda b^2 (b+1)^2 ).
/// ```
///
/// The quadruple sums to zero and annihilates the `(+,+,-,-)` phase in the
/// arrangement `|y1|^{1/2} + |y2|^{1/2} = |y3|^{1/2} + |y4|^{1/2}`.
pub fn bf_quadruple(lambda: f64, b: f64) -> [f64; 4] {
    let q = b * b + b + 1.0;
    [
        -lambda * q * q,
        lambda * b * b,
        lambda * (b + 1.0) * (b + 1.0),
        lambda * b * b * (b + 1.0) * (b + 1.0),
    ]
}

/// Solve the resonance equations for `(y1, y2)` given `y3, y4 >= 0`:
///
/// ```text
/// y2 = y3 y4 / (sqrt(y3) + sqrt(y4))^2,
/// y1 = -(y3 + y4 + sqrt(y3 y4))^2 / (sqrt(y3) + sqrt(y4))^2.
/// ```
pub fn bf_from_pair(y3: f64, y4: f64) -> [f64; 4] {
    debug_assert!(y3 >= 0.0 && y4 >= 0.0);
    let s = (y3.sqrt() + y4.sqrt()).powi(2);
    let y2 = y3 * y4 / s;
    let y1 = -(y3 + y4 + (y3 * y4).sqrt()).powi(2) / s;
    [y1, y2, y3, y4]
}

/// Checks the normalized frequency configuration used throughout the
/// resonant-identity verification: `y1 <= 0 <= y2, y3, y4`,
/// `|y1| >= y3 >= y4 >= y2`, with the comparability constraints
/// `y3 >= |y1| / 8` and `y2 >= y4 / 8`.
pub fn check_config(y: [f64; 4]) -> bool {
    let [y1, y2, y3, y4] = y;
    y1 <= 0.0
        && y2 >= 0.0
        && y3 >= 0.0
        && y4 >= 0.0
        && y1.abs() >= y3
        && y3 >= y4
        && y4 >= y2
        && y3 >= y1.abs() / 8.0
        && y2 >= y4 / 8.0
        && (y1 + y2 + y3 + y4).abs() <= 1e-12 * y1.abs().max(1.0)
}

/// Division of a multiplier value by the phase with an ellipticity guard:
/// returns `None` when `|phase|` is below `guard_tol` times `scale`.
pub fn phase_divide(value: f64, phase: f64, scale: f64, guard_tol: f64) -> Option<f64> {
    if phase.abs() <= guard_tol * scale.max(f64::MIN_POSITIVE) {
        None
    } else {
        Some(value / phase)
    }
}
