//! Independently transcribed grouped coefficients of the antisymmetrized
//! quartic combination.
//!
//! The source material lists, for each weight product and cutoff tag, the
//! coefficient polynomial obtained after collecting all evaluated blocks.
//! This module transcribes those collected coefficients term-by-term and in
//! printed order, deliberately sharing no bracket helpers with
//! [`super::tables`], so the equality test between the two modules is a
//! genuine double-entry check. Several printed coefficients cancel to zero
//! (they are still transcribed; the grouped map simply drops them).

use super::poly::Poly;
use super::{ChiTag, GroupedPoly, MFactor, MTag};
use ChiTag::*;
use MFactor::*;

fn x(i: usize) -> Poly {
    Poly::var(i - 1)
}

fn n(c: i64) -> Poly {
    Poly::constant(c)
}

fn sq(a: MFactor) -> MTag {
    MTag::square(a)
}

fn mm(a: MFactor, b: MFactor) -> MTag {
    MTag::of(a, b)
}

/// Coefficients of `m1^2`.
fn x1_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(S1),
        One,
        n(8)
            * (x(1) * x(3) * x(2) * x(4).pow(2) - x(1) * x(3) * x(4) * x(2).pow(2)
                + x(1) * x(2) * x(4) * x(3).pow(2))
            - n(8) * x(1) * x(3) * x(4) * (x(3).pow(2) + x(4).pow(2))
            + n(8) * x(1) * x(3) * x(2) * (x(3).pow(2) + x(2).pow(2))
            + n(8) * x(1) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S1),
        C24,
        n(4) * x(1).pow(2) * x(2) * x(4) * (x(4) - x(2))
            + n(8) * x(1) * x(2).pow(2) * x(4).pow(2)
            - n(4)
                * (x(1) * x(3) * x(2) * x(4).pow(2)
                    - x(1) * x(3) * x(4) * x(2).pow(2)
                    - x(1) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2)))
            - n(4) * x(1) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2))
            - n(4) * x(1) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S1),
        C21,
        n(4) * x(1) * x(3) * x(4) * (x(3).pow(2) + x(4).pow(2))
            - n(4) * x(3) * x(4) * x(1) * (x(3).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S1),
        C43,
        n(-2)
            * x(1)
            * x(4)
            * (-(x(4) * (x(3).pow(2) + x(4).pow(2)))
                + x(1) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            - n(8) * x(1) * x(2) * x(4) * (x(3).pow(2) + x(4).pow(2))
            + n(2)
                * x(1)
                * x(4)
                * (n(2) * x(3) * (x(3).pow(2) + x(4).pow(2))
                    + x(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4))),
    );
    g.add(
        sq(S1),
        C2143,
        n(-2) * x(1).pow(2) * x(4).pow(2) * x(2) - n(2) * x(2).pow(2) * x(4).pow(2) * x(1)
            + x(1)
                * x(4)
                * (-(x(4) * (x(3).pow(2) + x(4).pow(2)))
                    + x(1) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            + x(1)
                * x(4)
                * (x(4) * (x(3).pow(2) + x(4).pow(2))
                    - x(1) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            + n(4) * x(1) * x(2) * x(4) * (x(3).pow(2) + x(4).pow(2))
            - x(1)
                * x(4)
                * (n(2) * x(3) * (x(3).pow(2) + x(4).pow(2))
                    + x(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            - x(4)
                * x(1)
                * (x(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4))
                    - n(2) * x(3) * (x(3).pow(2) + x(4).pow(2))),
    );
    g.add(
        sq(S1),
        C23,
        n(2)
            * x(1)
            * x(2)
            * (x(2) * (x(3).pow(2) + x(2).pow(2))
                + x(1) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            - n(8) * x(1) * x(2) * x(4) * (x(3).pow(2) + x(2).pow(2))
            + n(2)
                * x(1)
                * x(2)
                * (n(-2) * x(3) * (x(3).pow(2) + x(2).pow(2))
                    + x(4) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2))),
    );
    g.add(
        sq(S1),
        C41,
        n(-4) * x(1) * x(3) * x(2) * (x(3).pow(2) + x(2).pow(2))
            + n(4) * x(3) * x(2) * x(1) * (x(3).pow(2) + x(2).pow(2)),
    );
    g.add(
        sq(S1),
        C2341,
        n(2) * x(1).pow(2) * x(2).pow(2) * x(4) - n(2) * x(2).pow(2) * x(4).pow(2) * x(1)
            - x(1)
                * x(2)
                * (x(2) * (x(3).pow(2) + x(2).pow(2))
                    + x(1) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            + x(1)
                * x(2)
                * (x(2) * (x(3).pow(2) + x(2).pow(2))
                    + x(1) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            + n(4) * x(1) * x(2) * x(4) * (x(3).pow(2) + x(2).pow(2))
            - x(1)
                * x(2)
                * (n(-2) * x(3) * (x(3).pow(2) + x(2).pow(2))
                    + x(4) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            - x(2)
                * x(1)
                * (x(4) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2))
                    + n(2) * x(3) * (x(3).pow(2) + x(2).pow(2))),
    );
}

/// Coefficients of `m2^2`.
fn x2_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(S2),
        One,
        n(8) * x(2).pow(2) * x(3) * x(4) * (x(3) + x(4))
            - n(8) * x(4) * x(2).pow(2) * (x(3).pow(2) + x(2).pow(2))
            - n(8) * x(3) * x(2).pow(2) * (x(2).pow(2) + x(4).pow(2))
            - n(8) * x(3) * x(4) * x(2).pow(3)
            - n(8) * x(3) * x(4) * x(2) * (x(3).pow(2) + x(4).pow(2))
            + n(8) * x(2) * x(3) * x(4) * (x(3).pow(2) + x(2).pow(2))
            + n(8) * x(2) * x(3) * x(4) * (x(2).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S2),
        C41,
        n(-4) * x(3) * x(2).pow(2) * x(4).pow(2)
            + n(2)
                * x(2)
                * x(4)
                * (x(2) * (x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2))
                    - x(4) * (x(3).pow(2) + x(2).pow(2)))
            - n(2)
                * x(2)
                * x(4)
                * (x(3) * (x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2))
                    - n(2) * x(1) * (x(3).pow(2) + x(2).pow(2))),
    );
    g.add(
        sq(S2),
        C43,
        n(-8) * (x(3).pow(2) + x(4).pow(2)) * x(2).pow(2) * x(4)
            + n(2)
                * x(2)
                * x(4)
                * (x(4) * (x(3).pow(2) + x(4).pow(2))
                    + x(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            - n(2)
                * x(2)
                * x(4)
                * (x(1) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4))
                    - n(2) * x(3) * (x(3).pow(2) + x(4).pow(2))),
    );
}

/// Coefficients of `m3^2`.
fn x3_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(S3),
        One,
        n(8) * x(3).pow(2) * x(2) * x(4) * (x(2) - x(4))
            - n(8) * x(4) * x(3).pow(2) * (x(3).pow(2) + x(2).pow(2))
            + n(8) * x(2) * x(3).pow(2) * (x(3).pow(2) + x(4).pow(2))
            - n(8) * x(3).pow(3) * x(2) * x(4)
            + n(8) * x(2) * x(3) * x(4) * (x(3).pow(2) + x(2).pow(2))
            + n(8) * x(2) * x(3) * x(4) * (x(3).pow(2) + x(4).pow(2))
            - n(8) * x(2) * x(3) * x(4) * (x(2).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S3),
        C24,
        n(-4) * x(3).pow(2) * x(2) * x(4) * (x(2) - x(4))
            - n(8) * x(3) * x(2).pow(2) * x(4).pow(2)
            - n(4)
                * (x(3) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2))
                    - x(1) * x(3) * x(4) * x(2).pow(2)
                    + x(1) * x(3) * x(2) * x(4).pow(2))
            - n(4) * x(1) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2))
            + n(4) * x(2) * x(4) * (x(2).pow(2) + x(4).pow(2)) * (x(1) + n(2) * x(3)),
    );
    g.add(
        sq(S3),
        C21,
        n(-4) * x(3).pow(2) * x(2).pow(2) * x(4)
            + n(2)
                * x(2)
                * x(3)
                * (x(3) * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2))
                    + x(2) * (x(3).pow(2) + x(4).pow(2)))
            + n(2)
                * x(2)
                * x(3)
                * (x(4) * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2))
                    + n(2) * x(1) * (x(3).pow(2) + x(4).pow(2))),
    );
    g.add(
        sq(S3),
        C43,
        n(4) * x(2) * (x(3).pow(2) + x(4).pow(2)).pow(2)
            - n(4) * x(2) * (x(3).pow(2) + x(4).pow(2)).pow(2)
            + n(8) * x(3) * x(4) * x(2) * (x(3).pow(2) + x(4).pow(2))
            - n(8) * x(2) * x(3) * x(4) * (x(3).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S3),
        C2143,
        n(2) * x(3).pow(2) * x(2).pow(2) * x(4) + n(2) * x(2).pow(2) * x(4).pow(2) * x(3)
            + x(2)
                * (x(3).pow(2) + x(4).pow(2))
                * (x(1) * x(2) + x(3) * x(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
                    + x(2).pow(2)
                    + x(2) * x(4))
            - x(2)
                * (x(3).pow(2) + x(4).pow(2))
                * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
                    + x(2) * x(3)
                    + x(2) * x(4))
            - n(4) * x(3) * x(4) * x(2) * (x(3).pow(2) + x(4).pow(2))
            + n(2) * x(1) * x(2) * (x(3) + x(4)) * (x(3).pow(2) + x(4).pow(2))
            - n(2)
                * x(2)
                * (x(3)
                    * x(4)
                    * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2))
                    + x(1) * (x(3) + x(4)) * (x(3).pow(2) + x(4).pow(2))),
    );
    g.add(
        sq(S3),
        C23,
        n(-4) * x(4) * (x(3).pow(2) + x(2).pow(2)).pow(2)
            + n(4) * x(4) * (x(3).pow(2) + x(2).pow(2)).pow(2)
            + n(8) * x(3) * x(2) * x(4) * (x(3).pow(2) + x(2).pow(2))
            - n(8) * x(2) * x(3) * x(4) * (x(3).pow(2) + x(2).pow(2)),
    );
    g.add(
        sq(S3),
        C41,
        n(4) * x(3).pow(2) * x(4).pow(2) * x(2)
            + n(2)
                * x(4)
                * x(3)
                * (x(3) * (x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2))
                    + x(4) * (x(3).pow(2) + x(2).pow(2)))
            - n(2)
                * x(4)
                * x(3)
                * (x(2) * (x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2))
                    + n(2) * x(1) * (x(3).pow(2) + x(2).pow(2))),
    );
    g.add(
        sq(S3),
        C2341,
        n(-2) * x(3).pow(2) * x(4).pow(2) * x(2) + n(2) * x(2).pow(2) * x(4).pow(2) * x(3)
            + x(4)
                * (x(3).pow(2) + x(2).pow(2))
                * (x(1) * x(4) + x(3) * x(4) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2)
                    - x(4).pow(2)
                    - x(2) * x(4))
            - x(4)
                * (x(3).pow(2) + x(2).pow(2))
                * (x(1) * x(4) - x(4).pow(2)
                    + n(2) * x(3).pow(2)
                    + n(2) * x(2).pow(2)
                    + x(3) * x(4)
                    - x(2) * x(4))
            - n(4) * x(3) * x(2) * x(4) * (x(3).pow(2) + x(2).pow(2))
            - n(2) * x(1) * x(4) * (x(3) - x(2)) * (x(3).pow(2) + x(2).pow(2))
            + n(2)
                * x(4)
                * (x(3)
                    * x(2)
                    * (x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2))
                    + x(1) * (x(3) - x(2)) * (x(3).pow(2) + x(2).pow(2))),
    );
}

/// Coefficients of `m4^2`.
fn x4_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(S4),
        One,
        n(8) * x(4).pow(2) * x(3) * x(2) * (x(2) - x(3))
            + n(8) * x(2) * x(4).pow(2) * (x(3).pow(2) + x(4).pow(2))
            - n(8) * x(3) * x(4).pow(2) * (x(2).pow(2) + x(4).pow(2))
            - n(8) * x(3) * x(2) * x(4).pow(3)
            - n(8) * x(3) * x(2) * x(4) * (x(3).pow(2) + x(2).pow(2))
            + n(8) * x(2) * x(3) * x(4) * (x(3).pow(2) + x(4).pow(2))
            + n(8) * x(2) * x(3) * x(4) * (x(2).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(S4),
        C21,
        n(-4) * x(3) * x(2).pow(2) * x(4).pow(2)
            + n(2)
                * x(2)
                * x(4)
                * (x(4) * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2))
                    + x(2) * (x(3).pow(2) + x(4).pow(2)))
            + n(2)
                * x(2)
                * x(4)
                * (x(3) * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2))
                    + n(2) * x(1) * (x(3).pow(2) + x(4).pow(2))),
    );
    g.add(
        sq(S4),
        C23,
        n(8) * (x(3).pow(2) + x(2).pow(2)) * x(4).pow(2) * x(2)
            - n(2)
                * x(2)
                * x(4)
                * (x(2) * (x(3).pow(2) + x(2).pow(2))
                    + x(4) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            - n(2)
                * x(2)
                * x(4)
                * (x(1) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2))
                    - n(2) * x(3) * (x(3).pow(2) + x(2).pow(2))),
    );
}

/// Coefficients of `m_{1+2}^2 = m_{3+4}^2`.
fn x5_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(P12),
        One,
        n(-8) * x(2) * (x(3).pow(2) + x(4).pow(2)).pow(2)
            - n(8) * x(3) * x(4) * (x(2) - x(1)) * (x(3).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(P12),
        C21,
        n(-2)
            * x(2)
            * (x(3).pow(2) + x(4).pow(2))
            * (x(1) * x(2) + x(3) * x(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
                + x(2).pow(2)
                + x(2) * x(4))
            + n(4) * x(1) * x(3) * x(4) * (x(3).pow(2) + x(4).pow(2))
            - n(4) * x(1) * x(2) * (x(3) + x(4)) * (x(3).pow(2) + x(4).pow(2))
            - n(4) * x(3) * x(4) * (x(1) - n(2) * x(2)) * (x(3).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(P12),
        C43,
        n(4) * x(2) * x(4).pow(2) * (x(3).pow(2) + x(4).pow(2))
            + n(4) * x(2) * (x(3).pow(2) + x(4).pow(2)).pow(2)
            + n(2)
                * x(4)
                * (x(3).pow(2) + x(4).pow(2))
                * ((x(2) - x(1)) * x(4) + n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4))
            - n(4) * x(2) * (x(3).pow(2) + x(4).pow(2)).pow(2)
            - n(4) * x(3) * x(4) * (x(1) - x(2)) * (x(3).pow(2) + x(4).pow(2)),
    );
    g.add(
        sq(P12),
        C2143,
        n(2) * x(2) * x(4) * (x(3).pow(2) + x(4).pow(2)) * (x(2) - x(4))
            + x(1)
                * x(4)
                * (-(x(4) * (x(3).pow(2) + x(4).pow(2)))
                    + x(1) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            + x(2)
                * (x(3).pow(2) + x(4).pow(2))
                * (x(1) * x(2) + x(3) * x(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
                    + x(2).pow(2)
                    + x(2) * x(4))
            - x(1)
                * x(4)
                * (n(2) * x(3) * (x(3).pow(2) + x(4).pow(2))
                    + x(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            + n(2) * x(1) * x(2) * (x(3) + x(4)) * (x(3).pow(2) + x(4).pow(2))
            + x(4)
                * (x(4) * (x(1) - n(2) * x(2)) * (x(3).pow(2) + x(4).pow(2))
                    - x(1).pow(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            - x(2)
                * (x(3).pow(2) + x(4).pow(2))
                * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
                    + x(2) * x(3)
                    - x(2) * x(4))
            - x(4)
                * (n(2) * x(3) * (n(2) * x(2) - x(1)) * (x(3).pow(2) + x(4).pow(2))
                    - x(1) * x(2) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)))
            - n(2) * x(1) * x(2) * (x(3) - x(4)) * (x(3).pow(2) + x(4).pow(2)),
    );
}

/// Coefficients of `m_{1+4}^2 = m_{3+2}^2`.
fn x6_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(P14),
        One,
        n(8) * x(4) * (x(3).pow(2) + x(2).pow(2)).pow(2)
            - n(8) * x(3) * x(2) * (x(4) + x(1)) * (x(3).pow(2) + x(2).pow(2)),
    );
    g.add(
        sq(P14),
        C41,
        n(-2)
            * x(4)
            * (x(3).pow(2) + x(2).pow(2))
            * (x(1) * x(4) + x(3) * x(4) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2)
                - x(4).pow(2)
                - x(2) * x(4))
            - n(4) * x(1) * x(3) * x(2) * (x(3).pow(2) + x(2).pow(2))
            + n(4) * x(1) * x(4) * (x(3) - x(2)) * (x(3).pow(2) + x(2).pow(2))
            + n(4) * x(3) * x(2) * (x(1) + n(2) * x(4)) * (x(3).pow(2) + x(2).pow(2)),
    );
    g.add(
        sq(P14),
        C23,
        n(-4) * x(2).pow(2) * x(4) * (x(3).pow(2) + x(2).pow(2))
            - n(4) * x(4) * (x(3).pow(2) + x(2).pow(2)).pow(2)
            - n(2)
                * x(2)
                * (x(3).pow(2) + x(2).pow(2))
                * ((x(4) + x(1)) * x(2) + n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2))
            + n(4) * x(4) * (x(3).pow(2) + x(2).pow(2)).pow(2)
            + n(4) * x(3) * x(2) * (x(1) + x(4)) * (x(3).pow(2) + x(2).pow(2)),
    );
    g.add(
        sq(P14),
        C2341,
        n(-2) * x(2) * x(4) * (x(3).pow(2) + x(2).pow(2)) * (x(4) - x(2))
            - x(1)
                * x(2)
                * (x(2) * (x(3).pow(2) + x(2).pow(2))
                    + x(1) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            + x(4)
                * (x(3).pow(2) + x(2).pow(2))
                * (x(1) * x(4) + x(3) * x(4) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2)
                    - x(4).pow(2)
                    - x(2) * x(4))
            - x(1)
                * x(2)
                * (n(-2) * x(3) * (x(3).pow(2) + x(2).pow(2))
                    + x(4) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            - n(2) * x(1) * x(4) * (x(3) - x(2)) * (x(3).pow(2) + x(2).pow(2))
            + x(2)
                * (x(2) * (x(1) + n(2) * x(4)) * (x(3).pow(2) + x(2).pow(2))
                    + x(1).pow(2) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            - x(4)
                * (x(3).pow(2) + x(2).pow(2))
                * (x(1) * x(4) - x(4).pow(2)
                    + n(2) * x(3).pow(2)
                    + n(2) * x(2).pow(2)
                    + x(3) * x(4)
                    + x(2) * x(4))
            - x(2)
                * (n(2) * x(3) * (n(2) * x(4) + x(1)) * (x(3).pow(2) + x(2).pow(2))
                    - x(1) * x(4) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)))
            + n(2) * x(1) * x(4) * (x(3) + x(2)) * (x(3).pow(2) + x(2).pow(2)),
    );
}

/// Coefficient of `m_{1+3}^2 = m_{2+4}^2`.
fn x7_coeffs(g: &mut GroupedPoly) {
    g.add(
        sq(P13),
        One,
        n(8) * x(3) * (x(2).pow(2) + x(4).pow(2)).pow(2)
            - n(8) * x(2) * x(4) * (x(1) + x(3)) * (x(2).pow(2) + x(4).pow(2)),
    );
}

/// Coefficients of the mixed weight products.
fn y_coeffs(g: &mut GroupedPoly) {
    // m1 m_{3+2}
    g.add(
        mm(S1, P14),
        C2341,
        n(4) * x(4).pow(2) * (x(3).pow(2) + x(2).pow(2)) * x(2) - n(2) * x(2).pow(2) * x(4).pow(3)
            + n(2) * x(2).pow(2) * x(4).pow(2) * x(1)
            - n(2) * x(2) * x(4).pow(2) * (n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)),
    );
    // m1 m_{3+4}
    g.add(
        mm(S1, P12),
        C2143,
        n(-4) * x(2).pow(2) * (x(3).pow(2) + x(4).pow(2)) * x(4)
            + n(2) * x(4).pow(2) * x(2).pow(3)
            + n(2) * x(2).pow(2) * x(4).pow(2) * x(1)
            + n(2) * x(2).pow(2) * x(4) * (n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)),
    );
    // m3 m_{1+2}: chi_{4,3} (chi_{2,1} - 2) splits over two tags
    g.add(
        mm(S3, P12),
        C2143,
        n(4) * x(4).pow(2) * (x(3).pow(2) + x(4).pow(2)) * x(2)
            - n(2) * x(2).pow(2) * x(4).pow(3)
            - n(2) * x(2).pow(2) * x(4).pow(2) * x(3)
            + n(2)
                * x(2)
                * x(4).pow(2)
                * (x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)),
    );
    g.add(
        mm(S3, P12),
        C43,
        n(-8) * x(4).pow(2) * (x(3).pow(2) + x(4).pow(2)) * x(2)
            + n(8) * x(2) * x(4).pow(2) * (x(3).pow(2) + x(4).pow(2)),
    );
    // m3 m_{1+4}: chi_{2,3} (chi_{4,1} - 2) splits over two tags
    g.add(
        mm(S3, P14),
        C2341,
        n(-4) * x(2).pow(2) * (x(3).pow(2) + x(2).pow(2)) * x(4)
            + n(2) * x(4).pow(2) * x(2).pow(3)
            - n(2) * x(2).pow(2) * x(4).pow(2) * x(3)
            + n(2)
                * x(2).pow(2)
                * x(4)
                * (x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2)),
    );
    g.add(
        mm(S3, P14),
        C23,
        n(8) * x(2).pow(2) * (x(3).pow(2) + x(2).pow(2)) * x(4)
            - n(8) * x(2).pow(2) * x(4) * (x(3).pow(2) + x(2).pow(2)),
    );
    // m1 m3
    g.add(
        mm(S1, S3),
        C24,
        n(-8) * x(2).pow(2) * x(4).pow(2) * (x(1) - x(3))
            + n(8) * (x(2).pow(2) * x(4).pow(3) - x(4).pow(2) * x(2).pow(3)),
    );
}

/// The complete published coefficient table.
pub fn coefficient_table() -> GroupedPoly {
    let mut g = GroupedPoly::new();
    x1_coeffs(&mut g);
    x2_coeffs(&mut g);
    x3_coeffs(&mut g);
    x4_coeffs(&mut g);
    x5_coeffs(&mut g);
    x6_coeffs(&mut g);
    x7_coeffs(&mut g);
    y_coeffs(&mut g);
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn leading_unweighted_coefficient_factors() {
        // the m1^2 unweighted coefficient equals
        // 8 x1 (x2^2 + x3^2 + x4^2)(x2 x4 + x2 x3 - x3 x4)
        let g = coefficient_table();
        let lead = g.get(sq(S1), One).expect("missing m1^2 coefficient");
        let factored = n(8)
            * x(1)
            * (x(2).pow(2) + x(3).pow(2) + x(4).pow(2))
            * (x(2) * x(4) + x(2) * x(3) - x(3) * x(4));
        assert_eq!(lead, &factored);
        // spot value at a non-resonant integer point
        let pt = [
            BigRational::from_integer(BigInt::from(4)),
            BigRational::from_integer(BigInt::from(1)),
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
        ];
        assert_eq!(
            lead.eval_rational(&pt),
            BigRational::from_integer(BigInt::from(-448))
        );
    }

    #[test]
    fn self_cancelling_groups_are_absent() {
        // four printed coefficients cancel term-by-term; the grouped map
        // must therefore have no entry for them
        let g = coefficient_table();
        assert!(g.get(sq(S1), C21).is_none());
        assert!(g.get(sq(S1), C41).is_none());
        assert!(g.get(sq(S3), C43).is_none());
        assert!(g.get(sq(S3), C23).is_none());
    }
}
