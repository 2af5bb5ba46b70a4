//! Transcription of the antisymmetrized quartic symbol combination on the
//! normalized cone, grouped by weight product and cutoff tag.
//!
//! Variables are the square roots `x1, x2, x3, x4` (polynomial variables
//! 0..3). Every contribution enters as `4 SK`, so the grouped total equals
//! four times the symbol-level difference `SK_1 - SK_2`; callers that
//! compare against the floating-point catalog must divide by four.
//!
//! The transcription keeps the printed term structure: each block below is
//! one evaluated component, with shared brackets factored into the helper
//! functions to avoid copy drift.

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

/// `x3^2 + x2^2`
fn s32() -> Poly {
    x(3).pow(2) + x(2).pow(2)
}

/// `x3^2 + x4^2`
fn s34() -> Poly {
    x(3).pow(2) + x(4).pow(2)
}

/// `x2^2 + x4^2`
fn s24() -> Poly {
    x(2).pow(2) + x(4).pow(2)
}

/// `2 x3^2 + x4^2 - x3 x4`
fn q4m() -> Poly {
    n(2) * x(3).pow(2) + x(4).pow(2) - x(3) * x(4)
}

/// `2 x3^2 + x2^2 + x3 x2`
fn q2p() -> Poly {
    n(2) * x(3).pow(2) + x(2).pow(2) + x(3) * x(2)
}

/// `x1 x4 - x4^2 + 2 x3^2 + 2 x2^2`
fn r14() -> Poly {
    x(1) * x(4) - x(4).pow(2) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2)
}

/// `x1 x2 + x2^2 - 2 x3^2 - 2 x4^2`
fn r12() -> Poly {
    x(1) * x(2) + x(2).pow(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
}

/// First-family local component (the `H` blocks).
fn sk1_local(g: &mut GroupedPoly) {
    // block 1
    g.add(sq(S1), C24, n(4) * x(1).pow(2) * x(2) * x(4) * (x(4) - x(2)));
    g.add(sq(S1), C2341, n(2) * x(1).pow(2) * x(2).pow(2) * x(4));
    g.add(sq(S1), C2143, n(-2) * x(1).pow(2) * x(4).pow(2) * x(2));
    // block 2
    g.add(sq(S2), One, n(8) * x(2).pow(2) * x(3) * x(4) * (x(3) + x(4)));
    g.add(sq(S2), C43, n(-8) * s34() * x(2).pow(2) * x(4));
    g.add(sq(S2), C41, n(-4) * x(3) * x(2).pow(2) * x(4).pow(2));
    // block 3
    g.add(sq(S3), One, n(8) * x(3).pow(2) * x(2) * x(4) * (x(2) - x(4)));
    g.add(sq(S3), C24, n(-4) * x(3).pow(2) * x(2) * x(4) * (x(2) - x(4)));
    g.add(sq(S3), C21, n(-4) * x(3).pow(2) * x(2).pow(2) * x(4));
    g.add(sq(S3), C2143, n(2) * x(3).pow(2) * x(2).pow(2) * x(4));
    g.add(sq(S3), C41, n(4) * x(3).pow(2) * x(4).pow(2) * x(2));
    g.add(sq(S3), C2341, n(-2) * x(3).pow(2) * x(4).pow(2) * x(2));
    // block 4
    g.add(sq(S4), One, n(8) * x(4).pow(2) * x(3) * x(2) * (x(2) - x(3)));
    g.add(sq(S4), C23, n(8) * s32() * x(4).pow(2) * x(2));
    g.add(sq(S4), C21, n(-4) * x(3) * x(2).pow(2) * x(4).pow(2));
}

/// First-family cross terms, weight `m_j m_{k+l}`.
fn sk1_cross(g: &mut GroupedPoly) {
    g.add(mm(S1, P14), C2341, n(4) * x(4).pow(2) * x(2) * s32());
    g.add(mm(S1, P12), C2143, n(-4) * x(2).pow(2) * x(4) * s34());
    // chi_{4,3} (chi_{2,1} - 2) expands over two tags
    g.add(mm(S3, P12), C2143, n(4) * x(4).pow(2) * x(2) * s34());
    g.add(mm(S3, P12), C43, n(-8) * x(4).pow(2) * x(2) * s34());
    g.add(mm(S3, P14), C2341, n(-4) * x(2).pow(2) * x(4) * s32());
    g.add(mm(S3, P14), C23, n(8) * x(2).pow(2) * x(4) * s32());
}

/// First-family squared pair-sum weights.
fn sk1_pair_squares(g: &mut GroupedPoly) {
    // chi_{2,3} { x2 (2 - chi_{4,1}) + x4 chi_{4,1} }
    g.add(sq(P14), C23, n(-4) * x(2).pow(2) * x(4) * s32());
    g.add(sq(P14), C2341, n(-2) * x(2) * x(4) * s32() * (x(4) - x(2)));
    // chi_{4,3} { x4 (2 - chi_{2,1}) + x2 chi_{2,1} }
    g.add(sq(P12), C43, n(4) * x(2) * x(4).pow(2) * s34());
    g.add(sq(P12), C2143, n(2) * x(2) * x(4) * s34() * (x(2) - x(4)));
}

/// First-family `m1 m3` resonant block.
fn sk1_m1m3(g: &mut GroupedPoly) {
    g.add(
        mm(S1, S3),
        C24,
        n(8) * x(2).pow(2) * x(4).pow(2) * (x(4) - x(2)),
    );
}

/// First-family cubic cross corrections.
fn sk1_cubic(g: &mut GroupedPoly) {
    g.add(mm(S1, P14), C2341, n(-2) * x(2).pow(2) * x(4).pow(3));
    g.add(mm(S1, P12), C2143, n(2) * x(4).pow(2) * x(2).pow(3));
    g.add(mm(S3, P12), C2143, n(-2) * x(2).pow(2) * x(4).pow(3));
    g.add(mm(S3, P14), C2341, n(2) * x(4).pow(2) * x(2).pow(3));
}

/// First-family double-cutoff corrections.
fn sk1_double_cut(g: &mut GroupedPoly) {
    let w = n(2) * x(2).pow(2) * x(4).pow(2);
    g.add(mm(S1, P12), C2143, w.clone() * x(1));
    g.add(mm(S1, P14), C2341, w.clone() * x(1));
    g.add(mm(S3, P14), C2341, -(w.clone() * x(3)));
    g.add(mm(S3, P12), C2143, -(w.clone() * x(3)));
    g.add(sq(S1), C2143, -(w.clone() * x(1)));
    g.add(sq(S1), C2341, -(w.clone() * x(1)));
    g.add(sq(S3), C2143, w.clone() * x(3));
    g.add(sq(S3), C2341, w * x(3));
}

/// First-family overlap block.
fn sk1_overlap(g: &mut GroupedPoly) {
    g.add(
        mm(S1, S3),
        C24,
        n(-8) * x(2).pow(2) * x(4).pow(2) * (x(1) - x(3)),
    );
    g.add(sq(S1), C24, n(8) * x(1) * x(2).pow(2) * x(4).pow(2));
    g.add(sq(S3), C24, n(-8) * x(3) * x(2).pow(2) * x(4).pow(2));
}

/// First-family boundary blocks (the `I` blocks).
fn sk1_boundary(g: &mut GroupedPoly) {
    // block 1
    let a = -(x(4) * s34()) + x(1) * q4m();
    g.add(sq(S1), C43, n(-2) * x(1) * x(4) * a.clone());
    g.add(sq(S1), C2143, x(1) * x(4) * a.clone());
    g.add(sq(P12), C2143, x(1) * x(4) * a);
    // block 2
    let b = x(2) * s32() + x(1) * q2p();
    g.add(sq(S1), C23, n(2) * x(1) * x(2) * b.clone());
    g.add(sq(S1), C2341, -(x(1) * x(2) * b.clone()));
    g.add(sq(P14), C2341, -(x(1) * x(2) * b));
    // block 3
    let c = x(1) * x(4) + x(3) * x(4) + n(2) * x(3).pow(2) + n(2) * x(2).pow(2)
        - x(4).pow(2)
        - x(2) * x(4);
    g.add(sq(P14), One, n(8) * x(4) * s32().pow(2));
    g.add(sq(S3), C23, n(-4) * x(4) * s32().pow(2));
    g.add(sq(P14), C23, n(-4) * x(4) * s32().pow(2));
    g.add(sq(P14), C41, n(-2) * x(4) * s32() * c.clone());
    g.add(sq(S3), C2341, x(4) * s32() * c.clone());
    g.add(sq(P14), C2341, x(4) * s32() * c);
    // block 4
    let d = x(1) * x(2) + x(3) * x(2) - n(2) * x(3).pow(2) - n(2) * x(4).pow(2)
        + x(2).pow(2)
        + x(2) * x(4);
    g.add(sq(P12), One, n(-8) * x(2) * s34().pow(2));
    g.add(sq(S3), C43, n(4) * x(2) * s34().pow(2));
    g.add(sq(P12), C43, n(4) * x(2) * s34().pow(2));
    g.add(sq(P12), C21, n(-2) * x(2) * s34() * d.clone());
    g.add(sq(S3), C2143, x(2) * s34() * d.clone());
    g.add(sq(P12), C2143, x(2) * s34() * d);
    // block 5
    g.add(sq(P13), One, n(8) * x(3) * s24().pow(2));
}

/// First-family interior blocks (the `J` blocks).
fn sk1_interior(g: &mut GroupedPoly) {
    // block 1
    g.add(
        sq(S2),
        C43,
        n(2) * x(2) * x(4) * (x(4) * s34() + x(2) * q4m()),
    );
    g.add(
        sq(P12),
        C43,
        n(2) * x(4) * s34() * ((x(2) - x(1)) * x(4) + q4m()),
    );
    g.add(mm(S1, P12), C2143, n(2) * x(2).pow(2) * x(4) * q4m());
    g.add(
        sq(S1),
        C2143,
        x(1) * x(4) * (x(4) * s34() - x(1) * q4m()),
    );
    g.add(
        sq(P12),
        C2143,
        x(4) * (x(4) * (x(1) - n(2) * x(2)) * s34() - x(1).pow(2) * q4m()),
    );
    // block 2
    g.add(
        sq(S4),
        C23,
        n(-2) * x(2) * x(4) * (x(2) * s32() + x(4) * q2p()),
    );
    g.add(
        sq(P14),
        C23,
        n(-2) * x(2) * s32() * ((x(4) + x(1)) * x(2) + q2p()),
    );
    g.add(mm(S1, P14), C2341, n(-2) * x(2) * x(4).pow(2) * q2p());
    g.add(
        sq(S1),
        C2341,
        x(1) * x(2) * (x(2) * s32() + x(1) * q2p()),
    );
    g.add(
        sq(P14),
        C2341,
        x(2) * (x(2) * (x(1) + n(2) * x(4)) * s32() + x(1).pow(2) * q2p()),
    );
    // block 3
    g.add(sq(S2), One, n(-8) * x(4) * x(2).pow(2) * s32());
    g.add(sq(S3), One, n(-8) * x(4) * x(3).pow(2) * s32());
    g.add(sq(S3), C23, n(4) * x(4) * s32().pow(2));
    g.add(sq(P14), C23, n(4) * x(4) * s32().pow(2));
    g.add(mm(S3, P14), C23, n(-8) * x(2).pow(2) * x(4) * s32());
    g.add(
        sq(S2),
        C41,
        n(2) * x(2) * x(4) * (x(2) * r14() - x(4) * s32()),
    );
    g.add(
        sq(S3),
        C41,
        n(2) * x(4) * x(3) * (x(3) * r14() + x(4) * s32()),
    );
    g.add(
        sq(S3),
        C2341,
        -(x(4) * s32() * (r14() + x(3) * x(4) - x(2) * x(4))),
    );
    g.add(
        sq(P14),
        C2341,
        -(x(4) * s32() * (r14() + x(3) * x(4) + x(2) * x(4))),
    );
    g.add(mm(S3, P14), C2341, n(2) * x(2).pow(2) * x(4) * r14());
    // block 4
    g.add(sq(S4), One, n(8) * x(2) * x(4).pow(2) * s34());
    g.add(sq(S3), One, n(8) * x(2) * x(3).pow(2) * s34());
    g.add(sq(S3), C43, n(-4) * x(2) * s34().pow(2));
    g.add(sq(P12), C43, n(-4) * x(2) * s34().pow(2));
    g.add(mm(S3, P12), C43, n(8) * x(2) * x(4).pow(2) * s34());
    g.add(
        sq(S4),
        C21,
        n(2) * x(2) * x(4) * (x(4) * r12() + x(2) * s34()),
    );
    g.add(
        sq(S3),
        C21,
        n(2) * x(2) * x(3) * (x(3) * r12() + x(2) * s34()),
    );
    g.add(
        sq(S3),
        C2143,
        -(x(2) * s34() * (r12() + x(2) * x(3) + x(2) * x(4))),
    );
    g.add(
        sq(P12),
        C2143,
        -(x(2) * s34() * (r12() + x(2) * x(3) - x(2) * x(4))),
    );
    g.add(mm(S3, P12), C2143, n(2) * x(2) * x(4).pow(2) * r12());
    // block 5
    g.add(sq(S2), One, n(-8) * x(3) * x(2).pow(2) * s24());
    g.add(sq(S4), One, n(-8) * x(3) * x(4).pow(2) * s24());
}

/// Second-family local component.
fn sk2_local(g: &mut GroupedPoly) {
    // block 1
    g.add(
        sq(S1),
        One,
        n(-8)
            * (x(1) * x(3) * x(2) * x(4).pow(2) - x(1) * x(3) * x(4) * x(2).pow(2)
                + x(1) * x(2) * x(4) * x(3).pow(2)),
    );
    g.add(
        sq(S1),
        C24,
        n(4)
            * (x(1) * x(3) * x(2) * x(4).pow(2)
                - x(1) * x(3) * x(4) * x(2).pow(2)
                - x(1) * x(2) * x(4) * s24()),
    );
    g.add(sq(S1), C23, n(8) * x(1) * x(2) * x(4) * s32());
    g.add(sq(S1), C2341, n(-4) * x(1) * x(2) * x(4) * s32());
    g.add(sq(S1), C43, n(8) * x(1) * x(4) * x(2) * s34());
    g.add(sq(S1), C2143, n(-4) * x(1) * x(4) * x(2) * s34());
    // block 2
    g.add(sq(S2), One, n(8) * x(3) * x(4) * x(2).pow(3));
    // block 3
    g.add(sq(S3), One, n(8) * x(3).pow(3) * x(2) * x(4));
    g.add(
        sq(S3),
        C24,
        n(4)
            * (x(3) * x(2) * x(4) * s24() - x(1) * x(3) * x(4) * x(2).pow(2)
                + x(1) * x(3) * x(2) * x(4).pow(2)),
    );
    g.add(sq(S3), C23, n(-8) * x(3) * x(2) * x(4) * s32());
    g.add(sq(S3), C2341, n(4) * x(3) * x(2) * x(4) * s32());
    g.add(sq(S3), C43, n(-8) * x(3) * x(4) * x(2) * s34());
    g.add(sq(S3), C2143, n(4) * x(3) * x(4) * x(2) * s34());
    // block 4
    g.add(sq(S4), One, n(8) * x(3) * x(2) * x(4).pow(3));
}

/// Second-family boundary blocks.
fn sk2_boundary(g: &mut GroupedPoly) {
    // block 1
    let e = n(2) * x(3) * s34() + x(2) * q4m();
    g.add(sq(S1), One, n(8) * x(1) * x(3) * x(4) * s34());
    g.add(sq(S1), C21, n(-4) * x(1) * x(3) * x(4) * s34());
    g.add(sq(P12), C21, n(-4) * x(1) * x(3) * x(4) * s34());
    g.add(sq(S1), C43, n(-2) * x(1) * x(4) * e.clone());
    g.add(sq(S1), C2143, x(1) * x(4) * e.clone());
    g.add(sq(P12), C2143, x(1) * x(4) * e);
    // block 2
    let f = n(-2) * x(3) * s32() + x(4) * q2p();
    g.add(sq(S1), One, n(-8) * x(1) * x(3) * x(2) * s32());
    g.add(sq(S1), C41, n(4) * x(1) * x(3) * x(2) * s32());
    g.add(sq(P14), C41, n(4) * x(1) * x(3) * x(2) * s32());
    g.add(sq(S1), C23, n(-2) * x(1) * x(2) * f.clone());
    g.add(sq(S1), C2341, x(1) * x(2) * f.clone());
    g.add(sq(P14), C2341, x(1) * x(2) * f);
    // block 3
    g.add(
        sq(P14),
        C41,
        n(-4) * x(1) * x(4) * (x(3) - x(2)) * s32(),
    );
    g.add(
        sq(S3),
        C2341,
        n(2) * x(1) * x(4) * (x(3) - x(2)) * s32(),
    );
    g.add(
        sq(P14),
        C2341,
        n(2) * x(1) * x(4) * (x(3) - x(2)) * s32(),
    );
    // block 4
    g.add(
        sq(P12),
        C21,
        n(4) * x(1) * x(2) * (x(3) + x(4)) * s34(),
    );
    g.add(
        sq(S3),
        C2143,
        n(-2) * x(1) * x(2) * (x(3) + x(4)) * s34(),
    );
    g.add(
        sq(P12),
        C2143,
        n(-2) * x(1) * x(2) * (x(3) + x(4)) * s34(),
    );
    // block 6
    g.add(sq(S1), One, n(-8) * x(1) * x(2) * x(4) * s24());
    g.add(sq(S1), C24, n(4) * x(1) * x(2) * x(4) * s24());
    g.add(sq(S3), C24, n(4) * x(1) * x(2) * x(4) * s24());
}

/// Second-family interior blocks.
fn sk2_interior(g: &mut GroupedPoly) {
    // block 1
    g.add(sq(S2), One, n(8) * x(3) * x(4) * x(2) * s34());
    g.add(sq(P12), One, n(8) * x(3) * x(4) * (x(2) - x(1)) * s34());
    g.add(sq(S1), C21, n(4) * x(3) * x(4) * x(1) * s34());
    g.add(
        sq(P12),
        C21,
        n(4) * x(3) * x(4) * (x(1) - n(2) * x(2)) * s34(),
    );
    g.add(
        sq(S2),
        C43,
        n(2) * x(2) * x(4) * (x(1) * q4m() - n(2) * x(3) * s34()),
    );
    g.add(sq(P12), C43, n(4) * x(3) * x(4) * (x(1) - x(2)) * s34());
    g.add(
        sq(S1),
        C2143,
        x(4) * x(1) * (x(2) * q4m() - n(2) * x(3) * s34()),
    );
    g.add(
        sq(P12),
        C2143,
        x(4) * (n(2) * x(3) * (n(2) * x(2) - x(1)) * s34() - x(1) * x(2) * q4m()),
    );
    // block 2
    g.add(sq(S4), One, n(8) * x(3) * x(2) * x(4) * s32());
    g.add(sq(P14), One, n(8) * x(3) * x(2) * (x(4) + x(1)) * s32());
    g.add(sq(S1), C41, n(-4) * x(3) * x(2) * x(1) * s32());
    g.add(
        sq(P14),
        C41,
        n(-4) * x(3) * x(2) * (x(1) + n(2) * x(4)) * s32(),
    );
    g.add(
        sq(S4),
        C23,
        n(2) * x(2) * x(4) * (x(1) * q2p() - n(2) * x(3) * s32()),
    );
    g.add(sq(P14), C23, n(-4) * x(3) * x(2) * (x(1) + x(4)) * s32());
    g.add(
        sq(S1),
        C2341,
        x(2) * x(1) * (x(4) * q2p() + n(2) * x(3) * s32()),
    );
    g.add(
        sq(P14),
        C2341,
        x(2) * (n(2) * x(3) * (n(2) * x(4) + x(1)) * s32() - x(1) * x(4) * q2p()),
    );
    // block 3
    g.add(sq(S2), One, n(-8) * x(2) * x(3) * x(4) * s32());
    g.add(sq(S3), One, n(-8) * x(2) * x(3) * x(4) * s32());
    g.add(sq(S3), C23, n(8) * x(2) * x(3) * x(4) * s32());
    g.add(
        sq(S2),
        C41,
        n(2) * x(2) * x(4) * (x(3) * r14() - n(2) * x(1) * s32()),
    );
    g.add(
        sq(S3),
        C41,
        n(2) * x(4) * x(3) * (x(2) * r14() + n(2) * x(1) * s32()),
    );
    g.add(
        sq(S3),
        C2341,
        n(-2) * x(4) * (x(3) * x(2) * r14() + x(1) * (x(3) - x(2)) * s32()),
    );
    g.add(
        sq(P14),
        C2341,
        n(-2) * x(1) * x(4) * (x(3) + x(2)) * s32(),
    );
    // block 4
    g.add(sq(S4), One, n(-8) * x(2) * x(3) * x(4) * s34());
    g.add(sq(S3), One, n(-8) * x(2) * x(3) * x(4) * s34());
    g.add(sq(S3), C43, n(8) * x(2) * x(3) * x(4) * s34());
    g.add(
        sq(S4),
        C21,
        n(-2) * x(2) * x(4) * (x(3) * r12() + n(2) * x(1) * s34()),
    );
    g.add(
        sq(S3),
        C21,
        n(-2) * x(2) * x(3) * (x(4) * r12() + n(2) * x(1) * s34()),
    );
    g.add(
        sq(S3),
        C2143,
        n(2) * x(2) * (x(3) * x(4) * r12() + x(1) * (x(3) + x(4)) * s34()),
    );
    g.add(
        sq(P12),
        C2143,
        n(2) * x(1) * x(2) * (x(3) - x(4)) * s34(),
    );
    // block 5
    g.add(sq(S2), One, n(-8) * x(2) * x(3) * x(4) * s24());
    g.add(sq(S4), One, n(-8) * x(2) * x(3) * x(4) * s24());
    // block 6
    g.add(sq(S3), One, n(8) * x(2) * x(3) * x(4) * s24());
    g.add(sq(P13), One, n(8) * x(2) * x(4) * (x(1) + x(3)) * s24());
    g.add(
        sq(S3),
        C24,
        n(-4) * x(2) * x(4) * s24() * (x(1) + n(2) * x(3)),
    );
    g.add(sq(S1), C24, n(4) * x(1) * x(2) * x(4) * s24());
}

/// The full grouped combination `sum 4 SK_1 - sum 4 SK_2`.
pub fn sk_difference_grouped() -> GroupedPoly {
    let mut first = GroupedPoly::new();
    sk1_local(&mut first);
    sk1_cross(&mut first);
    sk1_pair_squares(&mut first);
    sk1_m1m3(&mut first);
    sk1_cubic(&mut first);
    sk1_double_cut(&mut first);
    sk1_overlap(&mut first);
    sk1_boundary(&mut first);
    sk1_interior(&mut first);

    let mut second = GroupedPoly::new();
    sk2_local(&mut second);
    sk2_boundary(&mut second);
    sk2_interior(&mut second);

    first.subtract(&second);
    for ((m, c), p) in first.groups() {
        debug_assert!(
            p.is_homogeneous() && p.degree() == Some(5),
            "group ({m:?}, {c:?}) is not homogeneous of degree 5"
        );
    }
    first
}
