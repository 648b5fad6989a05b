//! Published factorizations of H_{p,2} and H_{p,4} for 5 ≤ p ≤ 59,
//! transcribed as exact expressions.
//!
//! Square roots use the branches of [`CycloElem::sqrt_embed`]; ω is the
//! primitive sixth root of unity (1 + √−3)/2.

use crate::exact::{CycloElem, Poly};

#[derive(Clone, Debug)]
pub struct GoldenRow {
    pub p: u64,
    pub g: Poly,
    pub c_p: CycloElem,
    /// Only present in the a = 2 table.
    pub zeta: Option<CycloElem>,
    /// The printed ζ, e.g. "ω^4".
    pub zeta_label: Option<&'static str>,
}

fn s(d: i64) -> CycloElem {
    CycloElem::sqrt_embed(d).expect("supported")
}

fn n(k: i64) -> CycloElem {
    CycloElem::from_int(k)
}

fn half(x: CycloElem) -> CycloElem {
    x.scale(&crate::exact::rational::rat(1, 2))
}

/// (−1 − √−3)/2, (−1 + √−3)/2, (1 + √−3)/2.
fn m1m3() -> CycloElem {
    half(n(-1) - s(-3))
}

fn m1p3() -> CycloElem {
    half(n(-1) + s(-3))
}

fn p1p3() -> CycloElem {
    half(n(1) + s(-3))
}

fn omega(k: i64) -> CycloElem {
    CycloElem::root_of_unity(4 * k)
}

fn i() -> CycloElem {
    CycloElem::root_of_unity(6)
}

/// X² + bX + c.
fn g(b: CycloElem, c: CycloElem) -> Poly {
    Poly::new(vec![c, b, CycloElem::one()])
}

fn sq(p: i64) -> CycloElem {
    n(p * p)
}

fn row(p: u64, gp: Poly, c_p: CycloElem, zeta: Option<(CycloElem, &'static str)>) -> GoldenRow {
    let (zeta, zeta_label) = match zeta {
        Some((z, l)) => (Some(z), Some(l)),
        None => (None, None),
    };
    GoldenRow { p, g: gp, c_p, zeta, zeta_label }
}

/// g_{p,2}, c_p(f) and ζ for the fifteen primes 5..59.
pub fn table_a2() -> Vec<GoldenRow> {
    vec![
        row(5, g(n(6) * s(-2), -sq(5)), n(6) * s(2), Some((i(), "i"))),
        row(7, g(s(-3) * m1m3(), -(m1p3() * sq(7))), -s(-3), Some((omega(4), "ω^4"))),
        row(11, g(n(6) * s(-6), -sq(11)), n(-6) * s(-6), Some((n(1), "1"))),
        row(13, g(-(n(13) * p1p3()), m1p3() * sq(13)), n(13), Some((omega(1), "ω"))),
        row(17, g(n(6) * s(-2), -sq(17)), n(-6) * s(2), Some((i(), "i"))),
        row(19, g(n(11) * s(-3) * m1p3(), -(m1m3() * sq(19))), n(-11) * s(-3), Some((omega(2), "ω^2"))),
        row(23, g(n(-18) * s(-6), -sq(23)), n(18) * s(-6), Some((n(1), "1"))),
        row(29, g(n(24) * s(-2), -sq(29)), n(-24) * s(2), Some((i(), "i"))),
        row(31, g(n(-24) * s(-3), -sq(31)), n(24) * s(-3), Some((omega(6), "ω^6"))),
        row(37, g(-(n(35) * m1m3()), m1p3() * sq(37)), n(35), Some((omega(4), "ω^4"))),
        row(41, g(n(0), -sq(41)), n(0), Some((i(), "i"))),
        row(43, g(n(24) * s(-3), -sq(43)), n(-24) * s(-3), Some((omega(6), "ω^6"))),
        row(47, g(n(-6) * s(-6), -sq(47)), n(6) * s(-6), Some((n(1), "1"))),
        row(53, g(n(-36) * s(-2), -sq(53)), n(36) * s(2), Some((i(), "i"))),
        row(59, g(n(-30) * s(-6), -sq(59)), n(30) * s(-6), Some((n(1), "1"))),
    ]
}

/// g_{p,4} and c_p(f) for the fifteen primes 5..59.
pub fn table_a4() -> Vec<GoldenRow> {
    vec![
        row(5, g(n(6) * s(-2), -sq(5)), n(6) * s(2), None),
        row(7, g(s(-3), -sq(7)), -s(-3), None),
        row(11, g(n(6) * s(-6), -sq(11)), n(-6) * s(-6), None),
        row(13, g(n(13), sq(13)), n(13), None),
        row(17, g(n(6) * s(-2), -sq(17)), n(-6) * s(2), None),
        row(19, g(n(11) * s(-3), -sq(19)), n(-11) * s(-3), None),
        row(23, g(n(-18) * s(-6), -sq(23)), n(18) * s(-6), None),
        row(29, g(n(24) * s(-2), -sq(29)), n(-24) * s(2), None),
        row(31, g(n(-24) * s(-3), -sq(31)), n(24) * s(-3), None),
        row(37, g(n(-35), sq(37)), n(35), None),
        row(41, g(n(0), -sq(41)), n(0), None),
        row(43, g(n(24) * s(-3), -sq(43)), n(-24) * s(-3), None),
        row(47, g(n(-6) * s(-6), -sq(47)), n(6) * s(-6), None),
        row(53, g(n(-36) * s(-2), -sq(53)), n(36) * s(2), None),
        row(59, g(n(-30) * s(-6), -sq(59)), n(30) * s(-6), None),
    ]
}

pub fn table(a: i64) -> Option<Vec<GoldenRow>> {
    match a {
        2 => Some(table_a2()),
        4 => Some(table_a4()),
        _ => None,
    }
}

/// Leading coefficients of f as printed with its definition, keyed by n,
/// as (A, B, C, D) in A + B√2 + C√−3 + D√−6.
pub const NEWFORM_DISPLAY: [(u64, [i64; 4]); 12] = [
    (1, [1, 0, 0, 0]),
    (5, [0, 6, 0, 0]),
    (7, [0, 0, 1, 0]),
    (11, [0, 0, 0, 6]),
    (13, [13, 0, 0, 0]),
    (17, [0, -6, 0, 0]),
    (19, [0, 0, 11, 0]),
    (23, [0, 0, 0, -18]),
    (25, [47, 0, 0, 0]),
    (29, [0, -24, 0, 0]),
    (31, [0, 0, 24, 0]),
    (35, [0, 0, 0, 6]),
];
