//! Single Weierstrass fibers over F_q: point counts and reduction types.

use serde::{Deserialize, Serialize};

use super::field::{Fe, Fq};
use crate::error::{Error, Result};

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeierstrassFiber {
    pub a1: Fe,
    pub a2: Fe,
    pub a3: Fe,
    pub a4: Fe,
    pub a6: Fe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

/// Reduction type and the Frobenius trace on the stalk: a_x for good
/// fibers, +1 / −1 / 0 for split, nonsplit and additive ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberClass {
    pub kind: ReductionKind,
    pub trace: i64,
}

impl FiberClass {
    pub fn bad(kind: ReductionKind) -> Self {
        let trace = match kind {
            ReductionKind::SplitMultiplicative => 1,
            ReductionKind::NonsplitMultiplicative => -1,
            _ => 0,
        };
        Self { kind, trace }
    }
}

/// Coefficients of the right-hand side after completing the square:
/// (y + (a1x + a3)/2)² = x³ + A2·x² + A4·x + A6.
#[derive(Clone, Copy, Debug)]
pub(crate) struct HalfCubic {
    pub a2: Fe,
    pub a4: Fe,
    pub a6: Fe,
}

impl WeierstrassFiber {
    pub fn new(field: &Fq, a: [i64; 5]) -> Self {
        let c = |k: i64| field.from_int(k);
        Self { a1: c(a[0]), a2: c(a[1]), a3: c(a[2]), a4: c(a[3]), a6: c(a[4]) }
    }

    /// b2, b4, b6, b8.
    pub fn b_invariants(&self, f: &Fq) -> [Fe; 4] {
        let (a1, a2, a3, a4, a6) = (self.a1, self.a2, self.a3, self.a4, self.a6);
        let m = |x, y| f.mul(x, y);
        let b2 = f.add(m(a1, a1), f.scale(a2, 4));
        let b4 = f.add(f.scale(a4, 2), m(a1, a3));
        let b6 = f.add(m(a3, a3), f.scale(a6, 4));
        let b8 = f.sub(
            f.add(f.add(m(m(a1, a1), a6), f.scale(m(a2, a6), 4)), m(a2, m(a3, a3))),
            f.add(m(a1, m(a3, a4)), m(a4, a4)),
        );
        [b2, b4, b6, b8]
    }

    pub fn c4(&self, f: &Fq) -> Fe {
        let [b2, b4, ..] = self.b_invariants(f);
        f.sub(f.mul(b2, b2), f.scale(b4, 24))
    }

    pub fn c6(&self, f: &Fq) -> Fe {
        let [b2, b4, b6, _] = self.b_invariants(f);
        let b2c = f.mul(b2, f.mul(b2, b2));
        f.sub(f.add(f.neg(b2c), f.scale(f.mul(b2, b4), 36)), f.scale(b6, 216))
    }

    pub fn discriminant(&self, f: &Fq) -> Fe {
        let [b2, b4, b6, b8] = self.b_invariants(f);
        let t1 = f.neg(f.mul(f.mul(b2, b2), b8));
        let t2 = f.scale(f.mul(b4, f.mul(b4, b4)), 8);
        let t3 = f.scale(f.mul(b6, b6), 27);
        let t4 = f.scale(f.mul(b2, f.mul(b4, b6)), 9);
        f.add(f.sub(f.sub(t1, t2), t3), t4)
    }

    pub(crate) fn half_cubic(&self, f: &Fq) -> HalfCubic {
        let [b2, b4, b6, _] = self.b_invariants(f);
        let inv4 = f.inv(f.from_int(4)).expect("p is odd");
        let inv2 = f.inv(f.from_int(2)).expect("p is odd");
        HalfCubic { a2: f.mul(b2, inv4), a4: f.mul(b4, inv2), a6: f.mul(b6, inv4) }
    }

    /// Whether (x, y) satisfies the equation.
    pub fn contains(&self, f: &Fq, x: Fe, y: Fe) -> bool {
        let lhs = f.add(f.mul(y, y), f.mul(y, f.add(f.mul(self.a1, x), self.a3)));
        let rhs = f.add(f.mul(x, f.add(f.mul(x, f.add(x, self.a2)), self.a4)), self.a6);
        lhs == rhs
    }
}

/// Σ_x χ(x³ + a2x² + a4x + a6) over all of F_q.
#[inline]
pub(crate) fn character_sum(f: &Fq, h: &HalfCubic) -> i64 {
    let mut s = 0i64;
    for i in 0..f.order() {
        let x = f.from_index(i);
        let v = f.add(f.mul(x, f.add(f.mul(x, f.add(x, h.a2)), h.a4)), h.a6);
        s += f.chi(v) as i64;
    }
    s
}

/// Good fibers: a = q + 1 − #E(F_q). Singular fibers: the type of the
/// unique singular point, read off from its tangent cone.
pub fn count_or_classify(fiber: &WeierstrassFiber, f: &Fq) -> Result<FiberClass> {
    let h = fiber.half_cubic(f);
    if !fiber.discriminant(f).is_zero() {
        // #E = 1 + Σ_x (1 + χ(rhs)), so a = −Σ χ
        let a = -character_sum(f, &h);
        debug_assert!((a * a) as usize <= 4 * f.order());
        return Ok(FiberClass { kind: ReductionKind::Good, trace: a });
    }
    classify_singular(f, &h)
}

/// Singular point of Y² = g(x) is (x0, 0) with g(x0) = g'(x0) = 0; the
/// tangent cone there is Y² = (3x0 + a2)(x − x0)².
pub(crate) fn classify_singular(f: &Fq, h: &HalfCubic) -> Result<FiberClass> {
    let mut singular = Vec::new();
    for x in f.elements() {
        let g = f.add(f.mul(x, f.add(f.mul(x, f.add(x, h.a2)), h.a4)), h.a6);
        let dg = f.add(f.add(f.scale(f.mul(x, x), 3), f.scale(f.mul(h.a2, x), 2)), h.a4);
        if g.is_zero() && dg.is_zero() {
            singular.push(x);
        }
    }
    let x0 = match singular.as_slice() {
        [x0] => *x0,
        [] => return Err(Error::Internal("vanishing discriminant but no singular point".into())),
        _ => return Err(Error::Internal(format!("{} singular points on one fiber", singular.len()))),
    };
    let cone = f.add(f.scale(x0, 3), h.a2);
    let kind = if cone.is_zero() {
        ReductionKind::Additive
    } else if f.is_square(cone) {
        ReductionKind::SplitMultiplicative
    } else {
        ReductionKind::NonsplitMultiplicative
    };
    Ok(FiberClass::bad(kind))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cm_curve_over_f5() {
        let f = Fq::new(5, 1).unwrap();
        let e = WeierstrassFiber::new(&f, [0, 0, 0, -1, 0]);
        let c = count_or_classify(&e, &f).unwrap();
        assert_eq!(c, FiberClass { kind: ReductionKind::Good, trace: -2 });
        // enumeration oracle
        let pts =
            f.elements().flat_map(|x| f.elements().map(move |y| (x, y))).filter(|&(x, y)| e.contains(&f, x, y)).count()
                + 1;
        assert_eq!(pts, 8);
    }

    #[test]
    fn tangent_cone_types() {
        for p in [5, 7, 11, 13] {
            let f = Fq::new(p, 1).unwrap();
            // y² + 4xy = x³: tangents y(y + 4x) = 0
            let node = WeierstrassFiber::new(&f, [4, 0, 0, 0, 0]);
            assert_eq!(count_or_classify(&node, &f).unwrap().kind, ReductionKind::SplitMultiplicative);
            let cusp = WeierstrassFiber::new(&f, [0, 0, 0, 0, 0]);
            assert_eq!(count_or_classify(&cusp, &f).unwrap().trace, 0);
            // y² = x³ + n x² is nonsplit for a nonresidue n
            let n = (2..p as i64).find(|&n| !f.is_square(f.from_int(n))).unwrap();
            let ns = WeierstrassFiber::new(&f, [0, n, 0, 0, 0]);
            assert_eq!(count_or_classify(&ns, &f).unwrap().trace, -1);
        }
    }

    #[test]
    fn hasse_bound_small_fields() {
        for p in [5, 7] {
            let f = Fq::new(p, 1).unwrap();
            for a4 in 0..p as i64 {
                for a6 in 0..p as i64 {
                    let e = WeierstrassFiber::new(&f, [1, 2, 3, a4, a6]);
                    let c = count_or_classify(&e, &f).unwrap();
                    if c.kind == ReductionKind::Good {
                        assert!((c.trace * c.trace) as u64 <= 4 * p);
                    }
                }
            }
        }
    }

    #[test]
    fn split_criterion_agrees_with_c6() {
        // multiplicative fibers are split iff −c6 is a square
        let f = Fq::new(13, 1).unwrap();
        for a2 in 1..13 {
            let e = WeierstrassFiber::new(&f, [0, a2, 0, 0, 0]);
            let c = count_or_classify(&e, &f).unwrap();
            let split = f.is_square(f.neg(e.c6(&f)));
            assert_eq!(c.trace, if split { 1 } else { -1 });
        }
    }
}
