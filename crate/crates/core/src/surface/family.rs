//! The pencil E₈(t) pulled back along t = a·r³ − 1, with the fiber at
//! r = ∞ read in the chart u = 1/r.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::fiber::{count_or_classify, FiberClass, WeierstrassFiber};
use super::field::{Fe, Fq};
use crate::error::{Error, Result};

/// Dense integer polynomial, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    /// x^k.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::from(1);
        Self(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|k| self.get(k) + o.get(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|k| self.get(k) - o.get(k)).collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    /// self(g(x)).
    pub fn compose(&self, g: &Self) -> Self {
        self.0.iter().rev().fold(Self(Vec::new()), |acc, c| acc.mul(g).add(&Self::new(vec![c.clone()])))
    }

    fn get(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn reduce(&self, f: &Fq) -> Vec<Fe> {
        let p = BigInt::from(f.p());
        self.0
            .iter()
            .map(|c| {
                let r: BigInt = ((c % &p) + &p) % &p;
                Fe { c0: r.try_into().expect("reduced below p"), c1: 0 }
            })
            .collect()
    }
}

/// Horner evaluation over F_q.
pub fn eval_reduced(f: &Fq, c: &[Fe], x: Fe) -> Fe {
    c.iter().rev().fold(Fe::ZERO, |acc, &k| f.add(f.mul(acc, x), k))
}

/// Taylor coefficients of c at x0: c(x0 + s) = Σ out[k] s^k.
pub fn taylor(f: &Fq, c: &[Fe], x0: Fe) -> Vec<Fe> {
    let mut work = c.to_vec();
    let mut out = Vec::with_capacity(c.len());
    while !work.is_empty() {
        // synthetic division by (x − x0)
        let mut rem = Fe::ZERO;
        let mut quo = vec![Fe::ZERO; work.len().saturating_sub(1)];
        for k in (0..work.len()).rev() {
            let v = f.add(work[k], f.mul(rem, x0));
            if k > 0 {
                quo[k - 1] = v;
            }
            rem = v;
        }
        out.push(rem);
        work = quo;
    }
    out
}

fn valuation(c: &[Fe]) -> Option<usize> {
    c.iter().position(|x| !x.is_zero())
}

/// Which Weierstrass model of the pencil is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyModel {
    /// y² + 4xy + 4t²y = x³ + t²x².
    Weierstrass,
    /// Its quadratic twist by −1: y² = x³ − (t²+4)x² + 8t²x − 4t⁴.
    MinusOneTwist,
}

impl FamilyModel {
    pub const ALL: [FamilyModel; 2] = [FamilyModel::Weierstrass, FamilyModel::MinusOneTwist];

    /// a1, a2, a3, a4, a6 as polynomials in t.
    pub fn coefficients_in_t(self) -> [IntPoly; 5] {
        let z = IntPoly(Vec::new());
        match self {
            FamilyModel::Weierstrass => {
                [IntPoly::constant(4), IntPoly::from_ints(&[0, 0, 1]), IntPoly::from_ints(&[0, 0, 4]), z.clone(), z]
            }
            FamilyModel::MinusOneTwist => [
                z.clone(),
                IntPoly::from_ints(&[-4, 0, -1]),
                z,
                IntPoly::from_ints(&[0, 0, 8]),
                IntPoly::from_ints(&[0, 0, 0, 0, -4]),
            ],
        }
    }
}

/// The sign and model relating counted traces to H_{p,a}: e₁ = sign · Σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convention {
    pub model: FamilyModel,
    pub sign: i64,
}

impl Convention {
    /// Calibrated against the golden rows p = 7 and p = 13 of the a = 2
    /// table; `frobchar::calibrate_convention` re-derives it.
    pub const FROZEN: Convention = Convention { model: FamilyModel::MinusOneTwist, sign: -1 };

    pub fn candidates() -> Vec<Convention> {
        FamilyModel::ALL.iter().flat_map(|&model| [1, -1].map(|sign| Convention { model, sign })).collect()
    }
}

/// Weight of a_i, used to clear the pole of t at r = ∞.
const WEIGHTS: [u32; 5] = [1, 2, 3, 4, 6];

/// The pencil over the r-line for a ∈ {2, 4}.
#[derive(Clone, Debug)]
pub struct Family {
    pub a: i64,
    pub model: FamilyModel,
    finite: [IntPoly; 5],
    infinity: [IntPoly; 5],
}

impl Family {
    pub fn new(a: i64, model: FamilyModel) -> Result<Self> {
        if a != 2 && a != 4 {
            return Err(Error::UnsupportedParameter(a));
        }
        let in_t = model.coefficients_in_t();
        let t_of_r = IntPoly::from_ints(&[-1, 0, 0, a]);
        let finite = std::array::from_fn(|i| in_t[i].compose(&t_of_r));
        // t = (a − u³)/u³; u^(3·w)·a_i(t) with w the weight of a_i
        let num = IntPoly::from_ints(&[a, 0, 0, -1]);
        let u3 = IntPoly::monomial(3);
        let infinity = std::array::from_fn(|i| {
            let w = WEIGHTS[i] as usize;
            let mut acc = IntPoly(Vec::new());
            for (j, c) in in_t[i].0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                assert!(j <= w, "coefficient a_{} has t-degree above its weight", WEIGHTS[i]);
                let term = num.pow(j as u32).mul(&u3.pow((w - j) as u32)).mul(&IntPoly::new(vec![c.clone()]));
                acc = acc.add(&term);
            }
            acc
        });
        Ok(Self { a, model, finite, infinity })
    }

    /// a1..a6 as polynomials in r.
    pub fn finite_coefficients(&self) -> &[IntPoly; 5] {
        &self.finite
    }

    /// a1..a6 in the chart u = 1/r.
    pub fn infinity_coefficients(&self) -> &[IntPoly; 5] {
        &self.infinity
    }

    /// (c4, c6, Δ) for a coefficient vector of polynomials.
    pub fn invariants(c: &[IntPoly; 5]) -> (IntPoly, IntPoly, IntPoly) {
        let [a1, a2, a3, a4, a6] = c;
        let b2 = a1.mul(a1).add(&a2.scale(4));
        let b4 = a4.scale(2).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&a6.scale(4));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).scale(4))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4));
        let c4 = b2.mul(&b2).sub(&b4.scale(24));
        let c6 = b2.pow(3).scale(-1).add(&b2.mul(&b4).scale(36)).sub(&b6.scale(216));
        let disc = b2
            .mul(&b2)
            .mul(&b8)
            .scale(-1)
            .sub(&b4.pow(3).scale(8))
            .sub(&b6.mul(&b6).scale(27))
            .add(&b2.mul(&b4).mul(&b6).scale(9));
        (c4, c6, disc)
    }
}

/// A point of P¹ over F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum P1Point {
    Finite(Fe),
    Infinity,
}

/// Per-point data: reduction type plus the Kodaira-style index v(Δ_min).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointContribution {
    pub point: P1Point,
    pub class: FiberClass,
    pub disc_valuation: u32,
}

/// The family reduced into one field.
pub struct ReducedFamily<'a> {
    field: &'a Fq,
    finite: [Vec<Fe>; 5],
    infinity: [Vec<Fe>; 5],
    finite_inv: [Vec<Fe>; 3],
    infinity_inv: [Vec<Fe>; 3],
}

impl<'a> ReducedFamily<'a> {
    pub fn new(family: &Family, field: &'a Fq) -> Self {
        let red = |c: &[IntPoly; 5]| -> [Vec<Fe>; 5] { std::array::from_fn(|i| c[i].reduce(field)) };
        let inv = |c: &[IntPoly; 5]| -> [Vec<Fe>; 3] {
            let (c4, c6, d) = Family::invariants(c);
            [c4.reduce(field), c6.reduce(field), d.reduce(field)]
        };
        Self {
            field,
            finite: red(&family.finite),
            infinity: red(&family.infinity),
            finite_inv: inv(&family.finite),
            infinity_inv: inv(&family.infinity),
        }
    }

    fn chart(&self, pt: P1Point) -> (&[Vec<Fe>; 5], &[Vec<Fe>; 3], Fe) {
        match pt {
            P1Point::Finite(r) => (&self.finite, &self.finite_inv, r),
            P1Point::Infinity => (&self.infinity, &self.infinity_inv, Fe::ZERO),
        }
    }

    /// The (possibly non-minimal) fiber in the chart containing `pt`.
    pub fn fiber_at(&self, pt: P1Point) -> WeierstrassFiber {
        let f = self.field;
        let (c, _, x) = self.chart(pt);
        let e = |k: usize| eval_reduced(f, &c[k], x);
        WeierstrassFiber { a1: e(0), a2: e(1), a3: e(2), a4: e(3), a6: e(4) }
    }

    /// Classification via the minimal model at `pt`. In residue
    /// characteristic ≥ 5 the model is non-minimal iff v(c4) ≥ 4 and
    /// v(c6) ≥ 6; each rescaling step divides c4, c6, Δ by s⁴, s⁶, s¹².
    pub fn classify(&self, pt: P1Point) -> Result<PointContribution> {
        let f = self.field;
        let (_, inv, x0) = self.chart(pt);
        let disc = eval_reduced(f, &inv[2], x0);
        let fiber = self.fiber_at(pt);
        if !disc.is_zero() {
            let class = count_or_classify(&fiber, f)?;
            return Ok(PointContribution { point: pt, class, disc_valuation: 0 });
        }
        let t4 = taylor(f, &inv[0], x0);
        let t6 = taylor(f, &inv[1], x0);
        let td = taylor(f, &inv[2], x0);
        let vd = valuation(&td).ok_or_else(|| Error::Internal("discriminant vanishes identically".into()))?;
        let v4 = valuation(&t4).unwrap_or(usize::MAX);
        let v6 = valuation(&t6).unwrap_or(usize::MAX);
        let k = (v4 / 4).min(v6 / 6).min(vd / 12);
        let class = if k == 0 {
            count_or_classify(&fiber, f)?
        } else {
            let at = |t: &[Fe], d: usize| t.get(d).copied().unwrap_or(Fe::ZERO);
            let c4 = at(&t4, 4 * k);
            let c6 = at(&t6, 6 * k);
            let short = WeierstrassFiber {
                a1: Fe::ZERO,
                a2: Fe::ZERO,
                a3: Fe::ZERO,
                a4: f.scale(c4, -27),
                a6: f.scale(c6, -54),
            };
            count_or_classify(&short, f)?
        };
        Ok(PointContribution { point: pt, class, disc_valuation: (vd - 12 * k) as u32 })
    }

    /// Contributions of every point of P¹(F_q), finite points in index
    /// order followed by ∞. Good-fiber traces are memoized by fiber.
    pub fn contributions(&self) -> Result<Vec<PointContribution>> {
        let f = self.field;
        let mut memo: HashMap<[Fe; 5], FiberClass> = HashMap::new();
        let mut out = Vec::with_capacity(f.order() + 1);
        for r in f.elements() {
            let pt = P1Point::Finite(r);
            let disc = eval_reduced(f, &self.finite_inv[2], r);
            if disc.is_zero() {
                out.push(self.classify(pt)?);
                continue;
            }
            let fb = self.fiber_at(pt);
            let key = [fb.a1, fb.a2, fb.a3, fb.a4, fb.a6];
            let class = match memo.get(&key) {
                Some(c) => *c,
                None => {
                    let c = count_or_classify(&fb, f)?;
                    memo.insert(key, c);
                    c
                }
            };
            out.push(PointContribution { point: pt, class, disc_valuation: 0 });
        }
        out.push(self.classify(P1Point::Infinity)?);
        Ok(out)
    }
}

/// Σ over P¹(F_{p^degree}) of stalk traces for the given model.
pub fn trace_sum_with(p: u64, a: i64, degree: u32, model: FamilyModel) -> Result<i64> {
    let field = Fq::new(p, degree)?;
    let family = Family::new(a, model)?;
    let red = ReducedFamily::new(&family, &field);
    Ok(red.contributions()?.iter().map(|c| c.class.trace).sum())
}

/// Σ over P¹(F_{p^degree}) under the frozen convention's model.
pub fn trace_sum(p: u64, a: i64, degree: u32) -> Result<i64> {
    trace_sum_with(p, a, degree, Convention::FROZEN.model)
}

/// Raw-model fiber of E₈(a·r³ − 1) at `pt`.
pub fn fiber_at(pt: P1Point, a: i64, field: &Fq) -> Result<WeierstrassFiber> {
    let family = Family::new(a, FamilyModel::Weierstrass)?;
    Ok(ReducedFamily::new(&family, field).fiber_at(pt))
}

/// Distinct bad points with their types, for reporting.
pub fn bad_fibers(p: u64, a: i64, degree: u32, model: FamilyModel) -> Result<Vec<PointContribution>> {
    let field = Fq::new(p, degree)?;
    let family = Family::new(a, model)?;
    let red = ReducedFamily::new(&family, &field);
    let mut out = Vec::new();
    for r in field.elements() {
        if eval_reduced(&field, &red.finite_inv[2], r).is_zero() {
            out.push(red.classify(P1Point::Finite(r))?);
        }
    }
    out.push(red.classify(P1Point::Infinity)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    #[test]
    fn discriminant_in_t() {
        let t = ip(&[0, 1]);
        let c = FamilyModel::Weierstrass.coefficients_in_t();
        let (c4, c6, d) = Family::invariants(&c);
        assert_eq!(c4, t.pow(4).sub(&t.pow(2).scale(16)).add(&ip(&[16])).scale(16));
        let c6_expected = t.pow(2).sub(&ip(&[2])).mul(&t.pow(4).add(&t.pow(2).scale(32)).sub(&ip(&[32]))).scale(-64);
        assert_eq!(c6, c6_expected);
        assert_eq!(d, t.pow(8).mul(&t.sub(&ip(&[1]))).mul(&t.add(&ip(&[1]))).scale(-256));
    }

    #[test]
    fn pulled_back_discriminants() {
        let r = ip(&[0, 1]);
        let f2 = Family::new(2, FamilyModel::Weierstrass).unwrap();
        let (_, _, d2) = Family::invariants(f2.finite_coefficients());
        let expected2 =
            r.pow(3).mul(&r.sub(&ip(&[1]))).mul(&ip(&[-1, 0, 0, 2]).pow(8)).mul(&ip(&[1, 1, 1])).scale(-1024);
        assert_eq!(d2, expected2);
        let f4 = Family::new(4, FamilyModel::Weierstrass).unwrap();
        let (_, _, d4) = Family::invariants(f4.finite_coefficients());
        let expected4 = r.pow(3).mul(&ip(&[-1, 0, 0, 2])).mul(&ip(&[-1, 0, 0, 4]).pow(8)).scale(-2048);
        assert_eq!(d4, expected4);
    }

    #[test]
    fn bad_fiber_types() {
        // a = 2, p = 11: I3 at r = 0, I8 over t = 0, I1 over t = 1, I6 at ∞
        let bad = bad_fibers(11, 2, 1, FamilyModel::Weierstrass).unwrap();
        let mut idx: Vec<u32> = bad.iter().map(|b| b.disc_valuation).collect();
        idx.sort_unstable();
        assert!(bad.iter().all(|b| b.class.kind != super::super::fiber::ReductionKind::Additive));
        assert_eq!(bad.last().unwrap().disc_valuation, 6);
        assert_eq!(bad[0].disc_valuation, 3);
        assert_eq!(idx, vec![1, 3, 6, 8]);
    }

    #[test]
    fn raw_fiber_substitution() {
        let f = Fq::new(11, 1).unwrap();
        let e = fiber_at(P1Point::Finite(f.from_int(1)), 2, &f).unwrap();
        assert_eq!(e, WeierstrassFiber::new(&f, [4, 1, 4, 0, 0]));
        let e0 = fiber_at(P1Point::Finite(Fe::ZERO), 4, &f).unwrap();
        assert_eq!(e0, WeierstrassFiber::new(&f, [4, 1, 4, 0, 0]));
        let fr = Fq::new(11, 1).unwrap();
        let inf = fiber_at(P1Point::Infinity, 2, &fr).unwrap();
        assert_eq!(inf, WeierstrassFiber::new(&fr, [0, 4, 0, 0, 0]));
    }

    #[test]
    fn twist_flips_good_traces_by_legendre_of_minus_one() {
        for p in [7u64, 11, 13] {
            let f = Fq::new(p, 1).unwrap();
            let chi = if p % 4 == 1 { 1 } else { -1 };
            let raw =
                ReducedFamily::new(&Family::new(2, FamilyModel::Weierstrass).unwrap(), &f).contributions().unwrap();
            let tw =
                ReducedFamily::new(&Family::new(2, FamilyModel::MinusOneTwist).unwrap(), &f).contributions().unwrap();
            for (x, y) in raw.iter().zip(&tw) {
                assert_eq!(x.class.trace * chi, y.class.trace);
            }
        }
    }

    #[test]
    fn non_minimal_model_is_rescaled() {
        // y² = x³ + s⁴·x + s⁶ at s = 0 is a rescaled good fiber
        let f = Fq::new(7, 1).unwrap();
        let s = ip(&[0, 1]);
        let c = [IntPoly(vec![]), IntPoly(vec![]), IntPoly(vec![]), s.pow(4), s.pow(6).scale(3)];
        let family = Family { a: 2, model: FamilyModel::Weierstrass, finite: c.clone(), infinity: c };
        let red = ReducedFamily::new(&family, &f);
        let pc = red.classify(P1Point::Finite(Fe::ZERO)).unwrap();
        assert_eq!(pc.class.kind, super::super::fiber::ReductionKind::Good);
        let direct = count_or_classify(&WeierstrassFiber::new(&f, [0, 0, 0, 1, 3]), &f).unwrap();
        assert_eq!(pc.class, direct);
    }
}
