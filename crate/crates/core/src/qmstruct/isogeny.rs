//! The explicit isogeny E₈(t) → E₈((1−t)/(1+t)) over Q(i, t), stored as
//! expression trees and checked by sampling over F_{p²}.

use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{Fe, Fq, WeierstrassFiber};

/// Polynomial and rational expressions in t, x, y and i.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    I,
    T,
    X,
    Y,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Div(Box<Expr>, Box<Expr>),
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, o: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(o))
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, o: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(o))
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(o))
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

impl Expr {
    pub fn pow(self, e: u32) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    pub fn over(self, o: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(o))
    }

    /// None when a denominator vanishes.
    pub fn eval(&self, f: &Fq, env: &Env) -> Option<Fe> {
        Some(match self {
            Expr::Int(k) => f.from_int(*k),
            Expr::I => env.i,
            Expr::T => env.t,
            Expr::X => env.x,
            Expr::Y => env.y,
            Expr::Add(a, b) => f.add(a.eval(f, env)?, b.eval(f, env)?),
            Expr::Sub(a, b) => f.sub(a.eval(f, env)?, b.eval(f, env)?),
            Expr::Mul(a, b) => f.mul(a.eval(f, env)?, b.eval(f, env)?),
            Expr::Neg(a) => f.neg(a.eval(f, env)?),
            Expr::Pow(a, e) => f.pow(a.eval(f, env)?, *e as u64),
            Expr::Div(a, b) => f.div(a.eval(f, env)?, b.eval(f, env)?)?,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Env {
    pub t: Fe,
    pub x: Fe,
    pub y: Fe,
    pub i: Fe,
}

fn n(k: i64) -> Expr {
    Expr::Int(k)
}

fn t() -> Expr {
    Expr::T
}

fn x() -> Expr {
    Expr::X
}

fn y() -> Expr {
    Expr::Y
}

/// y² + a1xy + a3y = x³ + a2x² + a4x + a6, coefficients in t.
#[derive(Clone, Debug)]
pub struct CurveExpr {
    pub a: [Expr; 5],
}

/// A rational map (x, y) ↦ (X, Y).
#[derive(Clone, Debug)]
pub struct MapExpr {
    pub name: &'static str,
    pub x: Expr,
    pub y: Expr,
}

#[derive(Clone, Debug)]
pub struct IsogenyMaps {
    pub source: CurveExpr,
    pub quotient: CurveExpr,
    pub stages: Vec<MapExpr>,
    pub phi: MapExpr,
    /// Kernel x-polynomial factors.
    pub kernel: Vec<Expr>,
}

impl IsogenyMaps {
    pub fn new() -> Self {
        let source = CurveExpr { a: [n(4), t().pow(2), n(4) * t().pow(2), n(0), n(0)] };
        let b = -(n(5) * t().pow(4)) - n(320) * t().pow(3) - n(720) * t().pow(2) - n(320) * t();
        let c = n(3) * t().pow(6)
            - n(704) * t().pow(5)
            - n(5184) * t().pow(4)
            - n(8896) * t().pow(3)
            - n(5888) * t().pow(2)
            - n(1024) * t();
        let quotient = CurveExpr { a: [n(4), t().pow(2), n(4) * t().pow(2), b, c] };

        let psi1 = MapExpr {
            name: "psi'",
            x: (t().pow(4) + x() * t().pow(2) + x().pow(2)).over(t().pow(2) + x()),
            y: (-(n(4) * t().pow(6)) - n(4) * x() * t().pow(4) + n(2) * x() * y() * t().pow(2) + x().pow(2) * y())
                .over((t().pow(2) + x()).pow(2)),
        };
        let psi2 = MapExpr {
            name: "psi''",
            x: (t().pow(2) * (x() - n(16)) - x().pow(2)).over(t().pow(2) - x()),
            y: (y() * t().pow(4) - n(2) * (n(8) * y() + x() * (y() + n(32))) * t().pow(2) + x().pow(2) * y())
                .over((t().pow(2) - x()).pow(2)),
        };
        let pxy = (y() + n(1024)) * t().pow(4)
            - n(16) * (n(16) * x() + n(3) * y() - n(128)) * t().pow(3)
            - n(2) * (n(32) * (y() - n(16)) + x() * (y() + n(256))) * t().pow(2)
            - n(16) * (n(4) * y() + x() * (y() + n(16))) * t()
            + x().pow(2) * y();
        let psi3 = MapExpr {
            name: "psi'''",
            x: (-(n(64) * t().pow(3)) + (x() - n(128)) * t().pow(2) + n(8) * (x() - n(8)) * t() - x().pow(2))
                .over(t().pow(2) + n(8) * t() - x()),
            y: pxy.over((t().pow(2) + n(8) * t() - x()).pow(2)),
        };
        let i = Expr::I;
        let phi = MapExpr {
            name: "phi",
            x: -((n(7) * t().pow(2) + n(8) * t() + x() + n(8)).over(n(4) * (t() + n(1)).pow(2))),
            y: (n(12) * t().pow(3)
                + n(2) * (i.clone() + n(38)) * t().pow(2)
                + n(4) * (x() + n(20)) * t()
                + n(2) * (i.clone() + n(2)) * x()
                + i * y()
                + n(16))
            .over(n(8) * (t() + n(1)).pow(3)),
        };
        let kernel = vec![x().pow(2) - n(4) * t() * x() - n(4) * t().pow(3), x() + t().pow(2), x()];
        Self { source, quotient, stages: vec![psi1, psi2, psi3], phi, kernel }
    }
}

impl Default for IsogenyMaps {
    fn default() -> Self {
        Self::new()
    }
}

/// An affine point or the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Point {
    Infinity,
    Affine(Fe, Fe),
}

/// A Weierstrass curve with coefficients in F_q.
#[derive(Clone, Copy, Debug)]
pub struct Curve {
    pub a: [Fe; 5],
}

impl Curve {
    pub fn at(e: &CurveExpr, f: &Fq, t: Fe, i: Fe) -> Option<Self> {
        let env = Env { t, x: Fe::ZERO, y: Fe::ZERO, i };
        let mut a = [Fe::ZERO; 5];
        for (k, c) in e.a.iter().enumerate() {
            a[k] = c.eval(f, &env)?;
        }
        Some(Self { a })
    }

    pub fn is_singular(&self, f: &Fq) -> bool {
        let [a1, a2, a3, a4, a6] = self.a;
        WeierstrassFiber { a1, a2, a3, a4, a6 }.discriminant(f).is_zero()
    }

    pub fn contains(&self, f: &Fq, p: Point) -> bool {
        let Point::Affine(x, y) = p else { return true };
        let [a1, a2, a3, a4, a6] = self.a;
        let lhs = f.add(f.mul(y, y), f.mul(y, f.add(f.mul(a1, x), a3)));
        let rhs = f.add(f.mul(x, f.add(f.mul(x, f.add(x, a2)), a4)), a6);
        lhs == rhs
    }

    pub fn neg(&self, f: &Fq, p: Point) -> Point {
        match p {
            Point::Infinity => p,
            Point::Affine(x, y) => Point::Affine(x, f.sub(f.neg(y), f.add(f.mul(self.a[0], x), self.a[2]))),
        }
    }

    pub fn add(&self, f: &Fq, p: Point, q: Point) -> Point {
        let (Point::Affine(x1, y1), Point::Affine(x2, y2)) = (p, q) else {
            return if p == Point::Infinity { q } else { p };
        };
        let [a1, a2, a3, a4, a6] = self.a;
        let _ = a6;
        if x1 == x2 && self.neg(f, q) == p {
            return Point::Infinity;
        }
        let lam = if x1 == x2 {
            // tangent: (3x² + 2a2x + a4 − a1y)/(2y + a1x + a3)
            let num = f.sub(f.add(f.add(f.scale(f.mul(x1, x1), 3), f.scale(f.mul(a2, x1), 2)), a4), f.mul(a1, y1));
            let den = f.add(f.add(f.scale(y1, 2), f.mul(a1, x1)), a3);
            f.div(num, den).expect("nonzero after the negation test")
        } else {
            f.div(f.sub(y2, y1), f.sub(x2, x1)).expect("distinct x")
        };
        let x3 = f.sub(f.sub(f.sub(f.add(f.mul(lam, lam), f.mul(a1, lam)), a2), x1), x2);
        let y3 = f.sub(f.sub(f.neg(f.mul(f.add(lam, a1), x3)), f.sub(y1, f.mul(lam, x1))), a3);
        Point::Affine(x3, y3)
    }

    /// Points with the given x-coordinate.
    pub fn lift_x(&self, f: &Fq, x: Fe) -> Vec<Point> {
        let [a1, a2, a3, a4, a6] = self.a;
        let b = f.add(f.mul(a1, x), a3);
        let c = f.add(f.mul(x, f.add(f.mul(x, f.add(x, a2)), a4)), a6);
        // y² + by − c = 0
        let disc = f.add(f.mul(b, b), f.scale(c, 4));
        let Some(r) = f.sqrt(disc) else { return vec![] };
        let inv2 = f.inv(f.from_int(2)).expect("odd p");
        let y0 = f.mul(f.sub(r, b), inv2);
        let y1 = f.mul(f.sub(f.neg(r), b), inv2);
        if y0 == y1 {
            vec![Point::Affine(x, y0)]
        } else {
            vec![Point::Affine(x, y0), Point::Affine(x, y1)]
        }
    }
}

/// Apply a stage; a vanishing x-denominator sends the point to O.
pub fn apply_map(m: &MapExpr, f: &Fq, t: Fe, i: Fe, p: Point) -> Point {
    let Point::Affine(x, y) = p else { return Point::Infinity };
    let env = Env { t, x, y, i };
    match (m.x.eval(f, &env), m.y.eval(f, &env)) {
        (Some(xx), Some(yy)) => Point::Affine(xx, yy),
        _ => Point::Infinity,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsogenyWitness {
    pub t: Fe,
    pub point: Point,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsogenyVerdict {
    pub p: u64,
    /// Index k with i = the k-th square root of −1 (in field order) used.
    pub i_choice: usize,
    pub trials: usize,
    pub image_checks: usize,
    pub additivity_checks: usize,
    pub kernel_checks: usize,
    pub resampled: usize,
    pub failures: Vec<IsogenyWitness>,
}

impl IsogenyVerdict {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.trials > 0 && self.kernel_checks > 0
    }
}

struct Ctx<'a> {
    f: &'a Fq,
    maps: &'a IsogenyMaps,
    i: Fe,
}

impl Ctx<'_> {
    fn psi(&self, t: Fe, p: Point) -> Point {
        self.maps.stages.iter().fold(p, |q, m| apply_map(m, self.f, t, self.i, q))
    }

    fn full(&self, t: Fe, p: Point) -> Point {
        apply_map(&self.maps.phi, self.f, t, self.i, self.psi(t, p))
    }

    fn target_param(&self, t: Fe) -> Option<Fe> {
        let f = self.f;
        f.div(f.sub(Fe::ONE, t), f.add(Fe::ONE, t))
    }

    fn curves(&self, t: Fe) -> Option<(Curve, Curve, Curve)> {
        let s = self.target_param(t)?;
        Some((
            Curve::at(&self.maps.source, self.f, t, self.i)?,
            Curve::at(&self.maps.quotient, self.f, t, self.i)?,
            Curve::at(&self.maps.source, self.f, s, self.i)?,
        ))
    }

    fn random_point<R: Rng>(&self, e: &Curve, rng: &mut R) -> Point {
        loop {
            let x = self.f.from_index(rng.gen_range(0..self.f.order()));
            let pts = e.lift_x(self.f, x);
            if !pts.is_empty() {
                return pts[rng.gen_range(0..pts.len())];
            }
        }
    }

    /// Kernel points over F_q for this t, if all seven affine ones are there.
    fn kernel_points(&self, t: Fe, e: &Curve) -> Option<Vec<Point>> {
        let f = self.f;
        let mut pts = Vec::new();
        for x in f.elements() {
            let env = Env { t, x, y: Fe::ZERO, i: self.i };
            if self.maps.kernel.iter().any(|k| k.eval(f, &env) == Some(Fe::ZERO)) {
                pts.extend(e.lift_x(f, x));
            }
        }
        (pts.len() == 7).then_some(pts)
    }
}

fn is_degenerate(f: &Fq, t: Fe) -> bool {
    [Fe::ZERO, Fe::ONE, f.from_int(-1)].contains(&t)
}

/// Check image, additivity and kernel of φ∘ψ‴∘ψ″∘ψ′ on random points of
/// E₈(t₀) over F_{p²}, choosing the square root of −1 that makes the
/// image land on E₈((1−t₀)/(1+t₀)).
pub fn isogeny_sample_check(p: u64, trials: usize, seed: u64) -> Result<IsogenyVerdict> {
    if p % 2 == 0 || p % 3 == 0 {
        return Err(Error::BadPrime(p));
    }
    let f = Fq::new(p, 2)?;
    let maps = IsogenyMaps::new();
    let r = f.sqrt_minus_one().ok_or_else(|| Error::Internal("no square root of −1 in F_p²".into()))?;
    let roots = [r, f.neg(r)];
    let mut best: Option<IsogenyVerdict> = None;
    for (k, &i) in roots.iter().enumerate() {
        let v = run_trials(&Ctx { f: &f, maps: &maps, i }, p, k, trials, seed)?;
        if v.pass() {
            return Ok(v);
        }
        if best.as_ref().map_or(true, |b| v.failures.len() < b.failures.len()) {
            best = Some(v);
        }
    }
    Ok(best.expect("two candidates"))
}

fn run_trials(ctx: &Ctx<'_>, p: u64, i_choice: usize, trials: usize, seed: u64) -> Result<IsogenyVerdict> {
    let f = ctx.f;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
    let mut v = IsogenyVerdict {
        p,
        i_choice,
        trials: 0,
        image_checks: 0,
        additivity_checks: 0,
        kernel_checks: 0,
        resampled: 0,
        failures: Vec::new(),
    };
    let fail = |v: &mut IsogenyVerdict, t: Fe, point: Point, d: &str| {
        if v.failures.len() < 10 {
            v.failures.push(IsogenyWitness { t, point, detail: d.into() });
        }
    };
    let mut attempts = 0;
    while v.trials < trials {
        attempts += 1;
        if attempts > 100 * trials {
            return Err(Error::Internal("too many degenerate samples".into()));
        }
        let t = f.from_index(rng.gen_range(0..f.order()));
        let Some((e, eq, et)) =
            ctx.curves(t).filter(|(e, eq, et)| !is_degenerate(f, t) && ![e, eq, et].iter().any(|c| c.is_singular(f)))
        else {
            v.resampled += 1;
            continue;
        };
        v.trials += 1;

        let pt = ctx.random_point(&e, &mut rng);
        let mid = ctx.psi(t, pt);
        let img = ctx.full(t, pt);
        v.image_checks += 1;
        if !eq.contains(f, mid) {
            fail(&mut v, t, pt, "psi(P) is not on the quotient curve");
        }
        if !et.contains(f, img) {
            fail(&mut v, t, pt, "image is not on the target curve");
        }

        let q = ctx.random_point(&e, &mut rng);
        let lhs = ctx.full(t, e.add(f, pt, q));
        let rhs = et.add(f, img, ctx.full(t, q));
        v.additivity_checks += 1;
        if lhs != rhs {
            fail(&mut v, t, pt, "map(P + Q) ≠ map(P) + map(Q)");
        }

        if ctx.full(t, Point::Infinity) != Point::Infinity {
            fail(&mut v, t, Point::Infinity, "O is not mapped to O");
        }
        if let Some(ker) = ctx.kernel_points(t, &e) {
            v.kernel_checks += 1;
            for k in ker {
                if ctx.full(t, k) != Point::Infinity {
                    fail(&mut v, t, k, "kernel point not mapped to O");
                }
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law_on_a_small_curve() {
        let f = Fq::new(13, 1).unwrap();
        let e = Curve { a: [Fe::ZERO, Fe::ZERO, Fe::ZERO, f.from_int(-1), Fe::ZERO] };
        let pts: Vec<Point> = f.elements().flat_map(|x| e.lift_x(&f, x)).collect();
        for &p in &pts {
            for &q in &pts {
                let s = e.add(&f, p, q);
                assert!(e.contains(&f, s));
                assert_eq!(s, e.add(&f, q, p));
            }
            assert_eq!(e.add(&f, p, e.neg(&f, p)), Point::Infinity);
        }
    }

    #[test]
    fn kernel_branch_x_equals_minus_t_squared() {
        let f = Fq::new(13, 2).unwrap();
        let maps = IsogenyMaps::new();
        let t = f.from_int(5);
        let i = f.sqrt_minus_one().unwrap();
        let e = Curve::at(&maps.source, &f, t, i).unwrap();
        let x0 = f.neg(f.mul(t, t));
        let pts = e.lift_x(&f, x0);
        assert_eq!(pts.len(), 1);
        let ctx = Ctx { f: &f, maps: &maps, i };
        assert_eq!(ctx.full(t, pts[0]), Point::Infinity);
    }

    #[test]
    fn sampled_isogeny_p13() {
        let v = isogeny_sample_check(13, 30, 7).unwrap();
        assert!(v.pass(), "{v:?}");
    }
}
