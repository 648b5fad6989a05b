//! The cyclotomic field Q(ζ₂₄) = Q[x]/(x⁸ − x⁴ + 1).
//!
//! Every constant the verification suite touches (i, ω, √±2, √±3, √±6 and
//! the twelfth roots of unity) lives here. Square roots use fixed principal
//! branches:
//!
//! | d  | sqrt(d)                 | value            |
//! |----|-------------------------|------------------|
//! | -1 | ζ⁶                      | i                |
//! |  2 | ζ³ + ζ⁻³                | 2cos(π/4) > 0    |
//! |  3 | ζ² + ζ⁻²                | 2cos(π/6) > 0    |
//! |  6 | sqrt(2)·sqrt(3)         | > 0              |
//! | -d | sqrt(-1)·sqrt(d)        | positive imaginary |
//!
//! so sqrt(-3) = 2ζ⁴ − 1 and ω = exp(2πi/6) = ζ⁴ = (1 + sqrt(-3))/2.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ops::impl_ring_ops;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

pub const DEGREE: usize = 8;

/// Square roots with a designated embedding.
pub const SUPPORTED_SQRTS: [i64; 7] = [-1, 2, -2, 3, -3, 6, -6];

/// Units of Z/24, indexing the Galois group of Q(ζ₂₄)/Q.
const GALOIS: [usize; 8] = [1, 5, 7, 11, 13, 17, 19, 23];

/// Coordinates of ζ^m for m in 0..24, computed once by reduction.
fn zeta_power_table() -> &'static [[i64; DEGREE]; 24] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[[i64; DEGREE]; 24]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0i64; DEGREE]; 24];
        let mut cur = [0i64; DEGREE];
        cur[0] = 1;
        for row in t.iter_mut() {
            *row = cur;
            // multiply by x, then fold x^8 = x^4 - 1
            let top = cur[DEGREE - 1];
            for k in (1..DEGREE).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = -top;
            cur[4] += top;
        }
        t
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElem {
    coords: [Rational; DEGREE],
}

impl CycloElem {
    pub fn zero() -> Self {
        Self { coords: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut x = Self::zero();
        x.coords[0] = r;
        x
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_coords(coords: [Rational; DEGREE]) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Rational; DEGREE] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then_some(&self.coords[0])
    }

    /// ζ₂₄^k; any integer k, reduced mod 24.
    pub fn root_of_unity(k: i64) -> Self {
        let row = &zeta_power_table()[k.rem_euclid(24) as usize];
        Self { coords: std::array::from_fn(|i| int(row[i])) }
    }

    /// The designated square root of `d`; see the module table for branches.
    pub fn sqrt_embed(d: i64) -> Result<Self> {
        let z = Self::root_of_unity;
        let s2 = || z(3) + z(-3);
        let s3 = || z(2) + z(-2);
        let i = || z(6);
        Ok(match d {
            -1 => i(),
            2 => s2(),
            3 => s3(),
            6 => s2() * s3(),
            -2 => i() * s2(),
            -3 => i() * s3(),
            -6 => i() * s2() * s3(),
            _ => return Err(Error::UnsupportedSqrt(d)),
        })
    }

    /// Image under the automorphism ζ ↦ ζ^j (j a unit mod 24).
    pub fn galois(&self, j: usize) -> Self {
        debug_assert!(GALOIS.contains(&(j % 24)));
        let table = zeta_power_table();
        let mut out = Self::zero();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[(j * k) % 24];
            for (o, &v) in out.coords.iter_mut().zip(row.iter()) {
                if v != 0 {
                    *o += c * int(v);
                }
            }
        }
        out
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(23)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut acc = self.clone();
        for &j in &GALOIS[1..] {
            acc = &acc * &self.galois(j);
        }
        debug_assert!(acc.as_rational().is_some());
        acc.coords[0].clone()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut adj = Self::one();
        for &j in &GALOIS[1..] {
            adj = &adj * &self.galois(j);
        }
        let n = (&adj * self).coords[0].clone();
        Ok(adj.scale(&n.recip()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { coords: std::array::from_fn(|i| &self.coords[i] * r) }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Write `self = a + b·sqrt(d)` with rational a, b.
    pub fn quad_coords(&self, d: i64) -> Result<(Rational, Rational)> {
        let s = Self::sqrt_embed(d)?;
        let pivot = (1..DEGREE)
            .find(|&k| !s.coords[k].is_zero())
            .ok_or_else(|| Error::Internal("sqrt embedding is rational".into()))?;
        let b = &self.coords[pivot] / &s.coords[pivot];
        let a = &self.coords[0] - &b * &s.coords[0];
        let residual = self - &(Self::from_rational(a.clone()) + s.scale(&b));
        if residual.is_zero() {
            Ok((a, b))
        } else {
            let idx = (0..DEGREE).filter(|&k| !residual.coords[k].is_zero()).collect();
            Err(Error::NotInQuadraticSubfield { d, residual: idx })
        }
    }

    /// Complex value under ζ₂₄ ↦ exp(2πi/24).
    pub fn to_complex(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, std::f64::consts::TAU / 24.0);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zk = Complex64::new(1.0, 0.0);
        for c in &self.coords {
            acc += zk * c.to_f64().unwrap_or(f64::NAN);
            zk *= z;
        }
        acc
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Self { coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]) }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Self { coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]) }
    }

    fn neg_ref(&self) -> Self {
        Self { coords: std::array::from_fn(|i| -&self.coords[i]) }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut wide: Vec<Rational> = vec![Rational::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        // x^k = x^(k-4) - x^(k-8) for k >= 8
        for k in (DEGREE..2 * DEGREE - 1).rev() {
            let c = std::mem::take(&mut wide[k]);
            if !c.is_zero() {
                wide[k - 4] += &c;
                wide[k - 8] -= &c;
            }
        }
        wide.truncate(DEGREE);
        Self { coords: wide.try_into().expect("length checked") }
    }
}

impl_ring_ops!(CycloElem);

impl From<i64> for CycloElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CycloElem {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycloElem {
    /// Shown as `a + b*sqrt(d)` when the element lies in one of the
    /// quadratic subfields, otherwise as a polynomial in `z = ζ₂₄`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        for d in SUPPORTED_SQRTS {
            if let Ok((a, b)) = self.quad_coords(d) {
                let root = format!("sqrt({d})");
                let lin = if b.is_one() {
                    root
                } else if (-&b).is_one() {
                    format!("-{root}")
                } else {
                    format!("{b}*{root}")
                };
                return if a.is_zero() {
                    write!(f, "{lin}")
                } else if b.is_negative() {
                    write!(f, "{a} {}", lin.replacen('-', "- ", 1))
                } else {
                    write!(f, "{a} + {lin}")
                };
            }
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        Ok(())
    }
}
