//! Z/p^M and Z/p^M[x]/(x² − d).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{legendre, Rational};
use crate::util::{inv_mod, is_prime};

/// c0 + c1·x with x² = d; c1 = 0 without an extension.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PAdicElem {
    pub c0: u64,
    pub c1: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PAdicRing {
    p: u64,
    m: u32,
    modulus: u64,
    ext: Option<i64>,
}

impl PAdicRing {
    /// `ext = Some(d)` adjoins √d for a unit d.
    pub fn new(p: u64, m: u32, ext: Option<i64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        if m == 0 {
            return Err(Error::InsufficientPrecision { have: 0, need: 1 });
        }
        let modulus = p.checked_pow(m).filter(|&q| q < (1 << 62)).ok_or(Error::ModulusTooLarge)?;
        if let Some(d) = ext {
            if d.rem_euclid(p as i64) == 0 {
                return Err(Error::NonResidue(format!("{d} is not a unit mod {p}")));
            }
        }
        Ok(Self { p, m, modulus, ext })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn extension(&self) -> Option<i64> {
        self.ext
    }

    /// The same ring at another precision.
    pub fn with_precision(&self, m: u32) -> Result<Self> {
        Self::new(self.p, m, self.ext)
    }

    fn red(&self, x: i128) -> u64 {
        x.rem_euclid(self.modulus as i128) as u64
    }

    pub fn zero(&self) -> PAdicElem {
        PAdicElem::default()
    }

    pub fn one(&self) -> PAdicElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> PAdicElem {
        PAdicElem { c0: self.red(n as i128), c1: 0 }
    }

    pub fn from_big(&self, n: &BigInt) -> PAdicElem {
        let r = n.mod_floor(&BigInt::from(self.modulus));
        PAdicElem { c0: r.to_u64().expect("reduced"), c1: 0 }
    }

    /// Errors when p divides the denominator.
    pub fn from_rational(&self, x: &Rational) -> Result<PAdicElem> {
        let den = self.from_big(x.denom());
        let inv = inv_mod(den.c0, self.modulus)
            .ok_or_else(|| Error::NonResidue(format!("denominator {} is divisible by {}", x.denom(), self.p)))?;
        Ok(self.mul(self.from_big(x.numer()), PAdicElem { c0: inv, c1: 0 }))
    }

    /// x = √d (extension rings only).
    pub fn gen(&self) -> Option<PAdicElem> {
        self.ext.map(|_| PAdicElem { c0: 0, c1: 1 })
    }

    pub fn add(&self, a: PAdicElem, b: PAdicElem) -> PAdicElem {
        PAdicElem { c0: self.red(a.c0 as i128 + b.c0 as i128), c1: self.red(a.c1 as i128 + b.c1 as i128) }
    }

    pub fn sub(&self, a: PAdicElem, b: PAdicElem) -> PAdicElem {
        PAdicElem { c0: self.red(a.c0 as i128 - b.c0 as i128), c1: self.red(a.c1 as i128 - b.c1 as i128) }
    }

    pub fn neg(&self, a: PAdicElem) -> PAdicElem {
        self.sub(self.zero(), a)
    }

    fn mulm(&self, a: u64, b: u64) -> i128 {
        ((a as u128 * b as u128) % self.modulus as u128) as i128
    }

    pub fn mul(&self, a: PAdicElem, b: PAdicElem) -> PAdicElem {
        match self.ext {
            None => PAdicElem { c0: self.mulm(a.c0, b.c0) as u64, c1: 0 },
            Some(d) => {
                let dd = self.red(d as i128);
                let c0 = self.mulm(a.c0, b.c0) + self.mulm(dd, self.mulm(a.c1, b.c1) as u64);
                let c1 = self.mulm(a.c0, b.c1) + self.mulm(a.c1, b.c0);
                PAdicElem { c0: self.red(c0), c1: self.red(c1) }
            }
        }
    }

    pub fn pow(&self, mut a: PAdicElem, mut e: u64) -> PAdicElem {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a unit (an element of unit norm).
    pub fn inv(&self, a: PAdicElem) -> Result<PAdicElem> {
        let conj = PAdicElem { c0: a.c0, c1: self.red(-(a.c1 as i128)) };
        let norm = self.mul(a, conj);
        debug_assert_eq!(norm.c1, 0);
        let ninv = inv_mod(norm.c0, self.modulus).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(conj, PAdicElem { c0: ninv, c1: 0 }))
    }

    pub fn is_unit(&self, a: PAdicElem) -> bool {
        self.inv(a).is_ok()
    }

    /// Minimum p-adic valuation of the coordinates; M for zero.
    pub fn valuation(&self, a: PAdicElem) -> u32 {
        [a.c0, a.c1]
            .iter()
            .filter(|&&c| c != 0)
            .map(|&c| {
                let mut c = c;
                let mut v = 0;
                while c % self.p == 0 {
                    c /= self.p;
                    v += 1;
                }
                v
            })
            .min()
            .unwrap_or(self.m)
    }

    /// Whether `a` lies in the base Z/p^M.
    pub fn is_base(&self, a: PAdicElem) -> bool {
        a.c1 == 0
    }

    fn lift_root(&self, f: impl Fn(u64) -> i128, df: impl Fn(u64) -> i128, r0: u64) -> PAdicElem {
        let mut r = r0;
        let mut prec = 1u32;
        while prec < self.m {
            let fv = self.red(f(r));
            let dv = inv_mod(self.red(df(r)), self.modulus).expect("simple root");
            r = self.red(r as i128 - self.mulm(fv, dv));
            prec *= 2;
        }
        PAdicElem { c0: r, c1: 0 }
    }
}

/// A square root of d, lifted from the least root mod p. If d is not a
/// square mod p but the ring adjoins √d' with d/d' a square, the root is
/// built from the generator.
pub fn hensel_sqrt(d: i64, ring: &PAdicRing) -> Result<PAdicElem> {
    let p = ring.p;
    if d.rem_euclid(p as i64) == 0 {
        return Err(Error::NonResidue(format!("{d} is not a unit mod {p}")));
    }
    if legendre(d, p) == 1 {
        return Ok(hensel_sqrt_base(ring.red(d as i128), ring));
    }
    if let Some(e) = ring.ext {
        // d = e·k² with k a unit: √d = k·√e
        let k2 = ring.mul(ring.from_int(d), ring.inv(ring.from_int(e))?);
        if legendre(k2.c0 as i64 % p as i64, p) == 1 {
            let k = hensel_sqrt_base(k2.c0, ring);
            return Ok(ring.mul(k, ring.gen().expect("extension")));
        }
    }
    Err(Error::NonResidue(format!("{d} is not a square mod {p}; use an extension ring")))
}

fn hensel_sqrt_base(dm: u64, ring: &PAdicRing) -> PAdicElem {
    let p = ring.p;
    let r0 = (1..p).find(|&x| (x * x) % p == dm % p).expect("residue");
    ring.lift_root(|x| ring.mulm(x, x) - dm as i128, |x| 2 * x as i128, r0)
}

/// A cube root of the unit c, lifted from the least cube root mod p.
pub fn hensel_cbrt(c: i64, ring: &PAdicRing) -> Result<PAdicElem> {
    let p = ring.p;
    if p == 3 || c.rem_euclid(p as i64) == 0 {
        return Err(Error::NoCubeRoot(format!("{c} mod {p}")));
    }
    let cm = ring.red(c as i128);
    let r0 = (1..p)
        .find(|&x| x * x % p * x % p == cm % p)
        .ok_or_else(|| Error::NoCubeRoot(format!("{c} is not a cube mod {p}")))?;
    Ok(ring.lift_root(|x| ring.mulm(ring.mulm(x, x) as u64, x) - cm as i128, |x| 3 * ring.mulm(x, x), r0))
}
