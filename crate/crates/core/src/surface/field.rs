//! F_p and F_{p²} = F_p[x]/(x² − n) for small odd primes.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::legendre;
use crate::util::{inv_mod, is_prime};

/// `c0 + c1·x`; `c1 = 0` in degree 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fe {
    pub c0: u64,
    pub c1: u64,
}

impl Fe {
    pub const ZERO: Fe = Fe { c0: 0, c1: 0 };
    pub const ONE: Fe = Fe { c0: 1, c1: 0 };

    pub fn is_zero(self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
}

#[derive(Debug)]
pub struct Fq {
    p: u64,
    degree: u32,
    nonres: u64,
    q: usize,
    chi: Vec<i8>,
    roots: OnceLock<Vec<Option<Fe>>>,
}

impl Clone for Fq {
    fn clone(&self) -> Self {
        Self {
            p: self.p,
            degree: self.degree,
            nonres: self.nonres,
            q: self.q,
            chi: self.chi.clone(),
            roots: OnceLock::new(),
        }
    }
}

impl Fq {
    /// Field of `p^degree` elements; the extension uses the least
    /// quadratic nonresidue.
    pub fn new(p: u64, degree: u32) -> Result<Self> {
        if !is_prime(p) || p < 5 {
            return Err(Error::BadPrime(p));
        }
        let n = (2..p).find(|&n| legendre(n as i64, p) == -1).expect("odd prime has a nonresidue");
        Self::with_nonresidue(p, degree, n)
    }

    pub fn with_nonresidue(p: u64, degree: u32, nonres: u64) -> Result<Self> {
        if !is_prime(p) || p < 5 {
            return Err(Error::BadPrime(p));
        }
        if degree != 1 && degree != 2 {
            return Err(Error::UnsupportedDegree(degree));
        }
        if degree == 2 && legendre(nonres as i64, p) != -1 {
            return Err(Error::NonResidue(format!("{nonres} is a square mod {p}; a nonresidue")));
        }
        let q = (p as usize).pow(degree);
        let mut f = Self { p, degree, nonres: nonres % p, q, chi: Vec::new(), roots: OnceLock::new() };
        f.chi = f.build_chi();
        Ok(f)
    }

    fn build_chi(&self) -> Vec<i8> {
        // x is a square in F_q iff its norm to F_p is a square in F_p.
        let mut leg = vec![-1i8; self.p as usize];
        leg[0] = 0;
        for y in 1..self.p {
            leg[(y * y % self.p) as usize] = 1;
        }
        (0..self.q)
            .map(|i| {
                let x = self.from_index(i);
                if x.is_zero() {
                    return 0;
                }
                if self.degree == 1 {
                    leg[x.c0 as usize]
                } else {
                    leg[self.norm(x) as usize]
                }
            })
            .collect()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonres
    }

    #[inline]
    pub fn index(&self, x: Fe) -> usize {
        (x.c0 + x.c1 * self.p) as usize
    }

    #[inline]
    pub fn from_index(&self, i: usize) -> Fe {
        let i = i as u64;
        Fe { c0: i % self.p, c1: i / self.p }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.q).map(|i| self.from_index(i))
    }

    /// Elements of the prime field.
    pub fn prime_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.p).map(|c| Fe { c0: c, c1: 0 })
    }

    pub fn from_int(&self, n: i64) -> Fe {
        Fe { c0: n.rem_euclid(self.p as i64) as u64, c1: 0 }
    }

    /// The generator x of F_{p²} (with x² = n).
    pub fn gen(&self) -> Fe {
        assert_eq!(self.degree, 2, "F_p has no extension generator");
        Fe { c0: 0, c1: 1 }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        Fe { c0: (a.c0 + b.c0) % p, c1: (a.c1 + b.c1) % p }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        Fe { c0: (a.c0 + p - b.c0) % p, c1: (a.c1 + p - b.c1) % p }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.sub(Fe::ZERO, a)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        if self.degree == 1 {
            return Fe { c0: a.c0 * b.c0 % p, c1: 0 };
        }
        let c0 = (a.c0 * b.c0 + self.nonres * (a.c1 * b.c1 % p)) % p;
        let c1 = (a.c0 * b.c1 + a.c1 * b.c0) % p;
        Fe { c0, c1 }
    }

    #[inline]
    pub fn scale(&self, a: Fe, k: i64) -> Fe {
        self.mul(a, self.from_int(k))
    }

    pub fn pow(&self, mut a: Fe, mut e: u64) -> Fe {
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Norm to F_p (the element itself in degree 1).
    pub fn norm(&self, a: Fe) -> u64 {
        let p = self.p;
        if self.degree == 1 {
            return a.c0;
        }
        (a.c0 * a.c0 % p + p * p - self.nonres * (a.c1 * a.c1 % p) % p) % p
    }

    /// Frobenius x ↦ x^p.
    pub fn frobenius(&self, a: Fe) -> Fe {
        Fe { c0: a.c0, c1: (self.p - a.c1) % self.p }
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let ninv = inv_mod(self.norm(a), self.p)?;
        if self.degree == 1 {
            return Some(Fe { c0: ninv, c1: 0 });
        }
        let conj = self.frobenius(a);
        Some(self.mul(conj, Fe { c0: ninv, c1: 0 }))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        Some(self.mul(a, self.inv(b)?))
    }

    /// Quadratic character: 0, 1 or −1.
    #[inline]
    pub fn chi(&self, a: Fe) -> i8 {
        self.chi[self.index(a)]
    }

    pub fn is_square(&self, a: Fe) -> bool {
        self.chi(a) >= 0
    }

    /// Some square root, if one exists.
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        let roots = self.roots.get_or_init(|| {
            let mut t = vec![None; self.q];
            for y in self.elements() {
                let i = self.index(self.mul(y, y));
                if t[i].is_none() {
                    t[i] = Some(y);
                }
            }
            t
        });
        roots[self.index(a)]
    }

    /// Embed an element of F_p (possibly from another `Fq` over the same p).
    pub fn lift(&self, a: Fe) -> Fe {
        debug_assert_eq!(a.c1, 0);
        Fe { c0: a.c0 % self.p, c1: 0 }
    }

    /// Some element with square −1, if any.
    pub fn sqrt_minus_one(&self) -> Option<Fe> {
        self.sqrt(self.from_int(-1))
    }
}
