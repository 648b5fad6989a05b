//! Truncated q-expansions with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{cbrt_exact, int, Rational};

/// Exponents of q; fractional values arise from single eta factors.
pub type Exponent = Ratio<i64>;

/// `q^offset · Σ_{k < len} c_k q^k`, known up to (excluding) `q^(offset + len)`.
///
/// After normalization the first stored coefficient is nonzero unless the
/// whole series vanishes to its precision.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    offset: Exponent,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Build from an offset and coefficients; leading zeros are absorbed
    /// into the offset so the absolute precision is unchanged.
    pub fn new(offset: Exponent, coeffs: Vec<Rational>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) | None => Self { offset, coeffs },
            Some(z) => Self { offset: offset + z as i64, coeffs: coeffs[z..].to_vec() },
        }
    }

    pub fn from_ints(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(Exponent::from_integer(offset), coeffs.iter().map(|&c| int(c)).collect())
    }

    /// The constant 1 with `n` known terms.
    pub fn one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n];
        if n > 0 {
            c[0] = Rational::one();
        }
        Self::new(Exponent::zero(), c)
    }

    pub fn offset(&self) -> Exponent {
        self.offset
    }

    /// Number of stored coefficients (the relative truncation order).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// First exponent not determined by the stored data.
    pub fn precision(&self) -> Exponent {
        self.offset + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.first().filter(|c| !c.is_zero())
    }

    /// Coefficient of q^e; `None` if e lies beyond the precision.
    pub fn coeff(&self, e: Exponent) -> Option<Rational> {
        if e >= self.precision() {
            return None;
        }
        let k = e - self.offset;
        if k < Exponent::zero() || !k.is_integer() {
            return Some(Rational::zero());
        }
        Some(self.coeffs[k.to_integer() as usize].clone())
    }

    /// Coefficient of q^n for integer n.
    pub fn coeff_at(&self, n: i64) -> Option<Rational> {
        self.coeff(Exponent::from_integer(n))
    }

    /// Coefficients of q^0 .. q^(n-1); errors if the series is not known
    /// that far or has a fractional offset.
    pub fn integral_coeffs(&self, n: usize) -> Result<Vec<Rational>> {
        if !self.offset.is_integer() {
            return Err(Error::FractionalOrder { num: *self.offset.numer(), den: *self.offset.denom() });
        }
        let prec = self.precision().to_integer();
        if (n as i64) > prec {
            return Err(Error::SeriesTooShort { need: n, have: prec.max(0) as usize });
        }
        Ok((0..n as i64).map(|k| self.coeff_at(k).expect("checked precision")).collect())
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.offset, self.coeffs[..len.min(self.coeffs.len())].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new(self.offset, vec![Rational::zero(); self.len()]);
        }
        Self { offset: self.offset, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by q^e.
    pub fn shift(&self, e: Exponent) -> Self {
        Self { offset: self.offset + e, coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        let gap = other.offset - self.offset;
        if !gap.is_integer() {
            return Err(Error::IncompatibleSeries(format!(
                "offsets {} and {} differ by a non-integer",
                self.offset, other.offset
            )));
        }
        let lo = self.offset.min(other.offset);
        let hi = self.precision().min(other.precision());
        let n = (hi - lo).to_integer().max(0) as usize;
        let mut out = vec![Rational::zero(); n];
        for (src, sign) in [(self, false), (other, negate)] {
            let start = (src.offset - lo).to_integer() as usize;
            for (k, c) in src.coeffs.iter().enumerate() {
                if start + k >= n {
                    break;
                }
                if sign {
                    out[start + k] -= c;
                } else {
                    out[start + k] += c;
                }
            }
        }
        Ok(Self::new(lo, out))
    }

    /// Product; the relative precision is the smaller of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.len().min(other.len());
        // Integer convolution over a common denominator avoids a gcd per term.
        let (a, da) = common_denominator(&self.coeffs[..n]);
        let (b, db) = common_denominator(&other.coeffs[..n]);
        let den = da * db;
        let out = convolve(&a, &b, n).into_iter().map(|c| Rational::new(c, den.clone())).collect();
        Self::new(self.offset + other.offset, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.len());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// q ↦ q^m. The relative precision scales by m.
    pub fn substitute_power(&self, m: u32) -> Self {
        let m = m.max(1) as usize;
        let mut out = vec![Rational::zero(); self.len() * m];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * m] = c.clone();
        }
        Self::new(self.offset * m as i64, out)
    }

    /// `self^alpha` for a series with leading term `q^offset`, leading
    /// coefficient 1, via the power recurrence
    /// `n·u_n = Σ_{k=1..n} ((alpha+1)k − n)·s_k·u_{n−k}`.
    fn unit_power(&self, alpha: &Rational) -> Vec<Rational> {
        if self.coeffs.iter().all(Rational::is_integer) {
            if let Some(u) = self.unit_power_integral(alpha) {
                return u;
            }
        }
        let n = self.len();
        let mut u = vec![Rational::zero(); n];
        if n == 0 {
            return u;
        }
        u[0] = Rational::one();
        let a1 = alpha + Rational::one();
        for m in 1..n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let s = &self.coeffs[k];
                if s.is_zero() || u[m - k].is_zero() {
                    continue;
                }
                let w = &a1 * int(k as i64) - int(m as i64);
                acc += w * s * &u[m - k];
            }
            u[m] = acc / int(m as i64);
        }
        u
    }

    /// Integer-coefficient case with alpha = a/b. The output lies in
    /// Z[1/b][[q]] with denominator of u_n dividing b^(2n), so
    /// U_n = b^(2n)·u_n satisfies the integral recurrence
    /// `n·U_n = Σ ((a+b)k − bn)·s_k·b^(2k−1)·U_{n−k}`.
    /// Returns `None` if an exact division fails (never expected).
    fn unit_power_integral(&self, alpha: &Rational) -> Option<Vec<Rational>> {
        let n = self.len();
        if n == 0 {
            return Some(Vec::new());
        }
        let a = alpha.numer().clone();
        let b = alpha.denom().clone();
        let b2 = &b * &b;
        let mut scaled: Vec<BigInt> = Vec::with_capacity(n);
        scaled.push(BigInt::zero());
        let mut bp = b.clone();
        for k in 1..n {
            scaled.push(self.coeffs[k].numer() * &bp);
            bp *= &b2;
        }
        let ab = &a + &b;
        let mut big_u: Vec<BigInt> = vec![BigInt::one()];
        let mut den = BigInt::one();
        let mut out = vec![Rational::one()];
        for m in 1..n {
            let mut acc = BigInt::zero();
            let bm = &b * BigInt::from(m);
            for k in 1..=m {
                if scaled[k].is_zero() || big_u[m - k].is_zero() {
                    continue;
                }
                let w = &ab * BigInt::from(k) - &bm;
                acc += w * &scaled[k] * &big_u[m - k];
            }
            let (q, r) = acc.div_rem(&BigInt::from(m));
            if !r.is_zero() {
                return None;
            }
            den *= &b2;
            out.push(Rational::new(q.clone(), den.clone()));
            big_u.push(q);
        }
        Some(out)
    }

    /// Cube root with cube-rooted leading coefficient and offset/3.
    ///
    /// Coefficient n of the output depends only on coefficients ≤ n of the
    /// input, so the relative precision is preserved.
    pub fn cbrt(&self) -> Result<Self> {
        let lead = self.leading_coeff().ok_or(Error::EmptyTruncation)?;
        if !self.offset.is_integer() || self.offset.to_integer() % 3 != 0 {
            return Err(Error::ExponentNotDivisibleBy3 { num: *self.offset.numer(), den: *self.offset.denom() });
        }
        let root = cbrt_exact(lead).ok_or_else(|| Error::NotARationalCube(lead.to_string()))?;
        let unit = self.scale(&lead.recip());
        let u = unit.unit_power(&Rational::new(BigInt::from(1), BigInt::from(3)));
        Ok(Self::new(self.offset / 3, u).scale(&root))
    }

    /// Multiplicative inverse of a series with nonzero leading coefficient.
    pub fn inv(&self) -> Result<Self> {
        let lead = self.leading_coeff().ok_or(Error::DivisionByZero)?;
        let unit = self.scale(&lead.recip());
        let u = unit.unit_power(&int(-1));
        Ok(Self::new(-self.offset, u).scale(&lead.recip()))
    }

    /// `(exponent, coefficient)` pairs for all stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> + '_ {
        self.coeffs.iter().enumerate().map(move |(k, c)| (self.offset + k as i64, c))
    }

    /// `self - other` vanishes to the common precision.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

/// Numerators over the lcm of the denominators.
fn common_denominator(xs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let l = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = xs.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (nums, l)
}

fn convolve(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms().take(8) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*q^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn cbrt_of_binomial() {
        // q^3 (1 + q) -> q (1 + q/3 - q^2/9 + 5q^3/81)
        let s = QSeries::from_ints(3, &[1, 1, 0, 0]);
        let r = s.cbrt().unwrap();
        assert_eq!(r.offset(), Exponent::from_integer(1));
        assert_eq!(r.coeffs(), &[int(1), rat(1, 3), rat(-1, 9), rat(5, 81)]);
        assert_eq!(r.pow(3), s);
    }

    #[test]
    fn cbrt_errors() {
        assert!(matches!(QSeries::from_ints(1, &[1, 2]).cbrt(), Err(Error::ExponentNotDivisibleBy3 { .. })));
        assert!(matches!(QSeries::from_ints(0, &[2, 1]).cbrt(), Err(Error::NotARationalCube(_))));
        assert_eq!(QSeries::from_ints(0, &[-8, 0]).cbrt().unwrap().coeffs()[0], int(-2));
    }

    #[test]
    fn addition_tracks_precision() {
        let a = QSeries::from_ints(0, &[1, 2, 3, 4]);
        let b = QSeries::from_ints(1, &[1, 1]);
        let s = a.add(&b).unwrap();
        assert_eq!(s.precision(), Exponent::from_integer(3));
        assert_eq!(s.coeffs(), &[int(1), int(3), int(4)]);
        let half = QSeries::new(Exponent::new(1, 2), vec![int(1)]);
        assert!(a.add(&half).is_err());
    }

    #[test]
    fn leading_zeros_move_into_offset() {
        let s = QSeries::from_ints(0, &[0, 0, 5, 1]);
        assert_eq!(s.offset(), Exponent::from_integer(2));
        assert_eq!(s.precision(), Exponent::from_integer(4));
        assert_eq!(s.coeff_at(0), Some(int(0)));
        assert_eq!(s.coeff_at(4), None);
    }

    #[test]
    fn substitution() {
        let s = QSeries::from_ints(1, &[1, 1]);
        let t = s.substitute_power(12);
        assert_eq!(t.coeff_at(12), Some(int(1)));
        assert_eq!(t.coeff_at(24), Some(int(1)));
        assert_eq!(t.coeff_at(13), Some(int(0)));
        assert_eq!(QSeries::one(3).substitute_power(5).coeff_at(0), Some(int(1)));
    }

    #[test]
    fn inverse() {
        let s = QSeries::from_ints(2, &[2, -1, 3, 0, 1]);
        let prod = s.mul(&s.inv().unwrap());
        assert_eq!(prod, QSeries::one(5));
    }
}
