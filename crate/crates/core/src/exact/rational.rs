//! Arbitrary-precision rationals and the few root extractions the rest of
//! the crate needs.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact (real) cube root of an integer, if it is a perfect cube.
pub fn int_cbrt_exact(n: &BigInt) -> Option<BigInt> {
    let r = n.abs().cbrt();
    let r = if n.sign() == Sign::Minus { -r } else { r };
    (&r * &r * &r == *n).then_some(r)
}

pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    let n = int_sqrt_exact(x.numer())?;
    let d = int_sqrt_exact(x.denom())?;
    Some(Rational::new(n, d))
}

pub fn cbrt_exact(x: &Rational) -> Option<Rational> {
    let n = int_cbrt_exact(x.numer())?;
    let d = int_cbrt_exact(x.denom())?;
    Some(Rational::new(n, d))
}

/// Rational roots of `x^2 + b x + c`, in increasing order, deduplicated.
pub fn rational_quadratic_roots(b: &Rational, c: &Rational) -> Vec<Rational> {
    let disc = b * b - int(4) * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let Some(s) = sqrt_exact(&disc) else {
        return Vec::new();
    };
    let two = int(2);
    let r1 = (-b - &s) / &two;
    let r2 = (-b + &s) / &two;
    if s.is_zero() {
        vec![r1]
    } else {
        vec![r1, r2]
    }
}

/// Legendre symbol (a/p) for an odd prime p.
pub fn legendre(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if crate::util::pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

pub fn is_one(x: &Rational) -> bool {
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_and_square_roots() {
        assert_eq!(cbrt_exact(&rat(-8, 27)), Some(rat(-2, 3)));
        assert_eq!(cbrt_exact(&rat(1, 2)), None);
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(-9, 4)), None);
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
    }

    #[test]
    fn quadratic_roots() {
        // (x - 1/2)(x + 3) = x^2 + 5/2 x - 3/2
        assert_eq!(rational_quadratic_roots(&rat(5, 2), &rat(-3, 2)), vec![rat(-3, 1), rat(1, 2)]);
        assert!(rational_quadratic_roots(&int(0), &int(-2)).is_empty());
        assert_eq!(rational_quadratic_roots(&int(-2), &int(1)), vec![int(1)]);
    }

    #[test]
    fn legendre_symbols() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(-1, 7), -1);
        assert_eq!(legendre(14, 7), 0);
    }
}
