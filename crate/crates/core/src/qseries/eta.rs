//! Dedekind eta quotients ∏ η(s·z)^e, with η(z) = q^(1/24) ∏ (1 − qⁿ).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::series::{Exponent, QSeries};
use crate::error::{Error, Result};
use crate::exact::rational::Rational;

/// ∏ η(scale·z)^exponent over distinct scales.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaQuotientSpec {
    factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    /// Factors with repeated scales are merged; zero exponents dropped.
    pub fn new(factors: &[(u32, i32)]) -> Self {
        let mut merged: Vec<(u32, i32)> = Vec::new();
        for &(s, e) in factors {
            assert!(s > 0, "eta scale must be positive");
            match merged.iter_mut().find(|(t, _)| *t == s) {
                Some(slot) => slot.1 += e,
                None => merged.push((s, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        merged.sort_unstable();
        Self { factors: merged }
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    /// Disjoint union of factor lists, i.e. the product of the quotients.
    pub fn combine(&self, other: &Self) -> Self {
        let all: Vec<_> = self.factors.iter().chain(&other.factors).copied().collect();
        Self::new(&all)
    }

    /// Weight Σe/2.
    pub fn weight(&self) -> Exponent {
        Exponent::new(self.factors.iter().map(|&(_, e)| e as i64).sum(), 2)
    }

    /// Order of vanishing at q = 0: Σ s·e / 24.
    pub fn q_order(&self) -> Exponent {
        Exponent::new(self.factors.iter().map(|&(s, e)| s as i64 * e as i64).sum(), 24)
    }

    /// t = η(z)⁸η(4z)⁴/η(2z)¹².
    pub fn hauptmodul_t() -> Self {
        Self::new(&[(1, 8), (2, -12), (4, 4)])
    }

    /// H₁ = η(z)⁴η(2z)¹⁰η(8z)⁸/η(4z)⁴.
    pub fn h1_cube() -> Self {
        Self::new(&[(1, 4), (2, 10), (4, -4), (8, 8)])
    }

    /// H₂ = η(z)⁸η(4z)¹⁰η(8z)⁴/η(2z)⁴.
    pub fn h2_cube() -> Self {
        Self::new(&[(1, 8), (2, -4), (4, 10), (8, 4)])
    }
}

/// Coefficients of ∏_{n≥1} (1 − qⁿ) below q^n, from Euler's pentagonal
/// number theorem.
pub fn euler_product(n: usize) -> Vec<i8> {
    let mut out = vec![0i8; n];
    if n == 0 {
        return out;
    }
    out[0] = 1;
    for k in 1i64.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let p1 = (k * (3 * k - 1) / 2) as usize;
        let p2 = (k * (3 * k + 1) / 2) as usize;
        if p1 >= n {
            break;
        }
        out[p1] = sign;
        if p2 < n {
            out[p2] = sign;
        }
    }
    out
}

/// Integer coefficients of ∏ (∏(1 − q^{s n}))^e below q^n, without the
/// q^order prefactor.
pub fn eta_product_integer(spec: &EtaQuotientSpec, n: usize) -> Vec<BigInt> {
    let base = euler_product(n);
    let mut acc = vec![BigInt::zero(); n];
    if n == 0 {
        return acc;
    }
    acc[0] = BigInt::one();
    for &(s, e) in spec.factors() {
        let s = s as usize;
        // sparse P(q^s)
        let sparse: Vec<(usize, i64)> = base
            .iter()
            .enumerate()
            .filter(|&(k, &c)| c != 0 && k > 0 && k * s < n)
            .map(|(k, &c)| (k * s, c as i64))
            .collect();
        let pw = sparse_power(&sparse, e as i64, n);
        acc = mul_trunc(&acc, &pw, n);
    }
    acc
}

/// F = P^e for P = 1 + Σ sparse, via n·F_n = Σ_k ((e+1)k − n)·P_k·F_{n−k}.
fn sparse_power(sparse: &[(usize, i64)], e: i64, n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(); n];
    f[0] = BigInt::one();
    for m in 1..n {
        let mut acc = BigInt::zero();
        for &(k, c) in sparse {
            if k > m {
                break;
            }
            let w = (e + 1) * k as i64 - m as i64;
            if w != 0 && !f[m - k].is_zero() {
                acc += &f[m - k] * (w * c);
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(m));
        debug_assert!(r.is_zero());
        f[m] = q;
    }
    f
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
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

/// Expansion to `n` terms; errors if the q-order is fractional.
pub fn eta_quotient(spec: &EtaQuotientSpec, n: usize) -> Result<QSeries> {
    let ord = spec.q_order();
    if !ord.is_integer() {
        return Err(Error::FractionalOrder { num: *ord.numer(), den: *ord.denom() });
    }
    eta_quotient_fractional(spec, n)
}

/// Expansion to `n` terms with the (possibly fractional) q-order carried
/// in the series offset.
pub fn eta_quotient_fractional(spec: &EtaQuotientSpec, n: usize) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::EmptyTruncation);
    }
    let coeffs = eta_product_integer(spec, n).into_iter().map(Rational::from_integer).collect();
    Ok(QSeries::new(spec.q_order(), coeffs))
}
