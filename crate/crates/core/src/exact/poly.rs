//! Dense univariate polynomials over Q(ζ₂₄).

use std::fmt;

use num_traits::{One, Signed};

use super::cyclo::CycloElem;
use super::ops::impl_ring_ops;
use super::rational::Rational;

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<CycloElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<CycloElem>) -> Self {
        while coeffs.last().is_some_and(CycloElem::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| CycloElem::from_int(c)).collect())
    }

    /// X² − u·X + v.
    pub fn monic_quadratic(u: &CycloElem, v: &CycloElem) -> Self {
        Self::new(vec![v.clone(), -u, CycloElem::one()])
    }

    pub fn coeffs(&self) -> &[CycloElem] {
        &self.coeffs
    }

    /// Coefficient of X^k (zero past the degree).
    pub fn coeff(&self, k: usize) -> CycloElem {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloElem::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(CycloElem::conj).collect())
    }

    pub fn eval(&self, x: &CycloElem) -> CycloElem {
        self.coeffs.iter().rev().fold(CycloElem::zero(), |acc, c| &acc * x + c)
    }

    /// Rational coefficients, if all lie in Q.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.as_rational().cloned()).collect()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    fn neg_ref(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![CycloElem::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }
}

impl_ring_ops!(Poly);

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            let (neg, body) = match c.as_rational() {
                Some(r) if k > 0 && r.abs().is_one() => (r.is_negative(), String::new()),
                Some(r) => (r.is_negative(), r.abs().to_string()),
                None => (false, format!("({c})")),
            };
            let sep = if body.is_empty() || mono.is_empty() { "" } else { "*" };
            let term = format!("{body}{sep}{mono}");
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_pair_product_is_rational() {
        let s = CycloElem::sqrt_embed(-2).unwrap();
        let g = Poly::monic_quadratic(&(-&s * &CycloElem::from_int(6)), &CycloElem::from_int(-25));
        let h = &g * &g.conj();
        assert_eq!(h, Poly::from_ints(&[625, 0, 22, 0, 1]));
        assert_eq!(h.to_string(), "X^4 + 22*X^2 + 625");
    }

    #[test]
    fn evaluation_and_degree() {
        let p = Poly::from_ints(&[-4, 0, 1, 0]);
        assert_eq!(p.degree(), Some(2));
        assert!(p.eval(&CycloElem::from_int(2)).is_zero());
        assert!(Poly::zero().degree().is_none());
    }
}
