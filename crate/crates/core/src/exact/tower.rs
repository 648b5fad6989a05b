//! The cubic extension Q(ζ₂₄)(2^(1/3)) = Q(ζ₂₄)[y]/(y³ − 2).
//!
//! `y` is the real cube root of 2. Since ω₃ = ζ₂₄⁸ is in the base field,
//! y ↦ ω₃y is an automorphism and inverses come from the norm down to
//! Q(ζ₂₄).

use std::fmt;

use num_traits::Zero;

use super::cyclo::CycloElem;
use super::ops::impl_ring_ops;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloTowerElem {
    coeffs: [CycloElem; 3],
}

impl CycloTowerElem {
    pub fn new(c0: CycloElem, c1: CycloElem, c2: CycloElem) -> Self {
        Self { coeffs: [c0, c1, c2] }
    }

    pub fn zero() -> Self {
        Self::from_base(CycloElem::zero())
    }

    pub fn one() -> Self {
        Self::from_base(CycloElem::one())
    }

    pub fn from_base(c: CycloElem) -> Self {
        Self::new(c, CycloElem::zero(), CycloElem::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_base(CycloElem::from_int(n))
    }

    /// y = 2^(1/3).
    pub fn cbrt2() -> Self {
        Self::new(CycloElem::zero(), CycloElem::one(), CycloElem::zero())
    }

    /// 2^(k/3) for any integer k.
    pub fn pow2_third(k: i64) -> Self {
        let q = k.div_euclid(3);
        let r = k.rem_euclid(3) as usize;
        let scale = if q >= 0 {
            Rational::from_integer(num_bigint::BigInt::from(2).pow(q as u32))
        } else {
            Rational::from_integer(num_bigint::BigInt::from(2).pow((-q) as u32)).recip()
        };
        let mut c: [CycloElem; 3] = std::array::from_fn(|_| CycloElem::zero());
        c[r] = CycloElem::from_rational(scale);
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[CycloElem; 3] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloElem::is_zero)
    }

    /// The base-field value, if the y and y² parts vanish.
    pub fn as_base(&self) -> Option<&CycloElem> {
        (self.coeffs[1].is_zero() && self.coeffs[2].is_zero()).then_some(&self.coeffs[0])
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] * c) }
    }

    /// y ↦ ω₃^k·y, fixing the base field.
    pub fn rotate(&self, k: i64) -> Self {
        let w = CycloElem::root_of_unity(8 * k);
        let w2 = &w * &w;
        Self::new(self.coeffs[0].clone(), &self.coeffs[1] * &w, &self.coeffs[2] * &w2)
    }

    /// Complex conjugation on the base field; y is real and stays fixed.
    pub fn conj(&self) -> Self {
        Self { coeffs: std::array::from_fn(|i| self.coeffs[i].conj()) }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let adj = self.rotate(1) * self.rotate(2);
        let norm =
            (self * &adj).as_base().cloned().ok_or_else(|| Error::Internal("tower norm left the base field".into()))?;
        Ok(adj.scale(&norm.inv()?))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
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

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let y = 2f64.cbrt();
        self.coeffs[0].to_complex() + self.coeffs[1].to_complex() * y + self.coeffs[2].to_complex() * (y * y)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }

    fn neg_ref(&self) -> Self {
        Self { coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut w: [CycloElem; 5] = std::array::from_fn(|_| CycloElem::zero());
        for i in 0..3 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if !rhs.coeffs[j].is_zero() {
                    w[i + j] = &w[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        let two = CycloElem::from_int(2);
        let [c0, c1, c2, c3, c4] = w;
        Self::new(c0 + &two * c3, c1 + &two * c4, c2)
    }
}

impl_ring_ops!(CycloTowerElem);

impl From<CycloElem> for CycloTowerElem {
    fn from(c: CycloElem) -> Self {
        Self::from_base(c)
    }
}

impl fmt::Debug for CycloTowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycloTowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(b) = self.as_base() {
            return write!(f, "{b}");
        }
        let names = ["", "*2^(1/3)", "*2^(2/3)"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.as_rational().is_some() || name.is_empty() {
                write!(f, "{c}{name}")?;
            } else {
                write!(f, "({c}){name}")?;
            }
        }
        Ok(())
    }
}

impl Zero for CycloTowerElem {
    fn zero() -> Self {
        CycloTowerElem::zero()
    }
    fn is_zero(&self) -> bool {
        CycloTowerElem::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn cube_of_y_is_two() {
        let y = CycloTowerElem::cbrt2();
        assert_eq!(y.pow(3), CycloTowerElem::from_int(2));
        assert_eq!(CycloTowerElem::pow2_third(4), &y * &CycloTowerElem::from_int(2));
        assert_eq!(CycloTowerElem::pow2_third(-1) * &y, CycloTowerElem::one());
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = CycloTowerElem::new(
            CycloElem::root_of_unity(1),
            CycloElem::from_int(3),
            CycloElem::sqrt_embed(-3).unwrap(),
        );
        let inv = x.inv().unwrap();
        assert_eq!(x * inv, CycloTowerElem::one());
    }

    #[test]
    fn complex_value() {
        let z = CycloTowerElem::pow2_third(5).to_complex();
        assert!((z.re - 2f64.powf(5.0 / 3.0)).abs() < 1e-12);
    }

    fn arb_base() -> impl Strategy<Value = CycloElem> {
        prop::array::uniform8(-4i64..=4)
            .prop_map(|c| CycloElem::from_coords(std::array::from_fn(|i| rat(c[i], 1 + (i as i64 % 2)))))
    }

    fn arb_tower() -> impl Strategy<Value = CycloTowerElem> {
        (arb_base(), arb_base(), arb_base()).prop_map(|(a, b, c)| CycloTowerElem::new(a, b, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn multiplication_commutes_and_associates(a in arb_tower(), b in arb_tower(), c in arb_tower()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn nonzero_elements_invert(a in arb_tower()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inv().unwrap(), CycloTowerElem::one());
        }
    }
}
