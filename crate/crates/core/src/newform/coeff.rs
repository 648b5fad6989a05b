use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::rational::Rational;
use crate::exact::CycloElem;

/// A + B√2 + C√−3 + D√−6, with √2·√−3 = √−6.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NewformCoeff {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl NewformCoeff {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        let r = |x: i64| Rational::from_integer(x.into());
        Self::new(r(v[0]), r(v[1]), r(v[2]), r(v[3]))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { a: Rational::one(), ..Self::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Number of nonzero components.
    pub fn support(&self) -> usize {
        self.components().iter().filter(|x| !x.is_zero()).count()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    /// √−3 ↦ −√−3 (complex conjugation).
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    /// √2 ↦ −√2.
    pub fn flip_sqrt2(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    pub fn to_cyclo(&self) -> CycloElem {
        let s = |d: i64| CycloElem::sqrt_embed(d).expect("embedded");
        CycloElem::from_rational(self.a.clone()) + s(2).scale(&self.b) + s(-3).scale(&self.c) + s(-6).scale(&self.d)
    }
}

impl Add for &NewformCoeff {
    type Output = NewformCoeff;
    fn add(self, o: &NewformCoeff) -> NewformCoeff {
        NewformCoeff::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl Sub for &NewformCoeff {
    type Output = NewformCoeff;
    fn sub(self, o: &NewformCoeff) -> NewformCoeff {
        NewformCoeff::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl Neg for &NewformCoeff {
    type Output = NewformCoeff;
    fn neg(self) -> NewformCoeff {
        NewformCoeff::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Mul for &NewformCoeff {
    type Output = NewformCoeff;
    fn mul(self, o: &NewformCoeff) -> NewformCoeff {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let k = |n: i64| Rational::from_integer(n.into());
        // √2² = 2, √−3² = −3, √−6² = −6, √2√−6 = 2√−3, √−3√−6 = −3√2
        let a = a1 * a2 + k(2) * b1 * b2 - k(3) * c1 * c2 - k(6) * d1 * d2;
        let b = a1 * b2 + b1 * a2 - k(3) * (c1 * d2 + d1 * c2);
        let c = a1 * c2 + c1 * a2 + k(2) * (b1 * d2 + d1 * b2);
        let d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
        NewformCoeff::new(a, b, c, d)
    }
}

impl fmt::Display for NewformCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "sqrt(2)", "sqrt(-3)", "sqrt(-6)"];
        let mut first = true;
        for (x, name) in self.components().into_iter().zip(names) {
            if x.is_zero() {
                continue;
            }
            let neg = x < &Rational::zero();
            let mag = if neg { -x.clone() } else { x.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                _ => {}
            }
            first = false;
            if name.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Row<'a> {
    a: &'a str,
    b: &'a str,
    c: &'a str,
    d: &'a str,
}

impl Serialize for NewformCoeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.components().map(|x| x.to_string());
        Row { a: &a, b: &b, c: &c, d: &d }.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = NewformCoeff> {
        prop::array::uniform4(-20i64..20).prop_map(NewformCoeff::from_ints)
    }

    #[test]
    fn product_of_roots() {
        let s2 = NewformCoeff::from_ints([0, 1, 0, 0]);
        let s3 = NewformCoeff::from_ints([0, 0, 1, 0]);
        assert_eq!(&s2 * &s3, NewformCoeff::from_ints([0, 0, 0, 1]));
        assert_eq!((&s2 * &s3).to_cyclo(), CycloElem::sqrt_embed(-6).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(NewformCoeff::from_ints([0, 6, 0, 0]).to_string(), "6*sqrt(2)");
        assert_eq!(NewformCoeff::from_ints([1, 0, -1, 0]).to_string(), "1 - sqrt(-3)");
        assert_eq!(NewformCoeff::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn embedding_is_a_ring_map(x in arb(), y in arb()) {
            prop_assert_eq!((&x * &y).to_cyclo(), x.to_cyclo() * y.to_cyclo());
            prop_assert_eq!((&x + &y).to_cyclo(), x.to_cyclo() + y.to_cyclo());
            prop_assert_eq!(x.conj().to_cyclo(), x.to_cyclo().conj());
        }
    }
}
