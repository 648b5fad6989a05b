//! Splitting X⁴ − e₁X³ + e₂X² − p²e₁X + p⁴ as g·ḡ over Q(√D).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{int, rational_quadratic_roots, sqrt_exact, Rational};
use crate::exact::{CycloElem, Poly};

/// g = X² − (α + β√D)X + (γ + δ√D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadFactor {
    pub d: i64,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl QuadFactor {
    /// u, the negated linear coefficient.
    pub fn trace(&self) -> CycloElem {
        quad(&self.alpha, &self.beta, self.d)
    }

    /// v, the constant coefficient.
    pub fn constant(&self) -> CycloElem {
        quad(&self.gamma, &self.delta, self.d)
    }

    pub fn poly(&self) -> Poly {
        Poly::monic_quadratic(&self.trace(), &self.constant())
    }

    /// The factor with √D ↦ −√D (complex conjugation when D < 0).
    pub fn conjugate(&self) -> Self {
        Self { beta: -&self.beta, delta: -&self.delta, ..self.clone() }
    }
}

fn quad(a: &Rational, b: &Rational, d: i64) -> CycloElem {
    if d == 1 {
        return CycloElem::from_rational(a + b);
    }
    let s = CycloElem::sqrt_embed(d).expect("factor fields are embedded");
    CycloElem::from_rational(a.clone()) + s.scale(b)
}

/// The quadratic field over which H_{p,a} splits, by p mod 12.
pub fn factor_field(p: u64, a: i64) -> Result<i64> {
    match (a, p % 12) {
        (2, 1) | (2, 7) => Ok(-3),
        (4, 1) => Ok(1),
        (4, 7) => Ok(-3),
        (2 | 4, 5) => Ok(-2),
        (2 | 4, 11) => Ok(-6),
        (2 | 4, _) => Err(Error::BadPrime(p)),
        _ => Err(Error::UnsupportedParameter(a)),
    }
}

/// All factorizations H = g·ḡ with coefficients in Q(√D), one per
/// conjugate pair, canonicalized to β ≥ 0 and then δ ≥ 0.
///
/// Matching coefficients gives
/// 2α = e₁, α² − Dβ² + 2γ = e₂, 2(αγ − Dβδ) = p²e₁, γ² − Dδ² = p⁴.
/// With B = Dβ², eliminating δ leaves (γ − p²)(B(γ + p²) − α²(γ − p²)) = 0,
/// so either γ = p², or B solves
/// B² + (e₂ + 2p² − 2α²)B + α²(α² + 2p² − e₂) = 0.
pub fn factor_over_quadratic(e1: i64, e2: i64, p: u64, d: i64) -> Result<Vec<QuadFactor>> {
    let p2 = int((p * p) as i64);
    let alpha = Rational::new(BigInt::from(e1), BigInt::from(2));
    let e2r = int(e2);
    let h = Poly::from_ints(&[(p as i64).pow(4), -(p as i64).pow(2) * e1, e2, -e1, 1]);

    if d == 1 {
        // rational g with g² = H
        let gamma = (&e2r - &alpha * &alpha) / int(2);
        let f = QuadFactor { d, alpha, beta: Rational::zero(), gamma, delta: Rational::zero() };
        let g = f.poly();
        return if &g * &g == h { Ok(vec![f]) } else { Err(Error::NoFactorization { p, d }) };
    }

    let dr = int(d);
    let a2 = &alpha * &alpha;
    // (B, γ) candidates; δ is derived afterwards
    let mut cands: Vec<(Rational, Rational)> = Vec::new();
    let gamma_of = |b: &Rational| (&e2r - &a2 + b) / int(2);
    cands.push((&a2 + int(2) * &p2 - &e2r, p2.clone()));
    let lin = &e2r + int(2) * &p2 - int(2) * &a2;
    let cst = &a2 * (&a2 + int(2) * &p2 - &e2r);
    for b in rational_quadratic_roots(&lin, &cst) {
        cands.push((b.clone(), gamma_of(&b)));
    }
    for g in [p2.clone(), -p2.clone()] {
        cands.push((int(2) * &g - &e2r + &a2, g));
    }
    cands.push((Rational::zero(), gamma_of(&Rational::zero())));

    let mut out: Vec<QuadFactor> = Vec::new();
    for (b, gamma) in cands {
        let Some(beta) = sqrt_exact(&(&b / &dr)) else { continue };
        let deltas: Vec<Rational> = if !beta.is_zero() {
            vec![&alpha * (&gamma - &p2) / (&dr * &beta)]
        } else {
            match sqrt_exact(&((&gamma * &gamma - &p2 * &p2) / &dr)) {
                Some(s) => vec![s.clone(), -s],
                None => continue,
            }
        };
        for delta in deltas {
            let mut f = QuadFactor { d, alpha: alpha.clone(), beta: beta.clone(), gamma: gamma.clone(), delta };
            if f.beta.is_negative() || (f.beta.is_zero() && f.delta.is_negative()) {
                f = f.conjugate();
            }
            let g = f.poly();
            if &g * &g.conj() == h && !out.contains(&f) {
                out.push(f);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoFactorization { p, d });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn p11_splits_over_sqrt_minus_6() {
        // H = (X² + 6√−6X − 121)(X² − 6√−6X − 121) = X⁴ − 26X² + 14641
        let fs = factor_over_quadratic(0, -26, 11, -6).unwrap();
        assert_eq!(fs.len(), 1);
        let f = &fs[0];
        assert_eq!((f.alpha.clone(), f.beta.clone()), (int(0), int(6)));
        assert_eq!((f.gamma.clone(), f.delta.clone()), (int(-121), int(0)));
    }

    #[test]
    fn p13_splits_over_sqrt_minus_3() {
        // g = X² − 13(1+√−3)/2·X + (−1+√−3)/2·169
        let u = CycloElem::from_int(13) * CycloElem::root_of_unity(4);
        let v = CycloElem::from_int(169) * CycloElem::root_of_unity(8);
        let g = Poly::monic_quadratic(&u, &v);
        let h = (&g * &g.conj()).rational_coeffs().unwrap();
        let e1: i64 = (-&h[3]).to_integer().try_into().unwrap();
        let e2: i64 = h[2].to_integer().try_into().unwrap();
        let fs = factor_over_quadratic(e1, e2, 13, -3).unwrap();
        assert!(fs.iter().any(|f| f.poly() == g || f.poly() == g.conj()));
        assert_eq!(fs[0].alpha, rat(13, 2));
    }

    #[test]
    fn repeated_rational_factor() {
        let p = 41i64;
        // (X² − p²)²
        let fs = factor_over_quadratic(0, -2 * p * p, p as u64, 1).unwrap();
        assert_eq!(fs[0].poly(), Poly::from_ints(&[-p * p, 0, 1]));
        let fs = factor_over_quadratic(0, -2 * p * p, p as u64, -2).unwrap();
        assert!(fs.iter().any(|f| f.poly() == Poly::from_ints(&[-p * p, 0, 1])));
    }

    #[test]
    fn unsplittable_quartic_is_an_error() {
        assert!(matches!(factor_over_quadratic(1, 3, 5, -2), Err(Error::NoFactorization { .. })));
    }

    #[test]
    fn fields_by_residue_class() {
        assert_eq!(factor_field(7, 2).unwrap(), -3);
        assert_eq!(factor_field(7, 4).unwrap(), -3);
        assert_eq!(factor_field(13, 4).unwrap(), 1);
        assert_eq!(factor_field(13, 2).unwrap(), -3);
        assert_eq!(factor_field(17, 2).unwrap(), -2);
        assert_eq!(factor_field(23, 4).unwrap(), -6);
        assert!(factor_field(13, 3).is_err());
    }
}
