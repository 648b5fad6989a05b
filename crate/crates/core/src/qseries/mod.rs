//! Exact q-expansions: eta quotients, the weight-2 series E₆ used for the
//! level-432 newform, the Hauptmoduls t and r_a, and the cuspforms h₁, h₂.

mod eta;
mod series;

pub use eta::{eta_product_integer, eta_quotient, eta_quotient_fractional, euler_product, EtaQuotientSpec};
pub use series::{Exponent, QSeries};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::rational::{int, Rational};
use crate::exact::CycloTowerElem;
use crate::util::sigma;

/// 1 + 12 Σ (σ(3n) − 3σ(n)) qⁿ to `n` terms.
pub fn e6_series(n: usize) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::EmptyTruncation);
    }
    let coeffs = (0..n as u64)
        .map(|k| if k == 0 { int(1) } else { int(12 * (sigma(3 * k) as i64 - 3 * sigma(k) as i64)) })
        .collect();
    Ok(QSeries::new(Exponent::zero(), coeffs))
}

/// t = η(z)⁸η(4z)⁴/η(2z)¹² to `n` terms.
pub fn hauptmodul_t(n: usize) -> Result<QSeries> {
    eta_quotient(&EtaQuotientSpec::hauptmodul_t(), n)
}

/// r_a with a·r_a³ = t + 1, written as `scalar · series`.
///
/// For a = 2 the scalar is 1 and the series is rational. For a = 4 the
/// constant term (t+1)/4 = 1/2 is not a rational cube, so the series
/// ((t+1)/2)^(1/3) is paired with the scalar 2^(−1/3).
#[derive(Clone, Debug)]
pub struct HauptmodulR {
    pub a: i64,
    pub scalar: CycloTowerElem,
    pub series: QSeries,
}

/// r₂ = ((t+1)/2)^(1/3), or r₄ in scalar form; `strict` rejects the
/// irrational scalar of r₄.
pub fn hauptmodul_r(a: i64, n: usize, strict: bool) -> Result<HauptmodulR> {
    if a != 2 && a != 4 {
        return Err(Error::UnsupportedParameter(a));
    }
    let t1 = hauptmodul_t(n)?.add(&QSeries::one(n))?;
    let direct = t1.scale(&Rational::new(1.into(), a.into()));
    match direct.cbrt() {
        Ok(series) => Ok(HauptmodulR { a, scalar: CycloTowerElem::one(), series }),
        Err(Error::NotARationalCube(c)) if a == 4 => {
            if strict {
                return Err(Error::NotARationalCube(c));
            }
            let series = t1.scale(&Rational::new(1.into(), 2.into())).cbrt()?;
            Ok(HauptmodulR { a, scalar: CycloTowerElem::pow2_third(-1), series })
        }
        Err(e) => Err(e),
    }
}

/// (h₁, h₂) with hᵢ³ = Hᵢ, each to `n` terms.
pub fn cuspform_basis(n: usize) -> Result<(QSeries, QSeries)> {
    let h1 = eta_quotient(&EtaQuotientSpec::h1_cube(), n)?.cbrt()?;
    let h2 = eta_quotient(&EtaQuotientSpec::h2_cube(), n)?.cbrt()?;
    Ok((h1, h2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn e6_leading_coefficients() {
        let e = e6_series(4).unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(12), int(36), int(12)]);
    }

    #[test]
    fn r2_first_terms() {
        let r = hauptmodul_r(2, 5, true).unwrap();
        assert_eq!(r.series.coeff_at(0), Some(int(1)));
        assert_eq!(r.series.coeff_at(1), Some(rat(-4, 3)));
        let t = hauptmodul_t(5).unwrap();
        let lhs = r.series.pow(3).scale(&int(2)).sub(&QSeries::one(5)).unwrap();
        assert!(lhs.agrees_with(&t));
    }

    #[test]
    fn r4_needs_scalar() {
        assert!(matches!(hauptmodul_r(4, 5, true), Err(Error::NotARationalCube(_))));
        let r = hauptmodul_r(4, 5, false).unwrap();
        assert_eq!(r.scalar.pow(3), CycloTowerElem::one().div(&CycloTowerElem::from_int(2)).unwrap());
        assert!(hauptmodul_r(3, 5, false).is_err());
    }

    #[test]
    fn cuspforms_start_at_q() {
        let (h1, h2) = cuspform_basis(6).unwrap();
        assert_eq!(h1.offset(), Exponent::from_integer(1));
        assert_eq!(h2.offset(), Exponent::from_integer(1));
        assert_eq!(h1.coeffs()[..3], [int(1), rat(-4, 3), rat(-40, 9)]);
        assert_eq!(h2.coeffs()[..3], [int(1), rat(-8, 3), rat(8, 9)]);
    }
}
