//! Euler-factor checks of the cubic twist between a = 2 and a = 4, and of
//! the quartic twist relating g_{p,4} to f.

use serde::Serialize;

use super::coeff::NewformCoeff;
use super::residue::{
    cubic_character_psi, cubic_residue, eisenstein_primes, gaussian_primes, quartic_character_chi, quartic_residue,
    EisensteinPrime, GaussianPrime,
};
use crate::error::Result;
use crate::exact::rational::int;
use crate::exact::{CycloElem, Poly};
use crate::frobchar::FrobeniusRecord;

#[derive(Clone, Debug, Serialize)]
pub struct CubicTwistVerdict {
    pub p: u64,
    pub split: bool,
    pub pass: bool,
    /// (prime v, k with ψ(v) = ω₃ᵏ, g_{p,2} conjugated, g_{p,4} conjugated).
    pub pairings: Vec<(EisensteinPrime, u32, bool, bool)>,
}

fn both(g: &Poly) -> [(bool, Poly); 2] {
    [(false, g.clone()), (true, g.conj())]
}

fn trace(g: &Poly) -> CycloElem {
    -g.coeff(1)
}

/// For p ≡ 1 mod 3: g_{p,4}(X) = ψ(v)²·g_{p,2}(X/ψ(v)) for some v over p
/// and some choice of conjugates, i.e. u₄ = ψu₂ and v₄ = ψ²v₂.
/// For p ≡ 2 mod 3 (ψ(p) = 1): g_{p,2} and g_{p,4} coincide up to conjugation.
pub fn cubic_twist_check(rec2: &FrobeniusRecord, rec4: &FrobeniusRecord) -> Result<CubicTwistVerdict> {
    let p = rec2.h.p;
    let (g2, g4) = (rec2.g(), rec4.g());
    let mut pairings = Vec::new();
    let split = p % 3 == 1;
    for v in eisenstein_primes(p)? {
        let psi = cubic_character_psi(&v)?;
        let k = cubic_residue(2, &v)?;
        for (c2, h2) in both(&g2) {
            for (c4, h4) in both(&g4) {
                if trace(&h4) == &psi * &trace(&h2) && h4.coeff(0) == &(&psi * &psi) * &h2.coeff(0) {
                    pairings.push((v, k, c2, c4));
                }
            }
        }
    }
    Ok(CubicTwistVerdict { p, split, pass: !pairings.is_empty(), pairings })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticTwistMatch {
    pub v: GaussianPrime,
    /// χ(v) = iᵏ.
    pub chi_k: u32,
    pub sign: i64,
    pub sqrt2_flipped: bool,
    pub g_conjugated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticTwistVerdict {
    pub p: u64,
    pub split: bool,
    pub pass: bool,
    pub matches: Vec<QuarticTwistMatch>,
}

/// p ≡ 1 mod 4: trace g_{p,4} = s·χ(v)·c_p for some v over p, s = ±1 and
/// embedding of √2. p ≡ 3 mod 4: the inert Frobenius is Frob_p², so
/// H_{p,4} = X⁴ + s(c_p² − 2χ_f(p)p²)X² + p⁴ for some s = ±1.
pub fn quartic_twist_check(rec4: &FrobeniusRecord, c_p: &NewformCoeff, chi_f: i64) -> Result<QuarticTwistVerdict> {
    let p = rec4.h.p;
    let g4 = rec4.g();
    let split = p % 4 == 1;
    let mut matches = Vec::new();
    for v in gaussian_primes(p)? {
        let chi = quartic_character_chi(&v)?;
        let chi_k = quartic_residue(3, &v)?;
        if split {
            for (flipped, c) in [(false, c_p.clone()), (true, c_p.flip_sqrt2())] {
                let target = &chi * &c.to_cyclo();
                for (conj, g) in both(&g4) {
                    for sign in [1i64, -1] {
                        if trace(&g) == &CycloElem::from_int(sign) * &target {
                            matches.push(QuarticTwistMatch {
                                v,
                                chi_k,
                                sign,
                                sqrt2_flipped: flipped,
                                g_conjugated: conj,
                            });
                        }
                    }
                }
            }
        } else {
            let sq = (c_p * c_p).to_cyclo();
            let Some(sq) = sq.as_rational() else { continue };
            let t = sq - int(2 * chi_f * (p * p) as i64);
            for sign in [1i64, -1] {
                if rec4.h.e1 == 0 && int(rec4.h.e2) == &t * &int(sign) {
                    matches.push(QuarticTwistMatch { v, chi_k, sign, sqrt2_flipped: false, g_conjugated: false });
                }
            }
        }
    }
    Ok(QuarticTwistVerdict { p, split, pass: !matches.is_empty(), matches })
}

/// A sign s that works at every split prime, if one does.
pub fn quartic_twist_global_sign(verdicts: &[QuarticTwistVerdict]) -> Option<i64> {
    [-1i64, 1].into_iter().find(|&s| verdicts.iter().filter(|v| v.split).all(|v| v.matches.iter().any(|m| m.sign == s)))
}
