//! The weight-3 newform f of level 432 with coefficients in Q(√2, √−3),
//! its Hecke structure, and the twist relations linking it to the
//! Frobenius factors g_{p,2} and g_{p,4}.

mod coeff;
pub mod residue;
mod twist;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

pub use coeff::NewformCoeff;
pub use residue::{
    cubic_character_psi, cubic_residue, eisenstein_primes, gaussian_primes, quartic_character_chi, quartic_residue,
    EisensteinPrime, GaussianPrime,
};
pub use twist::{
    cubic_twist_check, quartic_twist_check, quartic_twist_global_sign, CubicTwistVerdict, QuarticTwistMatch,
    QuarticTwistVerdict,
};

use crate::error::{Error, Result};
use crate::exact::rational::{int, legendre, Rational};
use crate::qseries::{e6_series, eta_quotient_fractional, EtaQuotientSpec, Exponent, QSeries};
use crate::util::{is_prime, primes_between};

/// The four pieces f_j, j ∈ {1, 5, 7, 11}, each supported on n ≡ j mod 12
/// after z ↦ 12z, with their multipliers A + B√2 + C√−3 + D√−6.
fn pieces() -> [(u32, EtaQuotientSpec, bool, [i64; 4]); 4] {
    [
        (1, EtaQuotientSpec::new(&[(2, 3), (3, 1), (6, -1), (1, -1)]), true, [1, 0, 0, 0]),
        (5, EtaQuotientSpec::new(&[(1, 1), (2, 3), (3, 3), (6, -1)]), false, [0, 6, 0, 0]),
        (7, EtaQuotientSpec::new(&[(6, 3), (1, 1), (2, -1), (3, -1)]), true, [0, 0, 1, 0]),
        (11, EtaQuotientSpec::new(&[(3, 1), (1, 3), (6, 3), (2, -1)]), false, [0, 0, 0, 6]),
    ]
}

/// c_0..c_n of f (c_0 = 0).
pub fn build_f(n: usize) -> Result<Vec<NewformCoeff>> {
    if n == 0 {
        return Err(Error::EmptyTruncation);
    }
    let m = n / 12 + 1;
    let mut out = vec![NewformCoeff::zero(); n + 1];
    for (j, spec, with_e6, mult) in pieces() {
        let mut s: QSeries = eta_quotient_fractional(&spec, m)?;
        if with_e6 {
            s = s.mul(&e6_series(m)?);
        }
        let s = s.substitute_power(12);
        debug_assert_eq!(s.offset(), Exponent::from_integer(j as i64));
        let mult = NewformCoeff::from_ints(mult);
        for (e, c) in s.terms() {
            debug_assert!(e.is_integer());
            let k = e.to_integer();
            if k >= 0 && (k as usize) <= n && !c.is_zero() {
                out[k as usize] = mult.scale(c);
            }
        }
    }
    Ok(out)
}

/// Coefficients embedded into Q(ζ₂₄).
pub fn build_f_cyclo(n: usize) -> Result<Vec<crate::exact::CycloElem>> {
    Ok(build_f(n)?.iter().map(NewformCoeff::to_cyclo).collect())
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HeckeReport {
    pub nmax: usize,
    /// χ_f(p) = (c_p² − c_{p²})/p² for 5 ≤ p ≤ √nmax.
    pub nebentypus: BTreeMap<u64, i64>,
    /// χ_f by p mod 12, when constant on the class.
    pub by_class: BTreeMap<u64, i64>,
    /// Primes where χ_f(p) ≠ (−4/p); informational.
    pub legendre_mismatches: Vec<u64>,
    pub recursion_checks: usize,
    pub multiplicativity_checks: usize,
    pub failures: Vec<String>,
}

impl HeckeReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    num_integer::Integer::gcd(&a, &b)
}

/// Checks χ_f(p) ∈ {±1}, a_{np} = a_p a_n − χ_f(p)p²a_{n/p} for np ≤ nmax,
/// c_{mn} = c_m c_n for coprime m, n, and that χ_f factors through p mod 12.
pub fn hecke_verify(c: &[NewformCoeff], nmax: usize) -> Result<HeckeReport> {
    if c.len() <= nmax {
        return Err(Error::SeriesTooShort { need: nmax + 1, have: c.len() });
    }
    let mut rep = HeckeReport { nmax, ..Default::default() };

    if c[1] != NewformCoeff::one() {
        rep.failures.push("c_1 ≠ 1".into());
    }
    for (n, cn) in c.iter().enumerate().take(nmax + 1).skip(1) {
        if (n % 2 == 0 || n % 3 == 0) && !cn.is_zero() {
            rep.failures.push(format!("c_{n} ≠ 0 although gcd(n, 6) > 1"));
        }
    }

    let mut chi: BTreeMap<u64, i64> = BTreeMap::new();
    chi.insert(2, 0);
    chi.insert(3, 0);
    for p in primes_between(5, nmax as u64) {
        let pu = p as usize;
        if pu * pu > nmax {
            break;
        }
        let diff = &(&c[pu] * &c[pu]) - &c[pu * pu];
        let q = diff.scale(&Rational::new(1.into(), ((p * p) as i64).into()));
        let v = if q == NewformCoeff::one() {
            1
        } else if q == -&NewformCoeff::one() {
            -1
        } else {
            rep.failures.push(format!("χ_f({p}) = {q} is not ±1"));
            continue;
        };
        chi.insert(p, v);
        rep.nebentypus.insert(p, v);
        if v != legendre(-1, p) as i64 {
            rep.legendre_mismatches.push(p);
        }
        match rep.by_class.get(&(p % 12)) {
            Some(&w) if w != v => rep.failures.push(format!("χ_f not constant on {} mod 12 (p = {p})", p % 12)),
            _ => {
                rep.by_class.insert(p % 12, v);
            }
        }
    }

    for p in (2..=nmax as u64).filter(|&p| is_prime(p)) {
        let pu = p as usize;
        for n in 1..=nmax / pu {
            let mut rhs = &c[pu] * &c[n];
            if n % pu == 0 {
                let Some(&x) = chi.get(&p) else {
                    rep.failures.push(format!("χ_f({p}) undetermined at n = {n}"));
                    continue;
                };
                rhs = &rhs - &c[n / pu].scale(&int(x * (p * p) as i64));
            }
            rep.recursion_checks += 1;
            if c[n * pu] != rhs {
                rep.failures.push(format!("recursion fails at (n, p) = ({n}, {p})"));
            }
        }
    }

    for m in 2..=nmax {
        for n in m + 1..=nmax / m {
            if gcd(m, n) == 1 {
                rep.multiplicativity_checks += 1;
                if c[m * n] != &c[m] * &c[n] {
                    rep.failures.push(format!("c_{} ≠ c_{m}·c_{n}", m * n));
                }
            }
        }
    }
    Ok(rep)
}

/// The component carrying c_p for p ≡ 1, 5, 7, 11 mod 12: A, B, C or D.
pub fn expected_component(p: u64) -> Option<usize> {
    match p % 12 {
        1 => Some(0),
        5 => Some(1),
        7 => Some(2),
        11 => Some(3),
        _ => None,
    }
}

/// Primes ≤ c.len() − 1 whose c_p leaves the component fixed by p mod 12.
pub fn component_pattern_violations(c: &[NewformCoeff]) -> Vec<u64> {
    primes_between(5, c.len() as u64 - 1)
        .into_iter()
        .filter(|&p| {
            let cp = &c[p as usize];
            let Some(k) = expected_component(p) else { return true };
            cp.components().iter().enumerate().any(|(i, x)| i != k && !x.is_zero())
        })
        .collect()
}
