//! Degree-one primes of Z[i] and Z[ω₃], and the cubic and quartic residue
//! symbols used to realize ψ = (2/·)₃ and χ = (3/·)₄.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::CycloElem;
use crate::util::{inv_mod, is_prime, pow_mod};

/// a + bi, or the rational prime itself when p ≡ 3 mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GaussianPrime {
    pub a: i64,
    pub b: i64,
    pub p: u64,
}

/// a + bω with ω = (−1 + √−3)/2, or p itself when p ≡ 2 mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinPrime {
    pub a: i64,
    pub b: i64,
    pub p: u64,
}

impl GaussianPrime {
    pub fn is_split(&self) -> bool {
        self.p % 4 == 1
    }

    pub fn norm(&self) -> u64 {
        if self.is_split() {
            self.p
        } else {
            self.p * self.p
        }
    }

    /// Multiply by the unit iᵏ.
    pub fn associate(&self, k: u32) -> Self {
        let (mut a, mut b) = (self.a, self.b);
        for _ in 0..k % 4 {
            (a, b) = (-b, a);
        }
        Self { a, b, p: self.p }
    }

    pub fn conj(&self) -> Self {
        Self { b: -self.b, ..*self }
    }

    /// Primary: a odd, b even, a + b ≡ 1 mod 4.
    pub fn is_primary(&self) -> bool {
        self.a.rem_euclid(2) == 1 && self.b.rem_euclid(2) == 0 && (self.a + self.b).rem_euclid(4) == 1
    }

    /// The image of i in Z[i]/(v) ≅ F_p (split primes only).
    fn i_mod(&self) -> u64 {
        let p = self.p as i64;
        let binv = inv_mod(self.b.rem_euclid(p) as u64, self.p).expect("b is a unit");
        ((-self.a).rem_euclid(p) as u64 * binv) % self.p
    }
}

impl EisensteinPrime {
    pub fn is_split(&self) -> bool {
        self.p % 3 == 1
    }

    pub fn norm(&self) -> u64 {
        if self.is_split() {
            self.p
        } else {
            self.p * self.p
        }
    }

    /// Multiply by the unit (−ω²)ᵏ = (1 + ω)ᵏ, a primitive sixth root of unity.
    pub fn associate(&self, k: u32) -> Self {
        let (mut a, mut b) = (self.a, self.b);
        for _ in 0..k % 6 {
            // (a + bω)(1 + ω) = a + (a + b)ω + bω² = (a − b) + aω
            (a, b) = (a - b, a);
        }
        Self { a, b, p: self.p }
    }

    /// a + bω̄ = (a − b) − bω.
    pub fn conj(&self) -> Self {
        Self { a: self.a - self.b, b: -self.b, p: self.p }
    }

    /// Primary: ≡ 2 mod 3.
    pub fn is_primary(&self) -> bool {
        self.a.rem_euclid(3) == 2 && self.b.rem_euclid(3) == 0
    }

    fn omega_mod(&self) -> u64 {
        let p = self.p as i64;
        let binv = inv_mod(self.b.rem_euclid(p) as u64, self.p).expect("b is a unit");
        ((-self.a).rem_euclid(p) as u64 * binv) % self.p
    }
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p < 5 {
        return Err(Error::BadPrime(p));
    }
    Ok(())
}

/// The primary primes of Z[i] above p: a conjugate pair, or p alone.
pub fn gaussian_primes(p: u64) -> Result<Vec<GaussianPrime>> {
    check_prime(p)?;
    if p % 4 == 3 {
        return Ok(vec![GaussianPrime { a: -(p as i64), b: 0, p }]);
    }
    let pi = p as i64;
    for a in 1..=pi {
        let r = pi - a * a;
        if r <= 0 {
            break;
        }
        let b = (r as f64).sqrt().round() as i64;
        if b * b == r {
            let v = GaussianPrime { a, b, p };
            let v = (0..4).map(|k| v.associate(k)).find(|w| w.is_primary()).expect("one associate is primary");
            return Ok(vec![v, v.conj()]);
        }
    }
    Err(Error::Internal(format!("no Gaussian prime over {p}")))
}

/// The primary primes of Z[ω] above p.
pub fn eisenstein_primes(p: u64) -> Result<Vec<EisensteinPrime>> {
    check_prime(p)?;
    if p % 3 == 2 {
        return Ok(vec![EisensteinPrime { a: p as i64, b: 0, p }]);
    }
    let pi = p as i64;
    let lim = (2.0 * (pi as f64).sqrt()) as i64 + 1;
    for a in -lim..=lim {
        for b in 1..=lim {
            if a * a - a * b + b * b == pi {
                let v = EisensteinPrime { a, b, p };
                let v = (0..6).map(|k| v.associate(k)).find(|w| w.is_primary()).expect("one associate is primary");
                return Ok(vec![v, v.conj()]);
            }
        }
    }
    Err(Error::Internal(format!("no Eisenstein prime over {p}")))
}

/// (x/v)₄ = iᵏ with iᵏ ≡ x^((Nv−1)/4) mod v; returns k.
pub fn quartic_residue(x: i64, v: &GaussianPrime) -> Result<u32> {
    let p = v.p;
    if x.rem_euclid(p as i64) == 0 {
        return Err(Error::NonResidue(format!("{x} is divisible by the prime over {p}")));
    }
    if !v.is_split() {
        // x^((p²−1)/4) = (x^(p−1))^((p+1)/4) = 1 for rational x
        return Ok(0);
    }
    let val = pow_mod(x.rem_euclid(p as i64) as u64, (p - 1) / 4, p);
    let i = v.i_mod();
    (0..4u32).find(|&k| pow_mod(i, k as u64, p) == val).ok_or_else(|| Error::Internal("quartic symbol".into()))
}

/// (x/v)₃ = ωᵏ with ωᵏ ≡ x^((Nv−1)/3) mod v; returns k.
pub fn cubic_residue(x: i64, v: &EisensteinPrime) -> Result<u32> {
    let p = v.p;
    if x.rem_euclid(p as i64) == 0 {
        return Err(Error::NonResidue(format!("{x} is divisible by the prime over {p}")));
    }
    if !v.is_split() {
        return Ok(0);
    }
    let val = pow_mod(x.rem_euclid(p as i64) as u64, (p - 1) / 3, p);
    let w = v.omega_mod();
    (0..3u32).find(|&k| pow_mod(w, k as u64, p) == val).ok_or_else(|| Error::Internal("cubic symbol".into()))
}

/// ψ(v) = (2/v)₃ as a cube root of unity.
pub fn cubic_character_psi(v: &EisensteinPrime) -> Result<CycloElem> {
    Ok(CycloElem::root_of_unity(8 * cubic_residue(2, v)? as i64))
}

/// χ(v) = (3/v)₄ as a fourth root of unity.
pub fn quartic_character_chi(v: &GaussianPrime) -> Result<CycloElem> {
    Ok(CycloElem::root_of_unity(6 * quartic_residue(3, v)? as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::primes_between;

    #[test]
    fn primes_have_the_right_norm() {
        for p in primes_between(5, 200) {
            for v in gaussian_primes(p).unwrap() {
                assert!(v.is_primary());
                if v.is_split() {
                    assert_eq!((v.a * v.a + v.b * v.b) as u64, p);
                }
            }
            for v in eisenstein_primes(p).unwrap() {
                assert!(v.is_primary());
                if v.is_split() {
                    assert_eq!((v.a * v.a - v.a * v.b + v.b * v.b) as u64, p);
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        for v in eisenstein_primes(31).unwrap() {
            assert!(cubic_character_psi(&v).unwrap().is_one());
        }
        for v in eisenstein_primes(7).unwrap() {
            assert!(!cubic_character_psi(&v).unwrap().is_one());
        }
        for p in [5, 11, 17] {
            let v = eisenstein_primes(p).unwrap()[0];
            assert!(cubic_character_psi(&v).unwrap().is_one());
        }
    }

    #[test]
    fn chi_examples() {
        let i = CycloElem::root_of_unity(6);
        for v in gaussian_primes(5).unwrap() {
            let c = quartic_character_chi(&v).unwrap();
            assert!(c == i || c == -i.clone());
        }
        for v in gaussian_primes(13).unwrap() {
            let c = quartic_character_chi(&v).unwrap();
            assert!(c.is_one() || c == CycloElem::from_int(-1));
        }
    }

    #[test]
    fn symbols_ignore_associates_and_are_multiplicative() {
        for p in primes_between(5, 120) {
            for v in gaussian_primes(p).unwrap() {
                for k in 0..4 {
                    assert_eq!(quartic_residue(3, &v).unwrap(), quartic_residue(3, &v.associate(k)).unwrap());
                }
                for (x, y) in [(2, 3), (3, 7), (5, 11)] {
                    if p as i64 == x || p as i64 == y {
                        continue;
                    }
                    let lhs = quartic_residue(x * y, &v).unwrap();
                    assert_eq!(lhs, (quartic_residue(x, &v).unwrap() + quartic_residue(y, &v).unwrap()) % 4);
                }
            }
            for v in eisenstein_primes(p).unwrap() {
                for k in 0..6 {
                    assert_eq!(cubic_residue(2, &v).unwrap(), cubic_residue(2, &v.associate(k)).unwrap());
                }
                if p != 7 {
                    let lhs = cubic_residue(14, &v).unwrap();
                    assert_eq!(lhs, (cubic_residue(2, &v).unwrap() + cubic_residue(7, &v).unwrap()) % 3);
                }
            }
        }
    }

    #[test]
    fn conjugate_primes_give_conjugate_symbols() {
        for p in primes_between(5, 100).into_iter().filter(|p| p % 4 == 1) {
            let vs = gaussian_primes(p).unwrap();
            let (a, b) = (quartic_residue(3, &vs[0]).unwrap(), quartic_residue(3, &vs[1]).unwrap());
            assert_eq!((a + b) % 4, 0);
        }
    }
}
