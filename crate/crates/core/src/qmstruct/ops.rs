//! The operators A and ζ on span(h₁, h₂) and the quaternion identities
//! they generate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{CycloElem, CycloTowerElem};

/// How a matrix acts on the basis (h₁, h₂): `Column` means column j holds
/// the coordinates of h_j | op; `Row` means row j does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Column,
    Row,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix(pub [[CycloTowerElem; 2]; 2]);

impl OpMatrix {
    pub fn new(m: [[CycloTowerElem; 2]; 2]) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self::scalar(CycloTowerElem::one())
    }

    pub fn scalar(c: CycloTowerElem) -> Self {
        let z = CycloTowerElem::zero();
        Self([[c.clone(), z.clone()], [z, c]])
    }

    pub fn diag(a: CycloTowerElem, b: CycloTowerElem) -> Self {
        let z = CycloTowerElem::zero();
        Self([[a, z.clone()], [z, b]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycloTowerElem {
        &self.0[i][j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = |i: usize, j: usize| &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j];
        Self([[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]])
    }

    pub fn add(&self, o: &Self) -> Self {
        let m = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Self([[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let m = |i: usize, j: usize| &self.0[i][j] - &o.0[i][j];
        Self([[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]])
    }

    pub fn scale(&self, c: &CycloTowerElem) -> Self {
        let m = |i: usize, j: usize| c * &self.0[i][j];
        Self([[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Self([[m[0][0].clone(), m[1][0].clone()], [m[0][1].clone(), m[1][1].clone()]])
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn apply(&self, v: &[CycloTowerElem; 2]) -> [CycloTowerElem; 2] {
        let r = |i: usize| &self.0[i][0] * &v[0] + &self.0[i][1] * &v[1];
        [r(0), r(1)]
    }

    /// Whether the matrix is c·I for a rational c, returning c.
    pub fn as_rational_scalar(&self) -> Option<crate::Rational> {
        let z = &self.0;
        if !z[0][1].is_zero() || !z[1][0].is_zero() || z[0][0] != z[1][1] {
            return None;
        }
        z[0][0].as_base()?.as_rational().cloned()
    }
}

fn base(c: CycloElem) -> CycloTowerElem {
    CycloTowerElem::from_base(c)
}

fn i() -> CycloElem {
    CycloElem::root_of_unity(6)
}

/// A = [[0, i·2^{4/3}], [i·2^{5/3}, 0]].
pub fn a_matrix() -> OpMatrix {
    let z = CycloTowerElem::zero();
    let a = CycloTowerElem::pow2_third(4).scale(&i());
    let b = CycloTowerElem::pow2_third(5).scale(&i());
    OpMatrix([[z.clone(), a], [b, z]])
}

/// ζ = diag(ω₃, ω₃⁻¹).
pub fn zeta_matrix() -> OpMatrix {
    OpMatrix::diag(base(CycloElem::root_of_unity(8)), base(CycloElem::root_of_unity(16)))
}

/// B_s for s ∈ {−1, −3, 3}.
pub fn b_operator(s: i64) -> Result<OpMatrix> {
    let z = zeta_matrix();
    let b3 = z.sub(&z.mul(&z));
    match s {
        -1 => Ok(a_matrix()),
        -3 => Ok(b3),
        3 => Ok(a_matrix().mul(&b3)),
        _ => Err(Error::UnsupportedParameter(s)),
    }
}

/// J_{−1} = B_{−1}/√8, J_{−3} = B_{−3}/√3, J₃ = J_{−1}J_{−3}.
pub fn j_operator(s: i64) -> Result<OpMatrix> {
    let inv = |d: i64, k: i64| -> Result<CycloTowerElem> {
        Ok(base((CycloElem::sqrt_embed(d)? * CycloElem::from_int(k)).inv()?))
    };
    match s {
        -1 => Ok(b_operator(-1)?.scale(&inv(2, 2)?)),
        -3 => Ok(b_operator(-3)?.scale(&inv(3, 1)?)),
        3 => Ok(j_operator(-1)?.mul(&j_operator(-3)?)),
        _ => Err(Error::UnsupportedParameter(s)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Identity {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraVerdict {
    pub identities: Vec<Identity>,
}

impl AlgebraVerdict {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(|x| x.holds)
    }
}

/// The quaternion relations among B_s and J_s, and ζ³ = I.
pub fn operator_algebra_check() -> Result<AlgebraVerdict> {
    let (bm1, bm3, b3) = (b_operator(-1)?, b_operator(-3)?, b_operator(3)?);
    let (jm1, jm3, j3) = (j_operator(-1)?, j_operator(-3)?, j_operator(3)?);
    let scalar = |k: i64| OpMatrix::scalar(CycloTowerElem::from_int(k));
    let anti = |x: &OpMatrix, y: &OpMatrix| x.mul(y).add(&y.mul(x)) == scalar(0);
    let checks = [
        ("B_-1^2 = -8", bm1.mul(&bm1) == scalar(-8)),
        ("B_-3^2 = -3", bm3.mul(&bm3) == scalar(-3)),
        ("B_3^2 = -24", b3.mul(&b3) == scalar(-24)),
        ("B_-1 B_-3 = -B_-3 B_-1", anti(&bm1, &bm3)),
        ("J_-1^2 = -1", jm1.mul(&jm1) == scalar(-1)),
        ("J_-3^2 = -1", jm3.mul(&jm3) == scalar(-1)),
        ("J_-1 J_-3 = -J_-3 J_-1", anti(&jm1, &jm3)),
        ("J_3^2 = -1", j3.mul(&j3) == scalar(-1)),
        ("zeta^3 = 1", zeta_matrix().pow(3) == OpMatrix::identity()),
    ];
    Ok(AlgebraVerdict { identities: checks.into_iter().map(|(n, h)| Identity { name: n.into(), holds: h }).collect() })
}

/// √μ for μ = k²·d with d among the embedded square roots.
fn sqrt_int(mu: i64) -> Result<CycloElem> {
    for k in (1..=mu.unsigned_abs() as i64).rev() {
        if mu % (k * k) == 0 {
            let d = mu / (k * k);
            if d == 1 {
                return Ok(CycloElem::from_int(k));
            }
            if let Ok(s) = CycloElem::sqrt_embed(d) {
                return Ok(s * CycloElem::from_int(k));
            }
        }
    }
    Err(Error::UnsupportedSqrt(mu))
}

#[derive(Clone, Debug)]
pub struct Eigenvector {
    pub value: CycloTowerElem,
    /// Coefficients of h₁ and h₂.
    pub vector: [CycloTowerElem; 2],
}

/// Eigenvectors of B_s (as an operator in the given convention), scaled so
/// the first nonzero coefficient is 1.
pub fn eigenbasis(s: i64, conv: Convention) -> Result<[Eigenvector; 2]> {
    let b = b_operator(s)?;
    // coordinates transform by the matrix itself in the column convention
    let m = match conv {
        Convention::Column => b,
        Convention::Row => b.transpose(),
    };
    let mu = m.mul(&m).as_rational_scalar().ok_or_else(|| Error::Internal("B_s² is not scalar".into()))?;
    if !mu.is_integer() {
        return Err(Error::Internal(format!("B_s² = {mu}")));
    }
    let lam = base(sqrt_int(mu.to_integer().try_into().map_err(|_| Error::Internal("overflow".into()))?)?);
    let one = CycloTowerElem::one();
    let zero = CycloTowerElem::zero();
    let mk = |l: CycloTowerElem| -> Result<Eigenvector> {
        let (p, q) = (m.entry(0, 0), m.entry(0, 1));
        let vector = if q.is_zero() {
            // diagonal: pick the axis with eigenvalue l
            if p == &l {
                [one.clone(), zero.clone()]
            } else {
                [zero.clone(), one.clone()]
            }
        } else {
            // (p − l)·v₁ + q·v₂ = 0
            [one.clone(), (&l - p).div(q)?]
        };
        Ok(Eigenvector { value: l, vector })
    };
    Ok([mk(lam.clone())?, mk(-lam)?])
}

/// The combination coefficient of h₂ stated for the ASD bases:
/// √2/∛2 for s = −1 and √−2/∛2 for s = 3.
pub fn stated_ratio(s: i64) -> Result<CycloTowerElem> {
    let d = match s {
        -1 => 2,
        3 => -2,
        _ => return Err(Error::UnsupportedParameter(s)),
    };
    Ok(CycloTowerElem::pow2_third(-1).scale(&CycloElem::sqrt_embed(d)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_identities() {
        let v = operator_algebra_check().unwrap();
        assert!(v.pass(), "{:?}", v.identities);
    }

    #[test]
    fn b_minus_three_is_diagonal() {
        let s = base(CycloElem::sqrt_embed(-3).unwrap());
        assert_eq!(b_operator(-3).unwrap(), OpMatrix::diag(s.clone(), -s));
    }

    #[test]
    fn eigenvectors_are_eigenvectors() {
        for s in [-1, -3, 3] {
            for conv in [Convention::Column, Convention::Row] {
                let m = match conv {
                    Convention::Column => b_operator(s).unwrap(),
                    Convention::Row => b_operator(s).unwrap().transpose(),
                };
                for e in eigenbasis(s, conv).unwrap() {
                    let lhs = m.apply(&e.vector);
                    assert_eq!(lhs, [&e.value * &e.vector[0], &e.value * &e.vector[1]]);
                }
            }
        }
    }

    #[test]
    fn column_convention_matches_stated_bases() {
        for s in [-1, 3] {
            let c = stated_ratio(s).unwrap();
            let ratios: Vec<_> =
                eigenbasis(s, Convention::Column).unwrap().iter().map(|e| e.vector[1].clone()).collect();
            assert!(ratios.contains(&c) && ratios.contains(&-c.clone()), "s={s}");
            let row: Vec<_> = eigenbasis(s, Convention::Row).unwrap().iter().map(|e| e.vector[1].clone()).collect();
            assert!(!row.contains(&c));
        }
        let e = eigenbasis(-3, Convention::Column).unwrap();
        assert_eq!(e[0].vector, [CycloTowerElem::one(), CycloTowerElem::zero()]);
    }
}
