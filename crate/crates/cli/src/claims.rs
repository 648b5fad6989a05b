//! The fixed registry of verifiable claims. Every report row names exactly
//! one entry, optionally qualified by a parameter such as `p=13`.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    HauptmodulExpansion,
    CuspformEtaCubes,
    NewformCoefficients,
    NewformHecke,
    FrobeniusFactorization,
    WeilStructure,
    AsdCongruence,
    QuaternionAlgebra,
    SlashAction,
    EigenbasisConvention,
    Isogeny,
    CubicTwist,
    QuarticTwist,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 13] = [
        ClaimKind::HauptmodulExpansion,
        ClaimKind::CuspformEtaCubes,
        ClaimKind::NewformCoefficients,
        ClaimKind::NewformHecke,
        ClaimKind::FrobeniusFactorization,
        ClaimKind::WeilStructure,
        ClaimKind::AsdCongruence,
        ClaimKind::QuaternionAlgebra,
        ClaimKind::SlashAction,
        ClaimKind::EigenbasisConvention,
        ClaimKind::Isogeny,
        ClaimKind::CubicTwist,
        ClaimKind::QuarticTwist,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClaimKind::HauptmodulExpansion => "hauptmodul-expansion",
            ClaimKind::CuspformEtaCubes => "cuspform-eta-cubes",
            ClaimKind::NewformCoefficients => "newform-coefficients",
            ClaimKind::NewformHecke => "newform-hecke",
            ClaimKind::FrobeniusFactorization => "frobenius-factorization",
            ClaimKind::WeilStructure => "weil-structure",
            ClaimKind::AsdCongruence => "asd-congruence",
            ClaimKind::QuaternionAlgebra => "quaternion-algebra",
            ClaimKind::SlashAction => "slash-action",
            ClaimKind::EigenbasisConvention => "eigenbasis-convention",
            ClaimKind::Isogeny => "isogeny",
            ClaimKind::CubicTwist => "cubic-twist",
            ClaimKind::QuarticTwist => "quartic-twist",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            ClaimKind::HauptmodulExpansion => "t = 1 - 8q + 32q^2 + O(q^3)",
            ClaimKind::CuspformEtaCubes => "h1^3 and h2^3 are the stated eta quotients",
            ClaimKind::NewformCoefficients => {
                "displayed coefficients of the level 432 newform and the c_p table column"
            }
            ClaimKind::NewformHecke => "Hecke recursion, multiplicativity and the nebentypus by p mod 12",
            ClaimKind::FrobeniusFactorization => "H_{p,a} = g * conj(g) with g matching the published row",
            ClaimKind::WeilStructure => "Weil bounds, e3 = p^2 e1, e4 = p^4 and the splitting field by p mod 12",
            ClaimKind::AsdCongruence => "three-term congruences for an eigenbasis of h1, h2",
            ClaimKind::QuaternionAlgebra => "relations among B_s and J_s",
            ClaimKind::SlashAction => "h | A matches the matrix of A numerically",
            ClaimKind::EigenbasisConvention => "eigenvectors of B_s give the stated basis combinations",
            ClaimKind::Isogeny => "the explicit maps form an isogeny with the stated kernel",
            ClaimKind::CubicTwist => "Euler factors at a = 2 and a = 4 differ by the cubic character",
            ClaimKind::QuarticTwist => "trace of g_{p,4} is +-chi(v) c_p",
        }
    }

    pub fn claim(self) -> Claim {
        Claim { kind: self, param: None }
    }

    pub fn with(self, param: impl Into<String>) -> Claim {
        Claim { kind: self, param: Some(param.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub kind: ClaimKind,
    pub param: Option<String>,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            Some(p) => write!(f, "{}/{}", self.kind.id(), p),
            None => f.write_str(self.kind.id()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = ClaimKind::ALL.iter().map(|k| k.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), ClaimKind::ALL.len());
    }

    #[test]
    fn qualified_ids() {
        assert_eq!(ClaimKind::AsdCongruence.with("p=5").to_string(), "asd-congruence/p=5");
        assert_eq!(ClaimKind::QuaternionAlgebra.claim().to_string(), "quaternion-algebra");
    }
}
