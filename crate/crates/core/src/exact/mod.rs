//! Exact arithmetic: rationals, Q(ζ₂₄), its cubic extension by 2^(1/3),
//! and polynomials over Q(ζ₂₄).

mod ops;

pub mod cyclo;
pub mod poly;
pub mod rational;
pub mod tower;

pub use cyclo::CycloElem;
pub use poly::Poly;
pub use rational::Rational;
pub use tower::CycloTowerElem;
