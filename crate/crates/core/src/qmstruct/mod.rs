//! Quaternion multiplication on span(h₁, h₂) and the isogeny behind it.

pub mod isogeny;
mod ops;
mod slash;

pub use isogeny::{isogeny_sample_check, IsogenyMaps, IsogenyVerdict};
pub use ops::{
    a_matrix, b_operator, eigenbasis, j_operator, operator_algebra_check, stated_ratio, zeta_matrix, AlgebraVerdict,
    Convention, Eigenvector, Identity, OpMatrix,
};
pub use slash::{numeric_slash_check, slash_check_with, SlashVerdict};
