//! Finite-field models of the elliptic surface and the trace sums over
//! P¹(F_q) that feed the Frobenius characteristic polynomials.

mod family;
mod fiber;
mod field;

pub use family::{
    bad_fibers, eval_reduced, fiber_at, taylor, trace_sum, trace_sum_with, Convention, Family, FamilyModel, IntPoly,
    P1Point, PointContribution, ReducedFamily,
};
pub use fiber::{count_or_classify, FiberClass, ReductionKind, WeierstrassFiber};
pub use field::{Fe, Fq};
