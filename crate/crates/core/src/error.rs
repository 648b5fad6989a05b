use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no square root of {0} is embedded in Q(zeta_24); supported: -1, 2, -2, 3, -3, 6, -6")]
    UnsupportedSqrt(i64),

    #[error("element does not lie in Q(sqrt({d})): nonzero residual coordinates {residual:?}")]
    NotInQuadraticSubfield { d: i64, residual: Vec<usize> },

    #[error("division by zero")]
    DivisionByZero,

    #[error("truncation order must be at least 1")]
    EmptyTruncation,

    #[error("eta quotient has fractional q-order {num}/{den}; request it with explicit fractional tracking")]
    FractionalOrder { num: i64, den: i64 },

    #[error("leading exponent {num}/{den} is not an integer multiple of 3")]
    ExponentNotDivisibleBy3 { num: i64, den: i64 },

    #[error("leading coefficient {0} is not a cube in Q")]
    NotARationalCube(String),

    #[error("series exponents are incompatible: {0}")]
    IncompatibleSeries(String),

    #[error("unsupported Hauptmodul parameter a = {0}; expected 2 or 4")]
    UnsupportedParameter(i64),

    #[error("{0} is not a prime >= 5")]
    BadPrime(u64),

    #[error("field degree {0} is not supported; expected 1 or 2")]
    UnsupportedDegree(u32),

    #[error("internal arithmetic inconsistency: {0}")]
    Internal(String),

    #[error("characteristic polynomial for p = {p}, a = {a} violates a Weil constraint: {detail}")]
    WeilViolation { p: u64, a: u32, detail: String },

    #[error("no factorization of H_(p={p}) over Q(sqrt({d}))")]
    NoFactorization { p: u64, d: i64 },

    #[error("no twelfth root of unity puts g_(p={p}) in the normal form X^2 - zeta c_p X + (-4/p) zeta^2 p^2")]
    NoZeta { p: u64 },

    #[error("{0} is not a square modulo p; use the quadratic extension ring")]
    NonResidue(String),

    #[error("{0} has no cube root modulo p")]
    NoCubeRoot(String),

    #[error("p = {p} divides the denominator of coefficient {index}")]
    NonUnitDenominator { p: u64, index: usize },

    #[error("precision M = {have} is too small; need at least {need}")]
    InsufficientPrecision { have: u32, need: u32 },

    #[error("p^M does not fit the 63-bit modulus used by the p-adic kernel")]
    ModulusTooLarge,

    #[error("b_p = {0} is not a sixth root of unity")]
    NotSixthRootOfUnity(String),

    #[error("series coefficients are needed up to n = {need}, only {have} available")]
    SeriesTooShort { need: usize, have: usize },

    #[error("q-series tail bound {bound:e} exceeds tol/10 = {limit:e}")]
    TailTooLarge { bound: f64, limit: f64 },

    #[error("tau must lie in the upper half plane")]
    NotInUpperHalfPlane,
}

pub type Result<T> = std::result::Result<T, Error>;
