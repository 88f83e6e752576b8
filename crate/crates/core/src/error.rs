use thiserror::Error;

/// Failures raised by the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("exponent {exponent} lies outside the guaranteed window [{valid_lo}, {valid_hi}]")]
    InvalidWindow {
        exponent: i64,
        valid_lo: i64,
        valid_hi: i64,
    },
    #[error("function has a pole of order {order} below the requested window start {lo}")]
    PoleBelowWindow { order: i64, lo: i64 },
    #[error("map does not fix the expansion center")]
    CenterNotFixed,
    #[error("series centers differ")]
    CenterMismatch,
    #[error("not a simple zero: {0}")]
    NotSimpleZero(String),
    #[error("degenerate Mobius map (ad - bc = 0)")]
    DegenerateMobius,
    #[error("cannot invert a series whose leading coefficient vanishes")]
    NotInvertible,
    #[error("malformed rational literal {0:?}")]
    Parse(String),
}

/// Failures of the topological-recursion engine and its identity checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("invalid branch point: {0}")]
    BranchPointInvalid(String),
    #[error("unstable (g, n) = ({g}, {n})")]
    Unstable { g: u32, n: usize },
    #[error("missing lower correlator ({g}, {n}) in cache")]
    MissingLower { g: u32, n: usize },
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures of the f_a change of basis and P-level checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("differential is not in the span of the d f_a basis: {0}")]
    BasisMembershipViolated(String),
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures of the wave-function constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("Hurwitz source cannot provide H(g={g}, mu={mu:?})")]
    TruncationInsufficient { g: u32, mu: Vec<u32> },
    #[error("identity violated: {0}")]
    IdentityViolated(String),
}
