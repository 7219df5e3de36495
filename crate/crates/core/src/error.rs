use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("conductor {n} does not divide {m}")]
    NotADivisor { n: u32, m: u32 },

    #[error("closure exceeded {cap} elements")]
    ClosureExplosion { cap: usize },
    #[error("rank {rank} exceeds dimension {dim}")]
    RankExceedsDimension { rank: usize, dim: usize },
    #[error("invariant factors must satisfy m_i >= 2 and m_i | m_(i+1)")]
    NotDividing,
    #[error("quotient by the trace-support subgroup is not abelian")]
    NonAbelianQuotient,
    #[error("conductor {conductor} lacks roots of unity of order {needed}")]
    ConductorTooSmall { conductor: u32, needed: u32 },

    #[error("the defining character is reducible (cyclic group)")]
    ReducibleChi,
    #[error("both forms are zero")]
    BothZero,
    #[error("zero form")]
    ZeroForm,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("no nontrivial self-compression predicted in degree {d}")]
    InfeasibleDegree { d: u32 },
    #[error("no admissible coefficient vector of max-norm <= {bound} in degree {d}")]
    SearchExhausted { d: u32, bound: u32 },
    #[error("unknown series kind for this group: {0}")]
    UnknownKind(String),
    #[error("series mismatch at degree {d}: closed form {expected}, computed {computed}")]
    Mismatch { d: u32, expected: i64, computed: i64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("form is not invariant")]
    NotInvariant,

    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("map does not fix the origin with identity differential")]
    ConditionsFail,
    #[error("Jacobian is singular at the chosen point")]
    SingularJacobian,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
