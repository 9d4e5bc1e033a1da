use thiserror::Error;

/// Errors raised across the crate. Variant names match the failure they
/// describe; `kind` buckets them for exit-code mapping in front ends.
#[derive(Debug, Error)]
pub enum Error {
    // field construction and element arithmetic
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("supplied modulus is reducible over F_{0}")]
    NotIrreducible(u64),
    #[error("field order {q} exceeds the configured cap {cap}")]
    Overflow { q: u128, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{e} does not divide the extension degree {n}")]
    NotDivisor { e: u32, n: u32 },
    #[error("multiplicative order of zero is undefined")]
    ZeroElement,
    #[error("element code {code} is out of range for a field of order {q}")]
    CodeOutOfRange { code: u64, q: u64 },

    // polynomial ring
    #[error("operands belong to different field contexts")]
    CtxMismatch,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {deg} outside the admissible range 1..={max}")]
    DegreeOutOfRange { deg: u64, max: u64 },
    #[error("the three polynomials do not satisfy a + b = c")]
    SumMismatch,
    #[error("the polynomials are not pairwise coprime")]
    CommonFactor,
    #[error("all three derivatives vanish")]
    AllDerivativesZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    // linearized polynomials
    #[error("basis elements are linearly dependent over the scalar subfield")]
    DependentBasis,
    #[error("linearized operands have different base exponents")]
    BaseMismatch,
    #[error("linearized polynomial is inseparable (zero linear coefficient)")]
    Inseparable,
    #[error("expected a linearized binomial with two nonzero terms")]
    NotBinomial,
    #[error("index {m} below the binomial's top exponent {i}")]
    BadIndex { m: u32, i: u32 },
    #[error("polynomial does not divide the field's splitting polynomial")]
    NotDividing,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("exponents are not all powers of the linearized base")]
    NotLinearized,

    // value sets
    #[error("set has {0} elements; structural decomposition needs more than 2")]
    TooSmall(usize),
    #[error("character order {r} does not divide q - 1 = {q_minus_1}")]
    BadOrder { r: u64, q_minus_1: u64 },
    #[error("polynomial is a constant times an r-th power")]
    IsPerfectPower,

    // certification
    #[error("value set has at most 2 elements; certification needs more")]
    TooFewValues,
    #[error("polynomial failed the functional-equation check; no certificate")]
    NotCertified,
    #[error("internal consistency failure: no (m, k, v) triple validates")]
    NoConsistentTriple,
    #[error("subspace is invalid here: {0}")]
    BadSubspace(&'static str),
    #[error("inner polynomial is not a minimal value set polynomial onto the required subfield")]
    InnerNotMvsp,
    #[error("family selector requires a degree-4 extension")]
    BadSelector,
    #[error("family constraint violated: {0}")]
    ConstraintViolated(&'static str),
    #[error("polynomial does not satisfy the defining functional identity")]
    NotInW,
    #[error("internal consistency failure: composition system has no solution")]
    NoSolution,
    #[error("hypotheses not satisfied: {0}")]
    BadHypotheses(String),
    #[error("no supported source of subfield-valued polynomials for e = {e} at q = {q}")]
    UnsupportedInnerSource { e: u32, q: u64 },
    #[error("bad parameters: {0}")]
    BadParams(String),

    // search
    #[error("run needs {needed} evaluation units, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    // curves
    #[error("exponent d >= q - 1; the subfield criterion does not apply")]
    DTooLarge,
    #[error("curve is reducible: {0}")]
    Reducible(String),

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Coarse failure classes, used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input or unsupported request.
    Usage,
    /// A result that would contradict a proven statement.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NoConsistentTriple | Error::NoSolution | Error::InternalConsistency(_) => {
                ErrorKind::Internal
            }
            _ => ErrorKind::Usage,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
