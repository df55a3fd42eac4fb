//! One error type for the whole library.
//!
//! Variants are grouped by the stage that raises them; the CLI maps them onto
//! process exit codes (input/spec problems vs. failed mathematical validation
//! vs. exhausted work budgets), so the grouping here is part of the contract.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // ---- input / spec problems ----------------------------------------
    /// `p` is not an odd prime.
    #[error("p = {p} is not an odd prime")]
    NotPrime { p: u64 },

    /// The modulus polynomial factors over F_p.
    #[error("modulus {modulus:?} is not irreducible over F_{p}")]
    NotIrreducible { p: u64, modulus: Vec<u32> },

    /// The modulus is irreducible but its root does not generate F_q*.
    #[error("modulus {modulus:?} is irreducible but its root is not a primitive element of F_{q}")]
    NotPrimitive { q: u64, modulus: Vec<u32> },

    /// Structural problems with requested parameters (q too large, empty
    /// modulus, non-monic modulus, zero block lengths, ...).
    #[error("unsupported input: {reason}")]
    Unsupported { reason: String },

    /// A literal failed to parse. `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Operands belong to different field/ring contexts.
    #[error("context mismatch: operands belong to different field or automorphism contexts")]
    ContextMismatch,

    // ---- algebraic preconditions --------------------------------------
    #[error("division by zero")]
    DivByZero,

    /// Division by a polynomial whose leading coefficient is not a unit.
    #[error("divisor has non-unit leading coefficient")]
    NonUnitLead,

    /// gcd(0, 0) has no monic representative.
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    /// An operand that must be nonzero was zero.
    #[error("operation requires a nonzero input: {what}")]
    ZeroInput { what: String },

    /// ord(σ) must divide the block length for the requested operation.
    #[error("automorphism order {order} does not divide block length {n}")]
    OrderMismatch { order: u32, n: usize },

    /// Matrix / word dimensions do not line up.
    #[error("shape mismatch: {what}")]
    ShapeMismatch { what: String },

    // ---- mathematical validation failures -----------------------------
    /// A claimed divisibility `a |_r b` does not hold.
    #[error("not a right divisor: {what}")]
    NotADivisor { what: String },

    /// A closed-form denominator failed to divide exactly.
    #[error("denominator does not divide exactly: {what}")]
    DenominatorNotDivisor { what: String },

    /// Generator words were expected to be independent but are not.
    #[error("generating set is rank-deficient: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },

    /// A closed-form result disagreed with the brute-force oracle.
    #[error("closed form disagrees with oracle: {what}")]
    OracleMismatch { what: String },

    /// The code is not separable but the operation requires it.
    #[error("code is not separable")]
    NotSeparable,

    /// A dual-containment test failed where containment is required.
    #[error("code is not dual-containing: {which}")]
    NotDualContaining { which: String },

    /// CSS construction would produce a negative logical dimension.
    #[error("negative logical dimension {value} for length n = {n}")]
    NegativeLogicalDim { n: usize, value: i64 },

    /// Parameters violate the quantum Singleton bound.
    #[error("quantum Singleton bound violated: n - k + 2 - 2d = {defect} < 0")]
    BoundViolated { defect: i64 },

    /// The zero code has no minimum distance.
    #[error("empty code has no distance")]
    EmptyCode,

    // ---- budgets -------------------------------------------------------
    /// A search or enumeration would exceed its work budget. For distance
    /// computations the best bounds found so far are carried along.
    #[error("budget exceeded: needed {needed} work units, budget {budget}")]
    BudgetExceeded {
        budget: u64,
        needed: u64,
        lower_bound: Option<u32>,
        upper_bound: Option<u32>,
    },
}

impl Error {
    pub fn unsupported(reason: impl Into<String>) -> Self {
        Error::Unsupported { reason: reason.into() }
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn shape(what: impl Into<String>) -> Self {
        Error::ShapeMismatch { what: what.into() }
    }

    /// CLI exit-code class: 2 = spec/input, 3 = math validation, 4 = budget.
    pub fn exit_class(&self) -> u8 {
        use Error::*;
        match self {
            NotPrime { .. } | NotIrreducible { .. } | NotPrimitive { .. }
            | Unsupported { .. } | Parse { .. } | ContextMismatch | DivByZero
            | NonUnitLead | BothZero | ZeroInput { .. } | OrderMismatch { .. }
            | ShapeMismatch { .. } => 2,
            NotADivisor { .. } | DenominatorNotDivisor { .. } | RankDeficient { .. }
            | OracleMismatch { .. } | NotSeparable | NotDualContaining { .. }
            | NegativeLogicalDim { .. } | BoundViolated { .. } | EmptyCode => 3,
            BudgetExceeded { .. } => 4,
        }
    }
}
