use alloc::string::String;
use core::fmt;

/// Unified error type for every fallible operation in this crate.
///
/// Variants are grouped by the layer that raises them; all carry enough
/// context to be actionable without a debugger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // --- field construction & element-level arithmetic ---
    /// `p` is not a prime number.
    NotPrime(u64),
    /// The supplied modulus polynomial is reducible over GF(p).
    Reducible,
    /// The supplied modulus is irreducible but its root is not a primitive
    /// element, so discrete logs base the root are unavailable.
    NotPrimitive,
    /// A Frobenius/dual/hull exponent `e` lies outside its allowed range.
    EOutOfRange { e: u32, max: u32 },
    /// The element is not a member of the subfield GF(sqrt(q)).
    NotInSubfield(u32),
    /// A nonzero element was required.
    Zero,
    /// The operation needs an even extension degree h (a quadratic subfield).
    OddExtension(u32),
    /// Invalid numeric arguments (details in the message).
    BadArgs(String),
    /// The congruence solver only applies in odd characteristic.
    EvenCharacteristic,

    // --- matrix / code level ---
    /// A full-row-rank matrix was required.
    RankDeficient { rank: usize, rows: usize },
    /// Independently computed quantities that must agree did not; this
    /// indicates a defect in the library, never a caller mistake.
    InternalMismatch(String),
    /// An enumeration exceeded its configured work budget.
    BudgetExceeded { needed: u128, budget: u128 },

    // --- extension constructions ---
    /// The input code is not self-orthogonal at the requested exponent.
    NotSelfOrthogonal,
    /// `beta` (or `lambda`) is zero or not a (p^e+1)-th root of unity.
    BadBeta,
    /// The alpha values do not satisfy the length-extension premise
    /// (all nonzero, power sum equal to zero).
    BadAlphaTuple,
    /// A tuple of fewer than two alphas was requested or supplied where the
    /// construction requires at least two appended columns.
    BadLength(usize),
    /// Single-column lengthening is a separate construction with its own
    /// contract; the multi-column extension rejects i = 1.
    LengthOne,
    /// The requested hull dimension is outside the achievable range.
    HullTargetOutOfRange { l: usize, max: usize },
    /// The determinant controlling the extended code's hull dimension is
    /// zero for the supplied (alpha, beta), so the target dimension is not
    /// achieved by this choice.
    DeterminantCondition,
    /// No scaling element gamma with gamma^(p^e+1) != 1 exists because
    /// (q-1) divides p^e+1; hull reduction by column scaling is impossible.
    NoScalingElement,
    /// No alpha tuple satisfying the extension premise was found within
    /// the search budget.
    NoAlphaTuple,

    // --- GRS families ---
    /// GRS locators must be pairwise distinct.
    DuplicateLocators,
    /// GRS column multipliers must all be nonzero.
    ZeroMultiplier,
    /// n' must divide q-1.
    BadDivisor { nprime: usize },
    /// The coset count t is outside 1..=(sqrt(q)-1)/n1.
    TOutOfRange { t: usize, max: usize },
    /// Requested cosets are not pairwise disjoint (library defect).
    CosetOverlap,
    /// The requested dimension k exceeds the family's proven bound.
    KOutOfRange { k: usize, max: usize },
    /// A divisibility hypothesis of the product family fails.
    ConditionViolated(String),
    /// Product-family locator sets overlap (library defect).
    Overlap,

    // --- EAQECC derivation ---
    /// Subfield-alphabet derivation needs h even and e = h/2.
    SubfieldUnavailable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Reducible => write!(f, "modulus polynomial is reducible"),
            Error::NotPrimitive => write!(f, "modulus root is not a primitive element"),
            Error::EOutOfRange { e, max } => write!(f, "exponent e={e} out of range 0..={max}"),
            Error::NotInSubfield(x) => write!(f, "element {x} is not in the quadratic subfield"),
            Error::Zero => write!(f, "nonzero element required"),
            Error::OddExtension(h) => write!(f, "extension degree h={h} is odd; no quadratic subfield"),
            Error::BadArgs(m) => write!(f, "bad arguments: {m}"),
            Error::EvenCharacteristic => write!(f, "operation requires odd characteristic"),
            Error::RankDeficient { rank, rows } => {
                write!(f, "matrix has rank {rank}, expected full row rank {rows}")
            }
            Error::InternalMismatch(m) => write!(f, "internal cross-check failed: {m}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "work {needed} exceeds budget {budget}")
            }
            Error::NotSelfOrthogonal => write!(f, "code is not self-orthogonal at this exponent"),
            Error::BadBeta => write!(f, "beta/lambda must be a nonzero (p^e+1)-th root of unity"),
            Error::BadAlphaTuple => {
                write!(f, "alpha values must be nonzero with zero power sum")
            }
            Error::BadLength(i) => write!(f, "tuple length {i} is below the minimum of 2"),
            Error::LengthOne => write!(f, "single-column lengthening is a separate construction; i=1 rejected"),
            Error::HullTargetOutOfRange { l, max } => {
                write!(f, "hull target {l} out of range 0..={max}")
            }
            Error::DeterminantCondition => {
                write!(f, "hull-control determinant is zero for this (alpha, beta)")
            }
            Error::NoScalingElement => {
                write!(f, "no gamma with gamma^(p^e+1) != 1 exists; (q-1) divides p^e+1")
            }
            Error::NoAlphaTuple => write!(f, "no valid alpha tuple found within budget"),
            Error::DuplicateLocators => write!(f, "locators must be pairwise distinct"),
            Error::ZeroMultiplier => write!(f, "column multipliers must be nonzero"),
            Error::BadDivisor { nprime } => write!(f, "n'={nprime} does not divide q-1"),
            Error::TOutOfRange { t, max } => write!(f, "t={t} out of range 1..={max}"),
            Error::CosetOverlap => write!(f, "coset representatives produce overlapping cosets"),
            Error::KOutOfRange { k, max } => write!(f, "k={k} exceeds the dimension bound {max}"),
            Error::ConditionViolated(m) => write!(f, "family hypothesis fails: {m}"),
            Error::Overlap => write!(f, "product locator sets overlap"),
            Error::SubfieldUnavailable => {
                write!(f, "subfield alphabet needs h even and e = h/2")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
