use alloc::string::String;

/// Failures raised by the permutation model, the bijections and the oracle.
///
/// Variants fall into two groups: malformed user data (text that does not
/// parse, images that do not form a permutation) and precondition violations
/// (calling a map outside its domain). [`Error::is_input_error`] tells them
/// apart.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("element {0} appears more than once")]
    DuplicateElement(u32),
    #[error("element {0} is not in the ground set")]
    ElementOutOfGround(u32),
    #[error("invalid ground set: {0}")]
    InvalidGround(String),
    #[error("ground set has {actual} elements, at least {required} required")]
    GroundTooSmall { required: usize, actual: usize },
    #[error("ground set has {actual} elements, above the safety bound of {bound}")]
    GroundTooLarge { actual: usize, bound: usize },
    #[error("ground set has odd size {0}")]
    OddGroundSize(usize),
    #[error("{0} and {1} lie in different cycles")]
    NotSameCycle(u32, u32),
    #[error("{0} and {1} lie in the same cycle")]
    SameCycle(u32, u32),
    #[error("{0} and {1} must be distinct")]
    RepeatedElement(u32, u32),
    #[error("permutation has an even cycle")]
    NotAllOdd,
    #[error("permutation has an odd cycle")]
    NotAllEven,
    #[error("permutation is not in P: the minimum must lie in an even cycle and every other cycle must be odd")]
    NotInP,
    #[error("unknown map `{0}`")]
    UnknownMap(String),
    #[error("no counting formula for class {class} at size {n}")]
    UnsupportedClass { class: String, n: usize },
}

impl Error {
    /// Stable upper-case identifier, used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAPermutation(_) => "NOT_A_PERMUTATION",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::DuplicateElement(_) => "DUPLICATE_ELEMENT",
            Error::ElementOutOfGround(_) => "ELEMENT_OUT_OF_GROUND",
            Error::InvalidGround(_) => "INVALID_GROUND",
            Error::GroundTooSmall { .. } => "GROUND_TOO_SMALL",
            Error::GroundTooLarge { .. } => "GROUND_TOO_LARGE",
            Error::OddGroundSize(_) => "ODD_GROUND_SIZE",
            Error::NotSameCycle(..) => "NOT_SAME_CYCLE",
            Error::SameCycle(..) => "SAME_CYCLE",
            Error::RepeatedElement(..) => "REPEATED_ELEMENT",
            Error::NotAllOdd => "NOT_ALL_ODD",
            Error::NotAllEven => "NOT_ALL_EVEN",
            Error::NotInP => "NOT_IN_P",
            Error::UnknownMap(_) => "UNKNOWN_MAP",
            Error::UnsupportedClass { .. } => "UNSUPPORTED_CLASS",
        }
    }

    /// True for errors caused by malformed user data rather than by calling
    /// an operation outside its domain.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotAPermutation(_)
                | Error::Parse { .. }
                | Error::DuplicateElement(_)
                | Error::InvalidGround(_)
                | Error::UnknownMap(_)
        )
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
