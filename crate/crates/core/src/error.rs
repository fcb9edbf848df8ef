use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Broad class of a failure, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input is malformed or violates a structural invariant.
    Validation,
    /// The input is well formed but outside the mathematical domain of the metric.
    Domain,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("negative probability {value} at index {index}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("probability {value} at index {index} exceeds 1")]
    ProbabilityAboveOne { index: usize, value: f64 },

    #[error("probabilities sum to {sum}, outside tolerance 1e-9 of 1")]
    SumOutOfTolerance { sum: f64 },

    #[error(
        "joint distribution rows are ragged: row {row} has {found} columns, expected {expected}"
    )]
    RaggedJoint {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{field} = {value} is outside the domain {expected}")]
    Domain {
        field: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("symbol {symbol} at position {position} is not below alphabet size {alphabet_size}")]
    SymbolOutOfRange {
        position: usize,
        symbol: u32,
        alphabet_size: u32,
    },

    #[error("malformed LZ78 parse: {0}")]
    MalformedParse(&'static str),

    #[error("lattice width {width} is smaller than the neighborhood size {neighborhood}")]
    WidthTooSmall { width: usize, neighborhood: usize },

    #[error("invalid rule table: {0}")]
    InvalidRule(&'static str),

    #[error("invalid lattice: {0}")]
    InvalidLattice(&'static str),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("category is empty")]
    EmptyCategory,

    #[error("subset is not contained in the base category")]
    NotASubset,

    #[error("base category has zero structural complexity")]
    ZeroBaseComplexity,

    #[error("element is not a member of the category")]
    NotAMember,

    #[error("category needs at least {min} members, found {found}")]
    TooSmall { min: usize, found: usize },

    #[error("stock snapshot must carry exactly one of psi or category")]
    UnresolvablePsi,

    #[error("cognitive work is zero; efficiency is undefined")]
    ZeroWork,

    #[error("time must be positive, got {0}")]
    NonpositiveTime(f64),

    #[error("energy must be positive, got {0}")]
    NonpositiveEnergy(f64),

    #[error("duplicate step id `{0}`")]
    DuplicateStepId(String),

    #[error("step `{id}`: {source}")]
    Step {
        id: String,
        #[source]
        source: alloc::boxed::Box<Error>,
    },

    #[error("{}", join_failures(.0))]
    Steps(alloc::vec::Vec<Error>),
}

fn join_failures(failures: &[Error]) -> String {
    let mut out = String::new();
    for (i, f) in failures.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        out.push_str(&alloc::format!("{f}"));
    }
    out
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Domain { .. }
            | Error::ZeroBaseComplexity
            | Error::ZeroWork
            | Error::NonpositiveTime(_)
            | Error::NonpositiveEnergy(_) => ErrorKind::Domain,
            Error::Step { source, .. } => source.kind(),
            Error::Steps(failures) => failures.first().map_or(ErrorKind::Validation, Error::kind),
            _ => ErrorKind::Validation,
        }
    }

    pub(crate) fn domain(field: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            field,
            value,
            expected,
        }
    }

    pub(crate) fn in_step(id: &str, source: Error) -> Self {
        Error::Step {
            id: id.into(),
            source: alloc::boxed::Box::new(source),
        }
    }
}
