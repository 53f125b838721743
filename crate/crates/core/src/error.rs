use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed diagram document: {0}")]
    MalformedDiagram(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("empty generator name")]
    EmptyGeneratorName,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("commuting pair ({0}, {0}) is not a pair of distinct generators")]
    SelfCommutingPair(String),
    #[error("thickness of `{name}` is {q}, must be at least 2")]
    ThinPanel { name: String, q: u32 },
    #[error("too many generators: {0} (at most 64 are supported)")]
    TooManyGenerators(usize),
    #[error("diagram has no thickness for generator `{0}`")]
    MissingThickness(String),
    #[error("syllable value {value} out of range for `{name}` (thickness {q})")]
    ValueOutOfRange { name: String, value: u32, q: u32 },
    #[error("word `{word}` is not reduced (reduces to `{reduced}`)")]
    NotReduced { word: String, reduced: String },
    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("firmness predicate is undefined for the identity")]
    IdentityElement,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("search inconclusive: cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("radius {radius} is below the required bound {required}")]
    RadiusTooSmall { radius: usize, required: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency violated: {0}")]
    Inconsistent(String),
    #[error("theta is not a permutation of the panel: {0}")]
    NotAPermutation(String),
}
