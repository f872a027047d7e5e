use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle notation: {0}")]
    Parse(String),

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} repeated within one cycle")]
    RepeatedPoint(usize),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    EnumerationCap { order: u64, cap: u64 },

    #[error("index {index} exceeds the quotient degree cap {cap}")]
    QuotientCap { index: u64, cap: u64 },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{classes} classes exceed the character table cap {cap}")]
    ClassCap { classes: usize, cap: usize },

    #[error("eigenspace splitting failed: {0}")]
    EigenSplit(String),

    #[error("{0} is not a vertex of the graph")]
    NotAVertex(u64),

    #[error("partition size {partition} does not match cycle type size {cycle_type}")]
    SizeMismatch { partition: usize, cycle_type: usize },

    #[error("invalid arguments: {0}")]
    Invalid(String),

    #[error("search bound exceeded: {0}")]
    Bound(String),

    #[error("no separating subsets found for p={p}, q={q} (anomaly)")]
    NoSeparatingSubsets { p: u64, q: u64 },

    #[error("group spec: {0}")]
    Spec(String),

    #[error("config: {0}")]
    Config(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
