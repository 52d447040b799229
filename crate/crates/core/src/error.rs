use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid box bounds {0:?}: need d >= 1 and every bound >= 1")]
    InvalidBounds(Vec<u32>),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cover relation contains a cycle through element {0}")]
    Cycle(usize),
    #[error("element {0} is referenced but never declared")]
    DanglingId(usize),
    #[error("element ids must be dense from 0; missing {0}")]
    NonDenseIds(usize),
    #[error("element 0 is not the unique minimum (found minimal element {0})")]
    MultipleMinima(usize),
    #[error("duplicate element declaration {0}")]
    DuplicateElement(usize),
    #[error("coordinates {0:?} appear on more than one element")]
    DuplicateCoords(Vec<u32>),
    #[error("set is not an ideal: element {element} is present but its lower cover {missing} is not")]
    NotAnIdeal { element: usize, missing: usize },
    #[error("unknown element id {0}")]
    UnknownElement(usize),
    #[error("length {requested} exceeds the {available} elements of the window")]
    LengthTooLarge { requested: usize, available: usize },
    #[error("depth {requested} exceeds the non-growable window depth {available}")]
    DepthTooLarge { requested: usize, available: usize },
    #[error("ideal spec {spec} needs element coordinates but element {element} has none")]
    MissingCoords { spec: String, element: usize },
    #[error("ideal spec {spec} has dimension {expected} but element {element} has {found} coordinates")]
    DimensionMismatch {
        spec: String,
        element: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid ideal spec {0:?}")]
    InvalidIdealSpec(String),
    #[error("invalid numbering: {0}")]
    InvalidNumbering(String),
    #[error("sigma_{index} needs positions {index} and {} but the numbering has length {length}", index + 1)]
    SigmaOutOfRange { index: usize, length: usize },
    #[error("path set has more than {limit} paths")]
    TooManyPaths { limit: usize },
    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },
    #[error("vertex (level {level}, index {index}) not in graph")]
    UnknownVertex { level: usize, index: usize },
    #[error("invalid probability vector: {0}")]
    InvalidAlpha(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("incompatible: {0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
