use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires a nonempty set of points")]
    EmptySet,

    /// A desk-scale guard refused an instance that would allocate too much.
    #[error("{what} would hold {size} items, above the cap of {cap}")]
    ResourceCap { what: &'static str, size: u128, cap: u128 },

    #[error("element {element} does not belong to {spec}")]
    Membership { element: String, spec: String },

    #[error("generator tuples live in different semigroups")]
    SpecMismatch,

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("need at least {needed} values, only {available} available")]
    InsufficientData { needed: usize, available: usize },

    #[error("basis has {size} generators, above the subset-enumeration cap of {cap}")]
    SubsetCap { size: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap { .. } | Error::SubsetCap { .. })
    }
}
