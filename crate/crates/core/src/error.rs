use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("image array is not a bijection")]
    NotAPermutation,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),

    #[error("subgroup is not normal: conjugating {h} by {g} leaves the subgroup")]
    NotNormal { g: usize, h: usize },

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("connection set contains the identity")]
    IdentityInConnectionSet,

    #[error("connection set is not inverse-closed: inverse of {0} missing")]
    NotInverseClosed(usize),

    #[error("{pairs} inverse pairs exceed the enumeration limit of {limit}")]
    TooManyPairs { pairs: usize, limit: usize },

    #[error("partition is not invariant under generator {generator}")]
    BlockNotInvariant { generator: usize },

    #[error("invalid block system: {0}")]
    InvalidBlockSystem(String),

    #[error("permutation group is not transitive")]
    NotTransitive,

    #[error("generator {generator} of the first group is not a member of the second")]
    NotContained { generator: usize },

    #[error("{what} of size {size} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("Cayley graph is disconnected")]
    Disconnected,

    #[error("group order {0} is even")]
    EvenOrder(usize),

    #[error("group order {0} is not odd and square-free")]
    NotOddSquareFree(usize),

    #[error("graph is a CCA graph; nothing to decompose")]
    GraphIsCca,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("cannot parse group descriptor {0:?}")]
    UnknownGroup(String),

    #[error("cannot resolve element {0:?}")]
    UnknownElement(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
