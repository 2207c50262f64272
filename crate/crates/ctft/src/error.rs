//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size parameter is below the smallest supported value.
    #[error("size {n} is not supported here, need at least {min}")]
    SizeTooSmall { n: usize, min: usize },

    /// A size parameter is above the documented cap of an operation.
    #[error("size {n} exceeds the supported cap {max} for {what}")]
    SizeTooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },

    /// A chord label or generator index is out of range.
    #[error("index {index} is out of range, expected at most {max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// A vertex pair does not form a diagonal of the n-gon.
    #[error("vertices {a} and {b} do not span a diagonal of the {n}-gon")]
    InvalidDiagonal { n: usize, a: usize, b: usize },

    /// A chord set fails to be a triangulation.
    #[error("chord set is not a triangulation: {0}")]
    NotTriangulation(String),

    /// A triangulation has a triangle whose three sides are all chords.
    #[error("triangulation contains an internal triangle")]
    NotTriangleFree,

    /// A chord labeling violates the proper coloring conditions.
    #[error("labeling is not a proper coloring: {0}")]
    NotProperlyColored(String),

    /// A sequence is not a permutation of 0..n.
    #[error("sequence is not a permutation of 0..{0}")]
    NotPermutation(usize),

    /// A permutation has a prefix that is not a cyclic interval.
    #[error("permutation is not an arc permutation")]
    NotArcPermutation,

    /// A subset series does not describe a class of arc permutations.
    #[error("subset series is not a valid class: {0}")]
    InvalidClass(String),

    /// An entry of a code vector is out of range.
    #[error("invalid code: {0}")]
    InvalidCode(String),

    /// Two chambers belong to different arrangements.
    #[error("chambers belong to different arrangements")]
    ArrangementMismatch,

    /// A chamber was not found among the vertices of a chamber graph.
    #[error("chamber is not a vertex of this chamber graph")]
    ChamberNotInGraph,

    /// A code was not found among the vertices of a flip graph.
    #[error("code is not a vertex of this flip graph")]
    CodeNotInGraph,

    /// Two vertices are not joined by an edge.
    #[error("the two given vertices are not adjacent")]
    NotAnEdge,

    /// No path exists between two vertices.
    #[error("no path between the given vertices")]
    NoPath,

    /// Geodesic enumeration supports antipodal endpoint pairs only.
    #[error("geodesic enumeration requires the reversal of the source as destination")]
    NotAntipodal,

    /// A tableau shape does not match the requested polygon size.
    #[error("shape with {got} rows of side {p} does not match n = {n}")]
    ShapeMismatch { p: usize, got: usize, n: usize },

    /// A diagonal sequence is not the flip record of a geodesic.
    #[error("diagonal sequence is not a valid geodesic record: {0}")]
    InvalidGeodesicRecord(String),

    /// A tableau filling breaks the row or column rules.
    #[error("filling is not standard: {0}")]
    NotStandard(String),

    /// A cross-structure consistency check found a counterexample.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
