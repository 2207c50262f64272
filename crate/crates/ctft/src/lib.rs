//! Combinatorics of colored triangle-free triangulations of a convex polygon.
//!
//! The crate models several tightly linked families of objects and the maps
//! between them:
//!
//! * triangle-free triangulations of the convex n-gon with properly colored
//!   chords, and the label-indexed flip action ([`polygon`]);
//! * their fixed-size vector codes and the generator action on codes
//!   ([`codec`]);
//! * arc permutations, their four-element equivalence classes, and the
//!   matching generator actions ([`arcperm`]);
//! * graphic hyperplane arrangements with chambers as sign vectors, entirely
//!   combinatorial ([`arrangement`]);
//! * the flip graph with its metric, edge orientation, and geodesics between
//!   antipodal vertices ([`flipgraph`]);
//! * standard Young tableaux of truncated shifted staircase shape, which
//!   index those geodesics ([`tableaux`]).
//!
//! Everything is exact: no floating point anywhere, big integers where counts
//! demand them, and exhaustive verification helpers at small sizes.

pub mod arcperm;
pub mod arrangement;
pub mod codec;
pub mod error;
pub mod flipgraph;
pub mod polygon;
pub mod tableaux;

pub use arcperm::{ArcClass, ArcPermutation, ArcVector};
pub use arrangement::{Arrangement, Chamber, ChamberGraph, SimpleGraph};
pub use codec::Code;
pub use error::{Error, Result};
pub use flipgraph::{
    verify_chamber_isomorphism, Direction, EdgeLabelKind, FlipGraph, GeodesicPath, Geodesics,
    IsomorphismCheck,
};
pub use polygon::{ColoredTriangulation, Diagonal, UncoloredTriangulation};
pub use tableaux::{DiagonalPoset, PartitionPoset, ShiftedTableau, TruncShiftedShape};
