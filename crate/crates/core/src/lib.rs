//! Exact combinatorics of the generalized quadrangle GQ(2,4) and its
//! Veldkamp space.
//!
//! Everything here is integer-exact: finite-field linear algebra over
//! GF(2)/GF(3), point-line incidence structures, geometric hyperplane
//! enumeration, Veldkamp spaces, the bitangent/Steiner-complex machinery,
//! graph certificates, and the automorphism group of GQ(2,4) generated by
//! orthogonal transvections.
//!
//! The central objects:
//!
//! * [`models::build_gq24_quadric`] — GQ(2,4) as the elliptic quadric
//!   Q⁻(5,2) in PG(5,2): 27 points, 45 lines.
//! * [`hyperplanes`] — the 63 geometric hyperplanes (27 perps, 36 doilies),
//!   enumerated both by constraint-propagation search and by hyperplane
//!   sections of the quadric.
//! * [`veldkamp`] — the 651 Veldkamp lines in four types (45/216/270/120)
//!   and the certificate that V(GQ(2,4)) ≅ PG(5,2).
//! * [`steiner`] — an independent reconstruction from E7 positive roots,
//!   the 28 bitangents, and the 2-(28,12,11) design of Steiner complexes.

pub mod autgroup;
pub mod fflinalg;
pub mod graphs;
pub mod hyperplanes;
pub mod incidence;
pub mod models;
pub mod pointset;
pub mod steiner;
pub mod veldkamp;

pub use pointset::PointSet;

/// Errors for the whole crate. Most constructions are infallible by design;
/// these cover contract violations at module boundaries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported field characteristic {0} (only 2 and 3)")]
    UnsupportedCharacteristic(u8),
    #[error("vectors have mixed dimensions or fields")]
    MixedDimensions,
    #[error("dimension {0} out of range for this representation")]
    DimensionOutOfRange(usize),
    #[error("perp of the empty set is undefined")]
    EmptyPerpArgument,
    #[error("points {0} and {1} are collinear; hyperbolic line undefined")]
    CollinearPoints(usize, usize),
    #[error("point index {0} out of range (geometry has {1} points)")]
    PointOutOfRange(usize, usize),
    #[error("hyperplanes belong to different geometries")]
    GeometryMismatch,
    #[error("point set is not a geometric hyperplane: {0}")]
    NotAHyperplane(String),
    #[error("Veldkamp sum of a hyperplane with itself is the zero element")]
    ZeroVeldkampSum,
    #[error("quadric model dictionary missing or inconsistent")]
    MissingDictionary,
    #[error("group closure exceeded the safety bound of {0} elements")]
    ClosureBoundExceeded(usize),
    #[error("permutation does not map lines to lines")]
    NotAnAutomorphism,
    #[error("classification conflict: {0}")]
    ClassificationConflict(String),
    #[error("Steiner complex intersection size {0} (must be 4 or 6)")]
    BadComplexIntersection(usize),
    #[error("triangle condition violated: {0}")]
    TriangleCondition(String),
    #[error("reflection left the weight lattice: {0}")]
    NotAWeight(String),
    #[error("parity rule violated: {0}")]
    ParityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
