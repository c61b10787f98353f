//! Midpoint sets on unit spheres of finite-dimensional normed spaces.
//!
//! An *M-set* in a Minkowski space is a set of points, each of norm
//! greater than one, all of whose pairwise midpoints have norm exactly
//! one. This crate constructs M-sets for concrete norms (Euclidean,
//! sup, polytopal, strictly convex interpolants), certifies candidate
//! sets exactly (rational arithmetic) or numerically (tolerance
//! budgets), computes the exact maximum M-set size for 3-dimensional
//! polytopal norms from the face structure of the unit ball, and runs
//! seeded numerical searches for M-sets under arbitrary norm oracles.
//!
//! The crate is `no_std`-compatible (requires `alloc`); enable the
//! `libm` feature instead of `std` for freestanding builds.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("midpoint-core needs either the `std` or the `libm` feature");

pub mod bounds;
pub mod construct;
pub mod error;
pub mod hexagon;
pub mod linalg;
pub mod lp;
mod math;
pub mod norms;
pub mod polygon;
pub mod polytope;
pub mod rng;
pub mod scalar;
pub mod search;
pub mod vector;
pub mod verify;

pub use bounds::{bounds_report, m_exact_3d, Bound, BoundSource, BoundsOptions, BoundsReport, MValue};
pub use construct::{
    infinite_family, mset_2d, mset_any_3d, mset_facet_centroids, mset_from_face, mset_l2_simplex,
    mset_linf, mset_moment_curve, ArcOracle, MSetCandidate, MomentCurveInstance, Provenance,
};
pub use error::Error;
pub use hexagon::{hexagon_in_curve, CurveOracle, HexagonInscription, NormSectionCurve};
pub use norms::{
    embed_sup, gauge, sphere_status, strictly_convex_through, support_functional, LpExponent,
    NormOracle, SphereStatus, SpherePosition, SupEmbedding,
};
pub use polygon::{homothet, polygon_intersect, PlanePolygon, PolygonIntersection};
pub use polytope::{caratheodory_anchor, convex_hull, is_vertex, two_faces, Face, Polytope};
pub use scalar::{approx_eq, Mode, Scalar, ToleranceBudget};
pub use search::{l2_gram_refute, numeric_search, GramRefutation, SearchConfig, SearchResult};
pub use vector::Vector;
pub use verify::{
    certify_mset, classify_2an, flat_spot_check, separation_check, structure_report,
    MSetCertificate, PairKind, PolytopeClass, StructureReport, Verdict,
};
