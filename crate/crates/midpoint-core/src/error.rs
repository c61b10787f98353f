//! Crate-wide error type.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::vector::Vector;

#[derive(Debug, Clone)]
pub enum Error {
    /// Exact and float scalars were mixed in one operation.
    MixedMode,
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    InvalidTolerance(&'static str),
    NonSquareMatrix,
    /// An exact-mode computation was requested where only floats work
    /// (irrational data, or an exact hull above dimension 4).
    ExactUnsupported(&'static str),
    EmptyInput(&'static str),
    /// A relative-interior membership precondition failed; the witness,
    /// when present, is a functional separating the point from the hull.
    NotInRelativeInterior {
        witness: Option<Vector>,
    },
    /// Points were required to be in (symmetric) convex position; the
    /// listed indices are not extreme in the hull.
    NotConvexPosition {
        offenders: Vec<usize>,
    },
    PlaneMismatch,
    HexagonNoConverge {
        best_residual: f64,
    },
    InvalidParameter(String),
    LpFailure(&'static str),
    NotPolytopal,
    FaceNotSimplex,
    /// A classification that a lemma proves impossible actually occurred;
    /// this always indicates a bug in the hull or lattice code.
    LemmaViolation(&'static str),
    PerturbationInfeasible,
    /// A closed-form vertex inequality family failed for a moment-curve
    /// instance; carries the family name, offending indices and value.
    InequalityViolated {
        family: &'static str,
        indices: (usize, usize, usize, usize),
        value: f64,
    },
    /// A construction produced a set that its own certification rejects.
    ConstructionRefuted(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedMode => write!(f, "exact and float scalars cannot be mixed"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InvalidTolerance(msg) => write!(f, "invalid tolerance budget: {msg}"),
            Error::NonSquareMatrix => write!(f, "matrix is not square"),
            Error::ExactUnsupported(msg) => write!(f, "exact arithmetic unsupported here: {msg}"),
            Error::EmptyInput(msg) => write!(f, "empty input: {msg}"),
            Error::NotInRelativeInterior { .. } => {
                write!(f, "point is not in the relative interior of the hull")
            }
            Error::NotConvexPosition { offenders } => {
                write!(f, "points not in convex position (offenders: {offenders:?})")
            }
            Error::PlaneMismatch => write!(f, "polygons do not share a plane"),
            Error::HexagonNoConverge { best_residual } => {
                write!(f, "hexagon inscription did not converge (best residual {best_residual:e})")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::LpFailure(msg) => write!(f, "linear program failed: {msg}"),
            Error::NotPolytopal => write!(f, "norm oracle is not polytopal"),
            Error::FaceNotSimplex => {
                write!(f, "facet is not a simplex; use the facet-centroid construction instead")
            }
            Error::LemmaViolation(msg) => write!(f, "internal error, lemma violated: {msg}"),
            Error::PerturbationInfeasible => {
                write!(f, "no feasible outward perturbation at the minimum step")
            }
            Error::InequalityViolated { family, indices, value } => write!(
                f,
                "vertex inequality family {family} violated at {indices:?} (value {value:e})"
            ),
            Error::ConstructionRefuted(msg) => {
                write!(f, "construction failed its own certification: {msg}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
