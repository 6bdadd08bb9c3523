//! Exact oriented-matroid strata for iterated planar point configurations.
//!
//! The crate builds the nested configurations `A₀ ⊂ A₁ ⊂ ⋯` by repeated line
//! intersection, computes the oriented matroids of the relabeled levels and
//! of their degenerations, and certifies that every level degenerates into
//! one common limit stratum while the cross-ratio of `(α, δ, γ, β)` separates
//! the levels. All arithmetic is exact.

pub mod arrangement;
pub mod certificate;
pub mod construction;
pub mod geometry;
pub mod grassmann;
pub mod label;
pub mod linalg;
pub mod oriented_matroid;
pub mod report;
pub mod svg;

pub use arrangement::{ArrangementError, LabeledArrangement};
pub use geometry::{GeometryError, PlanePoint, Rational, Sign, Vector3};
pub use label::Label;
pub use oriented_matroid::{OmError, OrientedMatroid, SignVector};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
