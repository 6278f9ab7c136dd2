//! Exact construction, validation and auditing of finite triangle tilings.

// Errors carry the offending exact points, which are large by design.
#![allow(clippy::result_large_err)]

pub mod extract;
pub mod generators;
pub mod geometry;
pub mod incidence;
pub mod rational;
pub mod report;
pub mod stretch;
pub mod tiling;

pub use geometry::{Interval, LengthExpr, Point, Triangle};
pub use incidence::{build_incidence, graph_audit, IncidenceGraph};
pub use rational::Rational;
pub use report::{Check, Report, Status};
pub use tiling::{parse_tiling, serialize_tiling, validate_patch, TilingPatch};
