//! Exact constructions of tilings. Every generator validates its output and
//! returns an error rather than an invalid patch.

pub mod convex;
pub mod pair;
pub mod recursive;
pub mod two_scale;

use thiserror::Error;

use crate::tiling::{validate_patch, TilingPatch, ValidationReport};

pub use convex::{circle_polygon, gen_convex_triangulation, ConvexStrategy};
pub use pair::{gen_reflected_pair, ReflectionKind};
pub use recursive::{gen_recursive_split, RecursiveSplitSpec};
pub use two_scale::{gen_two_scale_periodic, is_big_tile, TwoScaleSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("polygon is not strictly convex and counterclockwise")]
    NotConvex,
    #[error("generated patch failed validation ({} violations)", .0.violations.len())]
    Invalid(Box<ValidationReport>),
}

/// Validates `p`, filling in the derived region when none was given.
pub(crate) fn certify(mut p: TilingPatch) -> Result<TilingPatch, GeneratorError> {
    let report = validate_patch(&p);
    if !report.ok {
        return Err(GeneratorError::Invalid(Box::new(report)));
    }
    if p.region.is_none() {
        p.region = report.derived_region;
    }
    Ok(p)
}
