use super::{certify, GeneratorError};
use crate::geometry::point::{reflect_across_bisector, reflect_across_line, reflect_through_midpoint};
use crate::geometry::{Reflection, Triangle};
use crate::tiling::TilingPatch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReflectionKind {
    Line,
    Midpoint,
    Bisector,
}

impl ReflectionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReflectionKind::Line => "line",
            ReflectionKind::Midpoint => "midpoint",
            ReflectionKind::Bisector => "bisector",
        }
    }

    /// The classifier verdict this construction should produce.
    pub fn expected(self) -> Reflection {
        match self {
            ReflectionKind::Line => Reflection::LineXy,
            ReflectionKind::Midpoint => Reflection::MidpointXy,
            ReflectionKind::Bisector => Reflection::PerpBisectorXy,
        }
    }
}

/// The triangle `xyz` (side 0 of `t` as `xy`) and its mirror `xyz'`.
///
/// Line and midpoint images land across `xy`, giving a validated two-tile
/// tiling of the derived region. The bisector image stays on the same side
/// and overlaps `t`, so that pair comes back without a region and
/// unvalidated; for an isosceles apex it is `t` itself.
pub fn gen_reflected_pair(t: &Triangle, kind: ReflectionKind) -> Result<TilingPatch, GeneratorError> {
    let [x, y, z] = t.vertices();
    let zp = match kind {
        ReflectionKind::Line => reflect_across_line(x, y, z),
        ReflectionKind::Midpoint => reflect_through_midpoint(x, y, z),
        ReflectionKind::Bisector => reflect_across_bisector(x, y, z),
    };
    let second = Triangle::new(x.clone(), y.clone(), zp).expect("reflections keep the apex off xy");
    let patch =
        TilingPatch::new(vec![t.clone(), second]).with_meta("generator", "pair").with_meta("reflection", kind.name());
    match kind {
        ReflectionKind::Bisector => Ok(patch),
        _ => certify(patch),
    }
}
