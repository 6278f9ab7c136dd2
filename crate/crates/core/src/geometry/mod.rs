//! Exact geometric primitives.

pub mod interval;
pub mod length;
pub mod point;
pub mod symmetry;
pub mod triangle;

pub use interval::Interval;
pub use length::{length_sum_compare, length_sum_compare_with_cap, LengthError, LengthExpr};
pub use point::{orientation, point_on_segment, point_on_segment_interior, segments_intersect, Orientation, Point};
pub use symmetry::{equal_invariant_apexes, reflection_classify, Reflection};
pub use triangle::{
    congruence_check, triangle_margin, triangle_metrics, DegenerateTriangle, Triangle, TriangleMetrics,
};
