//! The symmetries of a segment `xy` that preserve both the area and the
//! perimeter of a triangle `xyz` standing on it.
//!
//! An apex with the same perimeter lies on the ellipse with foci `x`, `y`
//! through `z`; the same area puts it at the same distance from the line
//! `xy`. The ellipse meets the two parallel lines in at most four points,
//! which are `z` and its images under the three reflections below.

use std::collections::BTreeSet;

use super::point::{
    orientation, reflect_across_bisector, reflect_across_line, reflect_through_midpoint, Orientation, Point,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reflection {
    Identity,
    LineXy,
    MidpointXy,
    PerpBisectorXy,
    None,
}

impl Reflection {
    pub fn name(self) -> &'static str {
        match self {
            Reflection::Identity => "IDENTITY",
            Reflection::LineXy => "LINE_XY",
            Reflection::MidpointXy => "MIDPOINT_XY",
            Reflection::PerpBisectorXy => "PERP_BISECTOR_XY",
            Reflection::None => "NONE",
        }
    }
}

/// Which symmetry of `xy` maps `z` to `zp`. Identity wins ties, so an
/// isosceles apex reflected across the bisector classifies as identity.
pub fn reflection_classify(x: &Point, y: &Point, z: &Point, zp: &Point) -> Reflection {
    debug_assert!(x != y);
    if z == zp {
        Reflection::Identity
    } else if &reflect_across_line(x, y, z) == zp {
        Reflection::LineXy
    } else if &reflect_through_midpoint(x, y, z) == zp {
        Reflection::MidpointXy
    } else if &reflect_across_bisector(x, y, z) == zp {
        Reflection::PerpBisectorXy
    } else {
        Reflection::None
    }
}

/// All apexes `z'` for which `xyz'` has the area and perimeter of `xyz`.
pub fn equal_invariant_apexes(x: &Point, y: &Point, z: &Point) -> BTreeSet<Point> {
    debug_assert!(orientation(x, y, z) != Orientation::Collinear);
    [z.clone(), reflect_across_line(x, y, z), reflect_through_midpoint(x, y, z), reflect_across_bisector(x, y, z)]
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn classify_examples() {
        let (x, y, z) = (p(0, 0), p(4, 0), p(1, 3));
        assert_eq!(reflection_classify(&x, &y, &z, &p(1, -3)), Reflection::LineXy);
        assert_eq!(reflection_classify(&x, &y, &z, &p(3, 3)), Reflection::PerpBisectorXy);
        assert_eq!(reflection_classify(&x, &y, &z, &p(3, -3)), Reflection::MidpointXy);
        assert_eq!(reflection_classify(&x, &y, &z, &z), Reflection::Identity);
        assert_eq!(reflection_classify(&x, &y, &z, &p(2, 3)), Reflection::None);
    }

    #[test]
    fn apex_sets() {
        let s = equal_invariant_apexes(&p(0, 0), &p(4, 0), &p(1, 3));
        let want: BTreeSet<Point> = [p(1, 3), p(1, -3), p(3, 3), p(3, -3)].into_iter().collect();
        assert_eq!(s, want);
        assert_eq!(equal_invariant_apexes(&p(0, 0), &p(4, 0), &p(2, 3)).len(), 2);
    }
}
