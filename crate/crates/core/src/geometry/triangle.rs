use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::length::LengthExpr;
use super::point::{cross3, orientation, Orientation, Point};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("degenerate triangle {0} {1} {2}")]
pub struct DegenerateTriangle(pub Point, pub Point, pub Point);

/// Nondegenerate triangle. Vertex order is kept as given; use
/// [`Triangle::is_ccw`] when orientation matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    v: [Point; 3],
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self, DegenerateTriangle> {
        if orientation(&a, &b, &c) == Orientation::Collinear {
            return Err(DegenerateTriangle(a, b, c));
        }
        Ok(Triangle { v: [a, b, c] })
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.v
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.v[i % 3]
    }

    /// Side `i` runs from vertex `i` to vertex `i + 1`.
    pub fn side(&self, i: usize) -> (&Point, &Point) {
        (&self.v[i % 3], &self.v[(i + 1) % 3])
    }

    /// The vertex not on side `i`.
    pub fn opposite(&self, i: usize) -> &Point {
        &self.v[(i + 2) % 3]
    }

    pub fn is_ccw(&self) -> bool {
        cross3(&self.v[0], &self.v[1], &self.v[2]).is_positive()
    }

    pub fn to_ccw(&self) -> Triangle {
        if self.is_ccw() {
            self.clone()
        } else {
            Triangle { v: [self.v[0].clone(), self.v[2].clone(), self.v[1].clone()] }
        }
    }

    pub fn area(&self) -> Rational {
        cross3(&self.v[0], &self.v[1], &self.v[2]).abs() * ratio(1, 2)
    }

    pub fn squared_side(&self, i: usize) -> Rational {
        let (a, b) = self.side(i);
        a.dist_sq(b)
    }

    pub fn squared_sides(&self) -> [Rational; 3] {
        [self.squared_side(0), self.squared_side(1), self.squared_side(2)]
    }

    /// Squared side lengths in ascending order.
    pub fn sorted_squared_sides(&self) -> [Rational; 3] {
        let mut s = self.squared_sides();
        s.sort();
        s
    }

    pub fn side_length(&self, i: usize) -> LengthExpr {
        LengthExpr::sqrt(&self.squared_side(i))
    }

    pub fn perimeter(&self) -> LengthExpr {
        let s = self.squared_sides();
        LengthExpr::from_terms(s.into_iter().map(|r| (Rational::from_integer(1.into()), r)))
    }

    pub fn metrics(&self) -> TriangleMetrics {
        TriangleMetrics { area: self.area(), squared_sides: self.sorted_squared_sides(), perimeter: self.perimeter() }
    }

    /// Closed containment test.
    pub fn contains(&self, p: &Point) -> bool {
        let t = self.to_ccw();
        (0..3).all(|i| {
            let (a, b) = t.side(i);
            !cross3(a, b, p).is_negative()
        })
    }

    /// Squared distance from `p` to the closed triangle.
    pub fn dist_sq(&self, p: &Point) -> Rational {
        if self.contains(p) {
            return Rational::zero();
        }
        (0..3)
            .map(|i| {
                let (a, b) = self.side(i);
                super::point::segment_dist_sq(a, b, p)
            })
            .min()
            .unwrap()
    }

    /// True when the open interiors intersect. Two convex polygons have
    /// disjoint interiors iff some edge line weakly separates them.
    pub fn interiors_overlap(&self, other: &Triangle) -> bool {
        let a = self.to_ccw();
        let b = other.to_ccw();
        let separated_by = |s: &Triangle, o: &Triangle| {
            (0..3).any(|i| {
                let (p, q) = s.side(i);
                o.v.iter().all(|r| !cross3(p, q, r).is_positive())
            })
        };
        !(separated_by(&a, &b) || separated_by(&b, &a))
    }

    pub fn map(&self, f: impl Fn(&Point) -> Point) -> Result<Triangle, DegenerateTriangle> {
        Triangle::new(f(&self.v[0]), f(&self.v[1]), f(&self.v[2]))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.v[0], self.v[1], self.v[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMetrics {
    pub area: Rational,
    /// Ascending.
    pub squared_sides: [Rational; 3],
    pub perimeter: LengthExpr,
}

pub fn triangle_metrics(t: &Triangle) -> TriangleMetrics {
    t.metrics()
}

/// Congruence via equality of the squared-side multisets.
pub fn congruence_check(a: &Triangle, b: &Triangle) -> bool {
    a.sorted_squared_sides() == b.sorted_squared_sides()
}

/// Margin of the triangle inequality: sum of the two shorter sides minus
/// the longest.
pub fn triangle_margin(t: &Triangle) -> LengthExpr {
    let [a, b, c] = t.sorted_squared_sides();
    let one = Rational::from_integer(1.into());
    LengthExpr::from_terms([(one.clone(), a), (one.clone(), b), (-one, c)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn tri(c: [i64; 6]) -> Triangle {
        Triangle::new(Point::from_ints(c[0], c[1]), Point::from_ints(c[2], c[3]), Point::from_ints(c[4], c[5])).unwrap()
    }

    /// Shoelace over the vertex list, written independently of `cross3`.
    fn shoelace(t: &Triangle) -> Rational {
        let v = t.vertices();
        let mut s = Rational::zero();
        for i in 0..3 {
            let (p, q) = (&v[i], &v[(i + 1) % 3]);
            s += &p.x * &q.y - &q.x * &p.y;
        }
        s.abs() / int(2)
    }

    #[test]
    fn metrics_examples() {
        let t = tri([0, 0, 4, 0, 1, 3]);
        let m = t.metrics();
        assert_eq!(m.area, int(6));
        assert_eq!(m.area, shoelace(&t));
        assert_eq!(m.squared_sides, [int(10), int(16), int(18)]);
        let u = tri([0, 0, 1, 0, 0, 1]);
        assert_eq!(u.area(), ratio(1, 2));
        assert_eq!(u.sorted_squared_sides(), [int(1), int(1), int(2)]);
        assert_eq!(u.perimeter().to_string(), "2 + sqrt(2)");
    }

    #[test]
    fn degenerate_rejected() {
        let r = Triangle::new(Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(2, 0));
        assert!(r.is_err());
    }

    #[test]
    fn congruence_examples() {
        let t = tri([0, 0, 4, 0, 1, 3]);
        assert!(congruence_check(&t, &tri([5, 7, 9, 7, 6, 10])));
        assert!(congruence_check(&t, &tri([0, 0, 4, 0, 3, 3])));
        assert!(!congruence_check(&t, &tri([0, 0, 4, 0, 2, 3])));
    }

    #[test]
    fn margin_examples() {
        assert_eq!(triangle_margin(&tri([0, 0, 4, 0, 1, 3])).to_string(), "4 - 3*sqrt(2) + sqrt(10)");
        assert_eq!(triangle_margin(&tri([0, 0, 2, 0, 1, 1])).to_string(), "-2 + 2*sqrt(2)");
    }

    #[test]
    fn overlap_predicate() {
        let a = tri([0, 0, 2, 0, 0, 2]);
        assert!(a.interiors_overlap(&tri([1, 0, 3, 0, 1, 2])));
        assert!(!a.interiors_overlap(&tri([2, 0, 2, 2, 0, 2])));
        assert!(!a.interiors_overlap(&tri([0, 2, 2, 0, 3, 3])));
        // vertex touching only
        assert!(!a.interiors_overlap(&tri([2, 0, 4, 0, 3, 1])));
        assert!(a.interiors_overlap(&a.clone()));
    }

    proptest::proptest! {
        #[test]
        fn area_matches_shoelace(c in proptest::collection::vec(-40i64..40, 6)) {
            let p = |i: usize| Point::from_ints(c[2 * i], c[2 * i + 1]);
            if let Ok(t) = Triangle::new(p(0), p(1), p(2)) {
                proptest::prop_assert!(t.area().is_positive());
                proptest::prop_assert_eq!(t.area(), shoelace(&t));
            }
        }
    }
}
