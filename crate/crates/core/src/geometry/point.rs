use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(crate::rational::int(x), crate::rational::int(y))
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, o: &Point) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Point) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dist_sq(&self, o: &Point) -> Rational {
        let d = self.sub(o);
        d.dot(&d)
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        let half = crate::rational::ratio(1, 2);
        self.add(o).scale(&half)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// `(q - p) x (r - p)`, exact.
pub fn cross3(p: &Point, q: &Point, r: &Point) -> Rational {
    let a = q.sub(p);
    let b = r.sub(p);
    a.cross(&b)
}

pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let c = cross3(p, q, r);
    if c.is_zero() {
        Orientation::Collinear
    } else if c.is_positive() {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

/// True iff `p` lies strictly between the (distinct) endpoints `a` and `b`.
pub fn point_on_segment_interior(a: &Point, b: &Point, p: &Point) -> bool {
    if !cross3(a, b, p).is_zero() {
        return false;
    }
    let ap = p.sub(a);
    let ab = b.sub(a);
    let t = ap.dot(&ab);
    t.is_positive() && t < ab.dot(&ab)
}

/// Closed-segment membership.
pub fn point_on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    p == a || p == b || point_on_segment_interior(a, b, p)
}

/// True iff the closed segments `ab` and `cd` share a point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    let straddles = |x: Orientation, y: Orientation| {
        matches!((x, y), (Orientation::Ccw, Orientation::Cw) | (Orientation::Cw, Orientation::Ccw))
    };
    if straddles(o1, o2) && straddles(o3, o4) {
        return true;
    }
    point_on_segment(a, b, c) || point_on_segment(a, b, d) || point_on_segment(c, d, a) || point_on_segment(c, d, b)
}

/// Squared distance from `p` to the closed segment `ab`.
pub fn segment_dist_sq(a: &Point, b: &Point, p: &Point) -> Rational {
    let ab = b.sub(a);
    let ap = p.sub(a);
    let len = ab.dot(&ab);
    let t = ap.dot(&ab);
    if !t.is_positive() {
        return p.dist_sq(a);
    }
    if t >= len {
        return p.dist_sq(b);
    }
    // |ap|^2 - (ap.ab)^2/|ab|^2
    ap.dot(&ap) - &t * &t / len
}

/// Mirror image of `p` across the line through `a` and `b`.
pub fn reflect_across_line(a: &Point, b: &Point, p: &Point) -> Point {
    let d = b.sub(a);
    let t = p.sub(a).dot(&d) / d.dot(&d);
    let foot = a.add(&d.scale(&t));
    foot.scale(&crate::rational::int(2)).sub(p)
}

/// Point reflection through the midpoint of `ab`.
pub fn reflect_through_midpoint(a: &Point, b: &Point, p: &Point) -> Point {
    a.add(b).sub(p)
}

/// Mirror image of `p` across the perpendicular bisector of `ab`.
pub fn reflect_across_bisector(a: &Point, b: &Point, p: &Point) -> Point {
    let d = b.sub(a);
    let m = a.midpoint(b);
    let t = p.sub(&m).dot(&d) / d.dot(&d);
    p.sub(&d.scale(&(t * crate::rational::int(2))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Ccw);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Cw);
    }

    #[test]
    fn segment_interior_examples() {
        assert!(point_on_segment_interior(&p(0, 0), &p(2, 0), &p(1, 0)));
        assert!(!point_on_segment_interior(&p(0, 0), &p(2, 0), &p(2, 0)));
        assert!(!point_on_segment_interior(&p(0, 0), &p(2, 0), &p(1, 1)));
        assert!(!point_on_segment_interior(&p(0, 0), &p(2, 0), &p(3, 0)));
    }

    #[test]
    fn segment_distance() {
        assert_eq!(segment_dist_sq(&p(0, 0), &p(4, 0), &p(2, 3)), int(9));
        assert_eq!(segment_dist_sq(&p(0, 0), &p(4, 0), &p(5, 1)), int(2));
        assert_eq!(segment_dist_sq(&p(0, 0), &p(2, 2), &p(0, 2)), int(2));
    }

    #[test]
    fn segment_intersection() {
        assert!(segments_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(segments_intersect(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 5)));
        assert!(segments_intersect(&p(0, 0), &p(4, 0), &p(1, 0), &p(2, 0)));
        assert!(!segments_intersect(&p(0, 0), &p(2, 0), &p(3, 0), &p(4, 0)));
        assert!(!segments_intersect(&p(0, 0), &p(2, 2), &p(0, 1), &p(1, 2)));
    }

    #[test]
    fn reflections() {
        let (x, y, z) = (p(0, 0), p(4, 0), p(1, 3));
        assert_eq!(reflect_across_line(&x, &y, &z), p(1, -3));
        assert_eq!(reflect_through_midpoint(&x, &y, &z), p(3, -3));
        assert_eq!(reflect_across_bisector(&x, &y, &z), p(3, 3));
        // slanted line y = x
        let r = reflect_across_line(&p(0, 0), &p(1, 1), &Point::new(int(2), ratio(1, 2)));
        assert_eq!(r, Point::new(ratio(1, 2), int(2)));
    }

    proptest::proptest! {
        #[test]
        fn orientation_antisymmetric(c in proptest::collection::vec(-50i64..50, 6)) {
            let (a, b, d) = (p(c[0], c[1]), p(c[2], c[3]), p(c[4], c[5]));
            let flip = |o| match o {
                Orientation::Ccw => Orientation::Cw,
                Orientation::Cw => Orientation::Ccw,
                Orientation::Collinear => Orientation::Collinear,
            };
            let o = orientation(&a, &b, &d);
            proptest::prop_assert_eq!(orientation(&b, &a, &d), flip(o));
            proptest::prop_assert_eq!(orientation(&a, &d, &b), flip(o));
            proptest::prop_assert_eq!(orientation(&d, &b, &a), flip(o));
        }
    }
}
