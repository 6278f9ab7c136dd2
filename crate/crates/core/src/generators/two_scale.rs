use num_traits::Zero;

use super::{certify, GeneratorError};
use crate::geometry::{Point, Triangle};
use crate::rational::{format_rational, ratio, Rational};
use crate::tiling::TilingPatch;

/// Periodic tiling by big isosceles triangles (base `b`, height `h`) and
/// half-scale inverted copies filling the gaps, no two sharing a side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoScaleSpec {
    pub b: Rational,
    pub h: Rational,
    pub m: usize,
    pub n: usize,
}

/// Cell tiles as coordinate fractions `(x/4 of b, y/2 of h)`.
const CELL: [[(i64, i64); 3]; 6] = [
    // big, pointing up
    [(0, 0), (4, 0), (2, 2)],
    [(3, 1), (7, 1), (5, 3)],
    // small, pointing down
    [(4, 0), (5, 1), (3, 1)],
    [(6, 0), (7, 1), (5, 1)],
    [(1, 1), (2, 2), (0, 2)],
    [(3, 1), (4, 2), (2, 2)],
];

/// Number of big tiles in one cell; they come first in every cell.
pub const BIG_PER_CELL: usize = 2;

pub fn gen_two_scale_periodic(spec: &TwoScaleSpec) -> Result<TilingPatch, GeneratorError> {
    if !(spec.b > Rational::zero() && spec.h > Rational::zero()) || spec.m == 0 || spec.n == 0 {
        return Err(GeneratorError::Spec("b, h must be positive and m, n at least 1".into()));
    }
    let qb = &spec.b * ratio(1, 4);
    let hh = &spec.h * ratio(1, 2);
    let mut tiles = Vec::with_capacity(6 * spec.m * spec.n);
    for j in 0..spec.n {
        for i in 0..spec.m {
            let dx = &spec.b * ratio(3 * i as i64, 2);
            let dy = &spec.h * Rational::from_integer((j as i64).into());
            let pt = |(x, y): (i64, i64)| {
                Point::new(&qb * Rational::from_integer(x.into()) + &dx, &hh * Rational::from_integer(y.into()) + &dy)
            };
            for c in CELL {
                tiles.push(Triangle::new(pt(c[0]), pt(c[1]), pt(c[2])).expect("cell tiles are nondegenerate"));
            }
        }
    }
    let patch = TilingPatch::new(tiles)
        .with_meta("generator", "twoscale")
        .with_meta("b", format_rational(&spec.b))
        .with_meta("h", format_rational(&spec.h))
        .with_meta("cells", format!("{}x{}", spec.m, spec.n));
    certify(patch)
}

pub fn is_big_tile(index: usize) -> bool {
    index % CELL.len() < BIG_PER_CELL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::congruence_check;
    use crate::rational::int;

    #[test]
    fn unit_cell_contains_down_triangle() {
        let p = gen_two_scale_periodic(&TwoScaleSpec { b: int(1), h: int(1), m: 1, n: 1 }).unwrap();
        let want = Triangle::new(
            Point::new(ratio(3, 4), ratio(1, 2)),
            Point::new(ratio(5, 4), ratio(1, 2)),
            Point::new(int(1), int(0)),
        )
        .unwrap();
        assert!(p.tiles.iter().any(|t| {
            let mut a = t.vertices().to_vec();
            let mut b = want.vertices().to_vec();
            a.sort();
            b.sort();
            a == b
        }));
    }

    #[test]
    fn small_tiles_are_half_scale() {
        let p = gen_two_scale_periodic(&TwoScaleSpec { b: int(2), h: ratio(433, 250), m: 1, n: 1 }).unwrap();
        let big = &p.tiles[0];
        for small in &p.tiles[2..6] {
            let doubled = small.map(|q| q.scale(&int(2))).unwrap();
            assert!(congruence_check(big, &doubled));
        }
    }

    #[test]
    fn grids_validate() {
        for (m, n) in [(1, 1), (2, 1), (1, 3), (3, 3)] {
            let p = gen_two_scale_periodic(&TwoScaleSpec { b: int(4), h: int(3), m, n }).unwrap();
            assert_eq!(p.len(), 6 * m * n);
            assert!(p.region.is_some());
        }
    }
}
