//! Tiling data model, file format and validation.

pub mod format;
pub mod patch;
pub mod validate;

use num_traits::Signed;

pub use format::{parse_tiling, serialize_tiling, ParseError, MAGIC};
pub use patch::{apply_affine, polygon_signed_area, scale_matrix, AffineError, Matrix2, TilingPatch};
pub use validate::{derive_region, validate_patch, RegionError, ValidationReport, Violation, ViolationKind};

use crate::geometry::Interval;
use crate::rational::Rational;

/// Enclosure of `sqrt(r)` whose width is at most `2^-bits` times its midpoint.
pub fn relative_sqrt(r: &Rational, bits: u32) -> Interval {
    // sqrt(r) >= 2^-(k+1) where k bounds log2(1/r)/2 from above
    let shortfall = r.denom().bits() as i64 - r.numer().abs().bits() as i64;
    let k = (shortfall.max(0) as u32).div_ceil(2) + 1;
    Interval::sqrt_rational(r, bits + k + 1)
}

/// Enclosures of the shortest and longest side length over all tiles.
///
/// # Panics
/// If the patch is empty.
pub fn side_length_range(p: &TilingPatch, precision_bits: u32) -> (Interval, Interval) {
    assert!(!p.is_empty(), "side length range of an empty patch");
    let mut lo = None::<Rational>;
    let mut hi = None::<Rational>;
    for t in &p.tiles {
        let [a, _, c] = t.sorted_squared_sides();
        if lo.as_ref().is_none_or(|l| a < *l) {
            lo = Some(a);
        }
        if hi.as_ref().is_none_or(|h| c > *h) {
            hi = Some(c);
        }
    }
    (relative_sqrt(&lo.unwrap(), precision_bits), relative_sqrt(&hi.unwrap(), precision_bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Point, Triangle};
    use crate::rational::{int, ratio};

    fn unit_right() -> TilingPatch {
        let p = Point::from_ints;
        TilingPatch::new(vec![Triangle::new(p(0, 0), p(1, 0), p(0, 1)).unwrap()])
    }

    #[test]
    fn unit_right_triangle_range() {
        let (lo, hi) = side_length_range(&unit_right(), 80);
        assert!(lo.contains(&int(1)));
        // 1.41421356237 < sqrt(2) < 1.41421356238
        assert!(hi.lo < ratio(141421356238, 100000000000));
        assert!(hi.hi > ratio(141421356237, 100000000000));
    }

    #[test]
    fn relative_width() {
        for r in [ratio(1, 1_000_000_007), ratio(2, 1), ratio(99999, 7), ratio(1, 3)] {
            let iv = relative_sqrt(&r, 70);
            let bound = iv.midpoint() / Rational::from_integer(num_bigint::BigInt::from(1u128 << 70));
            assert!(iv.width() <= bound);
            assert!(&iv.lo * &iv.lo <= r && r <= &iv.hi * &iv.hi);
        }
    }

    #[test]
    fn scaling_scales_range() {
        let m = scale_matrix(&int(3));
        let big = apply_affine(&unit_right(), &m, &Point::from_ints(0, 0)).unwrap();
        let (lo, hi) = side_length_range(&big, 80);
        let (lo1, hi1) = side_length_range(&unit_right(), 80);
        let tol = ratio(1, 1 << 40);
        assert!((lo.midpoint() - lo1.midpoint() * int(3)).abs() < tol);
        assert!((hi.midpoint() - hi1.midpoint() * int(3)).abs() < tol);
    }
}
