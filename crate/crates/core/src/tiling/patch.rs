use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::geometry::{Point, Triangle};
use crate::rational::Rational;

/// A finite set of triangles, optionally with the polygon they are meant to
/// tile. Tile order is the stable tile identifier used in every report.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TilingPatch {
    pub tiles: Vec<Triangle>,
    /// Counterclockwise simple polygon.
    pub region: Option<Vec<Point>>,
    pub metadata: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("singular matrix")]
    Singular,
}

/// Row-major 2x2 rational matrix.
pub type Matrix2 = [[Rational; 2]; 2];

impl TilingPatch {
    pub fn new(tiles: Vec<Triangle>) -> Self {
        TilingPatch { tiles, region: None, metadata: Vec::new() }
    }

    pub fn with_region(mut self, region: Vec<Point>) -> Self {
        self.region = Some(region);
        self
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.push((key.to_string(), value.to_string()));
        self
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn total_area(&self) -> Rational {
        self.tiles.iter().map(Triangle::area).sum()
    }

    /// Sub-patch made of the given tiles, in the given order, without region.
    pub fn select(&self, ids: &[usize]) -> TilingPatch {
        TilingPatch::new(ids.iter().map(|&i| self.tiles[i].clone()).collect())
    }
}

/// Signed shoelace area of a closed polygon (positive when CCW).
pub fn polygon_signed_area(poly: &[Point]) -> Rational {
    let n = poly.len();
    let mut s = Rational::zero();
    for i in 0..n {
        s += poly[i].cross(&poly[(i + 1) % n]);
    }
    s / Rational::from_integer(2.into())
}

/// Maps every point through `p -> m p + v`. When `det(m) < 0` tile vertex
/// order and the region are reversed so orientations are preserved.
pub fn apply_affine(p: &TilingPatch, m: &Matrix2, v: &Point) -> Result<TilingPatch, AffineError> {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return Err(AffineError::Singular);
    }
    let flip = det.is_negative();
    let f = |q: &Point| Point::new(&m[0][0] * &q.x + &m[0][1] * &q.y + &v.x, &m[1][0] * &q.x + &m[1][1] * &q.y + &v.y);
    let tiles = p
        .tiles
        .iter()
        .map(|t| {
            let [a, b, c] = t.vertices();
            let (a, b, c) = (f(a), f(b), f(c));
            let t = if flip { Triangle::new(a, c, b) } else { Triangle::new(a, b, c) };
            t.expect("nonsingular maps keep triangles nondegenerate")
        })
        .collect();
    let region = p.region.as_ref().map(|r| {
        let mut out: Vec<Point> = r.iter().map(f).collect();
        if flip {
            out.reverse();
        }
        out
    });
    Ok(TilingPatch { tiles, region, metadata: p.metadata.clone() })
}

pub fn scale_matrix(k: &Rational) -> Matrix2 {
    [[k.clone(), Rational::zero()], [Rational::zero(), k.clone()]]
}
