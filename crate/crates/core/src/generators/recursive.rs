use num_traits::One;

use super::{certify, GeneratorError};
use crate::geometry::{Point, Triangle};
use crate::rational::{format_rational, Rational};
use crate::tiling::TilingPatch;

/// A triangle wrapped `depth` times in a ring of three triangles, each ring
/// stretching the previous level's vertices by the factor `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveSplitSpec {
    pub base: Triangle,
    pub t: Rational,
    pub depth: usize,
}

/// Vertices of every level, level 0 being the (CCW) base.
pub fn levels(spec: &RecursiveSplitSpec) -> Vec<[Point; 3]> {
    let base = spec.base.to_ccw();
    let mut out = vec![base.vertices().clone()];
    for _ in 0..spec.depth {
        let v = out.last().unwrap();
        let next: [Point; 3] = std::array::from_fn(|i| {
            let a = &v[i];
            let b = &v[(i + 1) % 3];
            b.add(&a.sub(b).scale(&spec.t))
        });
        out.push(next);
    }
    out
}

pub fn gen_recursive_split(spec: &RecursiveSplitSpec) -> Result<TilingPatch, GeneratorError> {
    if spec.t <= Rational::one() {
        return Err(GeneratorError::Spec("t must exceed 1".into()));
    }
    let lv = levels(spec);
    let mut tiles = vec![spec.base.to_ccw()];
    for k in 0..spec.depth {
        let (inner, outer) = (&lv[k], &lv[k + 1]);
        for i in 0..3 {
            let t = Triangle::new(outer[i].clone(), outer[(i + 1) % 3].clone(), inner[(i + 1) % 3].clone())
                .map_err(|_| GeneratorError::Spec(format!("level {} degenerates", k + 1)))?;
            tiles.push(t.to_ccw());
        }
    }
    let base_text: Vec<String> =
        spec.base.vertices().iter().flat_map(|p| [format_rational(&p.x), format_rational(&p.y)]).collect();
    let patch = TilingPatch::new(tiles)
        .with_region(lv[spec.depth].to_vec())
        .with_meta("generator", "recursive")
        .with_meta("base", base_text.join(","))
        .with_meta("t", format_rational(&spec.t))
        .with_meta("depth", spec.depth);
    certify(patch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn unit() -> Triangle {
        let p = Point::from_ints;
        Triangle::new(p(0, 0), p(1, 0), p(0, 1)).unwrap()
    }

    #[test]
    fn depth_one_matches_hand_construction() {
        let p = gen_recursive_split(&RecursiveSplitSpec { base: unit(), t: int(2), depth: 1 }).unwrap();
        let q = Point::from_ints;
        let want = [
            [q(0, 0), q(1, 0), q(0, 1)],
            [q(-1, 0), q(2, -1), q(1, 0)],
            [q(2, -1), q(0, 2), q(0, 1)],
            [q(0, 2), q(-1, 0), q(0, 0)],
        ];
        for (t, w) in p.tiles.iter().zip(&want) {
            assert_eq!(t.vertices(), w);
        }
        assert_eq!(p.total_area(), ratio(7, 2));
        assert_eq!(p.meta("t"), Some("2"));
    }

    #[test]
    fn tile_count() {
        for depth in 0..6 {
            let p = gen_recursive_split(&RecursiveSplitSpec { base: unit(), t: ratio(3, 2), depth }).unwrap();
            assert_eq!(p.len(), 3 * depth + 1);
        }
    }

    #[test]
    fn clockwise_base_is_normalized() {
        let q = Point::from_ints;
        let cw = Triangle::new(q(0, 0), q(0, 1), q(1, 0)).unwrap();
        assert!(gen_recursive_split(&RecursiveSplitSpec { base: cw, t: int(3), depth: 2 }).is_ok());
    }

    #[test]
    fn t_must_exceed_one() {
        let r = gen_recursive_split(&RecursiveSplitSpec { base: unit(), t: int(1), depth: 1 });
        assert!(matches!(r, Err(GeneratorError::Spec(_))));
    }
}
