//! Workloads shared by the benchmarks.

use tiling_core::generators::{
    circle_polygon, gen_convex_triangulation, gen_recursive_split, gen_two_scale_periodic, ConvexStrategy,
    RecursiveSplitSpec, TwoScaleSpec,
};
use tiling_core::rational::{int, ratio};
use tiling_core::{Point, TilingPatch, Triangle};

pub fn recursive(depth: usize) -> TilingPatch {
    let q = Point::from_ints;
    let base = Triangle::new(q(0, 0), q(1, 0), q(0, 1)).unwrap();
    gen_recursive_split(&RecursiveSplitSpec { base, t: int(2), depth }).unwrap()
}

pub fn two_scale(cells: usize) -> TilingPatch {
    gen_two_scale_periodic(&TwoScaleSpec { b: int(2), h: ratio(433, 250), m: cells, n: cells }).unwrap()
}

pub fn convex(k: usize) -> TilingPatch {
    gen_convex_triangulation(&circle_polygon(k, 1), ConvexStrategy::Refined, 1).unwrap()
}
