use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{certify, GeneratorError};
use crate::geometry::point::cross3;
use crate::geometry::{Point, Triangle};
use crate::rational::{ratio, Rational};
use crate::tiling::TilingPatch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConvexStrategy {
    /// All diagonals from the first vertex.
    Fan,
    /// Recursive splitting along random diagonals.
    RandomSplit,
    /// A random split, then random interior-point and side-point
    /// subdivisions, which add interior and subdividing vertices.
    Refined,
}

impl ConvexStrategy {
    pub fn name(self) -> &'static str {
        match self {
            ConvexStrategy::Fan => "fan",
            ConvexStrategy::RandomSplit => "random-split",
            ConvexStrategy::Refined => "refined",
        }
    }
}

fn strictly_convex_ccw(v: &[Point]) -> bool {
    let n = v.len();
    n >= 3 && (0..n).all(|i| cross3(&v[i], &v[(i + 1) % n], &v[(i + 2) % n]).is_positive())
}

fn tri(a: &Point, b: &Point, c: &Point) -> Triangle {
    Triangle::new(a.clone(), b.clone(), c.clone()).expect("convex position keeps triangles nondegenerate")
}

fn random_split(v: &[Point], idx: Vec<usize>, rng: &mut ChaCha8Rng, out: &mut Vec<Triangle>) {
    if idx.len() == 3 {
        out.push(tri(&v[idx[0]], &v[idx[1]], &v[idx[2]]));
        return;
    }
    let n = idx.len();
    // a diagonal (i, j) with j - i in 2..=n-2
    let i = rng.gen_range(0..n);
    let gap = rng.gen_range(2..=n - 2);
    let j = (i + gap) % n;
    let walk = |from: usize, to: usize| {
        let mut part = vec![idx[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % n;
            part.push(idx[k]);
        }
        part
    };
    let a = walk(i, j);
    let b = walk(j, i);
    random_split(v, a, rng, out);
    random_split(v, b, rng, out);
}

fn weight(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(1i64..=9).into())
}

fn refine(tiles: &mut Vec<Triangle>, steps: usize, rng: &mut ChaCha8Rng) {
    for _ in 0..steps {
        let k = rng.gen_range(0..tiles.len());
        let [a, b, c] = tiles[k].vertices().clone();
        if rng.gen_bool(0.5) {
            let (wa, wb, wc) = (weight(rng), weight(rng), weight(rng));
            let s = &wa + &wb + &wc;
            let p = a.scale(&(wa / &s)).add(&b.scale(&(wb / &s))).add(&c.scale(&(wc / s)));
            tiles[k] = tri(&a, &b, &p);
            tiles.push(tri(&b, &c, &p));
            tiles.push(tri(&c, &a, &p));
        } else {
            let side = rng.gen_range(0..3);
            let (p0, p1, opp) = match side {
                0 => (a, b, c),
                1 => (b, c, a),
                _ => (c, a, b),
            };
            let num = rng.gen_range(1i64..8);
            let p = p0.add(&p1.sub(&p0).scale(&ratio(num, 8)));
            tiles[k] = tri(&p0, &p, &opp);
            tiles.push(tri(&p, &p1, &opp));
        }
    }
}

/// Triangulates a strictly convex CCW polygon. Same inputs give the same
/// patch.
pub fn gen_convex_triangulation(
    vertices: &[Point],
    strategy: ConvexStrategy,
    seed: u64,
) -> Result<TilingPatch, GeneratorError> {
    if !strictly_convex_ccw(vertices) {
        return Err(GeneratorError::NotConvex);
    }
    let n = vertices.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tiles = Vec::with_capacity(n - 2);
    match strategy {
        ConvexStrategy::Fan => {
            for i in 1..n - 1 {
                tiles.push(tri(&vertices[0], &vertices[i], &vertices[i + 1]));
            }
        }
        ConvexStrategy::RandomSplit => random_split(vertices, (0..n).collect(), &mut rng, &mut tiles),
        ConvexStrategy::Refined => {
            random_split(vertices, (0..n).collect(), &mut rng, &mut tiles);
            refine(&mut tiles, n, &mut rng);
        }
    }
    let patch = TilingPatch::new(tiles)
        .with_region(vertices.to_vec())
        .with_meta("generator", "convex")
        .with_meta("strategy", strategy.name())
        .with_meta("k", n)
        .with_meta("seed", seed);
    certify(patch)
}

/// `k` rational points on the unit circle in CCW order, from random
/// half-angle tangents `u` via `((1-u^2)/(1+u^2), 2u/(1+u^2))`.
pub fn circle_polygon(k: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut us: Vec<Rational> = Vec::with_capacity(k);
    while us.len() < k {
        let u = ratio(rng.gen_range(-60i64..=60), rng.gen_range(1i64..=12));
        if !us.contains(&u) {
            us.push(u);
        }
    }
    us.sort();
    us.iter()
        .map(|u| {
            let u2 = u * u;
            let d = Rational::one() + &u2;
            Point::new((Rational::one() - &u2) / &d, (u * Rational::from_integer(2.into())) / d)
        })
        .collect()
}
