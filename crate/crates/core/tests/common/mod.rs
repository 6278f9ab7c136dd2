//! Brute-force oracles shared by the integration tests. They avoid the
//! incidence graph entirely and work from raw tile coordinates.
#![allow(dead_code)]

use std::collections::BTreeSet;

use tiling_core::geometry::{point_on_segment, Point, Triangle};
use tiling_core::rational::ratio;
use tiling_core::tiling::TilingPatch;

fn unordered(a: &Point, b: &Point) -> (Point, Point) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// Pairs of tiles with an identical full side, by comparing every side of
/// every tile against every other.
pub fn brute_shared_pairs(p: &TilingPatch) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            for s in 0..3 {
                for r in 0..3 {
                    let (a, b) = p.tiles[i].side(s);
                    let (c, d) = p.tiles[j].side(r);
                    if unordered(a, b) == unordered(c, d) {
                        out.insert((i, j));
                    }
                }
            }
        }
    }
    out
}

pub fn distinct_vertices(p: &TilingPatch) -> Vec<Point> {
    let set: BTreeSet<Point> = p.tiles.iter().flat_map(|t| t.vertices().iter().cloned()).collect();
    set.into_iter().collect()
}

/// Atomic edges as unordered endpoint pairs: each side cut at every vertex
/// found on it by a linear scan.
pub fn brute_atomic_edges(p: &TilingPatch) -> BTreeSet<(Point, Point)> {
    let verts = distinct_vertices(p);
    let mut out = BTreeSet::new();
    for t in &p.tiles {
        for s in 0..3 {
            let (a, b) = t.side(s);
            let mut on: Vec<&Point> = verts.iter().filter(|v| point_on_segment(a, b, v)).collect();
            let d = b.sub(a);
            on.sort_by_key(|v| v.sub(a).dot(&d));
            for w in on.windows(2) {
                out.insert(unordered(w[0], w[1]));
            }
        }
    }
    out
}

/// Vertices strictly inside at least one side.
pub fn brute_subdividing(p: &TilingPatch) -> usize {
    distinct_vertices(p)
        .iter()
        .filter(|v| {
            p.tiles.iter().any(|t| {
                (0..3).any(|s| {
                    let (a, b) = t.side(s);
                    v != &a && v != &b && point_on_segment(a, b, v)
                })
            })
        })
        .count()
}

pub fn tri(c: [i64; 6]) -> Triangle {
    let p = Point::from_ints;
    Triangle::new(p(c[0], c[1]), p(c[2], c[3]), p(c[4], c[5])).unwrap()
}

pub fn rational_tri(c: [(i64, i64); 6]) -> Option<Triangle> {
    let q = |i: usize| Point::new(ratio(c[2 * i].0, c[2 * i].1), ratio(c[2 * i + 1].0, c[2 * i + 1].1));
    Triangle::new(q(0), q(1), q(2)).ok()
}

/// sqrt of a nonnegative f64-free rational to `digits` decimal places,
/// by integer square root on a scaled numerator; an oracle independent of
/// the interval code.
pub fn decimal_sqrt_scaled(num: u128, den: u128, digits: u32) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let scale = BigUint::from(10u32).pow(2 * digits);
    (BigUint::from(num) * scale / BigUint::from(den)).sqrt()
}

/// Fixed-point reals `v / 10^FP_DIGITS` on BigInt, for numeric oracles that
/// need far more than f64 precision.
pub const FP_DIGITS: u32 = 80;

pub fn fp_scale() -> num_bigint::BigInt {
    num_bigint::BigInt::from(10).pow(FP_DIGITS)
}

pub fn fp(r: &tiling_core::rational::Rational) -> num_bigint::BigInt {
    use num_integer::Integer;
    (r.numer() * fp_scale()).div_floor(r.denom())
}

fn fp_mul(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    a * b / fp_scale()
}

fn fp_div(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    a * fp_scale() / b
}

pub fn fp_sqrt(a: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_traits::Signed;
    assert!(!a.is_negative(), "fixed-point sqrt of a negative value");
    (a * fp_scale()).sqrt()
}

/// Apexes with the area and perimeter of `xyz`, as the intersections of the
/// ellipse with foci `x`, `y` through `z` and the two lines parallel to `xy`
/// at the height of `z`. Computed in fixed point in the frame of `xy`.
pub fn ellipse_apexes(x: &Point, y: &Point, z: &Point) -> Vec<(num_bigint::BigInt, num_bigint::BigInt)> {
    let d = y.sub(x);
    let len = fp_sqrt(&fp(&d.dot(&d)));
    let ex = fp_div(&fp(&d.x), &len);
    let ey = fp_div(&fp(&d.y), &len);
    let h = fp_div(&fp(&d.cross(&z.sub(x))), &len);
    let s = fp_sqrt(&fp(&z.dist_sq(x))) + fp_sqrt(&fp(&z.dist_sq(y)));
    let a = &s / 2;
    let c = &len / 2;
    let b2 = fp_mul(&a, &a) - fp_mul(&c, &c);
    let ratio = fp_scale() - fp_div(&fp_mul(&h, &h), &b2);
    let u = fp_mul(&a, &fp_sqrt(&ratio.max(num_bigint::BigInt::from(0))));
    let mid = x.midpoint(y);
    let (mx, my) = (fp(&mid.x), fp(&mid.y));
    let mut out = Vec::new();
    for su in [1i32, -1] {
        for sh in [1i32, -1] {
            let (uu, hh) = (&u * su, &h * sh);
            out.push((&mx + fp_mul(&uu, &ex) - fp_mul(&hh, &ey), &my + fp_mul(&uu, &ey) + fp_mul(&hh, &ex)));
        }
    }
    out
}

/// Random nondegenerate triangle with small-denominator rational corners.
pub fn random_rational_triangle(rng: &mut impl rand::Rng) -> Triangle {
    loop {
        let mut q = || ratio(rng.gen_range(-200i64..=200), rng.gen_range(1i64..=17));
        if let Ok(t) = Triangle::new(Point::new(q(), q()), Point::new(q(), q()), Point::new(q(), q())) {
            return t;
        }
    }
}

fn pythagorean_triples(limit: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for m in 2..limit {
        for n in 1..m {
            if (m - n) % 2 == 1 && num_integer::gcd(m, n) == 1 {
                let (a, b, c) = (m * m - n * n, 2 * m * n, m * m + n * n);
                out.push((a, b, c));
                out.push((b, a, c));
            }
        }
    }
    out
}

/// Triangles with rational sides, scaled to perimeter exactly 1: two right
/// triangles with a common leg `q` glued along it (acute or obtuse
/// placement), then scaled and translated.
pub fn unit_perimeter_corpus() -> Vec<Triangle> {
    use tiling_core::rational::Rational;
    let triples = pythagorean_triples(7);
    let mut out = Vec::new();
    for (i, &(p1, q1, r1)) in triples.iter().enumerate() {
        for &(p2, q2, r2) in &triples[i..] {
            // bring both to the common leg lcm(q1, q2)
            let q = num_integer::lcm(q1, q2);
            let (k1, k2) = (q / q1, q / q2);
            let (p1, r1, p2, r2) = (p1 * k1, r1 * k1, p2 * k2, r2 * k2);
            let mut shapes = vec![(-p1, p2, r1 + r2 + p1 + p2)];
            if p1 != p2 {
                shapes.push((p1.min(p2), p1.max(p2), r1 + r2 + (p1 - p2).abs()));
            }
            for (u, v, per) in shapes {
                let s = Rational::new(1.into(), per.into());
                let shift = ratio(out.len() as i64 % 7, 3);
                let pt = |x: i64, y: i64| {
                    Point::new(Rational::from_integer(x.into()) * &s + &shift, Rational::from_integer(y.into()) * &s)
                };
                out.push(Triangle::new(pt(u, 0), pt(v, 0), pt(0, q)).unwrap());
            }
        }
    }
    out
}

/// `(v_bd, v_int, v*_int)` from raw coordinates: boundary vertices are those
/// on the region polygon.
pub fn brute_vertex_classes(p: &TilingPatch) -> (usize, usize, usize) {
    let region = p.region.as_ref().unwrap();
    let n = region.len();
    let verts = distinct_vertices(p);
    let on_bd = |v: &Point| (0..n).any(|i| point_on_segment(&region[i], &region[(i + 1) % n], v));
    let v_bd = verts.iter().filter(|v| on_bd(v)).count();
    let v_int = verts.len() - v_bd;
    let interior_sub = verts
        .iter()
        .filter(|v| !on_bd(v))
        .filter(|v| {
            p.tiles.iter().any(|t| {
                (0..3).any(|s| {
                    let (a, b) = t.side(s);
                    v != &a && v != &b && point_on_segment(a, b, v)
                })
            })
        })
        .count();
    (v_bd, v_int, interior_sub)
}
