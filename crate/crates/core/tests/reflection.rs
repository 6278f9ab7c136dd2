mod common;

use common::{ellipse_apexes, fp, fp_scale, random_rational_triangle};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tiling_core::generators::{gen_reflected_pair, ReflectionKind};
use tiling_core::geometry::{
    congruence_check, equal_invariant_apexes, length_sum_compare, reflection_classify, Point, Triangle,
};
use tiling_core::tiling::validate_patch;

const KINDS: [ReflectionKind; 3] = [ReflectionKind::Line, ReflectionKind::Midpoint, ReflectionKind::Bisector];

fn triangles() -> Vec<Triangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..100).map(|_| random_rational_triangle(&mut rng)).collect()
}

fn isosceles_on_side0(t: &Triangle) -> bool {
    let [x, y, z] = t.vertices();
    z.dist_sq(x) == z.dist_sq(y)
}

/// Whether `p` lies within `10^-30` (relative) of one of `cands`.
fn near_any(p: &Point, cands: &[(BigInt, BigInt)]) -> bool {
    let (px, py) = (fp(&p.x), fp(&p.y));
    let tol = |v: &BigInt| (fp_scale() + v.abs()) / BigInt::from(10).pow(30);
    cands.iter().any(|(cx, cy)| (&px - cx).abs() <= tol(&px) && (&py - cy).abs() <= tol(&py))
}

#[test]
fn pairs_are_equal_and_classified() {
    for t in triangles() {
        for kind in KINDS {
            let p = gen_reflected_pair(&t, kind).unwrap();
            let (a, b) = (&p.tiles[0], &p.tiles[1]);
            assert_eq!(a.area(), b.area());
            assert_eq!(length_sum_compare(&a.perimeter(), &b.perimeter()), std::cmp::Ordering::Equal);
            assert!(congruence_check(a, b));
            let [x, y, z] = a.vertices();
            let got = reflection_classify(x, y, z, b.vertex(2));
            if kind == ReflectionKind::Bisector && isosceles_on_side0(&t) {
                assert_eq!(got, tiling_core::geometry::Reflection::Identity);
            } else {
                assert_eq!(got, kind.expected());
            }
            if kind != ReflectionKind::Bisector {
                assert!(validate_patch(&p).ok);
            }
        }
    }
}

#[test]
fn apexes_match_ellipse_oracle() {
    let mut tris = triangles();
    let q = Point::from_ints;
    tris.push(Triangle::new(q(0, 0), q(6, 0), q(3, 5)).unwrap());
    for t in tris {
        let [x, y, z] = t.vertices();
        let apexes = equal_invariant_apexes(x, y, z);
        let want = if isosceles_on_side0(&t) { 2 } else { 4 };
        assert_eq!(apexes.len(), want);
        let oracle = ellipse_apexes(x, y, z);
        for a in &apexes {
            assert!(near_any(a, &oracle), "{a:?}");
            let u = Triangle::new(x.clone(), y.clone(), a.clone()).unwrap();
            assert_eq!(u.area(), t.area());
            assert_eq!(length_sum_compare(&u.perimeter(), &t.perimeter()), std::cmp::Ordering::Equal);
        }
    }
}
