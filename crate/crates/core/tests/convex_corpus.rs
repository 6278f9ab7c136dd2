mod common;

use common::{brute_shared_pairs, brute_subdividing, brute_vertex_classes};
use tiling_core::generators::{circle_polygon, gen_convex_triangulation, ConvexStrategy};
use tiling_core::incidence::{build_incidence, graph_audit};
use tiling_core::stretch::{decompose_stretches, eq1_audit, shared_side_pairs, stretch_accounting};
use tiling_core::tiling::TilingPatch;

const STRATEGIES: [ConvexStrategy; 3] = [ConvexStrategy::Fan, ConvexStrategy::RandomSplit, ConvexStrategy::Refined];

fn corpus() -> impl Iterator<Item = TilingPatch> {
    (4..=8).flat_map(|k| {
        STRATEGIES.into_iter().flat_map(move |s| {
            (0..20u64).map(move |seed| {
                let poly = circle_polygon(k, seed * 31 + k as u64);
                gen_convex_triangulation(&poly, s, seed).unwrap()
            })
        })
    })
}

#[test]
fn corpus_always_has_shared_sides() {
    let mut count = 0;
    for p in corpus() {
        let g = build_incidence(&p).unwrap();
        let fast: Vec<(usize, usize)> =
            shared_side_pairs(&g).iter().map(|s| (s.a.tile.min(s.b.tile), s.a.tile.max(s.b.tile))).collect();
        let brute = brute_shared_pairs(&p);
        assert!(!brute.is_empty());
        assert_eq!(fast.iter().copied().collect::<std::collections::BTreeSet<_>>(), brute);
        count += 1;
    }
    assert!(count >= 200);
}

#[test]
fn vertex_identity_holds_exactly() {
    for p in corpus() {
        let g = build_incidence(&p).unwrap();
        assert!(graph_audit(&g).all_pass());
        let eq1 = eq1_audit(&g);
        assert!(eq1.all_pass(), "{}", eq1.render());
        let (v_bd, v_int, v_star_int) = brute_vertex_classes(&p);
        assert_eq!((g.v_bd(), g.v_int(), g.v_star_int()), (v_bd, v_int, v_star_int));
        assert_eq!(v_bd + 2 * v_int - v_star_int, p.len() + 2);
        assert_eq!(g.v_star(), brute_subdividing(&p));
    }
}

#[test]
fn accounting_identities_hold() {
    for p in corpus() {
        let g = build_incidence(&p).unwrap();
        let st = decompose_stretches(&g);
        let acc = stretch_accounting(&g, &p, &st);
        assert!(acc.all_pass(), "{}", acc.render());
    }
}
