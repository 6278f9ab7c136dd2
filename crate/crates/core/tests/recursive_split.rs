mod common;

use std::time::Instant;

use common::{brute_atomic_edges, brute_shared_pairs, brute_subdividing, distinct_vertices, tri};
use tiling_core::generators::{gen_recursive_split, RecursiveSplitSpec};
use tiling_core::incidence::{build_incidence, graph_audit};
use tiling_core::rational::{int, ratio, Rational};
use tiling_core::stretch::{
    decompose_stretches, eq1_audit, label_sides, no_shared_side_conditions, shared_side_pairs, stretch_accounting,
    w_audit, StretchClass,
};
use tiling_core::tiling::{polygon_signed_area, validate_patch};

fn spec(t: Rational, depth: usize) -> RecursiveSplitSpec {
    RecursiveSplitSpec { base: tri([0, 0, 1, 0, 0, 1]), t, depth }
}

fn ts() -> [Rational; 3] {
    [ratio(3, 2), int(2), int(3)]
}

#[test]
fn depth_one_counts() {
    let p = gen_recursive_split(&spec(int(2), 1)).unwrap();
    let g = build_incidence(&p).unwrap();
    assert_eq!((g.t(), g.v(), g.v_bd(), g.v_int(), g.v_star()), (4, 6, 3, 3, 3));
    // Euler with f = t + 1: e = 6 + 5 - 2
    assert_eq!(g.e(), 9);
    assert_eq!(brute_atomic_edges(&p).len(), 9);
}

#[test]
fn structure_up_to_depth_ten() {
    for t in ts() {
        for n in 0..=10 {
            let p = gen_recursive_split(&spec(t.clone(), n)).unwrap();
            assert_eq!(p.len(), 3 * n + 1);
            let region = p.region.as_ref().unwrap();
            assert_eq!(p.total_area(), polygon_signed_area(region));
            assert!(validate_patch(&p).ok);

            let g = build_incidence(&p).unwrap();
            assert!(graph_audit(&g).all_pass());
            assert_eq!(g.e(), brute_atomic_edges(&p).len());
            assert_eq!(g.v(), distinct_vertices(&p).len());
            assert_eq!(g.v_star(), brute_subdividing(&p));

            assert!(shared_side_pairs(&g).is_empty());
            assert!(brute_shared_pairs(&p).is_empty());
            let st = decompose_stretches(&g);
            assert_eq!(st.len(), 3 * n);
            assert!(st.iter().all(|s| s.class == StretchClass::Tight && s.size == 3));
            assert!(no_shared_side_conditions(&g, &st).all());
            assert!(eq1_audit(&g).all_pass());
            assert!(stretch_accounting(&g, &p, &st).all_pass());
            assert_eq!(g.e_full(), 3);

            let labels = label_sides(&g, &st);
            let w = w_audit(&g, &p, &st, &labels, false);
            assert!(w.report.all_pass(), "{}", w.report.render());
            assert_eq!((w.sigma_tight, w.loose_total_size), (3 * n, 0));
        }
    }
}

#[test]
fn six_hundred_tile_audit_is_fast() {
    let start = Instant::now();
    let p = gen_recursive_split(&spec(int(2), 200)).unwrap();
    let g = build_incidence(&p).unwrap();
    assert!(graph_audit(&g).all_pass());
    let st = decompose_stretches(&g);
    let labels = label_sides(&g, &st);
    let w = w_audit(&g, &p, &st, &labels, false);
    assert!(w.report.all_pass());
    assert_eq!(p.len(), 601);
    assert_eq!(w.sigma_tight, 600);
    let elapsed = start.elapsed();
    eprintln!("601-tile generate+audit: {elapsed:?}");
}
