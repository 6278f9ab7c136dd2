//! Cutting a simply connected sub-patch out of a larger tiling: select the
//! tiles meeting an open disk, fill the holes, collect the tiles touching
//! the result from outside, and audit the counting identities on it.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::geometry::{length_sum_compare, LengthExpr, Point};
use crate::incidence::{build_incidence, IncidenceError, IncidenceGraph};
use crate::rational::{int, ratio, Rational};
use crate::report::{Check, Report, Status};
use crate::stretch::{decompose_stretches, epsilon2, shared_side_pairs, StretchClass};
use crate::tiling::validate::on_polygon_boundary;
use crate::tiling::{validate_patch, TilingPatch, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("ambient patch is not a valid tiling")]
    InvalidAmbient(Box<ValidationReport>),
    #[error("selection is empty")]
    EmptySelection,
    #[error("selected tiles do not form a connected union")]
    Disconnected,
    #[error("filled selection is not a valid simply connected patch")]
    NotSimple(Box<ValidationReport>),
    #[error("unknown tile {0}")]
    UnknownTile(usize),
}

/// Tiles whose closure comes strictly closer than `sqrt(r_sq)` to `center`.
pub fn restrict_to_disk(ambient: &TilingPatch, center: &Point, r_sq: &Rational) -> Vec<usize> {
    (0..ambient.len()).filter(|&i| ambient.tiles[i].dist_sq(center) < *r_sq).collect()
}

fn ambient_graph(ambient: &TilingPatch) -> Result<IncidenceGraph, ExtractError> {
    build_incidence(ambient).map_err(|IncidenceError::InvalidPatch(r)| ExtractError::InvalidAmbient(Box::new(r)))
}

/// Components of `members` under the adjacency `next`.
fn components(members: &BTreeSet<usize>, next: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &s in members {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(t) = queue.pop_front() {
            for n in next(t) {
                if members.contains(&n) && seen.insert(n) {
                    comp.push(n);
                    queue.push_back(n);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Tiles that share at least one graph vertex with `tile`.
fn touching(g: &IncidenceGraph, by_vertex: &[Vec<usize>], tile: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g.tile_vertices(tile).iter().flat_map(|&v| by_vertex[v].iter().copied()).collect();
    // vertices lying inside this tile's sides
    for s in 0..3 {
        for &e in g.side_edges(crate::incidence::SideRef::new(tile, s)) {
            let ed = &g.edges()[e];
            out.extend(by_vertex[ed.a].iter().copied());
            out.extend(by_vertex[ed.b].iter().copied());
        }
    }
    out.sort_unstable();
    out.dedup();
    out.retain(|&t| t != tile);
    out
}

fn check_ids(ambient: &TilingPatch, ids: &[usize]) -> Result<(), ExtractError> {
    match ids.iter().find(|&&i| i >= ambient.len()) {
        Some(&i) => Err(ExtractError::UnknownTile(i)),
        None => Ok(()),
    }
}

/// Adds every ambient tile enclosed by the selection. Returns the filled
/// tile ids in ambient order.
///
/// A hole of the selection that reached the ambient boundary would connect
/// to the outside of the ambient region, which is connected because the
/// ambient is validated as simply connected; so every hole is made of
/// ambient tiles.
pub fn fill_holes(ambient: &TilingPatch, selected: &[usize]) -> Result<Vec<usize>, ExtractError> {
    check_ids(ambient, selected)?;
    if selected.is_empty() {
        return Err(ExtractError::EmptySelection);
    }
    let g = ambient_graph(ambient)?;
    let by_vertex = g.vertex_tiles();
    let sel: BTreeSet<usize> = selected.iter().copied().collect();
    if components(&sel, |t| touching(&g, &by_vertex, t)).len() != 1 {
        return Err(ExtractError::Disconnected);
    }
    let mut on_outer = vec![false; g.t()];
    for e in g.boundary_edges() {
        for t in g.edges()[e].tiles() {
            on_outer[t] = true;
        }
    }
    let rest: BTreeSet<usize> = (0..g.t()).filter(|t| !sel.contains(t)).collect();
    let mut filled = sel.clone();
    for comp in components(&rest, |t| g.edge_neighbors(t)) {
        if comp.iter().all(|&t| !on_outer[t]) {
            filled.extend(comp);
        }
    }
    Ok(filled.into_iter().collect())
}

/// Ambient tiles outside `inner` whose closure meets the union of `inner`.
pub fn boundary_ring(ambient: &TilingPatch, inner: &[usize]) -> Result<Vec<usize>, ExtractError> {
    check_ids(ambient, inner)?;
    let g = ambient_graph(ambient)?;
    Ok(ring_in(&g, inner))
}

fn ring_in(g: &IncidenceGraph, inner: &[usize]) -> Vec<usize> {
    let by_vertex = g.vertex_tiles();
    let set: BTreeSet<usize> = inner.iter().copied().collect();
    let mut ring = BTreeSet::new();
    for &t in inner {
        for n in touching(g, &by_vertex, t) {
            if !set.contains(&n) {
                ring.insert(n);
            }
        }
    }
    ring.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionResult {
    pub patch: TilingPatch,
    /// Ambient ids of the tiles of `patch`, in order.
    pub tiles: Vec<usize>,
    pub ring: Vec<usize>,
    pub e_full: usize,
    pub e_part: usize,
    /// No boundary edge of `patch` lies on the ambient boundary, so the
    /// ambient continues past every boundary point of `patch`.
    pub coverage_certificate: bool,
}

impl ExtractionResult {
    pub fn t(&self) -> usize {
        self.tiles.len()
    }

    pub fn t_ring(&self) -> usize {
        self.ring.len()
    }
}

/// Builds the filled patch and its ring from selected ambient tile ids.
pub fn extract(ambient: &TilingPatch, selected: &[usize]) -> Result<ExtractionResult, ExtractError> {
    let tiles = fill_holes(ambient, selected)?;
    let ag = ambient_graph(ambient)?;
    let ring = ring_in(&ag, &tiles);
    let mut patch = ambient.select(&tiles);
    let report = validate_patch(&patch);
    if !report.ok {
        return Err(ExtractError::NotSimple(Box::new(report)));
    }
    patch.region = report.derived_region;
    let g = build_incidence(&patch).expect("validated above");
    let outer = crate::stretch::region_polygon(&ag).expect("ambient has one boundary cycle");
    let coverage_certificate = g.boundary_edges().all(|e| {
        let ed = &g.edges()[e];
        !on_polygon_boundary(&outer, &g.vertices()[ed.a], &g.vertices()[ed.b])
    });
    Ok(ExtractionResult { e_full: g.e_full(), e_part: g.e_part(), patch, tiles, ring, coverage_certificate })
}

pub fn extract_disk(ambient: &TilingPatch, center: &Point, r_sq: &Rational) -> Result<ExtractionResult, ExtractError> {
    extract(ambient, &restrict_to_disk(ambient, center, r_sq))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AsymptoticParams {
    pub unit_perimeter: bool,
}

/// Counting identities and structural bounds on an extracted patch.
pub fn asymptotic_audit(x: &ExtractionResult, params: AsymptoticParams) -> Report {
    let p = &x.patch;
    let g = build_incidence(p).expect("extraction results are valid");
    let st = decompose_stretches(&g);
    let sigma = st.iter().filter(|s| s.class == StretchClass::Tight).count() as i64;
    let loose: i64 = st.iter().filter(|s| s.class != StretchClass::Tight).map(|s| s.size as i64).sum();
    let (t, e_full, e_part) = (x.t() as i64, g.e_full() as i64, g.e_part() as i64);
    let v_star = g.v_star() as i64;
    let min_area = p.tiles.iter().map(|t| t.area()).min().unwrap();
    let min_side_sq = p.tiles.iter().map(|t| t.sorted_squared_sides()[0].clone()).min().unwrap();
    let min_side = LengthExpr::sqrt(&min_side_sq);
    let eps2 = epsilon2(p);
    let shared = shared_side_pairs(&g).len();

    let mut r = Report::new();
    r.push(Check::info("t", t));
    r.push(Check::info("t_ring", x.t_ring()));
    r.push(Check::info("e_full", e_full));
    r.push(Check::info("e_part", e_part));
    r.push(Check::info("sigma_tight", sigma));
    r.push(Check::info("loose_total_size", loose));
    r.push(Check::info("v_star", v_star));
    r.push(Check::info("min_area", crate::rational::format_rational(&min_area)));
    r.push(Check::info("min_side", min_side.approx_decimal(12)));
    r.push(Check::info("epsilon2", eps2.approx_decimal(12)));
    r.push(Check::info("coverage_certificate", x.coverage_certificate));
    if x.t_ring() > 0 {
        r.push(Check::info("ratio_t_over_ring", crate::rational::format_decimal(&ratio(t, x.t_ring() as i64), 6)));
    }

    if shared > 0 {
        r.push(Check::na("side_partition", "shared sides present"));
        r.push(Check::na("subdividing_vertex_bound", "shared sides present"));
    } else {
        r.push(Check::identity("side_partition", 3 * t - e_full, 3 * sigma + loose));
        r.push(Check::new(
            "subdividing_vertex_bound",
            format!("{} {}", 2 * v_star, 2 * sigma + loose),
            Status::from_bool(2 * v_star >= 2 * sigma + loose),
        ));
    }

    let bd_len = LengthExpr::sum(&g.boundary_edges().map(|e| g.edge_length(e)).collect::<Vec<_>>());
    let full_total = min_side.scale_int(e_full);
    r.push(Check::new(
        "full_edge_bound",
        format!("{} {}", full_total.approx_decimal(12), bd_len.approx_decimal(12)),
        Status::from_bool(length_sum_compare(&full_total, &bd_len) != Ordering::Greater),
    ));
    if x.coverage_certificate {
        r.push(Check::bound("partial_edge_bound", e_part, 3 * x.t_ring() as i64));
    } else {
        r.push(Check::na("partial_edge_bound", "patch boundary meets the ambient boundary"));
    }

    if params.unit_perimeter {
        let one = LengthExpr::from_int(1);
        let unit = p.tiles.iter().all(|t| length_sum_compare(&t.perimeter(), &one) == Ordering::Equal);
        r.push(Check::new("unit_perimeter", unit, Status::from_bool(unit)));
        // area <= sqrt(3)/36  <=>  area^2 <= 1/432
        let iso = p.tiles.iter().all(|t| t.area() * t.area() <= ratio(1, 432));
        r.push(Check::new("area_isoperimetric", iso, Status::from_bool(iso)));
        // min side >= 4 * min area, squared since both are nonnegative
        let four_eps = int(4) * &min_area;
        let side_ok = min_side_sq >= &four_eps * &four_eps;
        r.push(Check::new(
            "min_side_vs_area",
            format!("{} {}", min_side.approx_decimal(12), crate::rational::format_decimal(&four_eps, 12)),
            Status::from_bool(side_ok),
        ));
    } else {
        for n in ["unit_perimeter", "area_isoperimetric", "min_side_vs_area"] {
            r.push(Check::na(n, "unit-perimeter mode off"));
        }
    }
    r
}
