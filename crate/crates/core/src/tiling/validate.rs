//! Exact tiling validation and region derivation.
//!
//! Coverage is decided combinatorially. Summing the CCW boundaries of all
//! tiles as 1-chains cancels every atomic edge with one tile on each side,
//! leaving the boundary edges. So the number of tiles covering a generic
//! point equals the winding number of the boundary chain around it. If every
//! edge has at most one tile per side and the boundary chain is a single
//! simple CCW cycle, no point is covered twice and the union is exactly the
//! cycle's interior. The quadratic pairwise overlap scan only runs when that
//! argument is unavailable, to name the offending pairs.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::patch::{polygon_signed_area, TilingPatch};
use crate::geometry::point::{cross3, segments_intersect};
use crate::geometry::{point_on_segment, Point, Triangle};
use crate::incidence::IncidenceGraph;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    Empty,
    Overlap,
    UnmatchedEdge,
    AreaMismatch,
    BoundaryNotSimple,
    Disconnected,
    Hole,
    RegionInvalid,
    RegionMismatch,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::Empty => "EMPTY",
            ViolationKind::Overlap => "OVERLAP",
            ViolationKind::UnmatchedEdge => "UNMATCHED_EDGE",
            ViolationKind::AreaMismatch => "AREA_MISMATCH",
            ViolationKind::BoundaryNotSimple => "BOUNDARY_NOT_SIMPLE",
            ViolationKind::Disconnected => "DISCONNECTED",
            ViolationKind::Hole => "HOLE",
            ViolationKind::RegionInvalid => "REGION_INVALID",
            ViolationKind::RegionMismatch => "REGION_MISMATCH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub tiles: Vec<usize>,
    pub vertex: Option<Point>,
    pub description: String,
}

impl Violation {
    fn new(kind: ViolationKind, tiles: Vec<usize>, description: impl Into<String>) -> Self {
        Violation { kind, tiles, vertex: None, description: description.into() }
    }

    fn at(mut self, p: &Point) -> Self {
        self.vertex = Some(p.clone());
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if !self.tiles.is_empty() {
            let ids: Vec<String> = self.tiles.iter().map(|t| t.to_string()).collect();
            write!(f, " tiles {}", ids.join(","))?;
        }
        if let Some(v) = &self.vertex {
            write!(f, " at {v}")?;
        }
        write!(f, ": {}", self.description)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// CCW boundary of the union with collinear vertices elided, when the
    /// boundary is a single simple cycle.
    pub derived_region: Option<Vec<Point>>,
}

impl ValidationReport {
    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&format!("violation = {v}\n"));
        }
        if let Some(r) = &self.derived_region {
            let mut line = format!("region = {}", r.len());
            for p in r {
                line.push_str(&format!(" {} {}", format_rational(&p.x), format_rational(&p.y)));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!("violations = {}\n", self.violations.len()));
        out.push_str(&format!("valid = {}\n", if self.ok { "pass" } else { "fail" }));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("empty patch")]
    Empty,
    #[error("boundary is not a simple cycle near {0}")]
    NotSimple(Point),
    #[error("union is disconnected")]
    Disconnected,
    #[error("union has a hole")]
    Hole,
}

/// Drops vertices where the polygon goes straight on, then rotates so the
/// least point comes first.
pub fn elide_collinear(poly: &[Point]) -> Vec<Point> {
    let n = poly.len();
    let mut out: Vec<Point> = (0..n)
        .filter(|&i| !cross3(&poly[(i + n - 1) % n], &poly[i], &poly[(i + 1) % n]).is_zero())
        .map(|i| poly[i].clone())
        .collect();
    if let Some(k) = out.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).map(|(k, _)| k) {
        out.rotate_left(k);
    }
    out
}

/// First pair of polygon edges that meet anywhere other than the vertex
/// shared by neighbours; returns vertex indices of the edge starts.
pub fn polygon_self_intersection(poly: &[Point]) -> Option<(usize, usize)> {
    let n = poly.len();
    let seg = |i: usize| (&poly[i], &poly[(i + 1) % n]);
    let min_x = |i: usize| {
        let (a, b) = seg(i);
        a.x.clone().min(b.x.clone())
    };
    let max_x = |i: usize| {
        let (a, b) = seg(i);
        a.x.clone().max(b.x.clone())
    };
    let mut order: Vec<usize> = (0..n).collect();
    let lo: Vec<Rational> = (0..n).map(min_x).collect();
    let hi: Vec<Rational> = (0..n).map(max_x).collect();
    order.sort_by(|&i, &j| lo[i].cmp(&lo[j]));
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if lo[j] > hi[i] {
                break;
            }
            let (a, b) = seg(i);
            let (c, d) = seg(j);
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if adjacent {
                // consecutive edges share one endpoint; anything more is a fold
                let (p, q, r) = if (i + 1) % n == j { (a, b, d) } else { (c, d, b) };
                if n == 2 || (cross3(p, q, r).is_zero() && r.sub(q).dot(&q.sub(p)).is_negative()) {
                    return Some((i.min(j), i.max(j)));
                }
                continue;
            }
            if segments_intersect(a, b, c, d) {
                return Some((i.min(j), i.max(j)));
            }
        }
    }
    None
}

fn region_problem(region: &[Point]) -> Option<String> {
    if region.len() < 3 {
        return Some("fewer than 3 vertices".into());
    }
    let n = region.len();
    if (0..n).any(|i| region[i] == region[(i + 1) % n]) {
        return Some("repeated consecutive vertex".into());
    }
    if polygon_self_intersection(region).is_some() {
        return Some("not simple".into());
    }
    if !polygon_signed_area(region).is_positive() {
        return Some("not counterclockwise".into());
    }
    None
}

/// Pairs of tiles with intersecting interiors, via an x-sorted sweep.
pub fn overlapping_pairs(tiles: &[Triangle]) -> Vec<(usize, usize)> {
    let bounds: Vec<(Rational, Rational)> = tiles
        .iter()
        .map(|t| {
            let xs = t.vertices().iter().map(|p| p.x.clone());
            (xs.clone().min().unwrap(), xs.max().unwrap())
        })
        .collect();
    let mut order: Vec<usize> = (0..tiles.len()).collect();
    order.sort_by(|&i, &j| bounds[i].0.cmp(&bounds[j].0).then(i.cmp(&j)));
    let mut out = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if bounds[j].0 >= bounds[i].1 {
                break;
            }
            if tiles[i].interiors_overlap(&tiles[j]) {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn on_polygon_boundary(poly: &[Point], a: &Point, b: &Point) -> bool {
    let n = poly.len();
    (0..n).any(|i| {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        point_on_segment(p, q, a) && point_on_segment(p, q, b)
    })
}

pub fn validate_patch(p: &TilingPatch) -> ValidationReport {
    validate_with_graph(p).0
}

pub(crate) fn validate_with_graph(p: &TilingPatch) -> (ValidationReport, IncidenceGraph) {
    let g = IncidenceGraph::build_unchecked(p);
    let mut violations = Vec::new();
    if p.is_empty() {
        violations.push(Violation::new(ViolationKind::Empty, vec![], "no tiles"));
        return (ValidationReport { ok: false, violations, derived_region: None }, g);
    }
    let pts = g.vertices();

    let mut overlaps: BTreeSet<(usize, usize)> = BTreeSet::new();
    for e in g.edges() {
        for side in [&e.left, &e.right] {
            for (i, a) in side.iter().enumerate() {
                for b in &side[i + 1..] {
                    overlaps.insert((a.tile.min(b.tile), a.tile.max(b.tile)));
                }
            }
        }
    }

    let mut proven_disjoint = overlaps.is_empty();
    let mut derived = None;
    match g.boundary_cycles() {
        Err(v) => {
            proven_disjoint = false;
            violations.push(
                Violation::new(ViolationKind::BoundaryNotSimple, vec![], "boundary edges do not pair up").at(&pts[v]),
            );
        }
        Ok(cycles) if cycles.len() == 1 => {
            let poly: Vec<Point> = cycles[0].iter().map(|&v| pts[v].clone()).collect();
            if let Some((i, _)) = polygon_self_intersection(&poly) {
                proven_disjoint = false;
                violations.push(
                    Violation::new(ViolationKind::BoundaryNotSimple, vec![], "boundary crosses itself").at(&poly[i]),
                );
            } else if !polygon_signed_area(&poly).is_positive() {
                proven_disjoint = false;
                violations.push(Violation::new(ViolationKind::BoundaryNotSimple, vec![], "boundary is clockwise"));
            } else {
                derived = Some(elide_collinear(&poly));
            }
        }
        Ok(cycles) => {
            proven_disjoint = false;
            let holes = cycles
                .iter()
                .filter(|c| {
                    let poly: Vec<Point> = c.iter().map(|&v| pts[v].clone()).collect();
                    polygon_signed_area(&poly).is_negative()
                })
                .count();
            if holes > 0 {
                violations.push(Violation::new(
                    ViolationKind::Hole,
                    vec![],
                    format!("{} boundary cycles, {holes} clockwise", cycles.len()),
                ));
            } else {
                violations.push(Violation::new(
                    ViolationKind::Disconnected,
                    vec![],
                    format!("{} boundary cycles", cycles.len()),
                ));
            }
        }
    }

    if !proven_disjoint {
        overlaps.extend(overlapping_pairs(&p.tiles));
    }
    for &(a, b) in &overlaps {
        violations.push(Violation::new(ViolationKind::Overlap, vec![a, b], "interiors intersect"));
    }

    let tile_area = p.total_area();
    match &p.region {
        Some(region) => {
            if let Some(why) = region_problem(region) {
                violations.push(Violation::new(ViolationKind::RegionInvalid, vec![], why));
            } else {
                for e in g.boundary_edges() {
                    let ed = &g.edges()[e];
                    if !on_polygon_boundary(region, &pts[ed.a], &pts[ed.b]) {
                        let tiles: Vec<usize> = ed.tiles().collect();
                        violations.push(
                            Violation::new(
                                ViolationKind::UnmatchedEdge,
                                tiles,
                                format!("edge to {} has one tile and is not on the region boundary", pts[ed.b]),
                            )
                            .at(&pts[ed.a]),
                        );
                    }
                }
                let region_area = polygon_signed_area(region);
                if region_area != tile_area {
                    violations.push(Violation::new(
                        ViolationKind::AreaMismatch,
                        vec![],
                        format!("tiles {} region {}", format_rational(&tile_area), format_rational(&region_area)),
                    ));
                }
                if let Some(d) = &derived {
                    if *d != elide_collinear(region) {
                        violations.push(Violation::new(
                            ViolationKind::RegionMismatch,
                            vec![],
                            "union boundary differs from the region",
                        ));
                    }
                }
            }
        }
        None => {
            if let Some(d) = &derived {
                let area = polygon_signed_area(d);
                if area != tile_area {
                    violations.push(Violation::new(
                        ViolationKind::AreaMismatch,
                        vec![],
                        format!("tiles {} boundary {}", format_rational(&tile_area), format_rational(&area)),
                    ));
                }
            }
        }
    }

    violations.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.tiles.cmp(&b.tiles)));
    let ok = violations.is_empty();
    (ValidationReport { ok, violations, derived_region: derived }, g)
}

/// CCW boundary polygon of the union, vertices only at direction changes.
pub fn derive_region(p: &TilingPatch) -> Result<Vec<Point>, RegionError> {
    if p.is_empty() {
        return Err(RegionError::Empty);
    }
    let g = IncidenceGraph::build_unchecked(p);
    let pts = g.vertices();
    let cycles = g.boundary_cycles().map_err(|v| RegionError::NotSimple(pts[v].clone()))?;
    let polys: Vec<Vec<Point>> = cycles.iter().map(|c| c.iter().map(|&v| pts[v].clone()).collect()).collect();
    if polys.iter().any(|q| polygon_signed_area(q).is_negative()) {
        return Err(RegionError::Hole);
    }
    if polys.len() > 1 {
        return Err(RegionError::Disconnected);
    }
    if let Some((i, _)) = polygon_self_intersection(&polys[0]) {
        return Err(RegionError::NotSimple(polys[0][i].clone()));
    }
    Ok(elide_collinear(&polys[0]))
}
