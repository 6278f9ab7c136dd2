//! The vertex/atomic-edge graph of a tiling.
//!
//! Vertices are the distinct tile corners. Every tile side is cut at each
//! vertex lying in its relative interior; the pieces are atomic edges. Sides
//! are grouped by supporting line, and each line's vertices are sorted along
//! it, so atomic edges come out of a single sweep per line.
//!
//! Only endpoints of sides on a line are considered as cut points for that
//! line. In a tiling this loses nothing: a vertex inside a side on line `L`
//! has a tile across `L` with a side along `L` ending there. For arbitrary
//! tile sets the graph may be coarser than the true arrangement, which the
//! validator tolerates since its coverage argument works for any common
//! subdivision of the sides.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::geometry::point::cross3;
use crate::geometry::{LengthExpr, Point};
use crate::rational::Rational;
use crate::report::{Check, Report};
use crate::tiling::{TilingPatch, ValidationReport};

/// Side `side` (0..3) of tile `tile`; runs from corner `side` to `side + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SideRef {
    pub tile: usize,
    pub side: usize,
}

impl SideRef {
    pub fn new(tile: usize, side: usize) -> Self {
        SideRef { tile, side }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Internal,
    FullBoundary,
    PartialBoundary,
}

impl EdgeClass {
    pub fn is_boundary(self) -> bool {
        self != EdgeClass::Internal
    }
}

/// Normalized line `a x + b y = c` with `(a, b)` scaled so its first nonzero
/// entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineKey {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl LineKey {
    pub fn through(p: &Point, q: &Point) -> Self {
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        let k = if !a.is_zero() { a.clone() } else { b.clone() };
        LineKey { a: a / &k, b: b / &k, c: c / &k }
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn contains(&self, p: &Point) -> bool {
        &self.a * &p.x + &self.b * &p.y == self.c
    }

    /// Coordinate that increases along the line's direction.
    pub fn param<'a>(&self, p: &'a Point) -> &'a Rational {
        if self.is_vertical() {
            &p.y
        } else {
            &p.x
        }
    }
}

/// Vertices and atomic edges on one supporting line, in line order.
#[derive(Debug, Clone)]
pub struct SupportLine {
    pub key: LineKey,
    pub points: Vec<usize>,
    /// Atomic edge ids ordered along the line.
    pub edges: Vec<usize>,
    pub sides: Vec<SideRef>,
}

/// Segment between consecutive vertices of a line, `a` before `b` in line
/// order. `left`/`right` list the sides covering it from each half-plane.
#[derive(Debug, Clone)]
pub struct AtomicEdge {
    pub a: usize,
    pub b: usize,
    pub line: usize,
    pub left: Vec<SideRef>,
    pub right: Vec<SideRef>,
}

impl AtomicEdge {
    pub fn incidence(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn tiles(&self) -> impl Iterator<Item = usize> + '_ {
        self.left.iter().chain(&self.right).map(|s| s.tile)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("patch is not a valid tiling ({} violations)", .0.violations.len())]
    InvalidPatch(ValidationReport),
}

#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    vertices: Vec<Point>,
    index: HashMap<Point, usize>,
    tile_vertices: Vec<[usize; 3]>,
    lines: Vec<SupportLine>,
    edges: Vec<AtomicEdge>,
    classes: Vec<EdgeClass>,
    side_line: Vec<[usize; 3]>,
    side_edges: Vec<[Vec<usize>; 3]>,
    interior_of: Vec<Vec<SideRef>>,
    on_boundary: Vec<bool>,
}

/// Builds the graph of a validated patch.
pub fn build_incidence(p: &TilingPatch) -> Result<IncidenceGraph, IncidenceError> {
    let (report, graph) = crate::tiling::validate::validate_with_graph(p);
    if report.ok {
        Ok(graph)
    } else {
        Err(IncidenceError::InvalidPatch(report))
    }
}

impl IncidenceGraph {
    /// Builds the graph without checking that the tiles form a tiling.
    /// Tiles overlapping along a line show up as edges with several sides on
    /// one half-plane, which is what validation inspects.
    pub fn build_unchecked(p: &TilingPatch) -> IncidenceGraph {
        let mut vertices: Vec<Point> = Vec::new();
        let mut index: HashMap<Point, usize> = HashMap::new();
        let mut tile_vertices = Vec::with_capacity(p.tiles.len());
        for t in &p.tiles {
            let mut ids = [0usize; 3];
            for (k, v) in t.vertices().iter().enumerate() {
                ids[k] = *index.entry(v.clone()).or_insert_with(|| {
                    vertices.push(v.clone());
                    vertices.len() - 1
                });
            }
            tile_vertices.push(ids);
        }

        // group sides by supporting line, in order of first appearance
        let mut line_ids: HashMap<LineKey, usize> = HashMap::new();
        let mut lines: Vec<SupportLine> = Vec::new();
        let mut side_line = vec![[0usize; 3]; p.tiles.len()];
        for (ti, (t, slots)) in p.tiles.iter().zip(side_line.iter_mut()).enumerate() {
            for (s, slot) in slots.iter_mut().enumerate() {
                let (a, b) = t.side(s);
                let key = LineKey::through(a, b);
                let id = *line_ids.entry(key.clone()).or_insert_with(|| {
                    lines.push(SupportLine { key, points: Vec::new(), edges: Vec::new(), sides: Vec::new() });
                    lines.len() - 1
                });
                lines[id].sides.push(SideRef::new(ti, s));
                *slot = id;
            }
        }

        let mut edges: Vec<AtomicEdge> = Vec::new();
        let mut side_edges: Vec<[Vec<usize>; 3]> = vec![Default::default(); p.tiles.len()];
        let mut interior_of: Vec<Vec<SideRef>> = vec![Vec::new(); vertices.len()];

        for (li, line) in lines.iter_mut().enumerate() {
            let key = &line.key;
            let mut on_line: Vec<usize> = line
                .sides
                .iter()
                .flat_map(|sr| [tile_vertices[sr.tile][sr.side], tile_vertices[sr.tile][(sr.side + 1) % 3]])
                .collect();
            on_line.sort_by(|&i, &j| key.param(&vertices[i]).cmp(key.param(&vertices[j])));
            on_line.dedup();
            let pos: HashMap<usize, usize> = on_line.iter().enumerate().map(|(i, &v)| (v, i)).collect();

            // slot k covers points k..k+1
            let mut slots: Vec<Option<AtomicEdge>> = vec![None; on_line.len().saturating_sub(1)];
            for sr in &line.sides {
                let t = &p.tiles[sr.tile];
                let va = tile_vertices[sr.tile][sr.side];
                let vb = tile_vertices[sr.tile][(sr.side + 1) % 3];
                let (mut i, mut j) = (pos[&va], pos[&vb]);
                if i > j {
                    std::mem::swap(&mut i, &mut j);
                }
                let (start_p, end_p) = (&vertices[on_line[i]], &vertices[on_line[j]]);
                let left = cross3(start_p, end_p, t.opposite(sr.side)) > Rational::zero();
                for (k, slot) in slots.iter_mut().enumerate().take(j).skip(i) {
                    let e = slot.get_or_insert_with(|| AtomicEdge {
                        a: on_line[k],
                        b: on_line[k + 1],
                        line: li,
                        left: Vec::new(),
                        right: Vec::new(),
                    });
                    if left {
                        e.left.push(*sr);
                    } else {
                        e.right.push(*sr);
                    }
                }
                for &v in &on_line[i + 1..j] {
                    interior_of[v].push(*sr);
                }
            }
            let mut slot_edge = vec![usize::MAX; slots.len()];
            for (k, slot) in slots.into_iter().enumerate() {
                if let Some(e) = slot {
                    slot_edge[k] = edges.len();
                    line.edges.push(edges.len());
                    edges.push(e);
                }
            }
            for sr in &line.sides {
                let va = tile_vertices[sr.tile][sr.side];
                let vb = tile_vertices[sr.tile][(sr.side + 1) % 3];
                let (i, j) = {
                    let (i, j) = (pos[&va], pos[&vb]);
                    (i.min(j), i.max(j))
                };
                side_edges[sr.tile][sr.side] = (i..j).map(|k| slot_edge[k]).collect();
            }
            line.points = on_line;
        }

        let mut classes = Vec::with_capacity(edges.len());
        let mut on_boundary = vec![false; vertices.len()];
        for e in &edges {
            let class = if e.incidence() == 1 {
                on_boundary[e.a] = true;
                on_boundary[e.b] = true;
                let s = e.left.first().or(e.right.first()).unwrap();
                if side_edges[s.tile][s.side].len() == 1 {
                    EdgeClass::FullBoundary
                } else {
                    EdgeClass::PartialBoundary
                }
            } else {
                EdgeClass::Internal
            };
            classes.push(class);
        }

        IncidenceGraph {
            vertices,
            index,
            tile_vertices,
            lines,
            edges,
            classes,
            side_line,
            side_edges,
            interior_of,
            on_boundary,
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_id(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn tile_vertices(&self, tile: usize) -> [usize; 3] {
        self.tile_vertices[tile]
    }

    pub fn lines(&self) -> &[SupportLine] {
        &self.lines
    }

    pub fn edges(&self) -> &[AtomicEdge] {
        &self.edges
    }

    pub fn edge_class(&self, e: usize) -> EdgeClass {
        self.classes[e]
    }

    pub fn side_line(&self, s: SideRef) -> usize {
        self.side_line[s.tile][s.side]
    }

    /// Atomic edges of a side, in line order.
    pub fn side_edges(&self, s: SideRef) -> &[usize] {
        &self.side_edges[s.tile][s.side]
    }

    /// Endpoints of a side in line order.
    pub fn side_span(&self, s: SideRef) -> (usize, usize) {
        let es = self.side_edges(s);
        (self.edges[es[0]].a, self.edges[*es.last().unwrap()].b)
    }

    /// Sides whose relative interior contains vertex `v`.
    pub fn interior_of(&self, v: usize) -> &[SideRef] {
        &self.interior_of[v]
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.on_boundary[v]
    }

    pub fn is_subdividing(&self, v: usize) -> bool {
        !self.interior_of[v].is_empty()
    }

    pub fn edge_length(&self, e: usize) -> LengthExpr {
        let ed = &self.edges[e];
        LengthExpr::sqrt(&self.vertices[ed.a].dist_sq(&self.vertices[ed.b]))
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.classes[e].is_boundary())
    }

    pub fn t(&self) -> usize {
        self.tile_vertices.len()
    }

    pub fn v(&self) -> usize {
        self.vertices.len()
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    /// Faces including the outer one.
    pub fn f(&self) -> usize {
        self.t() + 1
    }

    pub fn v_bd(&self) -> usize {
        self.on_boundary.iter().filter(|&&b| b).count()
    }

    pub fn v_int(&self) -> usize {
        self.v() - self.v_bd()
    }

    /// Subdividing vertices: interior to at least one side.
    pub fn v_star(&self) -> usize {
        (0..self.v()).filter(|&v| self.is_subdividing(v)).count()
    }

    /// Subdividing vertices off the boundary.
    pub fn v_star_int(&self) -> usize {
        (0..self.v()).filter(|&v| self.is_subdividing(v) && !self.on_boundary[v]).count()
    }

    pub fn e_full(&self) -> usize {
        self.classes.iter().filter(|&&c| c == EdgeClass::FullBoundary).count()
    }

    pub fn e_part(&self) -> usize {
        self.classes.iter().filter(|&&c| c == EdgeClass::PartialBoundary).count()
    }

    pub fn boundary_edge_count(&self) -> usize {
        self.e_full() + self.e_part()
    }

    /// Boundary edge `e` directed so that its tile lies on the left.
    pub fn boundary_direction(&self, e: usize) -> (usize, usize) {
        let ed = &self.edges[e];
        if ed.left.is_empty() {
            (ed.b, ed.a)
        } else {
            (ed.a, ed.b)
        }
    }

    /// Directed boundary cycles as vertex-id lists, each starting at its least
    /// point; cycles ordered by that point. Fails at a vertex where boundary
    /// edges do not pair up.
    pub fn boundary_cycles(&self) -> Result<Vec<Vec<usize>>, usize> {
        let mut next: BTreeMap<usize, usize> = BTreeMap::new();
        let mut indeg: BTreeMap<usize, usize> = BTreeMap::new();
        for e in self.boundary_edges() {
            let (a, b) = self.boundary_direction(e);
            if next.insert(a, b).is_some() {
                return Err(a);
            }
            *indeg.entry(b).or_default() += 1;
        }
        for (&v, &d) in &indeg {
            if d != 1 || !next.contains_key(&v) {
                return Err(v);
            }
        }
        let pts = self.vertices();
        let mut starts: Vec<usize> = next.keys().copied().collect();
        starts.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
        let mut seen = BTreeSet::new();
        let mut cycles = Vec::new();
        for s in starts {
            if seen.contains(&s) {
                continue;
            }
            let mut cyc = vec![s];
            seen.insert(s);
            let mut cur = next[&s];
            while cur != s {
                seen.insert(cur);
                cyc.push(cur);
                cur = next[&cur];
            }
            cycles.push(cyc);
        }
        Ok(cycles)
    }

    /// Tiles sharing an atomic edge with `tile`, ascending.
    pub fn edge_neighbors(&self, tile: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..3)
            .flat_map(|s| self.side_edges[tile][s].iter())
            .flat_map(|&e| self.edges[e].tiles())
            .filter(|&t| t != tile)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// For every vertex, the tiles whose closure contains it (as a corner or
    /// on a side).
    pub fn vertex_tiles(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.v()];
        for (t, vs) in self.tile_vertices.iter().enumerate() {
            for &v in vs {
                out[v].push(t);
            }
        }
        for (v, sides) in self.interior_of.iter().enumerate() {
            for s in sides {
                out[v].push(s.tile);
            }
        }
        for l in &mut out {
            l.sort_unstable();
            l.dedup();
        }
        out
    }
}

/// The exact integer identities every valid patch satisfies.
pub fn graph_audit(g: &IncidenceGraph) -> Report {
    let mut r = Report::new();
    let (v, e, f, t) = (g.v() as i64, g.e() as i64, g.f() as i64, g.t() as i64);
    r.push(Check::identity("euler_edges", e, v + f - 2));
    r.push(Check::identity(
        "face_edge_count",
        2 * e,
        3 * t + g.v_star() as i64 + g.e_full() as i64 + g.e_part() as i64,
    ));
    let max_sides = (0..g.v()).map(|v| g.interior_of(v).len()).max().unwrap_or(0) as i64;
    r.push(Check::bound("subdivides_at_most_one_side", max_sides, 1));
    r.push(Check::identity("boundary_cycle_length", g.v_bd() as i64, g.boundary_edge_count() as i64));
    r
}

pub fn audit_patch(p: &TilingPatch) -> Result<Report, IncidenceError> {
    build_incidence(p).map(|g| graph_audit(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Triangle;

    fn tri(c: [i64; 6]) -> Triangle {
        let p = Point::from_ints;
        Triangle::new(p(c[0], c[1]), p(c[2], c[3]), p(c[4], c[5])).unwrap()
    }

    #[test]
    fn single_triangle_counts() {
        let g = build_incidence(&TilingPatch::new(vec![tri([0, 0, 1, 0, 0, 1])])).unwrap();
        assert_eq!((g.v(), g.e(), g.t()), (3, 3, 1));
        assert_eq!(g.e_full(), 3);
        assert!(graph_audit(&g).all_pass());
        assert_eq!(
            graph_audit(&g).render(),
            "euler_edges = 3 3 pass\nface_edge_count = 6 6 pass\n\
             subdivides_at_most_one_side = 0 1 pass\nboundary_cycle_length = 3 3 pass\n"
        );
    }

    #[test]
    fn square_with_diagonal() {
        let p = TilingPatch::new(vec![tri([0, 0, 1, 0, 1, 1]), tri([0, 0, 1, 1, 0, 1])]);
        let g = build_incidence(&p).unwrap();
        assert_eq!((g.v(), g.e(), g.t()), (4, 5, 2));
        assert_eq!(g.e_full(), 4);
        assert_eq!(g.e_part(), 0);
        let a = graph_audit(&g);
        assert!(a.all_pass());
        assert!(a.render().contains("face_edge_count = 10 10 pass"));
    }

    #[test]
    fn t_junction_splits_side() {
        // big triangle below, two small ones above sharing (1,0)
        let p = TilingPatch::new(vec![tri([0, 0, 2, 0, 1, -1]), tri([0, 0, 1, 0, 0, 1]), tri([1, 0, 2, 0, 0, 1])]);
        let g = IncidenceGraph::build_unchecked(&p);
        let mid = g.vertex_id(&Point::from_ints(1, 0)).unwrap();
        assert_eq!(g.interior_of(mid), &[SideRef::new(0, 0)]);
        assert_eq!(g.side_edges(SideRef::new(0, 0)).len(), 2);
        assert!(graph_audit(&g).all_pass());
    }

    #[test]
    fn vertical_lines_sorted_by_y() {
        let p = TilingPatch::new(vec![tri([0, 0, 0, 2, -1, 1]), tri([0, 0, 1, 1, 0, 1]), tri([0, 1, 1, 1, 0, 2])]);
        let g = IncidenceGraph::build_unchecked(&p);
        let mid = g.vertex_id(&Point::from_ints(0, 1)).unwrap();
        assert_eq!(g.interior_of(mid).len(), 1);
    }
}
