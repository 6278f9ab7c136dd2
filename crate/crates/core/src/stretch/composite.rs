use std::collections::VecDeque;

use thiserror::Error;

use crate::incidence::{IncidenceGraph, SideRef};

/// A side that is exactly the union of whole sides of tiles across it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeSide {
    pub side: SideRef,
    /// Covering sides in line order.
    pub cover: Vec<SideRef>,
}

pub fn composite_sides(g: &IncidenceGraph) -> Vec<CompositeSide> {
    let mut out = Vec::new();
    for t in 0..g.t() {
        for s in 0..3 {
            let side = SideRef::new(t, s);
            if let Some(cover) = cover_of(g, side) {
                out.push(CompositeSide { side, cover });
            }
        }
    }
    out
}

fn cover_of(g: &IncidenceGraph, side: SideRef) -> Option<Vec<SideRef>> {
    let (start, end) = g.side_span(side);
    let mut cover: Vec<SideRef> = Vec::new();
    for &e in g.side_edges(side) {
        let ed = &g.edges()[e];
        let across = if ed.left.contains(&side) { &ed.right } else { &ed.left };
        let other = *across.first()?;
        if cover.last() != Some(&other) {
            cover.push(other);
        }
    }
    let first = g.side_span(cover[0]).0;
    let last = g.side_span(*cover.last().unwrap()).1;
    (first == start && last == end).then_some(cover)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown tile {0}")]
pub struct UnknownTile(pub usize);

/// Hop distance from every tile to the nearest tile owning a composite side,
/// where hops cross atomic edges.
pub fn composite_hop_distances(g: &IncidenceGraph) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.t()];
    let mut queue = VecDeque::new();
    for c in composite_sides(g) {
        if dist[c.side.tile].is_none() {
            dist[c.side.tile] = Some(0);
            queue.push_back(c.side.tile);
        }
    }
    while let Some(t) = queue.pop_front() {
        let d = dist[t].unwrap();
        for n in g.edge_neighbors(t) {
            if dist[n].is_none() {
                dist[n] = Some(d + 1);
                queue.push_back(n);
            }
        }
    }
    dist
}

/// Least number of neighbour hops from `tile` to a tile with a composite
/// side; `None` when no tile of the patch has one.
pub fn neighbor_hops_to_composite(g: &IncidenceGraph, tile: usize) -> Result<Option<usize>, UnknownTile> {
    if tile >= g.t() {
        return Err(UnknownTile(tile));
    }
    Ok(composite_hop_distances(g)[tile])
}

/// Tile-to-tile hop distances from `tile` over shared edges.
pub fn hop_distances_from(g: &IncidenceGraph, tile: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.t()];
    dist[tile] = Some(0);
    let mut queue = VecDeque::from([tile]);
    while let Some(t) = queue.pop_front() {
        let d = dist[t].unwrap();
        for n in g.edge_neighbors(t) {
            if dist[n].is_none() {
                dist[n] = Some(d + 1);
                queue.push_back(n);
            }
        }
    }
    dist
}
