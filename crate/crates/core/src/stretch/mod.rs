//! Stretches, long/short labels and the audits built on them.

pub mod audit;
pub mod composite;
pub mod decompose;

pub use audit::{
    epsilon2, eq1_audit, is_convex, no_shared_side_conditions, region_polygon, stretch_accounting, w_audit, Conditions,
    TileType, WAudit,
};
pub use composite::{
    composite_hop_distances, composite_sides, hop_distances_from, neighbor_hops_to_composite, CompositeSide,
    UnknownTile,
};
pub use decompose::{
    decompose_stretches, label_sides, shared_side_pairs, size_histogram, Piece, SharedSide, SideLabel, SideLabels,
    Stretch, StretchClass,
};
