use std::cmp::Ordering;

use num_traits::Signed;

use super::decompose::{shared_side_pairs, SideLabel, SideLabels, Stretch, StretchClass};
use crate::geometry::{length_sum_compare, triangle_margin, LengthExpr, Point};
use crate::incidence::IncidenceGraph;
use crate::rational::{int, ratio, Rational};
use crate::report::{Check, Report, Status};
use crate::tiling::patch::polygon_signed_area;
use crate::tiling::validate::elide_collinear;
use crate::tiling::TilingPatch;

const APPROX_DIGITS: u32 = 12;

/// Boundary polygon of the patch with collinear vertices elided, if the
/// boundary is one cycle.
pub fn region_polygon(g: &IncidenceGraph) -> Option<Vec<Point>> {
    let cycles = g.boundary_cycles().ok()?;
    if cycles.len() != 1 {
        return None;
    }
    let poly: Vec<Point> = cycles[0].iter().map(|&v| g.vertices()[v].clone()).collect();
    Some(elide_collinear(&poly))
}

pub fn is_convex(poly: &[Point]) -> bool {
    let n = poly.len();
    n >= 3
        && polygon_signed_area(poly).is_positive()
        && (0..n)
            .all(|i| crate::geometry::point::cross3(&poly[i], &poly[(i + 1) % n], &poly[(i + 2) % n]).is_positive())
}

/// Angle-sum identity `v_bd + 2 v_int - v*_int = t + 2` on convex regions,
/// with the corollary that a shared-side-free convex tiling has 3 boundary
/// vertices.
pub fn eq1_audit(g: &IncidenceGraph) -> Report {
    let mut r = Report::new();
    let convex = region_polygon(g).is_some_and(|p| is_convex(&p));
    r.push(Check::info("region_convex", convex));
    if !convex {
        r.push(Check::na("angle_sum", "region not convex"));
        r.push(Check::na("no_shared_sides_boundary", "region not convex"));
        return r;
    }
    let lhs = g.v_bd() as i64 + 2 * g.v_int() as i64 - g.v_star_int() as i64;
    r.push(Check::identity("angle_sum", lhs, g.t() as i64 + 2));
    if shared_side_pairs(g).is_empty() {
        r.push(Check::identity("no_shared_sides_boundary", g.v_bd(), 3));
    } else {
        r.push(Check::na("no_shared_sides_boundary", "shared sides present"));
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conditions {
    /// Why the conditions do not apply, if they don't.
    pub not_applicable: Option<String>,
    pub no_boundary_subdivision: bool,
    pub interior_vertices_subdivide: bool,
    pub stretches_size_three: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.not_applicable.is_none()
            && self.no_boundary_subdivision
            && self.interior_vertices_subdivide
            && self.stretches_size_three
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        let names = ["condition_boundary_corners_only", "condition_interior_subdivide", "condition_stretch_size_3"];
        let vals = [self.no_boundary_subdivision, self.interior_vertices_subdivide, self.stretches_size_three];
        for (n, v) in names.into_iter().zip(vals) {
            match &self.not_applicable {
                Some(why) => r.push(Check::na(n, why)),
                None => r.push(Check::new(n, v, Status::from_bool(v))),
            }
        }
        r
    }
}

/// Structure forced on a triangle region tiled without shared sides.
pub fn no_shared_side_conditions(g: &IncidenceGraph, stretches: &[Stretch]) -> Conditions {
    let not_applicable = if region_polygon(g).is_none_or(|p| p.len() != 3) {
        Some("region is not a triangle".to_string())
    } else if !shared_side_pairs(g).is_empty() {
        Some("shared sides present".to_string())
    } else {
        None
    };
    Conditions {
        not_applicable,
        no_boundary_subdivision: g.v_bd() == 3,
        interior_vertices_subdivide: g.v_int() == g.v_star_int(),
        stretches_size_three: stretches.iter().all(|s| s.size == 3),
    }
}

/// Smallest triangle-inequality margin over all tiles.
///
/// # Panics
/// If the patch is empty.
pub fn epsilon2(p: &TilingPatch) -> LengthExpr {
    p.tiles.iter().map(triangle_margin).min_by(length_sum_compare).expect("epsilon2 of an empty patch")
}

/// `sqrt(l) == sqrt(a) + sqrt(b)` for nonnegative rationals, by squaring.
pub fn sqrt_sum_identity(l: &Rational, a: &Rational, b: &Rational) -> bool {
    let d = l - a - b;
    !d.is_negative() && &d * &d == int(4) * a * b
}

/// Integer accounting over stretches: partition of sides, the subdividing
/// vertex bound, stretch size minima and exact long/short cancellation.
pub fn stretch_accounting(g: &IncidenceGraph, p: &TilingPatch, stretches: &[Stretch]) -> Report {
    let mut r = Report::new();
    let sigma = stretches.iter().filter(|s| s.class == StretchClass::Tight).count() as i64;
    let loose: i64 = stretches.iter().filter(|s| s.class != StretchClass::Tight).map(|s| s.size as i64).sum();
    let t = g.t() as i64;
    let e_full = g.e_full() as i64;
    let shared = shared_side_pairs(g).len();
    if shared > 0 {
        r.push(Check::na("side_partition", "shared sides present"));
        r.push(Check::na("subdividing_vertex_bound", "shared sides present"));
    } else {
        r.push(Check::identity("side_partition", 3 * t - e_full, 3 * sigma + loose));
        // v* >= sigma + L/2, doubled to stay integral
        r.push(Check::new(
            "subdividing_vertex_bound",
            format!("{} {}", 2 * g.v_star() as i64, 2 * sigma + loose),
            Status::from_bool(2 * g.v_star() as i64 >= 2 * sigma + loose),
        ));
    }
    let min_ok = stretches.iter().all(|s| if s.is_proper() { s.size >= 3 } else { s.size >= 2 });
    r.push(Check::new("stretch_size_minimum", min_ok, Status::from_bool(min_ok)));
    let cancel_ok = stretches.iter().filter(|s| s.class == StretchClass::Tight).all(|s| {
        let (long, short) = if s.left.len() == 1 { (&s.left, &s.right) } else { (&s.right, &s.left) };
        let sq = |piece: &super::decompose::Piece| {
            let sr = piece.side().unwrap();
            p.tiles[sr.tile].squared_side(sr.side)
        };
        sqrt_sum_identity(&sq(&long[0]), &sq(&short[0]), &sq(&short[1]))
    });
    r.push(Check::new("tight_length_cancel", cancel_ok, Status::from_bool(cancel_ok)));
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileType {
    Type(u8),
    Exceptional,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WAudit {
    pub shared_sides: usize,
    pub sigma_tight: usize,
    /// Sum of the sizes of non-tight stretches (a side count, not a length).
    pub loose_total_size: usize,
    pub e_full: usize,
    pub e_part: usize,
    pub long_count: usize,
    pub short_count: usize,
    pub long_length: LengthExpr,
    pub short_length: LengthExpr,
    pub epsilon2: LengthExpr,
    pub w_definition: LengthExpr,
    pub w_identity: LengthExpr,
    pub types: Vec<TileType>,
    pub contributions: Vec<LengthExpr>,
    pub unit_perimeter: bool,
    pub report: Report,
}

impl WAudit {
    /// Alias for the loose side count.
    pub fn l_loose(&self) -> usize {
        self.loose_total_size
    }

    pub fn type_count(&self, t: TileType) -> usize {
        self.types.iter().filter(|&&x| x == t).count()
    }
}

fn eq_check(name: &str, a: &LengthExpr, b: &LengthExpr) -> Check {
    let ok = length_sum_compare(a, b) == Ordering::Equal;
    Check::new(
        name,
        format!("{} {}", a.approx_decimal(APPROX_DIGITS), b.approx_decimal(APPROX_DIGITS)),
        Status::from_bool(ok),
    )
}

fn all_check(name: &str, ok: bool, applicable: Option<&str>) -> Check {
    match applicable {
        Some(why) => Check::na(name, why),
        None => Check::new(name, ok, Status::from_bool(ok)),
    }
}

/// The signed long/short bookkeeping quantity `W`, computed from its
/// definition, from the closed form `-eps * sigma`, and tile by tile.
pub fn w_audit(
    g: &IncidenceGraph,
    p: &TilingPatch,
    stretches: &[Stretch],
    labels: &SideLabels,
    unit_perimeter: bool,
) -> WAudit {
    let eps = epsilon2(p);
    let sigma = stretches.iter().filter(|s| s.class == StretchClass::Tight).count();
    let loose: usize = stretches.iter().filter(|s| s.class != StretchClass::Tight).map(|s| s.size).sum();
    let shared = shared_side_pairs(g).len();
    let long_count = labels.count(SideLabel::Long);
    let short_count = labels.count(SideLabel::Short);

    let side_len = |t: usize, s: usize| p.tiles[t].side_length(s);
    let two_thirds_minus_eps = &LengthExpr::rational(ratio(2, 3)) - &eps;
    let third = LengthExpr::rational(ratio(1, 3));

    let mut long_terms = Vec::new();
    let mut short_terms = Vec::new();
    let mut types = Vec::with_capacity(g.t());
    let mut contributions = Vec::with_capacity(g.t());
    for (t, ls) in labels.labels.iter().enumerate() {
        let mut parts = Vec::new();
        for (s, l) in ls.iter().enumerate() {
            match l {
                SideLabel::Long => {
                    let len = side_len(t, s);
                    parts.push(&two_thirds_minus_eps - &len);
                    long_terms.push(len);
                }
                SideLabel::Short => {
                    let len = side_len(t, s);
                    parts.push(&len - &third);
                    short_terms.push(len);
                }
                SideLabel::None => {}
            }
        }
        types.push(if ls.contains(&SideLabel::None) {
            TileType::Exceptional
        } else {
            TileType::Type(ls.iter().filter(|&&l| l == SideLabel::Long).count() as u8)
        });
        contributions.push(LengthExpr::sum(&parts));
    }
    let long_length = LengthExpr::sum(&long_terms);
    let short_length = LengthExpr::sum(&short_terms);
    let w_definition = LengthExpr::sum(&[
        two_thirds_minus_eps.scale_int(long_count as i64),
        third.scale_int(-(short_count as i64)),
        short_length.clone(),
        -&long_length,
    ]);
    let w_identity = eps.scale_int(-(sigma as i64));
    let w_tiles = LengthExpr::sum(&contributions);

    let mut r = Report::new();
    r.push(Check::info("shared_sides", shared));
    r.push(Check::info("sigma_tight", sigma));
    r.push(Check::info("loose_total_size", loose));
    r.push(Check::info("e_full", g.e_full()));
    r.push(Check::info("e_part", g.e_part()));
    r.push(Check::info("epsilon2", &eps));
    r.push(Check::info("epsilon2_approx", eps.approx_decimal(APPROX_DIGITS)));
    let eps_positive = eps.signum() == Ordering::Greater;
    r.push(Check::new("epsilon2_positive", eps_positive, Status::from_bool(eps_positive)));
    r.push(Check::identity("long_count", long_count, sigma));
    r.push(Check::identity("short_count", short_count, 2 * sigma));
    r.push(eq_check("long_short_length", &long_length, &short_length));
    r.push(Check::info("w_definition", w_definition.approx_decimal(APPROX_DIGITS)));
    r.push(Check::info("w_identity", &w_identity));
    if shared > 0 {
        r.push(Check::na("w_routes_agree", "shared sides present"));
    } else {
        r.push(eq_check("w_routes_agree", &w_definition, &w_identity));
    }
    r.push(eq_check("w_tile_sum", &w_tiles, &w_definition));

    let count = |t: TileType| types.iter().filter(|&&x| x == t).count();
    for i in 0..4u8 {
        r.push(Check::info(format!("tiles_type{i}"), count(TileType::Type(i))));
    }
    r.push(Check::info("tiles_exceptional", count(TileType::Exceptional)));

    let zero = LengthExpr::zero();
    let ge = |a: &LengthExpr, b: &LengthExpr| length_sum_compare(a, b) != Ordering::Less;
    let types_ref = &types;
    let of_type = |want: TileType| (0..types_ref.len()).filter(move |&t| types_ref[t] == want);
    r.push(all_check("type1_nonnegative", of_type(TileType::Type(1)).all(|t| ge(&contributions[t], &zero)), None));

    let unit_na = if unit_perimeter { None } else { Some("unit-perimeter mode off") };
    let one = LengthExpr::from_int(1);
    let perim = |t: usize| p.tiles[t].perimeter();
    let unit_ok = p.tiles.iter().all(|t| length_sum_compare(&t.perimeter(), &one) == Ordering::Equal);
    r.push(all_check("unit_perimeter", unit_ok, unit_na));
    r.push(all_check("type0_zero", of_type(TileType::Type(0)).all(|t| contributions[t].is_zero()), unit_na));
    r.push(all_check(
        "type2_bound",
        of_type(TileType::Type(2)).all(|t| {
            let min_side = LengthExpr::sqrt(&p.tiles[t].sorted_squared_sides()[0]);
            ge(&contributions[t], &(&min_side - &eps).scale_int(2))
        }),
        unit_na,
    ));
    r.push(all_check(
        "type3_value",
        of_type(TileType::Type(3))
            .all(|t| length_sum_compare(&contributions[t], &(&perim(t) - &eps.scale_int(3))) == Ordering::Equal),
        unit_na,
    ));
    r.push(all_check(
        "exceptional_bound",
        of_type(TileType::Exceptional).all(|t| ge(&contributions[t], &perim(t).scale(&ratio(-2, 3)))),
        unit_na,
    ));

    WAudit {
        shared_sides: shared,
        sigma_tight: sigma,
        loose_total_size: loose,
        e_full: g.e_full(),
        e_part: g.e_part(),
        long_count,
        short_count,
        long_length,
        short_length,
        epsilon2: eps,
        w_definition,
        w_identity,
        types,
        contributions,
        unit_perimeter,
        report: r,
    }
}
