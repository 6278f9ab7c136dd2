use std::fmt::Write;

use tiling_core::geometry::Point;
use tiling_core::incidence::{build_incidence, IncidenceError};
use tiling_core::rational::{format_significant, int, ratio, Rational};
use tiling_core::stretch::{decompose_stretches, label_sides, SideLabel};
use tiling_core::tiling::TilingPatch;

const SIG_DIGITS: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgOptions {
    pub width_px: u32,
    pub stretch_overlay: bool,
    pub label_long_short: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { width_px: 800, stretch_overlay: false, label_long_short: false }
    }
}

/// Patch coordinates to pixels: uniform scale, y pointing down.
struct Frame {
    min_x: Rational,
    max_y: Rational,
    scale: Rational,
    margin: Rational,
    height: Rational,
}

impl Frame {
    fn fit(p: &TilingPatch, width_px: u32) -> Frame {
        let pts = || p.tiles.iter().flat_map(|t| t.vertices().iter());
        let min_x = pts().map(|q| &q.x).min().unwrap().clone();
        let max_x = pts().map(|q| &q.x).max().unwrap().clone();
        let min_y = pts().map(|q| &q.y).min().unwrap().clone();
        let max_y = pts().map(|q| &q.y).max().unwrap().clone();
        let margin = int(20);
        let inner = int(width_px as i64) - &margin * int(2);
        let span = (&max_x - &min_x).max(&max_y - &min_y);
        let scale = inner / span;
        let height = (&max_y - &min_y) * &scale + &margin * int(2);
        Frame { min_x, max_y, scale, margin, height }
    }

    fn map(&self, q: &Point) -> String {
        let x = (&q.x - &self.min_x) * &self.scale + &self.margin;
        let y = (&self.max_y - &q.y) * &self.scale + &self.margin;
        format!("{},{}", format_significant(&x, SIG_DIGITS), format_significant(&y, SIG_DIGITS))
    }
}

/// Deterministic SVG of the patch: one polygon per tile in tile order, then
/// the optional stretch overlay and `l`/`s` labels. Overlay and labels need
/// the incidence graph, so they fail on an invalid patch.
pub fn render_svg(p: &TilingPatch, opts: &SvgOptions) -> Result<String, IncidenceError> {
    let mut out = String::new();
    if p.is_empty() {
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="0" viewBox="0 0 {0} 0"/>"#,
            opts.width_px
        )
        .unwrap();
        return Ok(out);
    }
    let frame = Frame::fit(p, opts.width_px);
    let h = format_significant(&frame.height, SIG_DIGITS);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width_px
    )
    .unwrap();
    writeln!(out, r##"<g class="tiles" fill="#eef2f7" stroke="#1f2937" stroke-width="1">"##).unwrap();
    for t in &p.tiles {
        let pts: Vec<String> = t.vertices().iter().map(|q| frame.map(q)).collect();
        writeln!(out, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    if opts.stretch_overlay || opts.label_long_short {
        let g = build_incidence(p)?;
        let stretches = decompose_stretches(&g);
        if opts.stretch_overlay {
            writeln!(out, r##"<g class="stretches" fill="none" stroke="#c2410c" stroke-width="3">"##).unwrap();
            for st in &stretches {
                let (a, b) = st.span(&g);
                writeln!(out, r#"<polyline class="{}" points="{} {}"/>"#, st.class.name(), frame.map(a), frame.map(b))
                    .unwrap();
            }
            writeln!(out, "</g>").unwrap();
        }
        if opts.label_long_short {
            let labels = label_sides(&g, &stretches);
            writeln!(out, r#"<g class="labels" font-size="12" text-anchor="middle">"#).unwrap();
            for (s, l) in labels.iter().filter(|(_, l)| *l != SideLabel::None) {
                let tile = &p.tiles[s.tile];
                let (a, b) = tile.side(s.side);
                // pulled a sixth of the way toward the opposite corner
                let mid = a.midpoint(b);
                let at = mid.add(&tile.opposite(s.side).sub(&mid).scale(&ratio(1, 6)));
                let (x, y) = frame.map(&at).split_once(',').map(|(x, y)| (x.to_string(), y.to_string())).unwrap();
                writeln!(out, r#"<text x="{x}" y="{y}">{}</text>"#, l.letter().unwrap()).unwrap();
            }
            writeln!(out, "</g>").unwrap();
        }
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
