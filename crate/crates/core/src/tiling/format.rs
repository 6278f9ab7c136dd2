//! The `TILING/1` text format.
//!
//! ```text
//! #TILING 1
//! region 4 0 0 1 0 1 1 0 1
//! meta generator fan
//! tri 0 0 1 0 1 1
//! tri 0 0 1 1 0 1
//! ```
//!
//! `#` starts a comment anywhere except in the magic line. Numbers use the
//! rational text form.

use thiserror::Error;

use super::patch::TilingPatch;
use crate::geometry::{Point, Triangle};
use crate::rational::{format_rational, parse_rational, Rational};

pub const MAGIC: &str = "#TILING 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `{MAGIC}` header")]
    MissingMagic,
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("degenerate triangle at line {line}")]
    Degenerate { line: usize },
    #[error("malformed rational `{text}` at line {line}")]
    Rational { line: usize, text: String },
}

fn numbers(fields: &[&str], line: usize) -> Result<Vec<Rational>, ParseError> {
    fields.iter().map(|s| parse_rational(s).map_err(|_| ParseError::Rational { line, text: s.to_string() })).collect()
}

fn points(nums: &[Rational]) -> Vec<Point> {
    nums.chunks(2).map(|c| Point::new(c[0].clone(), c[1].clone())).collect()
}

pub fn parse_tiling(text: &str) -> Result<TilingPatch, ParseError> {
    let mut lines = text.split('\n').enumerate();
    match lines.next() {
        Some((_, first)) if first.trim_end_matches('\r') == MAGIC => {}
        _ => return Err(ParseError::MissingMagic),
    }
    let mut patch = TilingPatch::default();
    for (idx, raw) in lines {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let syntax = |msg: &str| ParseError::Syntax { line, msg: msg.to_string() };
        match fields[0] {
            "tri" => {
                if fields.len() != 7 {
                    return Err(syntax("`tri` takes 6 numbers"));
                }
                let v = points(&numbers(&fields[1..], line)?);
                let [a, b, c]: [Point; 3] = v.try_into().unwrap();
                let t = Triangle::new(a, b, c).map_err(|_| ParseError::Degenerate { line })?;
                patch.tiles.push(t);
            }
            "region" => {
                if patch.region.is_some() {
                    return Err(syntax("duplicate `region` line"));
                }
                let n: usize = fields
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| syntax("`region` needs a vertex count"))?;
                if n < 3 || fields.len() != 2 + 2 * n {
                    return Err(syntax("`region` vertex count does not match its coordinates"));
                }
                patch.region = Some(points(&numbers(&fields[2..], line)?));
            }
            "meta" => {
                if fields.len() < 2 {
                    return Err(syntax("`meta` needs a key"));
                }
                patch.metadata.push((fields[1].to_string(), fields[2..].join(" ")));
            }
            other => return Err(syntax(&format!("unknown record `{other}`"))),
        }
    }
    Ok(patch)
}

fn push_point(out: &mut String, p: &Point) {
    out.push(' ');
    out.push_str(&format_rational(&p.x));
    out.push(' ');
    out.push_str(&format_rational(&p.y));
}

pub fn serialize_tiling(p: &TilingPatch) -> String {
    let mut out = String::from(MAGIC);
    out.push('\n');
    if let Some(region) = &p.region {
        out.push_str(&format!("region {}", region.len()));
        for q in region {
            push_point(&mut out, q);
        }
        out.push('\n');
    }
    for (k, v) in &p.metadata {
        if v.is_empty() {
            out.push_str(&format!("meta {k}\n"));
        } else {
            out.push_str(&format!("meta {k} {v}\n"));
        }
    }
    for t in &p.tiles {
        out.push_str("tri");
        for q in t.vertices() {
            push_point(&mut out, q);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn single_tile() {
        let p = parse_tiling("#TILING 1\ntri 0 0 1 0 0 1\n").unwrap();
        assert_eq!(p.tiles.len(), 1);
        assert_eq!(serialize_tiling(&p).lines().count(), 2);
    }

    #[test]
    fn degenerate_reports_line() {
        let e = parse_tiling("#TILING 1\n# comment\ntri 0 0 1 0 2 0\n").unwrap_err();
        assert_eq!(e, ParseError::Degenerate { line: 3 });
        assert_eq!(e.to_string(), "degenerate triangle at line 3");
    }

    #[test]
    fn fractions_survive_round_trip() {
        let text = "#TILING 1\ntri 1/2 1 3 -2/3 0 7 # trailing comment\n";
        let p = parse_tiling(text).unwrap();
        assert_eq!(p.tiles[0].vertex(0).x, ratio(1, 2));
        assert_eq!(p.tiles[0].vertex(1).y, ratio(-2, 3));
        assert_eq!(parse_tiling(&serialize_tiling(&p)).unwrap(), p);
        assert_eq!(serialize_tiling(&p), "#TILING 1\ntri 1/2 1 3 -2/3 0 7\n");
    }

    #[test]
    fn region_precedes_tiles() {
        let text = "#TILING 1\nmeta generator fan square\ntri 0 0 1 0 1 1\nregion 3 0 0 1 0 1 1\n";
        let p = parse_tiling(text).unwrap();
        assert_eq!(p.meta("generator"), Some("fan square"));
        let out = serialize_tiling(&p);
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[1].starts_with("region 3"));
        assert!(lines[3].starts_with("tri"));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_tiling("tri 0 0 1 0 0 1\n"), Err(ParseError::MissingMagic));
        assert!(matches!(parse_tiling("#TILING 1\ntri 0 0 1 0 0\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_tiling("#TILING 1\ntri 0 0 1 0 0 1.5\n"), Err(ParseError::Rational { line: 2, .. })));
        assert!(matches!(parse_tiling("#TILING 1\nregion 4 0 0 1 0 1 1\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_tiling("#TILING 1\nquad 0\n"), Err(ParseError::Syntax { .. })));
    }

    proptest::proptest! {
        #[test]
        fn serialize_parse_identity(
            coords in proptest::collection::vec((-30i64..30, 1i64..7), 6..=6),
            keep_region in proptest::bool::ANY,
        ) {
            let nums: Vec<Rational> = coords.iter().map(|&(p, q)| ratio(p, q)).collect();
            let pts = points(&nums);
            if let Ok(t) = Triangle::new(pts[0].clone(), pts[1].clone(), pts[2].clone()) {
                let mut patch = TilingPatch::new(vec![t.clone()]).with_meta("k", "v w");
                if keep_region {
                    patch = patch.with_region(t.to_ccw().vertices().to_vec());
                }
                let text = serialize_tiling(&patch);
                let back = parse_tiling(&text).unwrap();
                proptest::prop_assert_eq!(&back, &patch);
                proptest::prop_assert_eq!(serialize_tiling(&back), text);
            }
        }
    }
}
