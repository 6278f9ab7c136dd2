use std::collections::BTreeMap;
use std::fmt;

use crate::geometry::Point;
use crate::incidence::{EdgeClass, IncidenceGraph, SideRef};

/// A tile side, or a partial boundary edge standing in for the missing
/// tile on the empty half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Side(SideRef),
    Boundary(usize),
}

impl Piece {
    pub fn side(self) -> Option<SideRef> {
        match self {
            Piece::Side(s) => Some(s),
            Piece::Boundary(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StretchClass {
    Tight,
    LooseProper,
    Improper,
}

impl StretchClass {
    pub fn name(self) -> &'static str {
        match self {
            StretchClass::Tight => "TIGHT",
            StretchClass::LooseProper => "LOOSE_PROPER",
            StretchClass::Improper => "IMPROPER",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stretch {
    pub line: usize,
    /// Vertex ids of the span endpoints, in line order.
    pub start: usize,
    pub end: usize,
    /// Pieces on the left of the line direction, in line order.
    pub left: Vec<Piece>,
    pub right: Vec<Piece>,
    pub size: usize,
    pub class: StretchClass,
}

impl Stretch {
    pub fn sides(&self) -> impl Iterator<Item = SideRef> + '_ {
        self.left.iter().chain(&self.right).filter_map(|p| p.side())
    }

    pub fn is_proper(&self) -> bool {
        self.class != StretchClass::Improper
    }

    pub fn span<'a>(&self, g: &'a IncidenceGraph) -> (&'a Point, &'a Point) {
        (&g.vertices()[self.start], &g.vertices()[self.end])
    }
}

impl fmt::Display for Stretch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_pieces = |ps: &[Piece]| {
            ps.iter()
                .map(|p| match p {
                    Piece::Side(s) => format!("{}.{}", s.tile, s.side),
                    Piece::Boundary(e) => format!("bd{e}"),
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{} size {} line {} left [{}] right [{}]",
            self.class.name(),
            self.size,
            self.line,
            fmt_pieces(&self.left),
            fmt_pieces(&self.right)
        )
    }
}

/// Two tiles with an identical full side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SharedSide {
    pub a: SideRef,
    pub b: SideRef,
}

pub fn shared_side_pairs(g: &IncidenceGraph) -> Vec<SharedSide> {
    let mut out = Vec::new();
    for e in g.edges() {
        if let ([l], [r]) = (e.left.as_slice(), e.right.as_slice()) {
            if g.side_edges(*l).len() == 1 && g.side_edges(*r).len() == 1 {
                let (a, b) = if l.tile < r.tile { (*l, *r) } else { (*r, *l) };
                out.push(SharedSide { a, b });
            }
        }
    }
    out.sort();
    out
}

/// Appends `p` unless it repeats the previous piece.
fn push_piece(list: &mut Vec<Piece>, p: Piece) {
    if list.last() != Some(&p) {
        list.push(p);
    }
}

fn piece_for(e: usize, sides: &[SideRef]) -> Piece {
    match sides.first() {
        Some(s) => Piece::Side(*s),
        None => Piece::Boundary(e),
    }
}

fn piece_ends_at(g: &IncidenceGraph, p: Piece, v: usize) -> bool {
    match p {
        Piece::Side(s) => g.side_span(s).1 == v,
        Piece::Boundary(_) => true,
    }
}

/// Minimal doubly decomposable segments of a valid patch, by line then
/// position. Shared full sides and full boundary edges are not stretches.
pub fn decompose_stretches(g: &IncidenceGraph) -> Vec<Stretch> {
    let mut out = Vec::new();
    for (li, line) in g.lines().iter().enumerate() {
        let mut cur: Vec<usize> = Vec::new();
        let mut flush = |cur: &mut Vec<usize>| {
            if !cur.is_empty() {
                if let Some(s) = make_stretch(g, li, cur) {
                    out.push(s);
                }
                cur.clear();
            }
        };
        for &e in &line.edges {
            if g.edge_class(e) == EdgeClass::FullBoundary {
                flush(&mut cur);
                continue;
            }
            let ed = &g.edges()[e];
            if let Some(&prev) = cur.last() {
                if g.edges()[prev].b != ed.a {
                    flush(&mut cur);
                }
            }
            cur.push(e);
            let l = piece_for(e, &ed.left);
            let r = piece_for(e, &ed.right);
            if piece_ends_at(g, l, ed.b) && piece_ends_at(g, r, ed.b) {
                flush(&mut cur);
            }
        }
        flush(&mut cur);
    }
    out
}

fn make_stretch(g: &IncidenceGraph, line: usize, edges: &[usize]) -> Option<Stretch> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &e in edges {
        let ed = &g.edges()[e];
        push_piece(&mut left, piece_for(e, &ed.left));
        push_piece(&mut right, piece_for(e, &ed.right));
    }
    let improper = left.iter().chain(&right).any(|p| matches!(p, Piece::Boundary(_)));
    if !improper && left.len() == 1 && right.len() == 1 {
        return None;
    }
    let size = left.iter().chain(&right).filter(|p| p.side().is_some()).count();
    let class = if improper {
        StretchClass::Improper
    } else if size == 3 {
        StretchClass::Tight
    } else {
        StretchClass::LooseProper
    };
    Some(Stretch {
        line,
        start: g.edges()[edges[0]].a,
        end: g.edges()[*edges.last().unwrap()].b,
        left,
        right,
        size,
        class,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideLabel {
    Long,
    Short,
    None,
}

impl SideLabel {
    pub fn letter(self) -> Option<char> {
        match self {
            SideLabel::Long => Some('l'),
            SideLabel::Short => Some('s'),
            SideLabel::None => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideLabels {
    pub labels: Vec<[SideLabel; 3]>,
}

impl SideLabels {
    pub fn get(&self, s: SideRef) -> SideLabel {
        self.labels[s.tile][s.side]
    }

    pub fn count(&self, l: SideLabel) -> usize {
        self.labels.iter().flatten().filter(|&&x| x == l).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SideRef, SideLabel)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .flat_map(|(t, ls)| ls.iter().enumerate().map(move |(s, &l)| (SideRef::new(t, s), l)))
    }
}

/// The long side of a tight stretch spans it; the two others are short.
///
/// # Panics
/// If a tight stretch has no single spanning side.
pub fn label_sides(g: &IncidenceGraph, stretches: &[Stretch]) -> SideLabels {
    let mut labels = vec![[SideLabel::None; 3]; g.t()];
    for st in stretches.iter().filter(|s| s.class == StretchClass::Tight) {
        let (long, short) = match (st.left.as_slice(), st.right.as_slice()) {
            ([l], r) if r.len() == 2 => (*l, r),
            (l, [r]) if l.len() == 2 => (*r, l),
            _ => panic!("tight stretch without a spanning side: {st}"),
        };
        let long = long.side().unwrap();
        assert_eq!(g.side_span(long), (st.start, st.end), "long side does not span its stretch");
        labels[long.tile][long.side] = SideLabel::Long;
        for p in short {
            let s = p.side().unwrap();
            labels[s.tile][s.side] = SideLabel::Short;
        }
    }
    SideLabels { labels }
}

/// Stretch counts keyed by size, for reports.
pub fn size_histogram(stretches: &[Stretch]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for s in stretches {
        *h.entry(s.size).or_default() += 1;
    }
    h
}
