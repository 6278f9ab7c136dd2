//! `tiling` command-line frontend. [`run`] is the whole program; the binary
//! only forwards process arguments and streams to it.

pub mod svg;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use tiling_core::extract::{asymptotic_audit, extract_disk, AsymptoticParams};
use tiling_core::generators::{
    circle_polygon, gen_convex_triangulation, gen_recursive_split, gen_reflected_pair, gen_two_scale_periodic,
    ConvexStrategy, GeneratorError, RecursiveSplitSpec, ReflectionKind, TwoScaleSpec,
};
use tiling_core::geometry::{Point, Triangle};
use tiling_core::incidence::{build_incidence, graph_audit, IncidenceError, IncidenceGraph};
use tiling_core::rational::{format_rational, parse_rational, Rational};
use tiling_core::stretch::{
    decompose_stretches, eq1_audit, label_sides, no_shared_side_conditions, shared_side_pairs, size_histogram,
    stretch_accounting, w_audit, SideLabel, StretchClass,
};
use tiling_core::tiling::{parse_tiling, serialize_tiling, side_length_range, validate_patch, TilingPatch};
use tiling_core::{Check, Report, Status};

pub use svg::{render_svg, SvgOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tiling", version, about = "Construct, validate and audit finite triangle tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

// parsed once per process, so the size spread is harmless
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated patch as TILING/1
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Check that a file is a valid tiling of its region
    Validate { file: PathBuf },
    /// Run every applicable audit
    Audit(AuditArgs),
    /// Print the stretch decomposition
    Stretches { file: PathBuf },
    /// Print counts and the side length range
    Stats {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        precision_bits: u32,
    },
    /// Write an SVG figure
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        stretch_overlay: bool,
        #[arg(long)]
        labels: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
}

#[derive(Debug, Args)]
struct AuditArgs {
    file: PathBuf,
    /// Enable the unit-perimeter constant checks
    #[arg(long)]
    unit_perimeter: bool,
    /// Audit the hole-filled sub-patch of tiles inside a disk `cx,cy,r2`
    #[arg(long, value_parser = parse_disk)]
    disk: Option<Disk>,
    #[arg(long, conflicts_with = "expect_none")]
    expect_shared: bool,
    #[arg(long)]
    expect_none: bool,
    /// Treat n/a checks as failures
    #[arg(long)]
    require_applicable: bool,
}

#[derive(Debug, Clone)]
struct Disk {
    center: Point,
    r_sq: Rational,
}

#[derive(Debug, Subcommand)]
enum GenerateKind {
    /// Nested 3N+1 subdivision of a triangle
    Recursive {
        #[arg(long, value_parser = parse_triangle)]
        base: Triangle,
        #[arg(long, value_parser = parse_rational_arg)]
        t: Rational,
        #[arg(long)]
        depth: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Periodic patch of big and half-scale isosceles triangles
    Twoscale {
        #[arg(long, value_parser = parse_rational_arg, default_value = "2")]
        b: Rational,
        #[arg(long, value_parser = parse_rational_arg, default_value = "433/250")]
        h: Rational,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Triangulation of a convex polygon
    Convex {
        /// Polygon corners `x1,y1,x2,y2,...` in CCW order; defaults to
        /// `k` seeded rational points on the unit circle
        #[arg(long, value_parser = parse_polygon)]
        vertices: Option<Polygon>,
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::RandomSplit)]
        strategy: StrategyArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A triangle and its mirror image across side 0
    Pair {
        #[arg(long, value_parser = parse_triangle)]
        triangle: Triangle,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Fan,
    RandomSplit,
    Refined,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Line,
    Midpoint,
    Bisector,
}

#[derive(Debug, Clone)]
struct Polygon(Vec<Point>);

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(parse_rational_arg).collect()
}

fn points(vals: &[Rational]) -> Vec<Point> {
    vals.chunks(2).map(|c| Point::new(c[0].clone(), c[1].clone())).collect()
}

fn parse_triangle(s: &str) -> Result<Triangle, String> {
    let v = parse_list(s)?;
    if v.len() != 6 {
        return Err(format!("expected 6 coordinates, got {}", v.len()));
    }
    let [a, b, c]: [Point; 3] = points(&v).try_into().unwrap();
    Triangle::new(a, b, c).map_err(|e| e.to_string())
}

fn parse_polygon(s: &str) -> Result<Polygon, String> {
    let v = parse_list(s)?;
    if v.len() < 6 || v.len() % 2 != 0 {
        return Err("expected an even number (at least 6) of coordinates".into());
    }
    Ok(Polygon(points(&v)))
}

fn parse_disk(s: &str) -> Result<Disk, String> {
    let v = parse_list(s)?;
    match v.as_slice() {
        [cx, cy, r2] => Ok(Disk { center: Point::new(cx.clone(), cy.clone()), r_sq: r2.clone() }),
        _ => Err(format!("expected cx,cy,r2, got {} values", v.len())),
    }
}

/// A failed command: message for stderr and the exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, msg: msg.into() }
    }

    fn failed(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_FAILED, msg: msg.into() }
    }
}

/// Command output and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            if out.write_all(o.text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Generate { kind } => generate(kind),
        Command::Validate { file } => validate(&read_patch(&file)?),
        Command::Audit(args) => audit(&read_patch(&args.file)?, &args),
        Command::Stretches { file } => stretches(&read_patch(&file)?),
        Command::Stats { file, precision_bits } => stats(&read_patch(&file)?, precision_bits),
        Command::Render { file, output, stretch_overlay, labels, width } => {
            let p = read_patch(&file)?;
            let opts = SvgOptions { width_px: width, stretch_overlay, label_long_short: labels };
            let svg = render_svg(&p, &opts).map_err(invalid)?;
            write_file(&output, &svg)?;
            Ok(Outcome::ok(format!("wrote {} ({} polygons)\n", output.display(), p.len())))
        }
    }
}

fn read_patch(path: &Path) -> Result<TilingPatch, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_tiling(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn invalid(e: IncidenceError) -> Failure {
    match e {
        IncidenceError::InvalidPatch(rep) => Failure::failed(format!("not a valid tiling\n{}", rep.render())),
    }
}

fn generate(kind: GenerateKind) -> Result<Outcome, Failure> {
    let (patch, output) = match kind {
        GenerateKind::Recursive { base, t, depth, output } => {
            (gen_recursive_split(&RecursiveSplitSpec { base, t, depth }), output)
        }
        GenerateKind::Twoscale { b, h, m, n, output } => (gen_two_scale_periodic(&TwoScaleSpec { b, h, m, n }), output),
        GenerateKind::Convex { vertices, k, seed, strategy, output } => {
            let poly = match vertices {
                Some(Polygon(v)) => v,
                None if k >= 3 => circle_polygon(k, seed),
                None => return Err(Failure::usage("--k must be at least 3")),
            };
            let strategy = match strategy {
                StrategyArg::Fan => ConvexStrategy::Fan,
                StrategyArg::RandomSplit => ConvexStrategy::RandomSplit,
                StrategyArg::Refined => ConvexStrategy::Refined,
            };
            (gen_convex_triangulation(&poly, strategy, seed), output)
        }
        GenerateKind::Pair { triangle, kind, output } => {
            let kind = match kind {
                KindArg::Line => ReflectionKind::Line,
                KindArg::Midpoint => ReflectionKind::Midpoint,
                KindArg::Bisector => ReflectionKind::Bisector,
            };
            (gen_reflected_pair(&triangle, kind), output)
        }
    };
    let patch = patch.map_err(|e| match e {
        GeneratorError::Invalid(rep) => {
            Failure::failed(format!("generator produced an invalid patch\n{}", rep.render()))
        }
        other => Failure::usage(other.to_string()),
    })?;
    write_file(&output, &serialize_tiling(&patch))?;
    Ok(Outcome::ok(format!("wrote {} ({} tiles)\n", output.display(), patch.len())))
}

fn validate(p: &TilingPatch) -> Result<Outcome, Failure> {
    let rep = validate_patch(p);
    Ok(Outcome { text: rep.render(), code: if rep.ok { EXIT_OK } else { EXIT_FAILED } })
}

fn section(out: &mut String, name: &str, r: &Report) {
    writeln!(out, "[{name}]").unwrap();
    out.push_str(&r.render());
}

fn shared_report(g: &IncidenceGraph, args: &AuditArgs) -> Report {
    let pairs = shared_side_pairs(g);
    let mut r = Report::new();
    r.push(Check::info("shared_sides", pairs.len()));
    for s in &pairs {
        r.push(Check::info("shared_side", format!("{}.{} {}.{}", s.a.tile, s.a.side, s.b.tile, s.b.side)));
    }
    if args.expect_shared {
        r.push(Check::new("expect_shared", pairs.len(), Status::from_bool(!pairs.is_empty())));
    }
    if args.expect_none {
        r.push(Check::new("expect_none", pairs.len(), Status::from_bool(pairs.is_empty())));
    }
    r
}

fn audit(ambient: &TilingPatch, args: &AuditArgs) -> Result<Outcome, Failure> {
    let extraction = match &args.disk {
        Some(d) => Some(extract_disk(ambient, &d.center, &d.r_sq).map_err(|e| Failure::failed(e.to_string()))?),
        None => None,
    };
    let p = extraction.as_ref().map_or(ambient, |x| &x.patch);
    let g = match build_incidence(p) {
        Ok(g) => g,
        Err(IncidenceError::InvalidPatch(rep)) => {
            return Ok(Outcome { text: format!("[validation]\n{}", rep.render()), code: EXIT_FAILED })
        }
    };
    let st = decompose_stretches(&g);
    let labels = label_sides(&g, &st);
    let sections = [
        ("graph", graph_audit(&g)),
        ("shared", shared_report(&g, args)),
        ("vertices", eq1_audit(&g)),
        ("conditions", no_shared_side_conditions(&g, &st).report()),
        ("accounting", stretch_accounting(&g, p, &st)),
        ("w", w_audit(&g, p, &st, &labels, args.unit_perimeter).report),
    ];
    let mut text = String::new();
    let mut all = Report::new();
    for (name, r) in sections {
        section(&mut text, name, &r);
        all.extend(r);
    }
    if let Some(x) = &extraction {
        let r = asymptotic_audit(x, AsymptoticParams { unit_perimeter: args.unit_perimeter });
        section(&mut text, "asymptotic", &r);
        all.extend(r);
    }
    let ok = all.all_pass() && !(args.require_applicable && all.any_not_applicable());
    writeln!(text, "[result]\naudit = {}", if ok { "pass" } else { "fail" }).unwrap();
    Ok(Outcome { text, code: if ok { EXIT_OK } else { EXIT_FAILED } })
}

fn graph_of(p: &TilingPatch) -> Result<IncidenceGraph, Failure> {
    build_incidence(p).map_err(invalid)
}

fn stretches(p: &TilingPatch) -> Result<Outcome, Failure> {
    let g = graph_of(p)?;
    let st = decompose_stretches(&g);
    let labels = label_sides(&g, &st);
    let mut text = String::new();
    for s in &st {
        let (a, b) = s.span(&g);
        writeln!(text, "stretch = {s} span {a} {b}").unwrap();
    }
    writeln!(text, "stretches = {}", st.len()).unwrap();
    for class in [StretchClass::Tight, StretchClass::LooseProper, StretchClass::Improper] {
        writeln!(text, "{} = {}", class.name().to_lowercase(), st.iter().filter(|s| s.class == class).count()).unwrap();
    }
    for (size, n) in size_histogram(&st) {
        writeln!(text, "size_{size} = {n}").unwrap();
    }
    writeln!(text, "long_sides = {}", labels.count(SideLabel::Long)).unwrap();
    writeln!(text, "short_sides = {}", labels.count(SideLabel::Short)).unwrap();
    Ok(Outcome::ok(text))
}

fn stats(p: &TilingPatch, bits: u32) -> Result<Outcome, Failure> {
    if !(8..=4096).contains(&bits) {
        return Err(Failure::usage("--precision-bits must be in 8..=4096"));
    }
    let g = graph_of(p)?;
    let st = decompose_stretches(&g);
    let mut text = String::new();
    let counts = [
        ("t", g.t()),
        ("v", g.v()),
        ("e", g.e()),
        ("f", g.f()),
        ("v_bd", g.v_bd()),
        ("v_int", g.v_int()),
        ("v_star", g.v_star()),
        ("v_star_int", g.v_star_int()),
        ("e_full", g.e_full()),
        ("e_part", g.e_part()),
        ("shared_sides", shared_side_pairs(&g).len()),
        ("stretches", st.len()),
    ];
    for (k, v) in counts {
        writeln!(text, "{k} = {v}").unwrap();
    }
    writeln!(text, "area = {}", format_rational(&p.total_area())).unwrap();
    let (lo, hi) = side_length_range(p, bits);
    // decimal digits the relative precision supports
    let digits = (bits as u64 * 30103 / 100000) as u32;
    writeln!(text, "min_side = {}", lo.to_decimal(digits)).unwrap();
    writeln!(text, "max_side = {}", hi.to_decimal(digits)).unwrap();
    Ok(Outcome::ok(text))
}
