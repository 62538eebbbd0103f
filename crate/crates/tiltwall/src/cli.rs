//! Command-line front end: argument parsing, human-readable and JSON
//! output, and subcommand routing over the library. All rational I/O uses
//! the exact "a" / "a/b" syntax; nothing is rendered as a decimal except
//! SVG coordinates.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::bounds::{
    rank_minus_two_bound, rank_one_bound, rank_two_bound, surface_discriminant_bound,
    BoundVerdict, C1Mode,
};
use crate::chern::{HChern, Space};
use crate::error::{Error, Result};
use crate::ledger::{run_ledger, LedgerEntry, LedgerParams, LedgerStatus};
use crate::scalar::{format_rat, Rat, Scalar};
use crate::surface::{bogomolov_hypersurface_check, push_to_p3, BogomolovVerdict, SurfaceContext};
use crate::svg::{render_svg, PlotSpec};
use crate::tilt::{q_form, wall_between, wall_q, TiltPoint, Wall, WallKind};
use crate::walls::{
    brute_force_walls, enumerate_walls, enumerate_walls_torsion, CandidateWall, SearchBox,
    WallConstraints,
};

pub const JSON_SCHEMA: &str = "tiltwall/1";

#[derive(Parser)]
#[command(
    name = "tiltwall",
    version,
    about = "Exact-arithmetic tilt-stability calculator",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ClassArg {
    /// Ambient space: "p3" or "surface:d=<int>".
    #[arg(long, default_value = "p3")]
    space: String,
    /// H-multiplied Chern character "e0,e1,e2[,e3]".
    #[arg(long, allow_hyphen_values = true)]
    v: String,
}

impl ClassArg {
    fn parse(&self) -> Result<HChern<Rat>> {
        HChern::parse(Space::parse(&self.space)?, &self.v)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Twist a class by a rational parameter beta.
    Twist {
        #[command(flatten)]
        class: ClassArg,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Tensor a class with the k-th power of the hyperplane bundle.
    Tensor {
        #[command(flatten)]
        class: ClassArg,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Shifted derived dual of a full class.
    Dual {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Discriminant e1^2 - 2 e0 e2.
    Delta {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Euler characteristic of a full class (P3 only).
    Chi {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Hilbert polynomial of a full class (P3 only).
    Hilb {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Numerical wall between two classes.
    Wall {
        #[command(flatten)]
        class: ClassArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// The wall where the quadratic form Q degenerates.
    Wallq {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Evaluate the quadratic form Q at a point "beta,alpha".
    Qform {
        #[command(flatten)]
        class: ClassArg,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Push a surface class forward to P3.
    Push {
        /// Surface degree, "d=<int>".
        #[arg(long)]
        surface: String,
        /// Surface class "r,x,e": rank, c1 coefficient of H, point count.
        #[arg(long = "chS", allow_hyphen_values = true)]
        ch_s: String,
    },
    /// Third-Chern or discriminant bounds.
    Bounds {
        /// P3 class "e0,e1,e2,e3" (rank-routed to the matching table).
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        /// Surface degree "d=<int>" for the discriminant bound.
        #[arg(long)]
        surface: Option<String>,
        /// "minus-h" or "zero"; used with --surface.
        #[arg(long)]
        c1: Option<String>,
    },
    /// Bogomolov-type sign check on a degree-d hypersurface.
    Bogomolov {
        /// Surface degree, "d=<int>".
        #[arg(long)]
        surface: String,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Wall enumeration.
    Walls {
        #[command(subcommand)]
        cmd: WallsCmd,
    },
    /// The verification ledger.
    Ledger {
        #[command(subcommand)]
        cmd: LedgerCmd,
    },
    /// Render an SVG wall diagram.
    Plot {
        #[command(flatten)]
        class: ClassArg,
        /// Destabilizer classes; each contributes one wall.
        #[arg(long, allow_hyphen_values = true)]
        w: Vec<String>,
        /// Include the degeneration wall of Q (dashed).
        #[arg(long)]
        q: bool,
        /// Visible beta interval "low..high".
        #[arg(long, default_value = "-6..1", allow_hyphen_values = true)]
        beta_range: String,
        /// Visible alpha ceiling.
        #[arg(long, default_value = "3")]
        alpha_max: String,
        /// Marked points "beta,alpha".
        #[arg(long, allow_hyphen_values = true)]
        mark: Vec<String>,
        /// Write the SVG here instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum WallsCmd {
    /// Enumerate candidate destabilizing walls for a class.
    Enum {
        #[command(flatten)]
        class: ClassArg,
        /// Radius-squared floor "a/b".
        #[arg(long, allow_hyphen_values = true)]
        rho_min: Option<String>,
        /// Floor the radius at the degeneration wall of Q.
        #[arg(long)]
        q_floor: bool,
        /// Treat v as the pushforward of a rank-two surface sheaf:
        /// cap the radius and keep only low-rank candidates' walls inside
        /// the matching line-bundle wall.
        #[arg(long)]
        torsion_rank2: bool,
        /// Cap |rank| of candidates.
        #[arg(long)]
        rank_max: Option<i64>,
        /// Require endpoint (not just interior) positivity of the twisted degree.
        #[arg(long)]
        strict_endpoints: bool,
        /// Explicit search box "r=a..b,c=a..b,x2=a..b" (exhaustive scan).
        #[arg(long = "box", allow_hyphen_values = true)]
        search_box: Option<String>,
    },
}

#[derive(Subcommand)]
enum LedgerCmd {
    /// Run ledger entries and report pass/fail per entry.
    Run {
        /// Entry name or prefix pattern like "V1*".
        #[arg(long)]
        filter: Option<String>,
    },
}

// ---------------------------------------------------------------------------
// JSON data-transfer types; rationals travel as exact "a/b" strings.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDto {
    pub kind: String,
    pub s: String,
    pub rho_sq: Option<String>,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub endpoints: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDto {
    pub subclass: String,
    pub wall: WallDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDto {
    pub admissible: bool,
    pub binding: String,
    pub bound: String,
    pub extremal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntryDto {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub computed: String,
    pub expected: String,
    pub status: String,
    pub detail: String,
}

/// Exact rational square root, if one exists.
fn rat_sqrt_exact(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    let root = Rat::new(n, d);
    (&root * &root == *x).then_some(root)
}

impl WallDto {
    pub fn from_wall(w: &Wall<Rat>) -> Self {
        let endpoints = match (&w.kind, &w.radius_sq) {
            (WallKind::Semicircle, Some(r2)) => rat_sqrt_exact(r2).map(|rho| {
                (
                    format_rat(&(w.center_s.clone() - rho.clone())),
                    format_rat(&(w.center_s.clone() + rho)),
                )
            }),
            _ => None,
        };
        WallDto {
            kind: match w.kind {
                WallKind::Semicircle => "semicircle".into(),
                WallKind::Vertical => "vertical".into(),
            },
            s: format_rat(&w.center_s),
            rho_sq: w.radius_sq.as_ref().map(format_rat),
            left: w.left_class.emit(),
            right: w.right_class.emit(),
            endpoints,
        }
    }

    fn describe(&self) -> String {
        let mut line = format!("kind = {}  s = {}", self.kind, self.s);
        if let Some(r) = &self.rho_sq {
            line.push_str(&format!("  rho^2 = {r}"));
        }
        if let Some((b1, b2)) = &self.endpoints {
            line.push_str(&format!("  beta-endpoints = {b1}, {b2}"));
        }
        line
    }
}

impl BoundDto {
    pub fn from_verdict(v: &BoundVerdict<Rat>) -> Self {
        BoundDto {
            admissible: v.admissible,
            binding: v.binding.clone(),
            bound: format_rat(&v.bound),
            extremal: v.extremal,
            note: v.extremal_note.clone(),
        }
    }
}

impl LedgerEntryDto {
    pub fn from_entry(e: &LedgerEntry) -> Self {
        LedgerEntryDto {
            name: e.name.to_string(),
            params: e.params.clone(),
            computed: e.computed.clone(),
            expected: e.expected.clone(),
            status: match e.status {
                LedgerStatus::Pass => "pass".into(),
                LedgerStatus::Fail => "fail".into(),
            },
            detail: e.detail.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Argument helpers.

fn parse_rat(text: &str) -> Result<Rat> {
    <Rat as Scalar>::parse(text).ok_or_else(|| Error::Parse(format!("bad rational {text:?}")))
}

fn parse_point(text: &str) -> Result<TiltPoint<Rat>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected \"beta,alpha\", got {text:?}")));
    }
    Ok(TiltPoint::new(parse_rat(parts[0].trim())?, parse_rat(parts[1].trim())?))
}

fn parse_surface_degree(text: &str) -> Result<i64> {
    let value = text
        .strip_prefix("d=")
        .ok_or_else(|| Error::Parse(format!("expected \"d=<int>\", got {text:?}")))?;
    value
        .parse()
        .map_err(|_| Error::Parse(format!("bad surface degree {value:?}")))
}

fn parse_range_i64(text: &str) -> Result<(i64, i64)> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected \"a..b\", got {text:?}")))?;
    let lo = lo.parse().map_err(|_| Error::Parse(format!("bad integer {lo:?}")))?;
    let hi = hi.parse().map_err(|_| Error::Parse(format!("bad integer {hi:?}")))?;
    Ok((lo, hi))
}

fn parse_box(text: &str) -> Result<SearchBox> {
    let mut r = None;
    let mut c = None;
    let mut x2 = None;
    for part in text.split(',') {
        let (key, range) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad box component {part:?}")))?;
        let range = parse_range_i64(range)?;
        match key.trim() {
            "r" => r = Some(range),
            "c" => c = Some(range),
            "x2" => x2 = Some(range),
            other => return Err(Error::Parse(format!("unknown box axis {other:?}"))),
        }
    }
    match (r, c, x2) {
        (Some(r), Some(c), Some(x2)) => Ok(SearchBox { r, c, x2 }),
        _ => Err(Error::Parse("box needs r=a..b,c=a..b,x2=a..b".into())),
    }
}

fn parse_rat_range(text: &str) -> Result<(Rat, Rat)> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected \"low..high\", got {text:?}")))?;
    Ok((parse_rat(lo)?, parse_rat(hi)?))
}

fn emit_json<W: Write>(out: &mut W, command: &str, result: serde_json::Value) {
    let doc = serde_json::json!({
        "schema": JSON_SCHEMA,
        "command": command,
        "result": result,
    });
    let _ = writeln!(out, "{doc}");
}

// ---------------------------------------------------------------------------
// Dispatch.

/// Run the CLI on `argv` (including the program name), writing all output
/// to `out`. Returns the process exit status: 0 success, 1 usage error,
/// 2 domain error, 3 ledger failure.
pub fn run<I, S, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = write!(out, "{}", err.render());
            return if err.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(out, "error: {err}");
            match err {
                Error::Parse(_) => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<i32> {
    match &cli.cmd {
        Cmd::Twist { class, beta } => {
            let v = class.parse()?.twist(&parse_rat(beta)?);
            if cli.json {
                emit_json(out, "twist", serde_json::json!({ "class": v.emit() }));
            } else {
                let _ = writeln!(out, "{}", v.emit());
            }
            Ok(0)
        }
        Cmd::Tensor { class, k } => {
            let v = class.parse()?.tensor_line_bundle(*k);
            if cli.json {
                emit_json(out, "tensor", serde_json::json!({ "class": v.emit() }));
            } else {
                let _ = writeln!(out, "{}", v.emit());
            }
            Ok(0)
        }
        Cmd::Dual { class } => {
            let v = class.parse()?.shifted_dual()?;
            if cli.json {
                emit_json(out, "dual", serde_json::json!({ "class": v.emit() }));
            } else {
                let _ = writeln!(out, "{}", v.emit());
            }
            Ok(0)
        }
        Cmd::Delta { class } => {
            let d = class.parse()?.delta();
            if cli.json {
                emit_json(out, "delta", serde_json::json!({ "delta": format_rat(&d) }));
            } else {
                let _ = writeln!(out, "{}", format_rat(&d));
            }
            Ok(0)
        }
        Cmd::Chi { class } => {
            let chi = class.parse()?.euler_char_p3()?;
            if cli.json {
                emit_json(out, "chi", serde_json::json!({ "chi": format_rat(&chi) }));
            } else {
                let _ = writeln!(out, "{}", format_rat(&chi));
            }
            Ok(0)
        }
        Cmd::Hilb { class } => {
            let poly = class.parse()?.hilbert_poly()?;
            let coeffs: Vec<String> = poly.coeffs.iter().map(format_rat).collect();
            if cli.json {
                emit_json(out, "hilb", serde_json::json!({ "coeffs": coeffs }));
            } else {
                let terms: Vec<String> = coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i == 0 { c.clone() } else { format!("({c}) m^{i}") })
                    .collect();
                let _ = writeln!(out, "p(m) = {}", terms.join(" + "));
            }
            Ok(0)
        }
        Cmd::Wall { class, w } => {
            let v = class.parse()?;
            let w = HChern::parse(v.space, w)?;
            let wall = wall_between(&v, &w)?;
            report_wall(cli, out, "wall", wall.as_ref());
            Ok(0)
        }
        Cmd::Wallq { class } => {
            let wall = wall_q(&class.parse()?)?;
            report_wall(cli, out, "wallq", wall.as_ref());
            Ok(0)
        }
        Cmd::Qform { class, at } => {
            let q = q_form(&class.parse()?, &parse_point(at)?)?;
            if cli.json {
                emit_json(out, "qform", serde_json::json!({ "q": format_rat(&q) }));
            } else {
                let _ = writeln!(out, "{}", format_rat(&q));
            }
            Ok(0)
        }
        Cmd::Push { surface, ch_s } => {
            let ctx = SurfaceContext::<Rat>::new(parse_surface_degree(surface)?)?;
            let parts: Vec<&str> = ch_s.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("expected \"r,x,e\", got {ch_s:?}")));
            }
            let int = |t: &str| -> Result<i64> {
                t.trim().parse().map_err(|_| Error::Parse(format!("bad integer {t:?}")))
            };
            let v_s = ctx.class_points(int(parts[0])?, int(parts[1])?, parse_rat(parts[2].trim())?);
            let pushed = push_to_p3(&ctx, &v_s)?;
            if cli.json {
                emit_json(out, "push", serde_json::json!({ "class": pushed.emit() }));
            } else {
                let _ = writeln!(out, "{}", pushed.emit());
            }
            Ok(0)
        }
        Cmd::Bounds { v, surface, c1 } => run_bounds(cli, out, v, surface, c1),
        Cmd::Bogomolov { surface, x, z } => {
            let ctx = SurfaceContext::<Rat>::new(parse_surface_degree(surface)?)?;
            let verdict = bogomolov_hypersurface_check(&ctx, *x, parse_rat(z)?)?;
            let (holds, witness, q) = match &verdict {
                BogomolovVerdict::Holds { witness, q_value } => (true, witness, q_value),
                BogomolovVerdict::Violated { witness, q_value } => (false, witness, q_value),
            };
            if cli.json {
                emit_json(
                    out,
                    "bogomolov",
                    serde_json::json!({
                        "holds": holds,
                        "witness": { "beta": format_rat(&witness.beta), "alpha": format_rat(&witness.alpha) },
                        "q": format_rat(q),
                    }),
                );
            } else {
                let _ = writeln!(
                    out,
                    "{} at (beta, alpha) = ({}, {}): Q = {}",
                    if holds { "holds" } else { "violated" },
                    format_rat(&witness.beta),
                    format_rat(&witness.alpha),
                    format_rat(q)
                );
            }
            Ok(0)
        }
        Cmd::Walls { cmd: WallsCmd::Enum { class, rho_min, q_floor, torsion_rank2, rank_max, strict_endpoints, search_box } } => {
            let v = class.parse()?;
            let mut cons = WallConstraints::<Rat>::default();
            if let Some(r) = rho_min {
                cons.rho_sq_min = parse_rat(r)?;
            }
            cons.use_q_wall_floor = *q_floor;
            cons.rank_max = *rank_max;
            cons.strict_interval_positivity = *strict_endpoints;
            if *torsion_rank2 {
                cons.rank_two_pushforward = true;
                cons.rank0_line_bundle_filter = true;
            }
            let candidates = match search_box {
                Some(text) => brute_force_walls(&v, &parse_box(text)?, &cons)?,
                None if *torsion_rank2 => enumerate_walls_torsion(&v, &cons)?,
                None => enumerate_walls(&v, &cons)?,
            };
            let dtos: Vec<CandidateDto> = candidates
                .iter()
                .map(|c: &CandidateWall<Rat>| CandidateDto {
                    subclass: c.subclass.emit(),
                    wall: WallDto::from_wall(&c.wall),
                })
                .collect();
            if cli.json {
                emit_json(
                    out,
                    "walls enum",
                    serde_json::json!({ "count": dtos.len(), "candidates": dtos }),
                );
            } else {
                for dto in &dtos {
                    let _ = writeln!(out, "w = ({})  {}", dto.subclass, dto.wall.describe());
                }
                let _ = writeln!(out, "{} candidate(s)", dtos.len());
            }
            Ok(0)
        }
        Cmd::Ledger { cmd: LedgerCmd::Run { filter } } => {
            let entries = run_ledger(filter.as_deref(), &LedgerParams::default())?;
            let failed = entries.iter().filter(|e| e.status == LedgerStatus::Fail).count();
            if cli.json {
                let dtos: Vec<LedgerEntryDto> =
                    entries.iter().map(LedgerEntryDto::from_entry).collect();
                emit_json(
                    out,
                    "ledger run",
                    serde_json::json!({ "failed": failed, "entries": dtos }),
                );
            } else {
                for e in &entries {
                    let _ = writeln!(
                        out,
                        "{:4} {}  {}",
                        e.name,
                        match e.status {
                            LedgerStatus::Pass => "PASS",
                            LedgerStatus::Fail => "FAIL",
                        },
                        e.detail
                    );
                }
                let _ = writeln!(out, "{} entries, {} failed", entries.len(), failed);
            }
            Ok(if failed > 0 { 3 } else { 0 })
        }
        Cmd::Plot { class, w, q, beta_range, alpha_max, mark, out: out_file } => {
            let v = class.parse()?;
            let mut walls = Vec::new();
            for text in w {
                let other = HChern::parse(v.space, text)?;
                if let Some(wall) = wall_between(&v, &other)? {
                    walls.push(wall);
                }
            }
            let q_wall = if *q { wall_q(&v)? } else { None };
            let mut marks = Vec::new();
            for text in mark {
                marks.push(parse_point(text)?);
            }
            let spec = PlotSpec {
                beta_range: parse_rat_range(beta_range)?,
                alpha_max: parse_rat(alpha_max)?,
                walls,
                marks,
                q_wall,
            };
            let svg = render_svg(&spec)?;
            match out_file {
                Some(path) => std::fs::write(path, &svg)
                    .map_err(|e| Error::Domain(format!("cannot write {path}: {e}")))?,
                None => {
                    let _ = out.write_all(svg.as_bytes());
                }
            }
            Ok(0)
        }
    }
}

fn report_wall<W: Write>(cli: &Cli, out: &mut W, command: &str, wall: Option<&Wall<Rat>>) {
    match wall {
        Some(wall) => {
            let dto = WallDto::from_wall(wall);
            if cli.json {
                emit_json(out, command, serde_json::to_value(&dto).unwrap_or_default());
            } else {
                let _ = writeln!(out, "{}", dto.describe());
            }
        }
        None => {
            if cli.json {
                emit_json(out, command, serde_json::Value::Null);
            } else {
                let _ = writeln!(out, "no wall (proportional or degenerate classes)");
            }
        }
    }
}

fn run_bounds<W: Write>(
    cli: &Cli,
    out: &mut W,
    v: &Option<String>,
    surface: &Option<String>,
    c1: &Option<String>,
) -> Result<i32> {
    match (v, surface) {
        (Some(v), None) => {
            let class: HChern<Rat> = HChern::parse(Space::P3, v)?;
            let two = Rat::from_int(2);
            let verdict = if class.e(0).abs().is_one() {
                rank_one_bound(&class)?
            } else if *class.e(0) == two {
                rank_two_bound(&class)?
            } else if *class.e(0) == -two {
                rank_minus_two_bound(&class)?
            } else {
                return Err(Error::ShapeMismatch(format!(
                    "no bound table for rank {}",
                    class.e(0)
                )));
            };
            let dto = BoundDto::from_verdict(&verdict);
            if cli.json {
                emit_json(out, "bounds", serde_json::to_value(&dto).unwrap_or_default());
            } else {
                let _ = writeln!(
                    out,
                    "{}  bound = {}  rule = {}{}{}",
                    if dto.admissible { "admissible" } else { "inadmissible" },
                    dto.bound,
                    dto.binding,
                    if dto.extremal { "  (extremal)" } else { "" },
                    dto.note.as_deref().map(|n| format!("  [{n}]")).unwrap_or_default()
                );
            }
            Ok(0)
        }
        (None, Some(surface)) => {
            let d = parse_surface_degree(surface)?;
            let mode = match c1.as_deref() {
                Some("minus-h") => C1Mode::MinusH,
                Some("zero") => C1Mode::Zero,
                other => {
                    return Err(Error::Parse(format!(
                        "--c1 must be \"minus-h\" or \"zero\", got {other:?}"
                    )))
                }
            };
            let (bound, e_max) = surface_discriminant_bound::<Rat>(d, mode)?;
            if cli.json {
                emit_json(
                    out,
                    "bounds",
                    serde_json::json!({
                        "delta_min": format_rat(&bound),
                        "e_max": format_rat(&e_max),
                    }),
                );
            } else {
                let _ = writeln!(
                    out,
                    "delta_min = {}  e_max = {}",
                    format_rat(&bound),
                    format_rat(&e_max)
                );
            }
            Ok(0)
        }
        _ => Err(Error::Parse("bounds needs exactly one of --v or --surface".into())),
    }
}
