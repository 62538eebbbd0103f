//! Deterministic SVG rendering of wall diagrams in the (beta, alpha)
//! half-plane. All geometry is computed over exact rationals; coordinates
//! are converted to fixed-point decimals (6 places, round-half-even) only
//! when printed, so identical plot specifications yield byte-identical
//! output.

use std::fmt::Write as _;

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rat, Rat, Scalar};
use crate::tilt::{TiltPoint, Wall, WallKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotSpec<R: Scalar> {
    /// Visible beta interval, low < high.
    pub beta_range: (R, R),
    /// Visible alpha ceiling, > 0.
    pub alpha_max: R,
    pub walls: Vec<Wall<R>>,
    pub marks: Vec<TiltPoint<R>>,
    /// Drawn dashed when present.
    pub q_wall: Option<Wall<R>>,
}

const WIDTH: i64 = 800;
const HEIGHT: i64 = 400;

/// Round to 6 decimal places, half to even, and format with a fixed number
/// of digits so equal values always print identically.
fn fixed6(x: &Rat) -> String {
    let scale = BigInt::from(1_000_000i64);
    let scaled = x * Rat::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = scaled - Rat::from_integer(floor.clone());
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let n = if frac > half || (frac == half && floor.clone() % 2 != BigInt::zero()) {
        floor + 1
    } else {
        floor
    };
    let neg = n.is_negative();
    let abs = n.abs();
    let int_part = abs.clone() / &scale;
    let dec_part = abs % &scale;
    format!("{}{}.{:06}", if neg { "-" } else { "" }, int_part, dec_part)
}

/// Nearest integer to sqrt(x) for rational x >= 0 (used on values already
/// scaled by 10^12, so the result is sqrt(x) in millionths).
fn isqrt_nearest(x: &Rat) -> BigInt {
    let n = x.floor().to_integer().sqrt();
    // move up when (n + 1/2)^2 <= x, i.e. (2n + 1)^2 <= 4x
    let probe: BigInt = BigInt::from(2) * &n + 1;
    if Rat::from_integer(probe.clone() * probe) <= x * Rat::from_integer(BigInt::from(4)) {
        n + 1
    } else {
        n
    }
}

/// sqrt(x) rounded to the nearest millionth, as an exact rational.
fn sqrt_fixed(x: &Rat) -> Rat {
    let trillion = Rat::from_integer(BigInt::from(1_000_000_000_000i64));
    Rat::new(isqrt_nearest(&(x * trillion)), BigInt::from(1_000_000i64))
}

struct Frame {
    b0: Rat,
    a_max: Rat,
    scale_x: Rat,
    scale_y: Rat,
}

impl Frame {
    fn x(&self, beta: &Rat) -> Rat {
        (beta - &self.b0) * &self.scale_x
    }

    fn y(&self, alpha: &Rat) -> Rat {
        Rat::from_int(HEIGHT) - alpha * &self.scale_y
    }
}

pub fn render_svg<R: Scalar>(spec: &PlotSpec<R>) -> Result<String> {
    let b0 = spec.beta_range.0.to_rat();
    let b1 = spec.beta_range.1.to_rat();
    let a_max = spec.alpha_max.to_rat();
    if b0 >= b1 || !a_max.is_positive() {
        return Err(Error::Domain(
            "plot needs beta_range.low < beta_range.high and alpha_max > 0".into(),
        ));
    }
    let frame = Frame {
        scale_x: Rat::from_int(WIDTH) / (b1.clone() - b0.clone()),
        scale_y: Rat::from_int(HEIGHT) / a_max.clone(),
        b0,
        a_max,
    };

    // walls sorted by radius descending so inner arcs draw after outer ones
    let mut drawn: Vec<(&Wall<R>, bool)> = spec.walls.iter().map(|w| (w, false)).collect();
    if let Some(q) = &spec.q_wall {
        drawn.push((q, true));
    }
    drawn.sort_by(|(w1, d1), (w2, d2)| {
        let r1 = w1.radius_sq.as_ref().map(Scalar::to_rat);
        let r2 = w2.radius_sq.as_ref().map(Scalar::to_rat);
        r2.cmp(&r1)
            .then_with(|| w1.center_s.to_rat().cmp(&w2.center_s.to_rat()))
            .then_with(|| w1.left_class.emit().cmp(&w2.left_class.emit()))
            .then_with(|| d1.cmp(d2))
    });

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(svg, "<defs><clipPath id=\"plot\"><rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\"/></clipPath></defs>");
    let _ = writeln!(
        svg,
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\" stroke=\"black\"/>"
    );
    let _ = writeln!(svg, "<g clip-path=\"url(#plot)\">");

    // beta axis ticks at integers
    let mut beta_tick = frame.b0.ceil();
    let b1_rat = frame.b0.clone() + Rat::from_int(WIDTH) / frame.scale_x.clone();
    while beta_tick <= b1_rat {
        let x = fixed6(&frame.x(&beta_tick));
        let _ = writeln!(
            svg,
            "<line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"#cccccc\"/>",
            HEIGHT - 6,
            HEIGHT
        );
        let _ = writeln!(
            svg,
            "<text x=\"{x}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
            HEIGHT - 10,
            format_rat(&beta_tick)
        );
        beta_tick += Rat::from_int(1);
    }

    for (wall, dashed) in drawn {
        let dash = if dashed { " stroke-dasharray=\"6 4\"" } else { "" };
        let stroke = if dashed { "#b02020" } else { "#204080" };
        match wall.kind {
            WallKind::Vertical => {
                let x = fixed6(&frame.x(&wall.center_s.to_rat()));
                let _ = writeln!(
                    svg,
                    "<line x1=\"{x}\" y1=\"0\" x2=\"{x}\" y2=\"{HEIGHT}\" stroke=\"{stroke}\" stroke-width=\"1.5\" fill=\"none\"{dash}/>"
                );
            }
            WallKind::Semicircle => {
                let s = wall.center_s.to_rat();
                let rho_sq = wall
                    .radius_sq
                    .as_ref()
                    .ok_or(Error::VerticalWall)?
                    .to_rat();
                let rho = sqrt_fixed(&rho_sq);
                let x1 = fixed6(&frame.x(&(s.clone() - rho.clone())));
                let x2 = fixed6(&frame.x(&(s + rho.clone())));
                let rx = fixed6(&(rho.clone() * frame.scale_x.clone()));
                let ry = fixed6(&(rho * frame.scale_y.clone()));
                let _ = writeln!(
                    svg,
                    "<path d=\"M {x1} {HEIGHT} A {rx} {ry} 0 0 1 {x2} {HEIGHT}\" stroke=\"{stroke}\" stroke-width=\"1.5\" fill=\"none\"{dash}/>"
                );
            }
        }
    }

    for mark in &spec.marks {
        let x = fixed6(&frame.x(&mark.beta.to_rat()));
        let y = fixed6(&frame.y(&mark.alpha.to_rat()));
        let _ = writeln!(svg, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"black\"/>");
        let _ = writeln!(
            svg,
            "<text x=\"{x}\" y=\"{y}\" dx=\"5\" dy=\"-5\" font-size=\"11\">({}, {})</text>",
            format_rat(&mark.beta.to_rat()),
            format_rat(&mark.alpha.to_rat())
        );
    }

    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    let _ = frame.a_max; // the ceiling is encoded in scale_y
    Ok(svg)
}
