//! A runnable registry of verification identities: every inline numeric
//! identity used by the discriminant-bound arguments, each recomputed from
//! library primitives and compared against its independently typed closed
//! form. The computing side never restates the closed form.

use std::collections::BTreeMap;

use num::Signed;

use crate::bounds::{rank_two_bound, surface_discriminant_bound, C1Mode};
use crate::chern::HChern;
use crate::error::{Error, Result};
use crate::scalar::{format_rat, Rat, Scalar};
use crate::surface::{
    bogomolov_hypersurface_check, delta_surface, push_to_p3, BogomolovVerdict, SurfaceContext,
};
use crate::tilt::{
    higher_rank_radius_bound, point_vs_wall, q_form, wall_between, wall_invariants, wall_q,
    PointPosition, TiltPoint,
};
use crate::walls::rank_one_admissibility;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LedgerStatus {
    Pass,
    Fail,
}

/// One named identity with the grid it was checked over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub name: &'static str,
    pub params: BTreeMap<String, String>,
    /// Representative computed value (first grid point), for display.
    pub computed: String,
    /// Representative expected value (first grid point), for display.
    pub expected: String,
    pub status: LedgerStatus,
    /// What the entry verifies, plus grid/hypothesis accounting.
    pub detail: String,
}

/// Parameter grids shared by the entries; the defaults cover the degree,
/// support-degree and twist ranges of the verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerParams {
    pub d_range: Vec<i64>,
    pub c_range: Vec<i64>,
    pub x_range: Vec<i64>,
}

impl Default for LedgerParams {
    fn default() -> Self {
        LedgerParams {
            d_range: (5..=12).collect(),
            c_range: (1..=8).collect(),
            x_range: (-3..=3).collect(),
        }
    }
}

pub const LEDGER_NAMES: [&str; 17] = [
    "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "V10", "V11", "V12", "V13", "V14",
    "V15", "V16", "V17",
];

/// Run the selected entries (all by default) over the given grids.
/// `filter` accepts an exact name or a trailing-star prefix like "V1*".
pub fn run_ledger(filter: Option<&str>, params: &LedgerParams) -> Result<Vec<LedgerEntry>> {
    let selected: Vec<&'static str> = match filter {
        None => LEDGER_NAMES.to_vec(),
        Some(f) => {
            let names: Vec<&'static str> = if let Some(prefix) = f.strip_suffix('*') {
                LEDGER_NAMES.iter().copied().filter(|n| n.starts_with(prefix)).collect()
            } else {
                LEDGER_NAMES.iter().copied().filter(|n| *n == f).collect()
            };
            if names.is_empty() {
                return Err(Error::Domain(format!("no ledger entry matches {f:?}")));
            }
            names
        }
    };
    selected.into_iter().map(|name| run_entry(name, params)).collect()
}

fn run_entry(name: &'static str, p: &LedgerParams) -> Result<LedgerEntry> {
    match name {
        "V1" => v1(p),
        "V2" => v2(p),
        "V3" => v3(p),
        "V4" => v4(p),
        "V5" => v5(p),
        "V6" => v6(p),
        "V7" => v7(p),
        "V8" => v8(p),
        "V9" => v9(p),
        "V10" => v10(p),
        "V11" => v11(p),
        "V12" => v12(p),
        "V13" => v13(p),
        "V14" => v14(p),
        "V15" => v15(p),
        "V16" => v16(p),
        "V17" => v17(p),
        _ => Err(Error::Domain(format!("unknown ledger entry {name}"))),
    }
}

struct EntryBuilder {
    name: &'static str,
    params: BTreeMap<String, String>,
    computed: Option<String>,
    expected: Option<String>,
    failed: Option<String>,
    points: usize,
    outside: usize,
    what: &'static str,
}

impl EntryBuilder {
    fn new(name: &'static str, what: &'static str) -> Self {
        EntryBuilder {
            name,
            params: BTreeMap::new(),
            computed: None,
            expected: None,
            failed: None,
            points: 0,
            outside: 0,
            what,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    fn record(&mut self, computed: String, expected: String, label: &str) {
        self.points += 1;
        if self.computed.is_none() {
            self.computed = Some(computed.clone());
            self.expected = Some(expected.clone());
        }
        if computed != expected && self.failed.is_none() {
            self.failed = Some(format!("{label}: computed {computed}, expected {expected}"));
        }
    }

    fn record_eq(&mut self, computed: &Rat, expected: &Rat, label: &str) {
        self.record(format_rat(computed), format_rat(expected), label);
    }

    fn record_bool(&mut self, computed: bool, label: &str) {
        self.record(computed.to_string(), "true".to_string(), label);
    }

    fn outside_hypothesis(&mut self) {
        self.outside += 1;
    }

    fn finish(self) -> LedgerEntry {
        let mut detail = format!("{}; {} grid points", self.what, self.points);
        if self.outside > 0 {
            detail.push_str(&format!(
                ", {} outside the stated hypotheses (identity not asserted there)",
                self.outside
            ));
        }
        let status = match &self.failed {
            None if self.points > 0 => LedgerStatus::Pass,
            None => LedgerStatus::Fail,
            Some(msg) => {
                detail.push_str(&format!("; FIRST MISMATCH {msg}"));
                LedgerStatus::Fail
            }
        };
        LedgerEntry {
            name: self.name,
            params: self.params,
            computed: self.computed.unwrap_or_default(),
            expected: self.expected.unwrap_or_default(),
            status,
            detail,
        }
    }
}

fn rint(n: i64) -> Rat {
    Rat::from_int(n)
}

fn rfrac(n: i64, d: i64) -> Rat {
    Rat::from_frac(n, d)
}

/// e-grid: the boundary value and one half-integer lattice step either side.
fn boundary_grid(boundary: Rat) -> Vec<Rat> {
    let step = rfrac(1, 2);
    vec![boundary.clone() - step.clone(), boundary.clone(), boundary + step]
}

fn emit(v: &HChern<Rat>) -> String {
    v.emit()
}

/// Pushforward of (2, -H, e): closed form (0, 2d, -d^2 - d, d^3/3 + d^2/2 + e).
fn v1(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V1", "pushforward of rank-two classes with c1 = -H");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        for e in boundary_grid(rint(1) - rfrac(d, 2)) {
            let computed = push_to_p3(&ctx, &ctx.class_points(2, -1, e.clone()))?;
            let expected = HChern::p3(vec![
                rint(0),
                rint(2 * d),
                rint(-d * d - d),
                rfrac(d * d * d, 3) + rfrac(d * d, 2) + e.clone(),
            ]);
            b.record(emit(&computed), emit(&expected), &format!("d={d} e={e}"));
        }
    }
    Ok(b.finish())
}

/// Pushforward of (2, 0, e): closed form (0, 2d, -d^2, d^3/3 + e).
fn v2(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V2", "pushforward of rank-two classes with c1 = 0");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        for e in boundary_grid(rint(-d)) {
            let computed = push_to_p3(&ctx, &ctx.class_points(2, 0, e.clone()))?;
            let expected = HChern::p3(vec![
                rint(0),
                rint(2 * d),
                rint(-d * d),
                rfrac(d * d * d, 3) + e.clone(),
            ]);
            b.record(emit(&computed), emit(&expected), &format!("d={d} e={e}"));
        }
    }
    Ok(b.finish())
}

/// Pushforward of (2, xH, zH^2): closed form (0, 2c, -c^2 + cx, c^3/3 - c^2 x/2 + cz).
fn v3(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V3", "pushforward of general rank-two classes");
    b.param("d", format!("{:?}", p.d_range));
    b.param("x", format!("{:?}", p.x_range));
    let z_grid = [rint(-2), rfrac(-1, 2), rint(0), rfrac(3, 2)];
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let c = rint(d);
        for &x in &p.x_range {
            for z in &z_grid {
                let computed = push_to_p3(&ctx, &ctx.class_h_squared(2, x, z.clone()))?;
                let xr = rint(x);
                let expected = HChern::p3(vec![
                    rint(0),
                    rint(2) * c.clone(),
                    -c.clone() * c.clone() + c.clone() * xr.clone(),
                    c.clone() * c.clone() * c.clone() / rint(3)
                        - c.clone() * c.clone() * xr / rint(2)
                        + c.clone() * z.clone(),
                ]);
                b.record(emit(&computed), emit(&expected), &format!("d={d} x={x} z={z}"));
            }
        }
    }
    Ok(b.finish())
}

/// rho_Q^2 of the c1 = -H pushforward: (d^3 - 3d + 12e)/(4d), with the
/// chain rho_Q^2 >= (d^3 - 9d + 12)/(4d) > d^2/9 above the boundary.
fn v4(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V4", "radius of the Q-wall, c1 = -H family, with its lower chain");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let boundary = rint(1) - rfrac(d, 2);
        for e in boundary_grid(boundary.clone()) {
            let v = push_to_p3(&ctx, &ctx.class_points(2, -1, e.clone()))?;
            let wq = wall_q(&v)?.ok_or_else(|| Error::Domain("degenerate Q-wall".into()))?;
            let computed = wq.radius_sq.ok_or(Error::VerticalWall)?;
            let expected = rfrac(d * d * d - 3 * d, 4 * d) + rint(12) * e.clone() / rint(4 * d);
            b.record_eq(&computed, &expected, &format!("d={d} e={e}"));
            if e >= boundary {
                let floor = rfrac(d * d * d - 9 * d + 12, 4 * d);
                let rank3 = higher_rank_radius_bound(&v, 3)?;
                b.record_bool(computed >= floor && floor > rank3, &format!("chain d={d} e={e}"));
            } else {
                b.outside_hypothesis();
            }
        }
    }
    Ok(b.finish())
}

/// rho_Q^2 of the c1 = 0 pushforward: (d^3 + 12e)/(4d) >= d^2/4 - 3 > d^2/9.
fn v5(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V5", "radius of the Q-wall, c1 = 0 family, with its lower chain");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let boundary = rint(-d);
        for e in boundary_grid(boundary.clone()) {
            let v = push_to_p3(&ctx, &ctx.class_points(2, 0, e.clone()))?;
            let wq = wall_q(&v)?.ok_or_else(|| Error::Domain("degenerate Q-wall".into()))?;
            let computed = wq.radius_sq.ok_or(Error::VerticalWall)?;
            let expected = rfrac(d * d * d, 4 * d) + rint(12) * e.clone() / rint(4 * d);
            b.record_eq(&computed, &expected, &format!("d={d} e={e}"));
            if e >= boundary {
                let floor = rfrac(d * d, 4) - rint(3);
                let rank3 = higher_rank_radius_bound(&v, 3)?;
                b.record_bool(computed >= floor && floor > rank3, &format!("chain d={d} e={e}"));
            } else {
                b.outside_hypothesis();
            }
        }
    }
    Ok(b.finish())
}

/// Q at (beta, alpha) = (-1, 0) and (-d, 0) for the c1 = -H pushforward:
/// both equal -2d^3 + 4d^2 - 12de, which is negative above the boundary.
fn v6(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V6", "negativity of Q along the c1 = -H family");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let boundary = rint(1) - rfrac(d, 2);
        for e in boundary_grid(boundary.clone()) {
            let v = push_to_p3(&ctx, &ctx.class_points(2, -1, e.clone()))?;
            let q1 = q_form(&v, &TiltPoint::new(rint(-1), rint(0)))?;
            let q2 = q_form(&v, &TiltPoint::new(rint(-d), rint(0)))?;
            let expected = rint(-2 * d * d * d + 4 * d * d) - rint(12 * d) * e.clone();
            b.record_eq(&q1, &expected, &format!("d={d} e={e} beta=-1"));
            b.record_eq(&q2, &expected, &format!("d={d} e={e} beta=-d"));
            if e >= boundary {
                let ceiling = rint(-2 * d * d * d + 10 * d * d - 12 * d);
                b.record_bool(
                    q1 <= ceiling && ceiling < rint(0),
                    &format!("chain d={d} e={e}"),
                );
            } else {
                b.outside_hypothesis();
            }
        }
    }
    Ok(b.finish())
}

/// Q at (-1, 0) and (-d + 1, 0) for the c1 = 0 pushforward:
/// both equal -4d^3 + 4d^2 - 12de, negative above the boundary.
fn v7(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V7", "negativity of Q along the c1 = 0 family");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let boundary = rint(-d);
        for e in boundary_grid(boundary.clone()) {
            let v = push_to_p3(&ctx, &ctx.class_points(2, 0, e.clone()))?;
            let q1 = q_form(&v, &TiltPoint::new(rint(-1), rint(0)))?;
            let q2 = q_form(&v, &TiltPoint::new(rint(-d + 1), rint(0)))?;
            let expected = rint(-4 * d * d * d + 4 * d * d) - rint(12 * d) * e.clone();
            b.record_eq(&q1, &expected, &format!("d={d} e={e} beta=-1"));
            b.record_eq(&q2, &expected, &format!("d={d} e={e} beta=-d+1"));
            if e >= boundary {
                let ceiling = rint(-4 * d * d * d + 16 * d * d);
                b.record_bool(q1 <= ceiling && ceiling < rint(0), &format!("chain d={d} e={e}"));
            } else {
                b.outside_hypothesis();
            }
        }
    }
    Ok(b.finish())
}

/// Rank-one admissibility radii for torsion v = (0, 2c, d2):
/// (2c^2 - 2cx + d2)^2/(4c^2) against (4c^2 x^2 - 4c d2 x - 8c^2 y + d2^2)/(4c^2),
/// and the equivalence of admissibility with y >= -c^2/2 + cx - d2/2.
fn v8(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V8", "rank-one comparison-wall radii for torsion classes");
    b.param("c", format!("{:?}", p.c_range));
    b.param("x", format!("{:?}", p.x_range));
    let d2_grid = [-7i64, -3, 0, 4];
    let y_grid = [-2i64, -1, 0, 1, 2];
    for &c in &p.c_range {
        for &d2 in &d2_grid {
            let v = HChern::p3(vec![rint(0), rint(2 * c), rint(d2)]);
            for &x in &p.x_range {
                for &y in &y_grid {
                    let w = HChern::p3(vec![rint(1), rint(x), rfrac(x * x, 2) - rint(y)]);
                    let verdict = rank_one_admissibility(&v, &w)?;
                    let four_c2 = rint(4 * c * c);
                    let comp = rint(2 * c * c - 2 * c * x + d2);
                    b.record_eq(
                        &verdict.rho_sq_comparison,
                        &(comp.clone() * comp / four_c2.clone()),
                        &format!("comparison c={c} d2={d2} x={x}"),
                    );
                    let cand = rint(4 * c * c * x * x - 4 * c * d2 * x - 8 * c * c * y)
                        + rint(d2) * rint(d2);
                    b.record_eq(
                        &verdict.rho_sq_candidate,
                        &(cand / four_c2),
                        &format!("candidate c={c} d2={d2} x={x} y={y}"),
                    );
                    let threshold = rfrac(-c * c, 2) + rint(c * x) - rfrac(d2, 2);
                    b.record_bool(
                        verdict.admissible == (rint(y) >= threshold),
                        &format!("equivalence c={c} d2={d2} x={x} y={y}"),
                    );
                }
            }
        }
    }
    Ok(b.finish())
}

/// Wall centers for rank ±1 objects against lower-dimensional subobjects
/// and the bracketing line bundles: y/c, -c/2 - d/c and c/2 + d/c.
fn v9(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V9", "wall centers bounding torsion subobjects and quotients");
    b.param("c", format!("{:?}", p.c_range));
    let d_grid = [-4i64, 0, 3, 9];
    let y_grid = [-3i64, 0, 2];
    for &c in &p.c_range {
        for &dd in &d_grid {
            for &y in &y_grid {
                let f = HChern::p3(vec![rint(1), rint(0), rint(-dd)]);
                let t = HChern::p3(vec![rint(0), rint(c), rint(y)]);
                let (s_ft, _) = wall_invariants(&f, &t)?.ok_or(Error::VerticalWall)?;
                b.record_eq(&s_ft, &rfrac(y, c), &format!("sub-center c={c} d={dd} y={y}"));
                let o_minus = HChern::p3(vec![rint(1), rint(-c), rfrac(c * c, 2)]);
                let (s_fo, _) = wall_invariants(&f, &o_minus)?.ok_or(Error::VerticalWall)?;
                b.record_eq(
                    &s_fo,
                    &(rfrac(-c, 2) - rfrac(dd, c)),
                    &format!("sub-line c={c} d={dd}"),
                );
                let g = HChern::p3(vec![rint(-1), rint(0), rint(dd)]);
                let (s_gt, _) = wall_invariants(&g, &t)?.ok_or(Error::VerticalWall)?;
                b.record_eq(&s_gt, &rfrac(y, c), &format!("quot-center c={c} d={dd} y={y}"));
                let o_plus = HChern::p3(vec![rint(1), rint(c), rfrac(c * c, 2)]);
                let (s_go, _) = wall_invariants(&g, &o_plus)?.ok_or(Error::VerticalWall)?;
                b.record_eq(
                    &s_go,
                    &(rfrac(c, 2) + rfrac(dd, c)),
                    &format!("quot-line c={c} d={dd}"),
                );
            }
        }
    }
    Ok(b.finish())
}

/// Q at (-1/2, 0) and (-d + 1/2, 0) for the c1 = 0 pushforward:
/// both equal -2d^3 + d^2 - 12de, negative for d >= 6 above e = -d + 1.
fn v10(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V10", "negativity of Q at half-integer twists, c1 = 0 family");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        for e in boundary_grid(rint(-d + 1)) {
            let v = push_to_p3(&ctx, &ctx.class_points(2, 0, e.clone()))?;
            let q1 = q_form(&v, &TiltPoint::new(rfrac(-1, 2), rint(0)))?;
            let q2 = q_form(&v, &TiltPoint::new(rint(-d) + rfrac(1, 2), rint(0)))?;
            let expected = rint(-2 * d * d * d + d * d) - rint(12 * d) * e.clone();
            b.record_eq(&q1, &expected, &format!("d={d} e={e} beta=-1/2"));
            b.record_eq(&q2, &expected, &format!("d={d} e={e} beta=-d+1/2"));
            if d >= 6 && e >= rint(-d + 1) {
                let ceiling = rint(-2 * d * d * d + 13 * d * d - 12 * d);
                b.record_bool(q1 <= ceiling && ceiling < rint(0), &format!("chain d={d} e={e}"));
            } else {
                b.outside_hypothesis();
            }
        }
    }
    Ok(b.finish())
}

/// The degree-five special case: Q_{0,-1} = Q_{0,-4} = -60e - 400, and the
/// rank-two branch radii y + 15/4 (twist -1) and y + 35/4 (twist +1).
fn v11(_p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V11", "degree-five rank-two destabilizer radii");
    b.param("d", 5);
    let ctx = SurfaceContext::<Rat>::new(5)?;
    for e in [rint(-6), rfrac(-11, 2), rint(-5), rfrac(-9, 2), rint(-4)] {
        let v = push_to_p3(&ctx, &ctx.class_points(2, 0, e.clone()))?;
        let q1 = q_form(&v, &TiltPoint::new(rint(-1), rint(0)))?;
        let q2 = q_form(&v, &TiltPoint::new(rint(-4), rint(0)))?;
        let expected = rint(-60) * e.clone() - rint(400);
        b.record_eq(&q1, &expected, &format!("e={e} beta=-1"));
        b.record_eq(&q2, &expected, &format!("e={e} beta=-4"));
    }
    let v = push_to_p3(&ctx, &ctx.class_points(2, 0, rint(-5)))?;
    for y in [rfrac(-11, 2), rfrac(-3, 2), rfrac(-1, 2), rfrac(1, 2)] {
        for (x, offset) in [(-1i64, rfrac(15, 4)), (1, rfrac(35, 4))] {
            let f = HChern::p3(vec![rint(2), rint(x), y.clone()]);
            let (_, rho_sq) = wall_invariants(&v, &f)?.ok_or(Error::VerticalWall)?;
            b.record_eq(&rho_sq, &(y.clone() + offset), &format!("x={x} y={y}"));
        }
    }
    Ok(b.finish())
}

/// The Bogomolov witness point (alpha, beta) = (c/2, x/2 - c/2): the sign
/// of Q there equals the sign of x^2 - 4z.
fn v12(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V12", "sign of Q at the hypersurface witness point");
    b.param("c", format!("{:?}", p.c_range));
    b.param("x", format!("{:?}", p.x_range));
    let z_grid = [rint(-3), rint(-1), rfrac(-1, 2), rint(0), rfrac(1, 2), rint(1), rint(4)];
    for &c in &p.c_range {
        let ctx = SurfaceContext::<Rat>::new(c)?;
        for &x in &p.x_range {
            for z in &z_grid {
                let verdict = bogomolov_hypersurface_check(&ctx, x, z.clone())?;
                let (holds, witness) = match &verdict {
                    BogomolovVerdict::Holds { witness, .. } => (true, witness),
                    BogomolovVerdict::Violated { witness, .. } => (false, witness),
                };
                b.record_bool(
                    *witness == TiltPoint::new(rfrac(x, 2) - rfrac(c, 2), rfrac(c, 2)),
                    &format!("witness c={c} x={x}"),
                );
                let disc = rint(x * x) - rint(4) * z.clone();
                b.record_bool(
                    holds == !disc.is_negative(),
                    &format!("sign c={c} x={x} z={z}"),
                );
            }
        }
    }
    Ok(b.finish())
}

/// On the surface itself: the rank-four radius bound 3/32 - 1/(8d) stays
/// strictly below the destabilizing wall radius 1/4 - 1/d + 1/d^2.
fn v13(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V13", "surface-side rank bound against the extremal wall");
    b.param("d", format!("{:?}", p.d_range));
    for &d in &p.d_range {
        if d < 5 {
            b.outside_hypothesis();
            continue;
        }
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let e = ctx.class_points(2, -1, rint(1) - rfrac(d, 2));
        let bound = higher_rank_radius_bound(&e, 4 * d)?;
        b.record_eq(&bound, &(rfrac(3, 32) - rfrac(1, 8 * d)), &format!("bound d={d}"));
        let line = ctx.class_points(1, -1, rfrac(d, 2));
        let wall = wall_between(&e, &line)?.ok_or(Error::VerticalWall)?;
        let rho_sq = wall.radius_sq.ok_or(Error::VerticalWall)?;
        b.record_eq(
            &rho_sq,
            &(rfrac(1, 4) - rfrac(1, d) + rint(1) / rint(d * d)),
            &format!("wall d={d}"),
        );
        b.record_bool(bound < rho_sq, &format!("inequality d={d}"));
        // consistency with the discriminant bound table
        let (delta, e_max) = surface_discriminant_bound::<Rat>(d, C1Mode::MinusH)?;
        b.record_eq(&delta_surface(&ctx, &e)?, &delta, &format!("delta d={d}"));
        b.record_bool(*e.e(2) == e_max, &format!("e_max d={d}"));
    }
    Ok(b.finish())
}

/// Rank-two destabilizer radii in the c1 = -H family: rho^2 = d^2/4 + y - 1/4,
/// and the quotient identity ch(G(d+1)) = (-2, -1, 1/2, d/2 + e - z + 2/3)
/// on the y = -1/2 branch (3/2-shifted analogue on the y = -3/2 branch).
fn v14(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V14", "c1 = -H destabilizer radii and twisted quotients");
    b.param("d", format!("{:?}", p.d_range));
    let z_grid = [rfrac(5, 6), rint(0), rfrac(-7, 6)];
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let e = rint(1) - rfrac(d, 2);
        let v = push_to_p3(&ctx, &ctx.class_points(2, -1, e.clone()))?;
        for y in [rfrac(-3, 2), rfrac(-1, 2), rfrac(1, 2)] {
            let f = HChern::p3(vec![rint(2), rint(-1), y.clone()]);
            let (_, rho_sq) = wall_invariants(&v, &f)?.ok_or(Error::VerticalWall)?;
            b.record_eq(
                &rho_sq,
                &(rfrac(d * d, 4) + y.clone() - rfrac(1, 4)),
                &format!("radius d={d} y={y}"),
            );
        }
        for z in &z_grid {
            for (y, e1_shift, e3_closed) in [
                (rfrac(-1, 2), rfrac(1, 2), rfrac(d, 2) + e.clone() - z.clone() + rfrac(2, 3)),
                (rfrac(-3, 2), rfrac(3, 2), rfrac(3 * d, 2) + e.clone() - z.clone() + rfrac(5, 3)),
            ] {
                let f = HChern::p3(vec![rint(2), rint(-1), y, z.clone()]);
                let g = HChern::p3(vec![
                    v.e(0).clone() - f.e(0).clone(),
                    v.e(1).clone() - f.e(1).clone(),
                    v.e(2).clone() - f.e(2).clone(),
                    v.e3()?.clone() - f.e3()?.clone(),
                ]);
                let computed = g.tensor_line_bundle(d + 1);
                let expected =
                    HChern::p3(vec![rint(-2), rint(-1), e1_shift, e3_closed]);
                b.record(emit(&computed), emit(&expected), &format!("quotient d={d} z={z}"));
            }
        }
    }
    Ok(b.finish())
}

/// c1 = 0 family: ch(G(d)) = (-2, 0, 1, d + e - z) on the y = -1 branch,
/// and the exact window y in {0, -1, -2} from the Q-radius chain.
fn v15(p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V15", "c1 = 0 twisted quotients and the destabilizer window");
    b.param("d", format!("{:?}", p.d_range));
    let z_grid = [rint(0), rint(2), rfrac(-5, 6)];
    for &d in &p.d_range {
        let ctx = SurfaceContext::<Rat>::new(d)?;
        let boundary = rint(-d + 1);
        for e in boundary_grid(boundary.clone()) {
            let v = push_to_p3(&ctx, &ctx.class_points(2, 0, e.clone()))?;
            for z in &z_grid {
                let f = HChern::p3(vec![rint(2), rint(0), rint(-1), z.clone()]);
                let g = HChern::p3(vec![
                    v.e(0).clone() - f.e(0).clone(),
                    v.e(1).clone() - f.e(1).clone(),
                    v.e(2).clone() - f.e(2).clone(),
                    v.e3()?.clone() - f.e3()?.clone(),
                ]);
                let computed = g.tensor_line_bundle(d);
                let expected = HChern::p3(vec![
                    rint(-2),
                    rint(0),
                    rint(1),
                    rint(d) + e.clone() - z.clone(),
                ]);
                b.record(emit(&computed), emit(&expected), &format!("quotient d={d} e={e} z={z}"));
            }
        }
        // window: integers y with rho_Q^2 (at the integrality boundary)
        // <= d^2/4 + y and Delta(F) = -4y >= 0
        let v = push_to_p3(&ctx, &ctx.class_points(2, 0, boundary))?;
        let wq = wall_q(&v)?.ok_or(Error::VerticalWall)?;
        let rho_q = wq.radius_sq.ok_or(Error::VerticalWall)?;
        b.record_eq(&rho_q, &rfrac(d * d * d - 12 * d + 12, 4 * d), &format!("floor d={d}"));
        let mut window = Vec::new();
        for y in -6..=2i64 {
            let f = HChern::p3(vec![rint(2), rint(0), rint(y)]);
            let (_, rho_sq) = wall_invariants(&v, &f)?.ok_or(Error::VerticalWall)?;
            if rho_sq >= rho_q && !f.delta().is_negative() {
                window.push(y);
            }
        }
        b.record(format!("{window:?}"), "[-2, -1, 0]".to_string(), &format!("window d={d}"));
    }
    Ok(b.finish())
}

/// Spot checks for the rank-two example class (2, -1, -3/2): the rank-three
/// radius bound 7/12 against wall radius^2 9/4, with endpoints -4 and -1.
fn v16(_p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new("V16", "rank-two example wall and its rank bound");
    let v = HChern::p3(vec![rint(2), rint(-1), rfrac(-3, 2)]);
    let bound = higher_rank_radius_bound(&v, 3)?;
    b.record_eq(&bound, &rfrac(7, 12), "rank-three bound");
    let w = HChern::p3(vec![rint(-1), rint(4), rint(-8)]);
    let wall = wall_between(&v, &w)?.ok_or(Error::VerticalWall)?;
    let rho_sq = wall.radius_sq.clone().ok_or(Error::VerticalWall)?;
    b.record_eq(&rho_sq, &rfrac(9, 4), "wall radius^2");
    b.record_bool(bound < rho_sq, "bound below wall");
    for beta in [rint(-4), rint(-1)] {
        let pos = point_vs_wall(&wall, &TiltPoint::new(beta.clone(), rint(0)))?;
        b.record_bool(pos == PointPosition::On, &format!("endpoint beta={beta}"));
    }
    Ok(b.finish())
}

/// The rank-two bound table coincides with the largest sixth-integer e of
/// non-positive Euler characteristic, shape by shape (the trivial shape
/// (0, 0) is the documented exception and is checked against its table value).
fn v17(_p: &LedgerParams) -> Result<LedgerEntry> {
    let mut b = EntryBuilder::new(
        "V17",
        "table bounds vs Euler characteristic (shape (0,0) excepted)",
    );
    let shapes = [
        (rint(0), rint(-1)),
        (rint(0), rint(-2)),
        (rint(-1), rfrac(-1, 2)),
        (rint(-1), rfrac(-3, 2)),
    ];
    for (c, d2) in shapes {
        let probe = HChern::p3(vec![rint(2), c.clone(), d2.clone(), rint(0)]);
        let table = rank_two_bound(&probe)?.bound;
        // scan the sixth-integer lattice around the table value
        let mut best: Option<Rat> = None;
        let mut k = -24i64;
        while k <= 24 {
            let e = table.clone() + rfrac(k, 6);
            let v = HChern::p3(vec![rint(2), c.clone(), d2.clone(), e.clone()]);
            if !v.euler_char_p3()?.is_positive() {
                best = Some(best.map_or(e.clone(), |m| if e > m { e.clone() } else { m }));
            }
            k += 1;
        }
        let best = best.ok_or_else(|| Error::Domain("no admissible e found".into()))?;
        b.record_eq(&best, &table, &format!("shape ({}, {})", format_rat(&c), format_rat(&d2)));
    }
    // the trivial shape: bound 0 with a positive Euler characteristic there
    let trivial = HChern::p3(vec![rint(2), rint(0), rint(0), rint(0)]);
    let verdict = rank_two_bound(&trivial)?;
    b.record_eq(&verdict.bound, &rint(0), "shape (0, 0) table value");
    b.record_bool(trivial.euler_char_p3()?.is_positive(), "shape (0, 0) is the chi exception");
    Ok(b.finish())
}
