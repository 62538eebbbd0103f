//! Complete enumeration of candidate destabilizing classes for a fixed
//! class v, under the discriminant, rank, radius and positivity constraints,
//! together with a brute-force oracle sharing the identical check pipeline.
//!
//! Candidates are lattice classes w = (r, c, x) with r, c integers, 2x an
//! integer of the same parity as c (third-Chern integrality of an actual
//! sheaf class). Enumeration ranges are derived symbolically:
//!
//! * ranks from the higher-rank radius bound (applied to the quotient for
//!   negative ranks) once a positive radius floor is present, or from an
//!   explicit rank cap;
//! * c from the two-sided discriminant constraints 0 <= Delta(w) and
//!   0 <= Delta(v - w) with Delta(w) + Delta(v - w) <= Delta(v), which pin
//!   a quadratic in c to a bounded window;
//! * x from the same discriminant window at fixed (r, c).
//!
//! Every range is a superset of the admissible set; the shared per-candidate
//! check is the single source of truth, so the oracle equality
//! `enumerate = brute_force ∩ box` holds structurally.

use std::collections::BTreeMap;

use num::BigInt;

use crate::chern::HChern;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tilt::{wall_between, wall_invariants, wall_q, Wall, WallKind};

/// Constraint switches for enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallConstraints<R: Scalar> {
    /// Only emit walls with radius squared at least this value.
    pub rho_sq_min: R,
    /// Cap |rank| of candidates; required for finiteness when rho_sq_min = 0.
    pub rank_max: Option<i64>,
    /// Additionally require rho^2 >= rho_Q^2 of v (needs the full class).
    pub use_q_wall_floor: bool,
    /// Require twisted-degree positivity strictly at the wall endpoints,
    /// not just in the interior.
    pub strict_interval_positivity: bool,
    /// For torsion v = (0, 2c, ...): exclude rank ±1 candidates whose wall
    /// exceeds the wall of the comparison line bundle.
    pub rank0_line_bundle_filter: bool,
    /// For torsion v = (0, 2c, ...) pushed from a rank-two surface sheaf:
    /// cap the radius at c^2/4.
    pub rank_two_pushforward: bool,
}

impl<R: Scalar> Default for WallConstraints<R> {
    fn default() -> Self {
        WallConstraints {
            rho_sq_min: R::zero(),
            rank_max: None,
            use_q_wall_floor: false,
            strict_interval_positivity: false,
            rank0_line_bundle_filter: false,
            rank_two_pushforward: false,
        }
    }
}

/// A candidate destabilizer together with its wall and the record of which
/// rules it was checked against (all true for emitted candidates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateWall<R: Scalar> {
    pub wall: Wall<R>,
    /// The candidate subobject class (r, c, x), truncated.
    pub subclass: HChern<R>,
    pub checks: BTreeMap<&'static str, bool>,
}

/// All generating classes of one numerical wall (fixed center and radius).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallGroup<R: Scalar> {
    pub center_s: R,
    pub radius_sq: R,
    pub candidates: Vec<CandidateWall<R>>,
}

/// Inclusive integer ranges for the brute-force oracle; x2 counts 2x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub r: (i64, i64),
    pub c: (i64, i64),
    pub x2: (i64, i64),
}

impl SearchBox {
    pub fn contains(&self, r: i64, c: i64, x2: i64) -> bool {
        self.r.0 <= r && r <= self.r.1
            && self.c.0 <= c && c <= self.c.1
            && self.x2.0 <= x2 && x2 <= self.x2.1
    }
}

fn to_i64(n: BigInt) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Domain("derived enumeration bound exceeds i64".into()))
}

fn floor_i64<R: Scalar>(x: &R) -> Result<i64> {
    to_i64(x.to_rat().floor().to_integer())
}

fn ceil_i64<R: Scalar>(x: &R) -> Result<i64> {
    to_i64(x.to_rat().ceil().to_integer())
}

/// Smallest integer u >= 0 with u^2 >= x, for x >= 0.
fn sqrt_upper<R: Scalar>(x: &R) -> Result<i64> {
    let n = x.to_rat().ceil().to_integer();
    let u = n.sqrt();
    let u = if &u * &u < n { u + BigInt::from(1) } else { u };
    to_i64(u)
}

struct Engine<'a, R: Scalar> {
    v: HChern<R>,
    cons: &'a WallConstraints<R>,
    delta_v: R,
    rho_floor: R,
    rho_ceiling: Option<R>,
}

impl<'a, R: Scalar> Engine<'a, R> {
    fn new(v: &HChern<R>, cons: &'a WallConstraints<R>) -> Result<Self> {
        if v.space.dim() != 3 {
            return Err(Error::RequiresP3(v.space.to_string()));
        }
        let delta_v = v.delta();
        if delta_v.is_negative() {
            return Err(Error::Domain(format!("enumeration needs Delta(v) >= 0, got {delta_v}")));
        }
        if cons.rho_sq_min.is_negative() {
            return Err(Error::Domain(format!("rho_sq_min must be >= 0, got {}", cons.rho_sq_min)));
        }
        let mut rho_floor = cons.rho_sq_min.clone();
        if cons.use_q_wall_floor {
            if let Some(wq) = wall_q(v)? {
                if let Some(rq) = wq.radius_sq {
                    if rq > rho_floor {
                        rho_floor = rq;
                    }
                }
            }
        }
        let rho_ceiling = if cons.rank_two_pushforward && v.e(0).is_zero() {
            // v = (0, 2c, ...): radius at most c^2/4 = e1^2/16
            Some(v.e(1).clone() * v.e(1).clone() / R::from_int(16))
        } else {
            None
        };
        Ok(Engine { v: v.truncate(), cons, delta_v, rho_floor, rho_ceiling })
    }

    /// The full constraint pipeline for one lattice point; `Some` iff the
    /// candidate passes everything that is enabled.
    fn check(&self, r: i64, c: i64, x2: i64) -> Option<CandidateWall<R>> {
        // lattice membership: 2x must be an integer of the parity of c
        if (x2 - c) % 2 != 0 {
            return None;
        }
        let w = HChern::p3(vec![
            R::from_int(r),
            R::from_int(c),
            R::from_frac(x2, 2),
        ]);
        let mut checks: BTreeMap<&'static str, bool> = BTreeMap::new();
        let wall = match wall_between(&self.v, &w).ok()?? {
            wall if wall.kind == WallKind::Semicircle => wall,
            _ => return None,
        };
        checks.insert("wall_exists", true);
        let s = wall.center_s.clone();
        let rho_sq = wall.radius_sq.clone()?;

        if rho_sq < self.rho_floor {
            return None;
        }
        checks.insert("rho_floor", true);
        if let Some(ceiling) = &self.rho_ceiling {
            if rho_sq > *ceiling {
                return None;
            }
            checks.insert("rho_ceiling", true);
        }
        if let Some(rm) = self.cons.rank_max {
            if r.abs() > rm {
                return None;
            }
            checks.insert("rank_max", true);
        }

        // higher-rank radius bound, applied to the quotient for ranks below
        // the slope-ordering window
        let v0 = self.v.e(0).clone();
        if !v0.is_negative() {
            let rr = R::from_int(r);
            let t = if rr > v0 && r > 0 {
                Some(rr)
            } else if rr < v0 && r < 0 {
                Some(v0.clone() - rr)
            } else {
                None
            };
            if let Some(t) = t {
                let bound_lhs = R::from_int(4) * t.clone() * (t - v0.clone()) * rho_sq.clone();
                if bound_lhs > self.delta_v {
                    return None;
                }
            }
            checks.insert("rank_radius_bound", true);
        }

        let quot = HChern::p3(vec![
            self.v.e(0).clone() - w.e(0).clone(),
            self.v.e(1).clone() - w.e(1).clone(),
            self.v.e(2).clone() - w.e(2).clone(),
        ]);
        let dw = w.delta();
        let dq = quot.delta();
        if dw.is_negative() || dq.is_negative() || dw.clone() + dq.clone() > self.delta_v {
            return None;
        }
        checks.insert("delta_sub", true);
        checks.insert("delta_quot", true);
        checks.insert("delta_sum", true);

        if !self.interval_positive(&w, &s, &rho_sq) || !self.interval_positive(&quot, &s, &rho_sq) {
            return None;
        }
        checks.insert("interval_positivity", true);

        if self.cons.rank0_line_bundle_filter && v0.is_zero() && self.v.e(1).is_positive() {
            let target = if r == 1 {
                Some(&w)
            } else if r == -1 {
                Some(&quot)
            } else {
                None
            };
            if let Some(target) = target {
                let verdict = rank_one_admissibility(&self.v, target).ok()?;
                if !verdict.admissible {
                    return None;
                }
                checks.insert("line_bundle_filter", true);
            }
        }

        Some(CandidateWall { wall, subclass: w, checks })
    }

    /// Twisted degree c - r beta of the class stays nonnegative over the
    /// wall's beta-interval [s - rho, s + rho], strictly in the interior;
    /// the strict switch also forces strictness at the endpoints. Decided
    /// via (c - r s)^2 vs r^2 rho^2, no radicals.
    fn interval_positive(&self, w: &HChern<R>, s: &R, rho_sq: &R) -> bool {
        let r = w.e(0).clone();
        let c = w.e(1).clone();
        if r.is_zero() {
            // constant twisted degree; interior strictness needs c > 0
            return c.is_positive();
        }
        let a = c - r.clone() * s.clone();
        let a2 = a.clone() * a.clone();
        let r2rho = r.clone() * r * rho_sq.clone();
        if self.cons.strict_interval_positivity {
            a.is_positive() && a2 > r2rho
        } else {
            !a.is_negative() && a2 >= r2rho
        }
    }
}

/// Enumerate all candidate walls for v. Requires Delta(v) >= 0 and either a
/// positive radius floor (with nonnegative rank of v) or an explicit rank
/// cap; otherwise the search would be infinite.
pub fn enumerate_walls<R: Scalar>(
    v: &HChern<R>,
    cons: &WallConstraints<R>,
) -> Result<Vec<CandidateWall<R>>> {
    let engine = Engine::new(v, cons)?;
    let v0 = engine.v.e(0).clone();
    let floor_usable = engine.rho_floor.is_positive() && !v0.is_negative();
    if !floor_usable && cons.rank_max.is_none() {
        return Err(Error::InfiniteSearch(
            "need rho_sq_min > 0 (with rank(v) >= 0) or rank_max".into(),
        ));
    }
    if v0.is_zero() && engine.v.e(1).is_zero() {
        // no class of lower dimension produces a semicircular wall
        return Ok(Vec::new());
    }

    let (mut r_lo, mut r_hi) = if floor_usable {
        derive_rank_range(&v0, &engine.delta_v, &engine.rho_floor)?
    } else {
        let rm = cons.rank_max.unwrap();
        (-rm, rm)
    };
    if let Some(rm) = cons.rank_max {
        r_lo = r_lo.max(-rm);
        r_hi = r_hi.min(rm);
    }

    let mut out = Vec::new();
    for r in r_lo..=r_hi {
        if v0.is_zero() && r == 0 {
            continue;
        }
        let Some((c_lo, c_hi)) = derive_c_range(&engine.v, &engine.delta_v, r)? else {
            continue;
        };
        for c in c_lo..=c_hi {
            let (x2_lo, x2_hi) = derive_x2_range(&engine.v, &engine.delta_v, r, c)?;
            for x2 in x2_lo..=x2_hi {
                if let Some(cand) = engine.check(r, c, x2) {
                    out.push(cand);
                }
            }
        }
    }
    sort_candidates(&mut out);
    Ok(out)
}

/// Specialization to torsion classes v = (0, e1, ...) with e1 > 0; all
/// emitted walls are concentric at s = e2/e1.
pub fn enumerate_walls_torsion<R: Scalar>(
    v: &HChern<R>,
    cons: &WallConstraints<R>,
) -> Result<Vec<CandidateWall<R>>> {
    if !v.e(0).is_zero() || !v.e(1).is_positive() {
        return Err(Error::Domain(format!(
            "torsion enumeration needs (e0, e1) = (0, positive), got ({}, {})",
            v.e(0),
            v.e(1)
        )));
    }
    enumerate_walls(v, cons)
}

/// Triple loop over an explicit box, applying exactly the same checks as
/// `enumerate_walls`. Testing oracle.
pub fn brute_force_walls<R: Scalar>(
    v: &HChern<R>,
    search_box: &SearchBox,
    cons: &WallConstraints<R>,
) -> Result<Vec<CandidateWall<R>>> {
    let engine = Engine::new(v, cons)?;
    let mut out = Vec::new();
    for r in search_box.r.0..=search_box.r.1 {
        for c in search_box.c.0..=search_box.c.1 {
            for x2 in search_box.x2.0..=search_box.x2.1 {
                if let Some(cand) = engine.check(r, c, x2) {
                    out.push(cand);
                }
            }
        }
    }
    sort_candidates(&mut out);
    Ok(out)
}

/// Canonical output order: radius squared descending, then center, then the
/// candidate class.
fn sort_candidates<R: Scalar>(out: &mut [CandidateWall<R>]) {
    out.sort_by(|a, b| {
        let ra = a.wall.radius_sq.as_ref().unwrap();
        let rb = b.wall.radius_sq.as_ref().unwrap();
        rb.cmp(ra)
            .then_with(|| a.wall.center_s.cmp(&b.wall.center_s))
            .then_with(|| a.subclass.comps.cmp(&b.subclass.comps))
    })
}

/// Group a sorted candidate list by (center, radius squared).
pub fn group_walls<R: Scalar>(candidates: Vec<CandidateWall<R>>) -> Vec<WallGroup<R>> {
    let mut groups: Vec<WallGroup<R>> = Vec::new();
    for cand in candidates {
        let s = cand.wall.center_s.clone();
        let rho_sq = cand.wall.radius_sq.clone().unwrap();
        match groups.last_mut() {
            Some(g) if g.center_s == s && g.radius_sq == rho_sq => g.candidates.push(cand),
            _ => groups.push(WallGroup { center_s: s, radius_sq: rho_sq, candidates: vec![cand] }),
        }
    }
    groups
}

/// Ranks admissible under the radius bound rho^2 <= Delta(v)/(4 t (t - v0))
/// with floor m: iterate outward from the unconstrained window [0, v0].
fn derive_rank_range<R: Scalar>(v0: &R, delta_v: &R, m: &R) -> Result<(i64, i64)> {
    let four = R::from_int(4);
    let mut hi = floor_i64(v0)?.max(0);
    loop {
        let t = R::from_int(hi + 1);
        if t > *v0 && four.clone() * t.clone() * (t - v0.clone()) * m.clone() <= *delta_v {
            hi += 1;
        } else {
            break;
        }
    }
    let mut lo = ceil_i64(v0)?.min(0);
    loop {
        let r = R::from_int(lo - 1);
        let t = v0.clone() - r;
        if four.clone() * t.clone() * (t - v0.clone()) * m.clone() <= *delta_v {
            lo -= 1;
        } else {
            break;
        }
    }
    Ok((lo, hi))
}

/// Window for c at fixed rank r, from the discriminant constraints
/// Delta(w) in [0, Dv], Delta(v - w) in [0, Dv], Delta(w) + Delta(v-w) <= Dv.
/// Returns a superset; `None` marks a provably empty window.
fn derive_c_range<R: Scalar>(v: &HChern<R>, delta_v: &R, r: i64) -> Result<Option<(i64, i64)>> {
    let (v0, v1) = (v.e(0).clone(), v.e(1).clone());
    let rr = R::from_int(r);
    if r == 0 && v0.is_zero() {
        return Ok(None);
    }
    if r == 0 {
        // Delta(w) = c^2 <= Dv
        let u = sqrt_upper(delta_v)?;
        return Ok(Some((-u, u)));
    }
    if rr == v0 {
        // Delta(v - w) = (v1 - c)^2 <= Dv
        let u = sqrt_upper(delta_v)?;
        return Ok(Some((floor_i64(&v1)? - u, ceil_i64(&v1)? + u)));
    }
    // Substitute x from Delta(w) = theta1 in [0, Dv] into the quotient
    // constraint; collecting powers of c gives
    //   f(c) = (v0/r) c^2 - 2 v1 c + v1^2  in  [L, U].
    let two = R::from_int(2);
    let v2 = v.e(2).clone();
    let ratio = (v0.clone() - rr.clone()) / rr.clone();
    let base = two.clone() * (v0.clone() - rr.clone()) * v2;
    let shift = ratio.clone() * delta_v.clone();
    let (lo_shift, hi_shift) = if shift.is_negative() {
        (shift, R::zero())
    } else {
        (R::zero(), shift)
    };
    let l_bound = base.clone() + lo_shift;
    let u_bound = delta_v.clone() + base + hi_shift;
    let a = v0 / rr;
    if a.is_zero() {
        // linear in c: -2 v1 c + v1^2 in [L, U]; v1 != 0 since v is nontrivial
        let lo = (v1.clone() * v1.clone() - u_bound) / (two.clone() * v1.clone());
        let hi = (v1.clone() * v1.clone() - l_bound) / (two * v1.clone());
        return Ok(Some(if v1.is_positive() {
            (floor_i64(&lo)?, ceil_i64(&hi)?)
        } else {
            (floor_i64(&hi)?, ceil_i64(&lo)?)
        }));
    }
    // quadratic window: one of the two one-sided constraints is binding
    let (aa, bb, cc) = if a.is_positive() {
        // a c^2 - 2 v1 c + (v1^2 - U) <= 0
        (a, -(two.clone() * v1.clone()), v1.clone() * v1.clone() - u_bound)
    } else {
        // (-a) c^2 + 2 v1 c - (v1^2 - L) <= 0
        (-a, two.clone() * v1.clone(), l_bound - v1.clone() * v1.clone())
    };
    let disc = bb.clone() * bb.clone() - R::from_int(4) * aa.clone() * cc;
    if disc.is_negative() {
        return Ok(None);
    }
    let u = R::from_int(sqrt_upper(&disc)?);
    let lo = (-bb.clone() - u.clone()) / (two.clone() * aa.clone());
    let hi = (-bb + u) / (two * aa);
    Ok(Some((floor_i64(&lo)?, ceil_i64(&hi)?)))
}

/// Window for 2x at fixed (r, c), from Delta(w) in [0, Dv] (r != 0) or from
/// Delta(v - w) in [0, Dv] (r = 0, where v0 != 0).
fn derive_x2_range<R: Scalar>(v: &HChern<R>, delta_v: &R, r: i64, c: i64) -> Result<(i64, i64)> {
    let two = R::from_int(2);
    let cc = R::from_int(c);
    if r != 0 {
        let rr = R::from_int(r);
        let c2 = cc.clone() * cc;
        let a = (c2.clone() - delta_v.clone()) / (two.clone() * rr.clone());
        let b = c2 / (two * rr);
        let (lo, hi) = if r > 0 { (a, b) } else { (b, a) };
        Ok((floor_i64(&(lo * R::from_int(2)))?, ceil_i64(&(hi * R::from_int(2)))?))
    } else {
        let v0 = v.e(0).clone();
        let d1 = v.e(1).clone() - cc;
        let sq = d1.clone() * d1;
        // 2 v0 (v2 - x) in [sq - Dv, sq]
        let a = (sq.clone() - delta_v.clone()) / (two.clone() * v0.clone());
        let b = sq / (two * v0.clone());
        let (t_lo, t_hi) = if v0.is_positive() { (a, b) } else { (b, a) };
        let x_lo = v.e(2).clone() - t_hi;
        let x_hi = v.e(2).clone() - t_lo;
        Ok((floor_i64(&(x_lo * R::from_int(2)))?, ceil_i64(&(x_hi * R::from_int(2)))?))
    }
}

/// Verdict of the rank-one admissibility test against the comparison line
/// bundle O(x - c) for a torsion class v = (0, 2c, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneAdmissibility<R: Scalar> {
    pub admissible: bool,
    /// Radius squared of the locus of equal slopes with w (may be <= 0).
    pub rho_sq_candidate: R,
    /// Radius squared against the comparison line bundle.
    pub rho_sq_comparison: R,
    pub comparison_class: HChern<R>,
    pub candidate_wall: Option<Wall<R>>,
    pub comparison_wall: Option<Wall<R>>,
}

/// For torsion v = (0, 2c, d2) and a rank-one candidate w = (1, x, ...),
/// the wall of w must be contained in the wall of the line bundle O(x - c);
/// all walls of v are concentric, so containment is a radius comparison.
pub fn rank_one_admissibility<R: Scalar>(
    v: &HChern<R>,
    w: &HChern<R>,
) -> Result<RankOneAdmissibility<R>> {
    if !v.e(0).is_zero() || !v.e(1).is_positive() {
        return Err(Error::ShapeMismatch(format!(
            "rank_one_admissibility needs v = (0, positive, ...), got ({}, {})",
            v.e(0),
            v.e(1)
        )));
    }
    if !(w.e(0).clone() - R::one()).is_zero() {
        return Err(Error::ShapeMismatch(format!(
            "rank_one_admissibility needs rank-one w, got rank {}",
            w.e(0)
        )));
    }
    let half = R::from_frac(1, 2);
    let shift = w.e(1).clone() - v.e(1).clone() / R::from_int(2); // x - c
    let line = HChern::new(v.space, vec![
        R::one(),
        shift.clone(),
        half * shift.clone() * shift,
    ])?;
    let (_, rho_sq_candidate) = wall_invariants(v, w)?
        .ok_or_else(|| Error::Domain("degenerate candidate: no finite center".into()))?;
    let (_, rho_sq_comparison) = wall_invariants(v, &line)?
        .ok_or_else(|| Error::Domain("degenerate comparison line bundle".into()))?;
    Ok(RankOneAdmissibility {
        admissible: rho_sq_candidate <= rho_sq_comparison,
        rho_sq_candidate,
        rho_sq_comparison,
        candidate_wall: wall_between(v, w)?,
        comparison_wall: wall_between(v, &line)?,
        comparison_class: line,
    })
}
