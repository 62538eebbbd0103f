//! Geometry of the (beta, alpha) upper half-plane: tilt slopes, numerical
//! walls with exact center and radius squared, the quadratic form Q and its
//! wall, plus exact point/wall and wall/wall position tests.
//!
//! Radii are stored squared throughout; every comparison that would involve
//! a square root is rewritten as a sign-safe squared comparison.

use std::cmp::Ordering;

use crate::chern::{HChern, Slope};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of the upper half-plane. `alpha` must be positive except for
/// operations that explicitly accept the closure alpha = 0 (`q_form`,
/// `point_vs_wall`, `tilt_slope_closure`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiltPoint<R: Scalar> {
    pub beta: R,
    pub alpha: R,
}

impl<R: Scalar> TiltPoint<R> {
    pub fn new(beta: R, alpha: R) -> Self {
        TiltPoint { beta, alpha }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallKind {
    Semicircle,
    Vertical,
}

/// A numerical wall. Semicircles carry center `s` and `radius_sq` > 0;
/// vertical walls carry only the line position in `s`. The two defining
/// classes are stored truncated to (e0, e1, e2), in a canonical order so
/// that the wall of (v, w) equals the wall of (w, v) structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Wall<R: Scalar> {
    pub kind: WallKind,
    pub center_s: R,
    pub radius_sq: Option<R>,
    pub left_class: HChern<R>,
    pub right_class: HChern<R>,
}

impl<R: Scalar> Wall<R> {
    pub fn is_semicircle(&self) -> bool {
        self.kind == WallKind::Semicircle
    }

    fn require_semicircle(&self) -> Result<(&R, &R)> {
        match (&self.kind, &self.radius_sq) {
            (WallKind::Semicircle, Some(r)) => Ok((&self.center_s, r)),
            _ => Err(Error::VerticalWall),
        }
    }
}

/// Tilt slope nu_{alpha,beta}(v) = (e2^beta - (alpha^2/2) e0) / e1^beta,
/// infinite when the denominator vanishes. Requires alpha > 0.
pub fn tilt_slope<R: Scalar>(v: &HChern<R>, p: &TiltPoint<R>) -> Result<Slope<R>> {
    if !p.alpha.is_positive() {
        return Err(Error::Domain(format!("tilt_slope needs alpha > 0, got {}", p.alpha)));
    }
    Ok(tilt_slope_closure(v, p))
}

/// Tilt slope on the closure alpha >= 0 (callers opting out of the strict
/// alpha > 0 domain).
pub fn tilt_slope_closure<R: Scalar>(v: &HChern<R>, p: &TiltPoint<R>) -> Slope<R> {
    let tw = v.twist(&p.beta);
    if tw.e(1).is_zero() {
        return Slope::Infinite;
    }
    let half_a2 = R::from_frac(1, 2) * p.alpha.clone() * p.alpha.clone();
    Slope::Finite((tw.e(2).clone() - half_a2 * tw.e(0).clone()) / tw.e(1).clone())
}

/// The numerical wall where the tilt slopes of v and w agree.
///
/// With kappa = v0w1 - w0v1, mu2 = v0w2 - w0v2, mu1 = v1w2 - w1v2:
/// kappa != 0 gives the semicircle s = mu2/kappa, rho^2 = s^2 - 2 mu1/kappa
/// (returned only when rho^2 > 0); kappa = 0 != mu2 gives the vertical line
/// beta = mu1/mu2; otherwise the slopes are proportional and there is no wall.
pub fn wall_between<R: Scalar>(v: &HChern<R>, w: &HChern<R>) -> Result<Option<Wall<R>>> {
    if v.space != w.space {
        return Err(Error::AmbientMismatch(v.space.to_string(), w.space.to_string()));
    }
    let kappa = v.e(0).clone() * w.e(1).clone() - w.e(0).clone() * v.e(1).clone();
    let mu2 = v.e(0).clone() * w.e(2).clone() - w.e(0).clone() * v.e(2).clone();
    let mu1 = v.e(1).clone() * w.e(2).clone() - w.e(1).clone() * v.e(2).clone();

    let (left, right) = canonical_pair(v.truncate(), w.truncate());
    if !kappa.is_zero() {
        let s = mu2 / kappa.clone();
        let rho_sq = s.clone() * s.clone() - R::from_int(2) * mu1 / kappa;
        if !rho_sq.is_positive() {
            return Ok(None);
        }
        return Ok(Some(Wall {
            kind: WallKind::Semicircle,
            center_s: s,
            radius_sq: Some(rho_sq),
            left_class: left,
            right_class: right,
        }));
    }
    if !mu2.is_zero() {
        return Ok(Some(Wall {
            kind: WallKind::Vertical,
            center_s: mu1 / mu2,
            radius_sq: None,
            left_class: left,
            right_class: right,
        }));
    }
    Ok(None)
}

/// Raw cross-product invariants of the locus where the slopes of v and w
/// agree: `Some((s, rho_sq))` whenever the rank cross-term is nonzero, with
/// no positivity filter on rho_sq. Useful where a "wall" of non-positive
/// squared radius still carries information (its center).
pub fn wall_invariants<R: Scalar>(v: &HChern<R>, w: &HChern<R>) -> Result<Option<(R, R)>> {
    if v.space != w.space {
        return Err(Error::AmbientMismatch(v.space.to_string(), w.space.to_string()));
    }
    let kappa = v.e(0).clone() * w.e(1).clone() - w.e(0).clone() * v.e(1).clone();
    if kappa.is_zero() {
        return Ok(None);
    }
    let mu2 = v.e(0).clone() * w.e(2).clone() - w.e(0).clone() * v.e(2).clone();
    let mu1 = v.e(1).clone() * w.e(2).clone() - w.e(1).clone() * v.e(2).clone();
    let s = mu2 / kappa.clone();
    let rho_sq = s.clone() * s.clone() - R::from_int(2) * mu1 / kappa;
    Ok(Some((s, rho_sq)))
}

fn canonical_pair<R: Scalar>(a: HChern<R>, b: HChern<R>) -> (HChern<R>, HChern<R>) {
    if a.comps <= b.comps {
        (a, b)
    } else {
        (b, a)
    }
}

/// The wall W_Q of v, i.e. the wall between v and (e1, 2e2, 3e3).
pub fn wall_q<R: Scalar>(v: &HChern<R>) -> Result<Option<Wall<R>>> {
    if v.space.dim() != 3 {
        return Err(Error::RequiresP3(v.space.to_string()));
    }
    let e3 = v.e3()?.clone();
    let w = HChern {
        space: v.space,
        comps: vec![
            v.e(1).clone(),
            R::from_int(2) * v.e(2).clone(),
            R::from_int(3) * e3,
        ],
    };
    wall_between(v, &w)
}

/// The quadratic form Q_{alpha,beta}(v) = alpha^2 Delta(v) + 4 (e2^beta)^2
/// - 6 e1^beta e3^beta. Accepts the closure alpha >= 0.
pub fn q_form<R: Scalar>(v: &HChern<R>, p: &TiltPoint<R>) -> Result<R> {
    if v.space.dim() != 3 {
        return Err(Error::RequiresP3(v.space.to_string()));
    }
    v.e3()?;
    if p.alpha.is_negative() {
        return Err(Error::Domain(format!("q_form needs alpha >= 0, got {}", p.alpha)));
    }
    let tw = v.twist(&p.beta);
    let e3 = tw.e3()?.clone();
    Ok(p.alpha.clone() * p.alpha.clone() * v.delta()
        + R::from_int(4) * tw.e(2).clone() * tw.e(2).clone()
        - R::from_int(6) * tw.e(1).clone() * e3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointPosition {
    Inside,
    On,
    Outside,
}

/// Position of a point relative to a semicircular wall, comparing
/// (beta - s)^2 + alpha^2 with rho^2 exactly. Accepts alpha >= 0.
pub fn point_vs_wall<R: Scalar>(wall: &Wall<R>, p: &TiltPoint<R>) -> Result<PointPosition> {
    let (s, rho_sq) = wall.require_semicircle()?;
    if p.alpha.is_negative() {
        return Err(Error::Domain(format!("point_vs_wall needs alpha >= 0, got {}", p.alpha)));
    }
    let db = p.beta.clone() - s.clone();
    let lhs = db.clone() * db + p.alpha.clone() * p.alpha.clone();
    Ok(match lhs.cmp(rho_sq) {
        Ordering::Less => PointPosition::Inside,
        Ordering::Equal => PointPosition::On,
        Ordering::Greater => PointPosition::Outside,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallRelation {
    FirstInsideSecond,
    SecondInsideFirst,
    Equal,
    Disjoint,
    Crossing,
}

/// Decide whether sqrt(x) + b <= sqrt(y) for x, y >= 0 and b >= 0,
/// using only squared quantities.
fn sqrt_plus_le<R: Scalar>(x: &R, b: &R, y: &R) -> bool {
    // sqrt(x) + b <= sqrt(y)  <=>  2 b sqrt(x) <= y - x - b^2 (with RHS >= 0)
    let rhs = y.clone() - x.clone() - b.clone() * b.clone();
    if rhs.is_negative() {
        return false;
    }
    R::from_int(4) * b.clone() * b.clone() * x.clone() <= rhs.clone() * rhs
}

/// Decide whether sqrt(x) + sqrt(y) <= b for x, y >= 0 and b >= 0.
fn sqrt_sum_le<R: Scalar>(x: &R, y: &R, b: &R) -> bool {
    // <=>  2 sqrt(x y) <= b^2 - x - y (with RHS >= 0)
    let rhs = b.clone() * b.clone() - x.clone() - y.clone();
    if rhs.is_negative() {
        return false;
    }
    R::from_int(4) * x.clone() * y.clone() <= rhs.clone() * rhs
}

/// Exact containment/disjointness test for two semicircular walls in the
/// upper half-plane. Tangency at alpha = 0 counts as containment or
/// disjointness, since walls live in alpha > 0.
pub fn wall_compare<R: Scalar>(w1: &Wall<R>, w2: &Wall<R>) -> Result<WallRelation> {
    let (s1, r1) = w1.require_semicircle()?;
    let (s2, r2) = w2.require_semicircle()?;
    if s1 == s2 && r1 == r2 {
        return Ok(WallRelation::Equal);
    }
    let gap = (s1.clone() - s2.clone()).abs();
    // W1 inside W2: |s1 - s2| + rho1 <= rho2
    if sqrt_plus_le(r1, &gap, r2) {
        return Ok(WallRelation::FirstInsideSecond);
    }
    if sqrt_plus_le(r2, &gap, r1) {
        return Ok(WallRelation::SecondInsideFirst);
    }
    if sqrt_sum_le(r1, r2, &gap) {
        return Ok(WallRelation::Disjoint);
    }
    Ok(WallRelation::Crossing)
}

/// Upper bound Delta(vE) / (4 rA (rA - e0)) on the radius squared of any
/// wall where a subobject of rank rA (in H-units) destabilizes vE.
/// Requires rA > e0(vE) >= 0.
pub fn higher_rank_radius_bound<R: Scalar>(v_e: &HChern<R>, r_a: i64) -> Result<R> {
    let ra = R::from_int(r_a);
    let e0 = v_e.e(0).clone();
    if e0.is_negative() || ra <= e0 {
        return Err(Error::Domain(format!(
            "need rank {} > e0 = {} >= 0",
            r_a,
            e0
        )));
    }
    Ok(v_e.delta() / (R::from_int(4) * ra.clone() * (ra - e0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::Space;
    use crate::scalar::Rat;

    fn rat(s: &str) -> Rat {
        <Rat as Scalar>::parse(s).unwrap()
    }

    fn p3(text: &str) -> HChern<Rat> {
        HChern::parse(Space::P3, text).unwrap()
    }

    fn pt(beta: &str, alpha: &str) -> TiltPoint<Rat> {
        TiltPoint::new(rat(beta), rat(alpha))
    }

    #[test]
    fn tilt_slope_examples() {
        // pre-twisted class (2, 2, 0): nu at beta = 0 is -alpha^2/2
        let e = p3("2,2,0");
        for a in ["1", "1/2", "3"] {
            let alpha = rat(a);
            let expect = -alpha.clone() * alpha.clone() / rat("2");
            assert_eq!(tilt_slope(&e, &pt("0", a)).unwrap(), Slope::Finite(expect));
        }
        // rank-0 classes always have finite slope with denominator e1
        let v = p3("0,10,-25");
        match tilt_slope(&v, &pt("-3", "2")).unwrap() {
            Slope::Finite(nu) => assert!(rat("10") * nu.clone() == (rat("10") * nu).trunc()),
            Slope::Infinite => panic!("rank-0 slope must be finite"),
        }
        assert_eq!(tilt_slope(&p3("1,0,0"), &pt("0", "1")).unwrap(), Slope::Infinite);
        assert!(tilt_slope(&p3("1,0,0"), &pt("0", "0")).is_err());
        assert_eq!(tilt_slope_closure(&p3("2,2,0"), &pt("0", "0")), Slope::Finite(rat("0")));
    }

    #[test]
    fn wall_between_examples() {
        // v = (2, -1, -3/2) against O(-4)[1]
        let w = wall_between(&p3("2,-1,-3/2"), &p3("-1,4,-8")).unwrap().unwrap();
        assert_eq!(w.center_s, rat("-5/2"));
        assert_eq!(w.radius_sq, Some(rat("9/4")));
        // beta-axis endpoints -4 and -1
        assert_eq!(point_vs_wall(&w, &pt("-4", "0")).unwrap(), PointPosition::On);
        assert_eq!(point_vs_wall(&w, &pt("-1", "0")).unwrap(), PointPosition::On);

        let w = wall_between(&p3("0,10,-25"), &p3("1,-5,25/2")).unwrap().unwrap();
        assert_eq!(w.center_s, rat("-5/2"));
        assert_eq!(w.radius_sq, Some(rat("25/4")));

        assert_eq!(wall_between(&p3("1,0,0"), &p3("2,0,0")).unwrap(), None);
        // mismatched ambient spaces are rejected
        let s = HChern::<Rat>::surface(5, vec![rat("5"), rat("0"), rat("0")]);
        assert!(wall_between(&p3("1,0,0"), &s).is_err());
    }

    #[test]
    fn wall_between_is_symmetric() {
        let v = p3("2,-1,-3/2");
        let w = p3("-1,4,-8");
        assert_eq!(wall_between(&v, &w).unwrap(), wall_between(&w, &v).unwrap());
    }

    #[test]
    fn vertical_wall_case() {
        // kappa = 0 with distinct slopes of equal mu: v, w of equal (e0, e1)
        let v = p3("1,2,0");
        let w = p3("1,2,1");
        let wall = wall_between(&v, &w).unwrap().unwrap();
        assert_eq!(wall.kind, WallKind::Vertical);
        assert_eq!(wall.center_s, rat("2"));
        assert!(point_vs_wall(&wall, &pt("2", "1")).is_err());
    }

    #[test]
    fn wall_q_examples() {
        // pushforward shapes (0, 2d, -d^2 - d, d^3/3 + d^2/2 + e), d = 5
        let v = p3("0,10,-30,325/6");
        let w = wall_q(&v).unwrap().unwrap();
        assert_eq!(w.radius_sq, Some(rat("11/2")));
        let v = p3("0,10,-25,110/3");
        let w = wall_q(&v).unwrap().unwrap();
        assert_eq!(w.radius_sq, Some(rat("13/4")));
        assert_eq!(wall_q(&p3("1,0,0,0")).unwrap(), None);
        assert!(wall_q(&p3("1,0,0")).is_err());
    }

    #[test]
    fn q_form_examples() {
        // (0, 10, -25, 125/3 + e) at (beta, alpha) = (-1, 0) is -60e - 400
        for e in ["-5", "-4", "0", "7/2"] {
            let e = rat(e);
            let v = HChern::p3(vec![rat("0"), rat("10"), rat("-25"), rat("125/3") + e.clone()]);
            assert_eq!(q_form(&v, &pt("-1", "0")).unwrap(), rat("-60") * e - rat("400"));
        }
        assert_eq!(q_form(&p3("1,0,0,0"), &pt("-7/3", "2")).unwrap(), rat("0"));
        assert!(q_form(&p3("1,0,0,0"), &pt("0", "-1")).is_err());
    }

    #[test]
    fn point_vs_wall_examples() {
        let w = Wall {
            kind: WallKind::Semicircle,
            center_s: rat("-5/2"),
            radius_sq: Some(rat("25/4")),
            left_class: p3("0,10,-25"),
            right_class: p3("1,-5,25/2"),
        };
        assert_eq!(point_vs_wall(&w, &pt("-5/2", "5/2")).unwrap(), PointPosition::On);
        assert_eq!(point_vs_wall(&w, &pt("-5/2", "3")).unwrap(), PointPosition::Outside);
        assert_eq!(point_vs_wall(&w, &pt("-5/2", "1")).unwrap(), PointPosition::Inside);
    }

    #[test]
    fn wall_compare_examples() {
        let wall = |s: &str, r2: &str| Wall {
            kind: WallKind::Semicircle,
            center_s: rat(s),
            radius_sq: Some(rat(r2)),
            left_class: p3("0,10,-25"),
            right_class: p3("1,-5,25/2"),
        };
        // concentric
        assert_eq!(
            wall_compare(&wall("-5/2", "17/4"), &wall("-5/2", "25/4")).unwrap(),
            WallRelation::FirstInsideSecond
        );
        assert_eq!(
            wall_compare(&wall("0", "4"), &wall("0", "4")).unwrap(),
            WallRelation::Equal
        );
        // internal tangency at alpha = 0 still counts as containment
        assert_eq!(
            wall_compare(&wall("1", "1"), &wall("0", "4")).unwrap(),
            WallRelation::FirstInsideSecond
        );
        assert_eq!(
            wall_compare(&wall("0", "4"), &wall("1", "1")).unwrap(),
            WallRelation::SecondInsideFirst
        );
        // external tangency counts as disjoint
        assert_eq!(
            wall_compare(&wall("0", "1"), &wall("3", "4")).unwrap(),
            WallRelation::Disjoint
        );
        assert_eq!(
            wall_compare(&wall("0", "4"), &wall("1", "4")).unwrap(),
            WallRelation::Crossing
        );
    }

    #[test]
    fn wall_compare_rank_one_admissible_family() {
        // v = (0, 2c, d2), admissible line bundle O(x - c) gives the outer
        // wall of radius c/2; admissible rank-one F nests inside it.
        let v = p3("0,10,-25");
        let o_minus5 = p3("1,-5,25/2");
        let f = p3("1,0,-1"); // x = 0, y = 1 above the admissibility boundary
        let outer = wall_between(&v, &o_minus5).unwrap().unwrap();
        let inner = wall_between(&v, &f).unwrap().unwrap();
        assert_eq!(wall_compare(&inner, &outer).unwrap(), WallRelation::FirstInsideSecond);
    }

    #[test]
    fn higher_rank_radius_bound_examples() {
        assert_eq!(higher_rank_radius_bound(&p3("2,-1,-3/2"), 3).unwrap(), rat("7/12"));
        let v = HChern::<Rat>::surface(5, vec![rat("10"), rat("-5"), rat("-3/2")]);
        assert_eq!(higher_rank_radius_bound(&v, 20).unwrap(), rat("11/160"));
        assert_eq!(higher_rank_radius_bound(&p3("1,0,0"), 2).unwrap(), rat("0"));
        assert!(higher_rank_radius_bound(&p3("2,-1,-3/2"), 2).is_err());
        assert!(higher_rank_radius_bound(&p3("-1,0,0"), 2).is_err());
    }
}
