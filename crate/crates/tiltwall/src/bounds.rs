//! Third-Chern-character bounds for low-rank classes on P3, and the
//! discriminant bounds for rank-two sheaves on degree-d hypersurfaces.
//!
//! The predicates are deliberately partial: shapes outside the proven table
//! are rejected rather than extrapolated.

use crate::chern::{HChern, Space};
use crate::error::{Error, Result};
use crate::scalar::{format_rat, Scalar};

/// Outcome of a bound check on a full (four-component) class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundVerdict<R: Scalar> {
    pub admissible: bool,
    /// Identifier of the rule that decided, e.g. "rank_two(0,-2)".
    pub binding: String,
    /// The maximal admissible e3 for the class's shape.
    pub bound: R,
    pub extremal: bool,
    pub extremal_note: Option<String>,
}

fn verdict<R: Scalar>(
    e3: &R,
    bound: R,
    binding: String,
    note: Option<String>,
) -> BoundVerdict<R> {
    let extremal = *e3 == bound;
    BoundVerdict {
        admissible: *e3 <= bound,
        binding,
        bound,
        extremal,
        extremal_note: if extremal { note } else { None },
    }
}

fn require_p3_full<R: Scalar>(v: &HChern<R>) -> Result<&R> {
    if v.space != Space::P3 {
        return Err(Error::RequiresP3(v.space.to_string()));
    }
    v.e3()
}

/// Bound e <= d(d+1)/2 for classes (1, 0, -d, e) and (-1, 0, d, e).
pub fn rank_one_bound<R: Scalar>(v: &HChern<R>) -> Result<BoundVerdict<R>> {
    let e3 = require_p3_full(v)?.clone();
    let one = R::one();
    let d = if *v.e(0) == one {
        -v.e(2).clone()
    } else if *v.e(0) == -one.clone() {
        v.e(2).clone()
    } else {
        return Err(Error::ShapeMismatch(format!("rank_one_bound needs e0 = ±1, got {}", v.e(0))));
    };
    if !v.e(1).is_zero() {
        return Err(Error::ShapeMismatch(format!("rank_one_bound needs e1 = 0, got {}", v.e(1))));
    }
    let bound = d.clone() * (d + one) / R::from_int(2);
    Ok(verdict(&e3, bound, "rank_one".into(), None))
}

/// The proven rank-two table: (e1, e2) in {(0,0), (0,-1), (0,-2),
/// (-1,-1/2), (-1,-3/2)} with bounds 0, 0, 2, 5/6, 17/6 on e3.
pub fn rank_two_bound<R: Scalar>(v: &HChern<R>) -> Result<BoundVerdict<R>> {
    let e3 = require_p3_full(v)?.clone();
    if *v.e(0) != R::from_int(2) {
        return Err(Error::ShapeMismatch(format!("rank_two_bound needs e0 = 2, got {}", v.e(0))));
    }
    let table: [(R, R, R, Option<&str>); 5] = [
        (R::zero(), R::zero(), R::zero(), Some("equality forces the split trivial bundle O + O")),
        (R::zero(), R::from_int(-1), R::zero(), None),
        (R::zero(), R::from_int(-2), R::from_int(2), None),
        (
            R::from_int(-1),
            R::from_frac(-1, 2),
            R::from_frac(5, 6),
            Some("at equality the class is destabilized by an ideal-sheaf extension 0 -> O(-1) -> E -> I_C -> 0"),
        ),
        (R::from_int(-1), R::from_frac(-3, 2), R::from_frac(17, 6), None),
    ];
    for (c, d, bound, note) in table {
        if *v.e(1) == c && *v.e(2) == d {
            let binding = format!("rank_two({},{})", format_rat(&c), format_rat(&d));
            return Ok(verdict(&e3, bound, binding, note.map(String::from)));
        }
    }
    Err(Error::ShapeMismatch(format!(
        "(e1, e2) = ({}, {}) is outside the proven rank-two table",
        v.e(1),
        v.e(2)
    )))
}

/// Rank -2 classes via the shifted derived dual: the bound of the
/// dualized rank-two shape applies verbatim.
pub fn rank_minus_two_bound<R: Scalar>(v: &HChern<R>) -> Result<BoundVerdict<R>> {
    require_p3_full(v)?;
    if *v.e(0) != R::from_int(-2) {
        return Err(Error::ShapeMismatch(format!(
            "rank_minus_two_bound needs e0 = -2, got {}",
            v.e(0)
        )));
    }
    let mut verdict = rank_two_bound(&v.shifted_dual()?)?;
    verdict.binding = format!("dual:{}", verdict.binding);
    Ok(verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C1Mode {
    MinusH,
    Zero,
}

/// Minimal-discriminant bound for rank-two sheaves on a degree-d
/// hypersurface, with the equivalent maximal second-Chern value e_max:
/// c1 = -H gives (3d^2 - 4d, 1 - d/2); c1 = 0 gives (4d^2, -d).
/// Requires d >= 5.
pub fn surface_discriminant_bound<R: Scalar>(d: i64, c1_mode: C1Mode) -> Result<(R, R)> {
    if d < 5 {
        return Err(Error::Domain(format!("discriminant bound needs degree >= 5, got {d}")));
    }
    Ok(match c1_mode {
        C1Mode::MinusH => (
            R::from_int(3 * d * d - 4 * d),
            R::one() - R::from_frac(d, 2),
        ),
        C1Mode::Zero => (R::from_int(4 * d * d), R::from_int(-d)),
    })
}
