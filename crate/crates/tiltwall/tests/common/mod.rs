//! Property checks shared by the randomized suites and the acceptance
//! target. Each function panics on violation so it can be driven either by
//! the proptest macros or by an explicit runner.

use num::{Signed, Zero};
use proptest::prelude::*;

use tiltwall::chern::HChern;
use tiltwall::cli::{BoundDto, LedgerEntryDto, WallDto};
use tiltwall::scalar::{Rat, Scalar};
use tiltwall::svg::{render_svg, PlotSpec};
use tiltwall::tilt::{wall_between, wall_compare, wall_invariants, TiltPoint, WallRelation};

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::from_frac(n, d)
}

/// A modest exact rational: numerator in [-60, 60], denominator in {1, 2, 3, 6}.
pub fn arb_rat() -> impl Strategy<Value = Rat> {
    (-60i64..=60, prop_oneof![Just(1i64), Just(2), Just(3), Just(6)])
        .prop_map(|(n, d)| rat(n, d))
}

pub fn arb_class3() -> impl Strategy<Value = HChern<Rat>> {
    (arb_rat(), arb_rat(), arb_rat()).prop_map(|(a, b, c)| HChern::p3(vec![a, b, c]))
}

pub fn arb_class4() -> impl Strategy<Value = HChern<Rat>> {
    (arb_rat(), arb_rat(), arb_rat(), arb_rat())
        .prop_map(|(a, b, c, d)| HChern::p3(vec![a, b, c, d]))
}

pub fn arb_class3_vec() -> impl Strategy<Value = Vec<HChern<Rat>>> {
    proptest::collection::vec(arb_class3(), 0..4)
}

// ---------------------------------------------------------------------------
// The eight acceptance properties.

/// Twisting acts as the additive group of rationals.
pub fn twist_group_action(v: &HChern<Rat>, b1: &Rat, b2: &Rat) {
    let composed = v.twist(b1).twist(b2);
    let direct = v.twist(&(b1.clone() + b2.clone()));
    assert_eq!(composed, direct, "twist composition");
    assert_eq!(v.twist(&Rat::zero()), *v, "twist by zero");
}

/// The discriminant is invariant under twisting.
pub fn delta_twist_invariant(v: &HChern<Rat>, beta: &Rat) {
    assert_eq!(v.twist(beta).delta(), v.delta());
}

/// The shifted derived dual is an involution.
pub fn dual_involution(v: &HChern<Rat>) {
    let dual = v.shifted_dual().unwrap();
    assert_eq!(dual.shifted_dual().unwrap(), *v);
}

/// The apex of every semicircular wall for v lies on the vanishing locus of
/// the twisted degree-two component: e2^s - (rho^2 / 2) e0 = 0.
pub fn apex_on_hyperbola(v: &HChern<Rat>, w: &HChern<Rat>) {
    let Some((s, rho_sq)) = wall_invariants(v, w).unwrap() else {
        return;
    };
    let twisted = v.twist(&s);
    let apex = twisted.e(2).clone() - rho_sq * v.e(0).clone() / Rat::from_int(2);
    assert!(apex.is_zero(), "apex off the hyperbola: {apex}");
}

/// Two walls for the same class never cross; this needs Delta(v) >= 0
/// (the intersection discriminant of two wall circles for v is a positive
/// multiple of Delta(v), so negative-discriminant loci do cross).
pub fn walls_never_cross(v: &HChern<Rat>, w1: &HChern<Rat>, w2: &HChern<Rat>) {
    if v.delta().is_negative() {
        return;
    }
    let (Some(wall1), Some(wall2)) = (wall_between(v, w1).unwrap(), wall_between(v, w2).unwrap())
    else {
        return;
    };
    if !(wall1.is_semicircle() && wall2.is_semicircle()) {
        return;
    }
    let relation = wall_compare(&wall1, &wall2).unwrap();
    assert_ne!(relation, WallRelation::Crossing, "{wall1:?} vs {wall2:?}");
}

/// The Hilbert polynomial evaluates to the Euler characteristic of every
/// integer twist.
pub fn hilbert_chi_consistency(v: &HChern<Rat>, m: i64) {
    let poly = v.hilbert_poly().unwrap();
    let chi = v.tensor_line_bundle(m).euler_char_p3().unwrap();
    assert_eq!(poly.eval(&Rat::from_int(m)), chi);
}

/// JSON serialization round-trips the data-transfer values.
pub fn json_round_trip(v: &HChern<Rat>, w: &HChern<Rat>, flag: bool, note: Option<String>) {
    if let Some(wall) = wall_between(v, w).unwrap() {
        let dto = WallDto::from_wall(&wall);
        let back: WallDto = serde_json::from_str(&serde_json::to_string(&dto).unwrap()).unwrap();
        assert_eq!(dto, back);
    }
    let bound = BoundDto {
        admissible: flag,
        binding: format!("rule({})", v.emit()),
        bound: tiltwall::scalar::format_rat(v.e(0)),
        extremal: !flag,
        note,
    };
    let back: BoundDto = serde_json::from_str(&serde_json::to_string(&bound).unwrap()).unwrap();
    assert_eq!(bound, back);
    let entry = LedgerEntryDto {
        name: "X1".into(),
        params: [("d".to_string(), w.emit())].into_iter().collect(),
        computed: v.emit(),
        expected: v.emit(),
        status: "pass".into(),
        detail: String::new(),
    };
    let back: LedgerEntryDto =
        serde_json::from_str(&serde_json::to_string(&entry).unwrap()).unwrap();
    assert_eq!(entry, back);
}

/// Identical plot specifications produce byte-identical SVG, independent of
/// the order walls are supplied in.
pub fn svg_deterministic(v: &HChern<Rat>, others: &[HChern<Rat>], mark: &TiltPoint<Rat>) {
    let walls: Vec<_> = others
        .iter()
        .filter_map(|w| wall_between(v, w).unwrap())
        .filter(|w| w.is_semicircle())
        .collect();
    let spec = PlotSpec {
        beta_range: (rat(-8, 1), rat(2, 1)),
        alpha_max: rat(4, 1),
        walls: walls.clone(),
        marks: vec![mark.clone()],
        q_wall: None,
    };
    let first = render_svg(&spec).unwrap();
    assert_eq!(first, render_svg(&spec).unwrap());
    let mut reversed = spec;
    reversed.walls.reverse();
    assert_eq!(first, render_svg(&reversed).unwrap());
    if !mark.alpha.is_negative() {
        // alpha >= 0 marks stay within the drawn half-plane frame
        assert!(first.contains("circle"));
    }
}
