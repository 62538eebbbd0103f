//! Randomized exact-rational property suites. Every property also runs
//! inside the acceptance target with an explicit 200-case runner; here the
//! proptest defaults (256 cases) apply.

mod common;

use common::*;
use proptest::prelude::*;
use tiltwall::scalar::{Rat, Scalar};
use tiltwall::tilt::TiltPoint;

proptest! {
    #[test]
    fn twist_is_a_group_action(v in arb_class4(), b1 in arb_rat(), b2 in arb_rat()) {
        twist_group_action(&v, &b1, &b2);
    }

    #[test]
    fn delta_is_twist_invariant(v in arb_class3(), beta in arb_rat()) {
        delta_twist_invariant(&v, &beta);
    }

    #[test]
    fn shifted_dual_is_an_involution(v in arb_class4()) {
        dual_involution(&v);
    }

    #[test]
    fn wall_apexes_lie_on_the_hyperbola(v in arb_class3(), w in arb_class3()) {
        apex_on_hyperbola(&v, &w);
    }

    #[test]
    fn walls_of_a_fixed_class_never_cross(
        v in arb_class3(),
        w1 in arb_class3(),
        w2 in arb_class3(),
    ) {
        walls_never_cross(&v, &w1, &w2);
    }

    #[test]
    fn hilbert_polynomial_matches_euler_characteristic(v in arb_class4(), m in -12i64..=12) {
        hilbert_chi_consistency(&v, m);
    }

    #[test]
    fn json_dtos_round_trip(
        v in arb_class3(),
        w in arb_class3(),
        flag in any::<bool>(),
        note in proptest::option::of("[a-z ]{0,12}"),
    ) {
        json_round_trip(&v, &w, flag, note);
    }

    #[test]
    fn svg_rendering_is_deterministic(
        v in arb_class3(),
        others in arb_class3_vec(),
        mb in arb_rat(),
        ma in (0i64..=8, 1i64..=2).prop_map(|(n, d)| Rat::from_frac(n, d)),
    ) {
        svg_deterministic(&v, &others, &TiltPoint::new(mb, ma));
    }
}
