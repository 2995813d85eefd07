mod common;

use std::f64::consts::FRAC_PI_2;

use common::ellipse;
use ellipse_billiards::billiard::{
    convex_four_periodic_lambda, next_bounce, orbit_along_caustic, periodic_caustic_lambda,
    periodic_orbit, run,
};
use ellipse_billiards::conics::KIND_BAND;
use ellipse_billiards::geometry::Line2;
use ellipse_billiards::{ConicKind, Ellipse, Point2};
use proptest::prelude::*;

/// Inward unit direction at `e.point_at(t)`, `turn` radians from the
/// clockwise tangent.
fn launch(e: &Ellipse, t: f64, turn: f64) -> (Point2, Point2) {
    let p = e.point_at(t);
    let inward = -e.focal_normal(p).unwrap();
    (p, inward.rotate(turn - FRAC_PI_2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn caustic_is_invariant(e in ellipse(), t in 0.0..6.3f64, turn in 0.05..3.09f64) {
        let (p, dir) = launch(&e, t, turn);
        let orbit = run(&e, p, dir, 50).unwrap();
        let (a, _) = e.axes_sq();
        prop_assert!(orbit.caustic_deviation() < 1e-9 * a, "{:e}", orbit.caustic_deviation() / a);
    }

    #[test]
    fn chords_through_a_focus_alternate(e in ellipse(), t in 0.0..6.3f64, which in any::<bool>()) {
        let p = e.point_at(t);
        let (near, far) = if which { (e.focus1(), e.focus2()) } else { (e.focus2(), e.focus1()) };
        prop_assume!(p.distance(near) > 1e-3);
        let (mut q, mut dir) = next_bounce(&e, p, near - p).unwrap();
        let d = e.rope_length();
        for i in 0..3 {
            let target = if i % 2 == 0 { far } else { near };
            prop_assert!(Line2::new(q, dir).unwrap().distance(target) < 1e-9 * d);
            (q, dir) = next_bounce(&e, q, dir).unwrap();
        }
    }

    #[test]
    fn convex_four_periodic_tangents_form_a_rectangle(e in ellipse(), t in 0.0..6.3f64) {
        let orbit = orbit_along_caustic(&e.confocal(convex_four_periodic_lambda(&e)), t, 8).unwrap();
        prop_assert_eq!(orbit.period, Some(4));
        let tangents: Vec<Point2> =
            orbit.vertices[..4].iter().map(|&v| e.tangent_line_at(v).unwrap().direction).collect();
        for i in 0..4 {
            prop_assert!(tangents[i].dot(tangents[(i + 1) % 4]).abs() < 1e-9);
        }
    }

    #[test]
    fn orbits_are_reversible(e in ellipse(), t in 0.0..6.3f64, turn in 0.05..3.09f64, n in 1..12usize) {
        let (p, dir) = launch(&e, t, turn);
        let (mut q, mut v) = (p, dir);
        let mut path = vec![p];
        for _ in 0..n {
            (q, v) = next_bounce(&e, q, v).unwrap();
            path.push(q);
        }
        // Retrace from the last vertex along the reversed incoming chord.
        let mut back = path[n - 1] - path[n];
        let mut r = path[n];
        let d = e.rope_length();
        for k in (0..n).rev() {
            (r, back) = next_bounce(&e, r, back).unwrap();
            prop_assert!(r.distance(path[k]) < 1e-8 * d, "step {k}: {:e}", r.distance(path[k]) / d);
        }
    }

    #[test]
    fn periodic_orbits_report_their_period(e in ellipse(), choice in 0..4usize) {
        let (period, turns) = [(3, 1), (4, 1), (5, 2), (7, 3)][choice];
        let orbit = periodic_orbit(&e, period, turns, 3 * period).unwrap();
        prop_assert_eq!(orbit.period, Some(period));
        prop_assert!(orbit.closed);
        // Flat ellipses push long orbits to within 1e-13 A of the focal
        // segment, below what the kind test can resolve.
        let (a, b) = e.axes_sq();
        let lambda = periodic_caustic_lambda(&e, period, turns).unwrap();
        let kind = orbit.caustic.map(|c| c.kind);
        if b - lambda > 10.0 * KIND_BAND * a {
            prop_assert_eq!(kind, Some(ConicKind::ConfocalEllipse));
        } else {
            prop_assert!(matches!(kind, Some(ConicKind::ConfocalEllipse | ConicKind::DegenerateFocalSegment)));
        }
    }
}
