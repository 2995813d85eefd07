mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use common::{ellipse, point};
use ellipse_billiards::billiard::next_bounce;
use ellipse_billiards::conics::second_focal_property_residual;
use ellipse_billiards::geometry::Line2;
use ellipse_billiards::{ConicKind, Ellipse, Point2};
use proptest::prelude::*;

proptest! {
    #[test]
    fn focal_sum_is_conserved(e in ellipse(), t in 0.0..6.3f64) {
        let p = e.point_at(t);
        prop_assert!(e.focal_residual(p).abs() < 1e-10 * e.rope_length());
    }

    #[test]
    fn canonical_form_invariants(e in ellipse()) {
        let c = e.to_canonical();
        prop_assert!(c.semi_major >= c.semi_minor && c.semi_minor > 0.0);
        prop_assert!(c.rotation > -FRAC_PI_2 && c.rotation <= FRAC_PI_2);
        let back = Ellipse::from_canonical(&c).unwrap();
        let d = e.rope_length();
        let same = back.focus1().distance(e.focus1()).max(back.focus2().distance(e.focus2()));
        let swapped = back.focus1().distance(e.focus2()).max(back.focus2().distance(e.focus1()));
        prop_assert!(same.min(swapped) < 1e-12 * d);
        prop_assert!((back.rope_length() - d).abs() < 1e-12 * d);
    }

    #[test]
    fn tangent_lines_have_zero_lambda(e in ellipse(), t in 0.0..6.3f64) {
        let tangent = e.tangent_line_at(e.point_at(t)).unwrap();
        let (a, _) = e.axes_sq();
        prop_assert!(e.line_lambda(&tangent).abs() < 1e-9 * a);
        prop_assert!(e.is_tangent(&tangent, 1e-9).tangent);
    }

    #[test]
    fn lambda_matches_confocal_tangency(e in ellipse(), p in point(), angle in 0.0..PI) {
        // Independent oracle: a line with unit normal n at offset h from the
        // center touches x^2/(A-l) + y^2/(B-l) = 1 iff (A-l) nx^2 + (B-l) ny^2 = h^2.
        let line = Line2::new(p, Point2::from_polar(1.0, angle)).unwrap();
        let (a, b) = e.axes_sq();
        let n = e.dir_to_local(line.normal());
        let h = e.to_local(line.point).dot(n);
        let lambda = (a * n.x * n.x + b * n.y * n.y - h * h) / (n.x * n.x + n.y * n.y);
        prop_assert!((e.line_lambda(&line) - lambda).abs() < 1e-12 * a);
    }

    #[test]
    fn reflection_preserves_caustic(e in ellipse(), t in 0.0..6.3f64, turn in 0.05..3.09f64) {
        let p = e.point_at(t);
        let inward = -e.focal_normal(p).unwrap();
        let dir = inward.rotate(turn - FRAC_PI_2);
        let (q, out) = next_bounce(&e, p, dir).unwrap();
        let incoming = Line2::through(p, q).unwrap();
        let outgoing = Line2::new(q, out).unwrap();
        let (a, _) = e.axes_sq();
        prop_assert!((e.line_lambda(&incoming) - e.line_lambda(&outgoing)).abs() < 1e-9 * a);
    }

    #[test]
    fn second_focal_property(e in ellipse(), angle in 0.0..6.3f64, dist in 1.05..4.0f64) {
        let p = e.to_world(Point2::from_polar(dist * e.semi_major(), angle));
        let r = second_focal_property_residual(&e, p).unwrap();
        prop_assert!(r < 1e-9, "{r}");
    }

    #[test]
    fn confocal_kinds_follow_lambda(e in ellipse(), s in 0.01..0.99f64) {
        let (a, b) = e.axes_sq();
        prop_assert_eq!(e.confocal(s * b).kind, ConicKind::ConfocalEllipse);
        prop_assert_eq!(e.confocal(b + s * (a - b)).kind, ConicKind::ConfocalHyperbola);
        prop_assert_eq!(e.confocal(b).kind, ConicKind::DegenerateFocalSegment);
        prop_assert_eq!(e.confocal(a).kind, ConicKind::DegenerateMinorAxis);
    }

    #[test]
    fn tangents_from_exterior_point_touch(e in ellipse(), angle in 0.0..6.3f64, dist in 1.05..4.0f64) {
        let p = e.to_world(Point2::from_polar(dist * e.semi_major(), angle));
        for l in e.tangents_from(p).unwrap() {
            prop_assert!(e.tangency_residual(&l) < 1e-9 * e.rope_length());
            prop_assert!(l.distance(p) < 1e-12 * e.rope_length());
        }
    }
}
