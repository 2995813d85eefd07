mod common;

use common::{point, triangle};
use ellipse_billiards::geometry::{
    ceva_product, circumcenter, exterior_bisector, interior_bisector, menelaus_product,
    reflect_point, simson_collinear, Line2, SignedRatio,
};
use ellipse_billiards::Point2;
use proptest::prelude::*;

proptest! {
    #[test]
    fn reflection_is_an_involution(p in point(), q in point(), r in point()) {
        prop_assume!(q.distance(r) > 1e-3);
        let l = Line2::through(q, r).unwrap();
        let back = reflect_point(reflect_point(p, &l), &l);
        prop_assert!(back.distance(p) < 1e-12);
        // The line is the perpendicular bisector of p and its image.
        let image = reflect_point(p, &l);
        prop_assert!((l.signed_distance(p) + l.signed_distance(image)).abs() < 1e-12);
    }

    #[test]
    fn bisectors_are_perpendicular((a, b, c) in triangle(1e-3)) {
        let ext = exterior_bisector(a, b, c).unwrap();
        let int = interior_bisector(a, b, c).unwrap();
        prop_assert!(ext.direction.dot(int.direction).abs() < 1e-12);
        // The interior bisector makes equal angles with both sides.
        let (u, v) = ((a - b).normalized().unwrap(), (c - b).normalized().unwrap());
        let w = int.direction;
        prop_assert!((u.dot(w).abs() - v.dot(w).abs()).abs() < 1e-12);
    }

    #[test]
    fn ceva_on_concurrent_cevians((a, b, c) in triangle(1e-2), s in 0.05..0.9f64, t in 0.05..0.9f64) {
        prop_assume!(s + t < 0.95);
        let p = a + (b - a) * s + (c - a) * t;
        let meet = |x: Point2, y: Point2, u: Point2, v: Point2| {
            Line2::through(x, y).unwrap().intersect(&Line2::through(u, v).unwrap()).unwrap()
        };
        let (k, l, m) = (meet(a, p, b, c), meet(b, p, c, a), meet(c, p, a, b));
        prop_assert!((ceva_product(a, b, c, k, l, m).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn menelaus_on_transversals((a, b, c) in triangle(1e-2), q in point(), angle in 0.0..3.14f64) {
        let line = Line2::new(q, Point2::from_polar(1.0, angle)).unwrap();
        let cut = |x: Point2, y: Point2| line.intersect(&Line2::through(x, y).unwrap());
        let (Some(p), Some(qq), Some(r)) = (cut(b, c), cut(c, a), cut(a, b)) else {
            return Ok(());
        };
        // Keep the cut points at a sane distance from the triangle.
        prop_assume!([p, qq, r].iter().all(|x| x.norm() < 50.0));
        if let Ok(v) = menelaus_product(a, b, c, p, qq, r) {
            prop_assert!((v + 1.0).abs() < 1e-9, "{v}");
        }
    }

    #[test]
    fn simson_iff_on_circumcircle((a, b, c) in triangle(0.05), angle in 0.0..6.283f64, factor in 0.1..2.0f64) {
        let o = circumcenter(a, b, c).unwrap();
        let radius = o.distance(a);
        let on = o + Point2::from_polar(radius, angle);
        prop_assert!(simson_collinear(a, b, c, on, 1e-9));
        prop_assume!((factor - 1.0).abs() > 0.05);
        let off = o + Point2::from_polar(radius * factor, angle);
        prop_assert!(!simson_collinear(a, b, c, off, 1e-9));
    }

    #[test]
    fn signed_ratio_sign_follows_position(p in point(), q in point(), t in -3.0..3.0f64) {
        prop_assume!(p.distance(q) > 1e-2 && (t - 1.0).abs() > 1e-3);
        let r = SignedRatio::of(p, p.lerp(q, t), q).unwrap().value;
        prop_assert!((r - t / (1.0 - t)).abs() < 1e-9 * (1.0 + r.abs()));
    }
}
