//! `ebill render`: SVG drawing of a solve result or a trajectory.

use std::f64::consts::TAU;
use std::fmt::Write;

use ellipse_billiards::{ConfocalConic, ConicKind, Ellipse, Point2};

use crate::doc::{point, AnyDoc, CausticDoc};
use crate::error::CliError;

const SAMPLES: usize = 256;
const SIZE: f64 = 800.0;

struct Layer {
    class: &'static str,
    closed: bool,
    points: Vec<Point2>,
}

fn ellipse_outline(center: Point2, a: f64, b: f64, rotation: f64) -> Vec<Point2> {
    (0..SAMPLES)
        .map(|i| {
            let t = TAU * i as f64 / SAMPLES as f64;
            center + Point2::new(a * t.cos(), b * t.sin()).rotate(rotation)
        })
        .collect()
}

/// Caustic curves clipped to the boundary, as open polylines.
fn caustic_curves(e: &Ellipse, c: &ConfocalConic) -> Vec<Vec<Point2>> {
    let (a2, b2) = c.axes_sq();
    let (ea, eb) = e.axes_sq();
    let world = |x: f64, y: f64| e.to_world(Point2::new(x, y));
    match c.kind {
        ConicKind::ConfocalEllipse => {
            let mut pts = ellipse_outline(e.center(), a2.sqrt(), b2.sqrt(), e.rotation());
            pts.push(pts[0]);
            vec![pts]
        }
        ConicKind::ConfocalHyperbola => {
            let (p, q) = (a2.max(0.0).sqrt(), (-b2).max(0.0).sqrt());
            // x = p cosh t, y = q sinh t reaches the boundary where
            // p^2 cosh^2 t / A + q^2 sinh^2 t / B = 1.
            let s2 = ((1.0 - p * p / ea) / (p * p / ea + q * q / eb)).max(0.0);
            let t_max = s2.sqrt().asinh();
            let branch = |sign: f64| {
                (0..=SAMPLES)
                    .map(|i| {
                        let t = t_max * (2.0 * i as f64 / SAMPLES as f64 - 1.0);
                        world(sign * p * t.cosh(), q * t.sinh())
                    })
                    .collect()
            };
            vec![branch(1.0), branch(-1.0)]
        }
        ConicKind::DegenerateFocalSegment => vec![vec![e.focus1(), e.focus2()]],
        ConicKind::DegenerateMinorAxis => {
            let b = eb.sqrt();
            vec![vec![world(0.0, -b), world(0.0, b)]]
        }
    }
}

fn caustic_layers(e: &Ellipse, c: Option<&CausticDoc>) -> Vec<Layer> {
    let Some(c) = c else {
        return Vec::new();
    };
    let Some(kind) = c.kind() else {
        return Vec::new();
    };
    let conic = ConfocalConic {
        base: *e,
        lambda: c.lambda,
        kind,
    };
    caustic_curves(e, &conic)
        .into_iter()
        .map(|points| Layer {
            class: "caustic",
            closed: false,
            points,
        })
        .collect()
}

fn polyline(out: &mut String, layer: &Layer, map: &impl Fn(Point2) -> (f64, f64)) {
    let tag = if layer.closed { "polygon" } else { "polyline" };
    let pts: Vec<String> = layer
        .points
        .iter()
        .map(|&p| {
            let (x, y) = map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    writeln!(
        out,
        r#"  <{tag} class="{}" points="{}"/>"#,
        layer.class,
        pts.join(" ")
    )
    .unwrap();
}

pub fn render(doc: &AnyDoc) -> Result<String, CliError> {
    let to_points = |v: &[[f64; 2]]| v.iter().map(|&p| point(p)).collect::<Result<Vec<_>, _>>();
    let (boundary, mut layers, host_too) = match doc {
        AnyDoc::Solve(s) => {
            let e = s.boundary.to_ellipse()?;
            let mut layers = vec![
                Layer {
                    class: "host",
                    closed: true,
                    points: to_points(&s.host.vertices)?,
                },
                Layer {
                    class: "polygon",
                    closed: true,
                    points: to_points(&s.vertices)?,
                },
            ];
            layers.extend(caustic_layers(&e, s.orbit.caustic.as_ref()));
            (e, layers, true)
        }
        AnyDoc::Trajectory(t) => {
            let e = t.boundary.to_ellipse()?;
            let mut layers = vec![Layer {
                class: "trajectory",
                closed: false,
                points: to_points(&t.vertices)?,
            }];
            layers.extend(caustic_layers(&e, t.caustic.as_ref()));
            (e, layers, false)
        }
    };
    let outline = ellipse_outline(
        boundary.center(),
        boundary.semi_major(),
        boundary.semi_minor(),
        boundary.rotation(),
    );
    layers.insert(
        0,
        Layer {
            class: "boundary",
            closed: true,
            points: outline,
        },
    );

    // Frame the boundary with a margin; a huge host is cut off at the edge.
    let r = boundary.semi_major();
    let span = if host_too { 3.0 * r } else { 1.1 * r };
    let c = boundary.center();
    let scale = SIZE / (2.0 * span);
    let map = |p: Point2| ((p.x - c.x + span) * scale, (c.y - p.y + span) * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    out.push_str(concat!(
        "  <style>\n",
        "    polygon, polyline { fill: none; stroke-width: 1.5; }\n",
        "    .boundary { stroke: black; }\n",
        "    .host { stroke: gray; stroke-dasharray: 6 4; }\n",
        "    .polygon, .trajectory { stroke: crimson; }\n",
        "    .caustic { stroke: steelblue; stroke-dasharray: 2 3; }\n",
        "    .focus { fill: black; }\n",
        "  </style>\n",
    ));
    for layer in &layers {
        polyline(&mut out, layer, &map);
    }
    for f in boundary.foci() {
        let (x, y) = map(f);
        writeln!(
            out,
            r#"  <circle class="focus" cx="{x:.3}" cy="{y:.3}" r="3"/>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::{Kind, PolygonInput};
    use crate::solve::solve;

    #[test]
    fn butterfly_has_two_hyperbola_branches() {
        let input = PolygonInput {
            kind: Kind::Auto,
            vertices: vec![[-2.0, 0.0], [1.0, 2.0], [2.0, 0.0], [-1.0, 2.0]],
        };
        let s = solve(&input, 1e-9, 100).unwrap();
        let svg = render(&AnyDoc::Solve(s)).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r#"class="caustic""#).count(), 2);
        assert_eq!(svg.matches(r#"class="focus""#).count(), 2);
    }

    #[test]
    fn hyperbola_ends_on_boundary() {
        let e = Ellipse::new(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0), 4.0).unwrap();
        let c = e.confocal(3.5);
        assert_eq!(c.kind, ConicKind::ConfocalHyperbola);
        for branch in caustic_curves(&e, &c) {
            for p in [branch[0], *branch.last().unwrap()] {
                assert!(e.focal_residual(p).abs() < 1e-9);
            }
        }
    }
}
