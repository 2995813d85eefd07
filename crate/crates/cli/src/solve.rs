//! `ebill solve`: polygon in, boundary ellipse and certificates out.

use ellipse_billiards::billiard::run_with_tol;
use ellipse_billiards::certificate::{worst, VertexCertificate};
use ellipse_billiards::geometry::{diameter, segments_cross};
use ellipse_billiards::marden::orthic_weights;
use ellipse_billiards::quad::{butterfly_boundary_ellipse, parallelogram_boundary_ellipse};
use ellipse_billiards::triangle::boundary_ellipse;
use ellipse_billiards::{Ellipse, Point2};

use crate::doc::{
    point, xy, CausticDoc, CertificateDoc, Details, EllipseDoc, HostDoc, Kind, OrbitDoc,
    PolygonInput, SolveResult,
};
use crate::error::CliError;

/// Relative tolerance of the opposite-side congruence test used by `auto`.
const CONGRUENCE_TOL: f64 = 1e-6;

pub fn infer_kind(v: &[Point2]) -> Result<Kind, CliError> {
    match v.len() {
        3 => Ok(Kind::Triangle),
        4 => {
            let diam = diameter(v);
            let len = |i: usize| v[i].distance(v[(i + 1) % 4]);
            let congruent = (len(0) - len(2)).abs() <= CONGRUENCE_TOL * diam
                && (len(1) - len(3)).abs() <= CONGRUENCE_TOL * diam;
            if !congruent {
                return Err(CliError::Inference(
                    "opposite sides are not congruent".into(),
                ));
            }
            let crossing =
                segments_cross(v[0], v[1], v[2], v[3]) || segments_cross(v[1], v[2], v[3], v[0]);
            Ok(if crossing {
                Kind::Butterfly
            } else {
                Kind::Parallelogram
            })
        }
        n => Err(CliError::Inference(format!(
            "{n} vertices; expected 3 or 4"
        ))),
    }
}

fn expect_len(v: &[Point2], n: usize, kind: &str) -> Result<(), CliError> {
    if v.len() == n {
        Ok(())
    } else {
        Err(CliError::Parse(format!(
            "a {kind} needs {n} vertices, got {}",
            v.len()
        )))
    }
}

fn orbit(e: &Ellipse, v: &[Point2], tol: f64, max_bounces: usize) -> Result<OrbitDoc, CliError> {
    let diam = diameter(v);
    let t = run_with_tol(e, v[0], v[1] - v[0], max_bounces, tol)?;
    let closure_error = t
        .period
        .map(|p| t.vertices[p].distance(t.vertices[0]) / diam);
    Ok(OrbitDoc {
        period: t.period,
        closure_error,
        caustic: t.caustic.as_ref().map(CausticDoc::from),
    })
}

struct Solved {
    kind: Kind,
    vertices: Vec<Point2>,
    boundary: Ellipse,
    host: HostDoc,
    certificates: Vec<VertexCertificate>,
    details: Details,
}

fn solve_kind(kind: Kind, v: Vec<Point2>) -> Result<Solved, CliError> {
    match kind {
        Kind::Auto => solve_kind(infer_kind(&v)?, v),
        Kind::Triangle => {
            expect_len(&v, 3, "triangle")?;
            let t = boundary_ellipse(v[0], v[1], v[2])?;
            let weights = orthic_weights(t.host_a, t.host_b, t.host_c)?.values();
            Ok(Solved {
                kind,
                vertices: t.vertices().to_vec(),
                boundary: t.boundary,
                host: HostDoc {
                    kind: "bisector_triangle".into(),
                    vertices: t.host().map(xy).to_vec(),
                },
                certificates: t.certificates()?,
                details: Details::Triangle { weights },
            })
        }
        Kind::Parallelogram => {
            expect_len(&v, 4, "parallelogram")?;
            let c = parallelogram_boundary_ellipse(v[0], v[1], v[2], v[3])?;
            Ok(Solved {
                kind,
                vertices: c.vertices().to_vec(),
                boundary: c.boundary,
                host: HostDoc {
                    kind: "rectangle".into(),
                    vertices: c.rectangle().map(xy).to_vec(),
                },
                certificates: c.certificates()?,
                details: Details::Parallelogram {
                    a: c.side_a,
                    b: c.side_b,
                    e: c.offset_e,
                    x: c.focus_x,
                    y: c.focus_y,
                },
            })
        }
        Kind::Butterfly => {
            expect_len(&v, 4, "butterfly")?;
            let c = butterfly_boundary_ellipse(v[0], v[1], v[2], v[3])?;
            Ok(Solved {
                kind,
                vertices: c.vertices().to_vec(),
                boundary: c.boundary,
                host: HostDoc {
                    kind: "kite".into(),
                    vertices: c.kite().map(xy).to_vec(),
                },
                certificates: c.certificates()?,
                details: Details::Butterfly {
                    b1: c.b1,
                    b2: c.b2,
                    f1: c.f1,
                    f2: c.f2,
                },
            })
        }
    }
}

pub fn solve(input: &PolygonInput, tol: f64, max_bounces: usize) -> Result<SolveResult, CliError> {
    let vertices = input
        .vertices
        .iter()
        .map(|&p| point(p))
        .collect::<Result<Vec<_>, _>>()?;
    let s = solve_kind(input.kind, vertices)?;
    let orbit = orbit(&s.boundary, &s.vertices, tol, max_bounces)?;
    Ok(SolveResult {
        doc_type: "solve_result".into(),
        kind: s.kind,
        vertices: s.vertices.iter().map(|&p| xy(p)).collect(),
        boundary: EllipseDoc::from_ellipse(&s.boundary),
        host: s.host,
        worst_residual: worst(&s.certificates),
        certificates: s.certificates.iter().map(CertificateDoc::from).collect(),
        orbit,
        details: s.details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn infers_each_family() {
        assert_eq!(
            infer_kind(&[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]).unwrap(),
            Kind::Triangle
        );
        let para = [p(1.0, 0.0), p(4.0, 2.25), p(3.0, 3.0), p(0.0, 0.75)];
        assert_eq!(infer_kind(&para).unwrap(), Kind::Parallelogram);
        let fly = [p(-2.0, 0.0), p(1.0, 2.0), p(2.0, 0.0), p(-1.0, 2.0)];
        assert_eq!(infer_kind(&fly).unwrap(), Kind::Butterfly);
        let generic = [p(0.0, 0.0), p(2.0, 0.0), p(2.5, 1.0), p(0.0, 1.5)];
        assert!(matches!(infer_kind(&generic), Err(CliError::Inference(_))));
        assert!(matches!(
            infer_kind(&[p(0.0, 0.0)]),
            Err(CliError::Inference(_))
        ));
    }

    #[test]
    fn equilateral_is_unit_circle() {
        let s = 3f64.sqrt() / 2.0;
        let input = PolygonInput {
            kind: Kind::Auto,
            vertices: vec![[1.0, 0.0], [-0.5, s], [-0.5, -s]],
        };
        let r = solve(&input, 1e-9, 100).unwrap();
        assert!(r.worst_residual < 1e-12);
        assert!((r.boundary.semi_major - 1.0).abs() < 1e-12);
        assert_eq!(r.orbit.period, Some(3));
    }

    #[test]
    fn forced_parallelogram_rejects_generic_quadrilateral() {
        let input = PolygonInput {
            kind: Kind::Parallelogram,
            vertices: vec![[0.0, 0.0], [2.0, 0.0], [2.5, 1.0], [0.0, 1.5]],
        };
        let err = solve(&input, 1e-9, 100).unwrap_err();
        assert_eq!(err.code(), "not_parallelogram");
        assert_eq!(err.exit_code(), 3);
    }
}
