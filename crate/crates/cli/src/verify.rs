//! `ebill verify`: recompute the certificates of a saved document.

use ellipse_billiards::certificate::{certify, VertexCertificate};
use ellipse_billiards::geometry::Line2;
use ellipse_billiards::Point2;

use crate::doc::{point, AnyDoc, CertificateDoc, SolveResult, TrajectoryDoc, VerifyReport};
use crate::error::CliError;
use crate::simulate::bounce_residuals;

fn points(v: &[[f64; 2]]) -> Result<Vec<Point2>, CliError> {
    v.iter().map(|&p| point(p)).collect()
}

/// The host side passing closest to each vertex.
fn host_sides(vertices: &[Point2], host: &[Point2]) -> Result<Vec<Line2>, CliError> {
    let n = host.len();
    let sides = (0..n)
        .map(|i| Line2::through(host[i], host[(i + 1) % n]))
        .collect::<Result<Vec<_>, _>>()?;
    vertices
        .iter()
        .map(|&v| {
            sides
                .iter()
                .min_by(|a, b| a.distance(v).total_cmp(&b.distance(v)))
                .copied()
                .ok_or_else(|| CliError::Parse("empty host polygon".into()))
        })
        .collect()
}

fn solve_certificates(s: &SolveResult) -> Result<Vec<VertexCertificate>, CliError> {
    let e = s.boundary.to_ellipse()?;
    let vertices = points(&s.vertices)?;
    let host = points(&s.host.vertices)?;
    if vertices.len() < 3 || host.len() < 3 {
        return Err(CliError::Parse(
            "polygon and host need at least 3 vertices".into(),
        ));
    }
    Ok(certify(&e, &vertices, &host_sides(&vertices, &host)?))
}

/// For a trajectory the tangency entry is the caustic parameter drift of
/// the segment leaving the vertex, relative to the squared semi-major axis.
fn trajectory_certificates(t: &TrajectoryDoc) -> Result<Vec<CertificateDoc>, CliError> {
    let e = t.boundary.to_ellipse()?;
    let vertices = points(&t.vertices)?;
    if vertices.len() < 3 {
        return Err(CliError::Parse(
            "trajectory needs at least 2 bounces".into(),
        ));
    }
    let mut directions: Vec<Point2> = vertices.windows(2).map(|w| w[1] - w[0]).collect();
    directions.push(*directions.last().expect("two or more segments"));
    let traj = ellipse_billiards::billiard::Trajectory {
        boundary: e,
        vertices: vertices.clone(),
        directions,
        closed: t.closed,
        period: t.period,
        caustic: None,
        alternating_foci: t.alternating_foci,
    };
    let (a, _) = e.axes_sq();
    let segs = traj.segments();
    let l0 = e.line_lambda(&segs[0]);
    let drift = |i: usize| {
        segs.get(i)
            .map_or(0.0, |s| (e.line_lambda(s) - l0).abs() / a)
    };
    // The last vertex has no outgoing segment in the document, so its
    // reflection is not checked.
    let residuals = bounce_residuals(&traj);
    let last = residuals.len() - 1;
    Ok(residuals
        .iter()
        .enumerate()
        .map(|(i, r)| CertificateDoc {
            on_ellipse: r.on_ellipse,
            tangency: drift(i + 1),
            reflection: if i == last { 0.0 } else { r.reflection },
        })
        .collect())
}

pub fn verify(doc: &AnyDoc, tol: f64) -> Result<VerifyReport, CliError> {
    let (source, certificates) = match doc {
        AnyDoc::Solve(s) => {
            let c = solve_certificates(s)?;
            (
                "solve_result",
                c.iter().map(CertificateDoc::from).collect::<Vec<_>>(),
            )
        }
        AnyDoc::Trajectory(t) => ("trajectory", trajectory_certificates(t)?),
    };
    let worst_residual = certificates
        .iter()
        .map(CertificateDoc::worst)
        .fold(0.0, f64::max);
    Ok(VerifyReport {
        doc_type: "verify_report".into(),
        source: source.into(),
        certificates,
        worst_residual,
        tol,
        pass: worst_residual < tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::{Kind, PolygonInput};
    use crate::solve::solve;

    fn butterfly() -> SolveResult {
        let input = PolygonInput {
            kind: Kind::Auto,
            vertices: vec![[-2.0, 0.0], [1.0, 2.0], [2.0, 0.0], [-1.0, 2.0]],
        };
        solve(&input, 1e-9, 100).unwrap()
    }

    #[test]
    fn solved_document_verifies() {
        let r = verify(&AnyDoc::Solve(butterfly()), 1e-9).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.certificates.len(), 4);
    }

    #[test]
    fn tampered_focus_fails() {
        let mut s = butterfly();
        s.boundary.focus1[0] += 1e-4;
        let r = verify(&AnyDoc::Solve(s), 1e-9).unwrap();
        assert!(!r.pass);
        assert!(r.worst_residual > 1e-6);
    }

    #[test]
    fn simulated_trajectory_verifies() {
        let text = r#"{"ellipse": {"focus1": [-1, 0], "focus2": [1, 0], "rope_length": 3},
                       "start": [0.2, 0.1], "direction": [1, 0.7]}"#;
        let t = crate::simulate::simulate(text, 1e-9, 60).unwrap();
        let r = verify(&AnyDoc::Trajectory(t), 1e-9).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.source, "trajectory");
    }
}
