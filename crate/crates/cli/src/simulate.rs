//! `ebill simulate`: run a billiard inside a given ellipse.

use ellipse_billiards::billiard::{run_with_tol, Trajectory};
use ellipse_billiards::geometry::{reflection_law_residual, Line2};
use ellipse_billiards::{Ellipse, Point2};

use crate::doc::{
    point, xy, AnyDoc, BounceResidual, CausticDoc, EllipseDoc, SimulateInput, TrajectoryDoc,
};
use crate::error::CliError;

/// Ellipse, start point and direction described by `text`, which is either
/// a simulate input or a solve result (launched from its first vertex
/// toward its second).
pub fn launch_from(text: &str) -> Result<(Ellipse, Point2, Point2), CliError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("type").is_some() {
        return match crate::doc::parse_any(text)? {
            AnyDoc::Solve(s) => {
                let e = s.boundary.to_ellipse()?;
                let (v0, v1) = match s.vertices.as_slice() {
                    [a, b, ..] => (point(*a)?, point(*b)?),
                    _ => {
                        return Err(CliError::Parse(
                            "solve result has fewer than 2 vertices".into(),
                        ))
                    }
                };
                Ok((e, v0, v1 - v0))
            }
            AnyDoc::Trajectory(_) => {
                Err(CliError::Parse("cannot simulate from a trajectory".into()))
            }
        };
    }
    let input: SimulateInput = serde_json::from_value(value)?;
    let f = &input.ellipse;
    let e = Ellipse::new(point(f.focus1)?, point(f.focus2)?, f.rope_length)?;
    let start = point(input.start)?;
    let dir = match (input.direction, input.toward) {
        (Some(d), None) => point(d)?,
        (None, Some(t)) => point(t)? - start,
        _ => {
            return Err(CliError::Parse(
                "give exactly one of `direction` and `toward`".into(),
            ))
        }
    };
    Ok((e, start, dir))
}

/// Focal-sum and reflection residuals at every vertex after the start.
pub fn bounce_residuals(t: &Trajectory) -> Vec<BounceResidual> {
    let e = &t.boundary;
    (1..t.vertices.len())
        .map(|i| {
            let v = t.vertices[i];
            let next = v + t.directions[i];
            let reflection = e
                .focal_normal(v)
                .and_then(|n| Line2::new(v, n.perp()).ok())
                .and_then(|tan| reflection_law_residual(t.vertices[i - 1], v, next, &tan).ok())
                .unwrap_or(f64::INFINITY);
            BounceResidual {
                on_ellipse: e.focal_residual(v).abs() / e.rope_length(),
                reflection,
            }
        })
        .collect()
}

pub fn trajectory_doc(t: &Trajectory) -> TrajectoryDoc {
    TrajectoryDoc {
        doc_type: "trajectory".into(),
        boundary: EllipseDoc::from_ellipse(&t.boundary),
        vertices: t.vertices.iter().map(|&p| xy(p)).collect(),
        closed: t.closed,
        period: t.period,
        caustic: t.caustic.as_ref().map(CausticDoc::from),
        caustic_deviation: t.caustic_deviation(),
        alternating_foci: t.alternating_foci,
        residuals: bounce_residuals(t),
    }
}

pub fn simulate(text: &str, tol: f64, max_bounces: usize) -> Result<TrajectoryDoc, CliError> {
    let (e, start, dir) = launch_from(text)?;
    Ok(trajectory_doc(&run_with_tol(
        &e,
        start,
        dir,
        max_bounces,
        tol,
    )?))
}
