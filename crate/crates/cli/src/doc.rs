//! JSON documents read and written by `ebill`, and the number formatting
//! that makes them round-trip byte for byte.

use std::io;

use ellipse_billiards::certificate::VertexCertificate;
use ellipse_billiards::{ConfocalConic, ConicKind, Ellipse, Point2};
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::CliError;

pub type Xy = [f64; 2];

pub fn xy(p: Point2) -> Xy {
    [p.x, p.y]
}

pub fn point(v: Xy) -> Result<Point2, CliError> {
    Point2::try_new(v[0], v[1]).map_err(|_| CliError::Parse("non-finite coordinate".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Triangle,
    Parallelogram,
    Butterfly,
    #[default]
    Auto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonInput {
    #[serde(default)]
    pub kind: Kind,
    pub vertices: Vec<Xy>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipseDoc {
    pub focus1: Xy,
    pub focus2: Xy,
    pub rope_length: f64,
    pub center: Xy,
    pub semi_major: f64,
    pub semi_minor: f64,
    /// Radians, major axis against `+x`, in `(-pi/2, pi/2]`.
    pub rotation: f64,
}

impl EllipseDoc {
    pub fn from_ellipse(e: &Ellipse) -> EllipseDoc {
        let c = e.to_canonical();
        EllipseDoc {
            focus1: xy(e.focus1()),
            focus2: xy(e.focus2()),
            rope_length: e.rope_length(),
            center: xy(c.center),
            semi_major: c.semi_major,
            semi_minor: c.semi_minor,
            rotation: c.rotation,
        }
    }

    /// Rebuilds the ellipse from the focal form only.
    pub fn to_ellipse(&self) -> Result<Ellipse, CliError> {
        Ok(Ellipse::new(
            point(self.focus1)?,
            point(self.focus2)?,
            self.rope_length,
        )?)
    }
}

/// Input of `simulate` when it is not a solve result: an ellipse in focal
/// form, a start point and either a direction or a point to aim at.
#[derive(Debug, Clone, Deserialize)]
pub struct SimulateInput {
    pub ellipse: FocalEllipse,
    pub start: Xy,
    #[serde(default)]
    pub direction: Option<Xy>,
    #[serde(default)]
    pub toward: Option<Xy>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FocalEllipse {
    pub focus1: Xy,
    pub focus2: Xy,
    pub rope_length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HostDoc {
    /// `bisector_triangle`, `rectangle` or `kite`.
    pub kind: String,
    pub vertices: Vec<Xy>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub on_ellipse: f64,
    pub tangency: f64,
    pub reflection: f64,
}

impl From<&VertexCertificate> for CertificateDoc {
    fn from(c: &VertexCertificate) -> Self {
        CertificateDoc {
            on_ellipse: c.on_ellipse,
            tangency: c.tangency,
            reflection: c.reflection,
        }
    }
}

impl CertificateDoc {
    pub fn worst(&self) -> f64 {
        self.on_ellipse.max(self.tangency).max(self.reflection)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CausticDoc {
    pub kind: String,
    pub lambda: f64,
}

impl From<&ConfocalConic> for CausticDoc {
    fn from(c: &ConfocalConic) -> Self {
        CausticDoc {
            kind: c.kind.as_str().to_string(),
            lambda: c.lambda,
        }
    }
}

impl CausticDoc {
    pub fn kind(&self) -> Option<ConicKind> {
        ConicKind::parse(&self.kind)
    }
}

/// The closed orbit obtained by launching from the first vertex toward the
/// second inside the computed ellipse.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitDoc {
    pub period: Option<usize>,
    /// Distance between the start and the closing vertex over the polygon
    /// diameter; absent when the orbit did not close.
    pub closure_error: Option<f64>,
    pub caustic: Option<CausticDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Details {
    Triangle {
        weights: [f64; 3],
    },
    Parallelogram {
        a: f64,
        b: f64,
        e: f64,
        x: f64,
        y: f64,
    },
    Butterfly {
        b1: f64,
        b2: f64,
        f1: f64,
        f2: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    #[serde(rename = "type")]
    pub doc_type: String,
    pub kind: Kind,
    pub vertices: Vec<Xy>,
    pub boundary: EllipseDoc,
    pub host: HostDoc,
    pub certificates: Vec<CertificateDoc>,
    pub worst_residual: f64,
    pub orbit: OrbitDoc,
    pub details: Details,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BounceResidual {
    pub on_ellipse: f64,
    pub reflection: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryDoc {
    #[serde(rename = "type")]
    pub doc_type: String,
    pub boundary: EllipseDoc,
    pub vertices: Vec<Xy>,
    pub closed: bool,
    pub period: Option<usize>,
    pub caustic: Option<CausticDoc>,
    pub caustic_deviation: f64,
    pub alternating_foci: bool,
    /// One entry per vertex after the start.
    pub residuals: Vec<BounceResidual>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub doc_type: String,
    pub source: String,
    pub certificates: Vec<CertificateDoc>,
    pub worst_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorDoc {
    #[serde(rename = "type")]
    pub doc_type: &'static str,
    pub code: String,
    pub message: String,
}

/// Any document `render` and `verify` accept.
pub enum AnyDoc {
    Solve(SolveResult),
    Trajectory(TrajectoryDoc),
}

pub fn parse_any(text: &str) -> Result<AnyDoc, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value.get("type").and_then(|t| t.as_str()) {
        Some("solve_result") => Ok(AnyDoc::Solve(serde_json::from_value(value)?)),
        Some("trajectory") => Ok(AnyDoc::Trajectory(serde_json::from_value(value)?)),
        other => Err(CliError::Parse(format!(
            "unsupported document type {other:?}"
        ))),
    }
}

/// Pretty JSON with every float in scientific notation carrying `digits`
/// significant digits. Seventeen digits reproduce every `f64` exactly.
pub struct FloatFormatter {
    inner: PrettyFormatter<'static>,
    digits: usize,
}

impl FloatFormatter {
    pub fn new(digits: usize) -> Self {
        FloatFormatter {
            inner: PrettyFormatter::new(),
            digits: digits.clamp(1, 17),
        }
    }
}

impl Formatter for FloatFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{:.*e}", self.digits - 1, value)
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object_value(writer)
    }
}

pub fn to_json<T: Serialize>(value: &T, digits: usize) -> Result<String, CliError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FloatFormatter::new(digits));
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}
