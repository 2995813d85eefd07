use thiserror::Error;

/// Errors raised by the geometric primitives, the solvers and the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate or parameter")]
    NonFinite,
    #[error("line direction has zero length")]
    DegenerateLine,
    #[error("angle is degenerate: the three points are collinear")]
    DegenerateAngle,
    #[error("point is not on the expected line (distance {distance:.3e})")]
    NotOnLine { distance: f64 },
    #[error("point coincides with a triangle vertex")]
    VertexCoincidence,
    #[error("segment has zero length")]
    ZeroLengthSegment,

    #[error("ellipse is degenerate: rope length must exceed the focal distance")]
    DegenerateEllipse,
    #[error("point is not on the ellipse (focal-sum residual {residual:.3e})")]
    PointNotOnEllipse { residual: f64 },
    #[error("line passes through a focus; it has no caustic conic")]
    LineThroughFocus,

    #[error("triangle vertices are collinear")]
    CollinearVertices,
    #[error("weights sum to zero; the logarithmic derivative has a zero at infinity")]
    WeightSumZero,
    #[error("weights must be nonzero and finite")]
    ZeroWeight,
    #[error("weights must be positive for an inscribed ellipse")]
    NonPositiveWeight,
    #[error("focus lies outside the triangle")]
    FocusOutsideTriangle,
    #[error("touch-point ratios are inconsistent (Ceva product {ceva:.6})")]
    InconsistentRatios { ceva: f64 },

    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("triangle is not acute")]
    NotAcute,

    #[error("parallelogram is degenerate")]
    DegenerateParallelogram,
    #[error("quadrilateral is not a parallelogram")]
    NotParallelogram,
    #[error("invalid rectangle dimensions")]
    InvalidDimensions,
    #[error("quadrilateral is not a Darboux butterfly")]
    NotButterfly,
    #[error("kite apex lies on the symmetry axis")]
    DegenerateApex,
    #[error("kite half-triangle is not acute")]
    NotAcuteHalf,

    #[error("launch direction is tangent to the boundary")]
    TangentialStart,
    #[error("trajectory segments disagree on the caustic (|dλ| = {deviation:.3e})")]
    CausticMismatch { deviation: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable identifier, used in CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonFinite => "non_finite",
            Error::DegenerateLine => "degenerate_line",
            Error::DegenerateAngle => "degenerate_angle",
            Error::NotOnLine { .. } => "not_on_line",
            Error::VertexCoincidence => "vertex_coincidence",
            Error::ZeroLengthSegment => "zero_length_segment",
            Error::DegenerateEllipse => "degenerate_ellipse",
            Error::PointNotOnEllipse { .. } => "point_not_on_ellipse",
            Error::LineThroughFocus => "line_through_focus",
            Error::CollinearVertices => "collinear_vertices",
            Error::WeightSumZero => "weight_sum_zero",
            Error::ZeroWeight => "zero_weight",
            Error::NonPositiveWeight => "non_positive_weight",
            Error::FocusOutsideTriangle => "focus_outside_triangle",
            Error::InconsistentRatios { .. } => "inconsistent_ratios",
            Error::DegenerateTriangle => "degenerate_triangle",
            Error::NotAcute => "not_acute",
            Error::DegenerateParallelogram => "degenerate_parallelogram",
            Error::NotParallelogram => "not_parallelogram",
            Error::InvalidDimensions => "invalid_dimensions",
            Error::NotButterfly => "not_butterfly",
            Error::DegenerateApex => "degenerate_apex",
            Error::NotAcuteHalf => "not_acute_half",
            Error::TangentialStart => "tangential_start",
            Error::CausticMismatch { .. } => "caustic_mismatch",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
