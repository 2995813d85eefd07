//! Boundary ellipses for periodic billiard trajectories.
//!
//! Given a triangle, a parallelogram or a Darboux butterfly, the solvers in
//! this crate construct the unique ellipse inside which that polygon is a
//! closed billiard trajectory, together with the circumscribed host polygon
//! whose sides touch the ellipse at the trajectory's vertices. The
//! [`billiard`] module simulates elliptic billiards forward and is used as
//! an independent check on every solver.

pub mod billiard;
pub mod certificate;
pub mod conics;
mod dd;
pub mod error;
pub mod geometry;
pub mod marden;
pub mod quad;
pub mod quadratic;
pub mod triangle;

pub use conics::{ConfocalConic, ConicKind, Ellipse, EllipseCanonical};
pub use error::{Error, Result};
pub use geometry::{Line2, Point2};
pub use marden::{FocusPair, WeightTriple};
