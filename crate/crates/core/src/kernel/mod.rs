//! Exact planar primitives and their incidences.

mod circle;
mod intersect;
mod line;
mod point;

pub use circle::{circle_vertex, point_on_circle, CompassPoint, TaxicabCircle};
pub use intersect::{
    intersect_line_circle, intersect_linear, intersect_lines, intersect_ray_circle, intersect_segment_circle,
    IntersectionResult, Linear,
};
pub use line::{Line, Ray, Segment};
pub use point::{euclidean_distance_squared, taxicab_distance, Direction, Point, Symmetry};

use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("line equation has a = b = 0")]
    DegenerateLine,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("circle radius must be positive, got {0}")]
    NonPositiveRadius(Rational),
}
