//! Exact taxicab geometry.
//!
//! Everything here works over [`Rational`]: distances in the L1 metric,
//! taxicab circles (diamonds) and their intersections with lines, t-radian
//! angle measure on the unit taxicab circle, and compass-and-straightedge
//! constructions that split segments and angles into `n` equal parts while
//! recording a replayable, checkable trace.
//!
//! The crate is `no_std` (it needs `alloc`) when the default `std` feature is
//! turned off.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod angles;
pub mod constructions;
pub mod kernel;
pub mod numeric;

pub use angles::{circumference, direction_to_param, measure_angle, param_to_point, Angle, ArcParam};
pub use constructions::{
    last_circle_south_vertex, nsect_segment, section_angle, verify_trace, AngleSection, ConstructionError,
    ConstructionTrace, Nsection, Verification,
};
pub use kernel::{
    taxicab_distance, CompassPoint, Direction, IntersectionResult, KernelError, Line, Point, Ray, Segment,
    TaxicabCircle,
};
pub use numeric::{NumericError, Rational};
