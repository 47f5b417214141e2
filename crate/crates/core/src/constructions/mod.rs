//! Compass and straightedge constructions in the taxicab plane, recorded as
//! replayable traces.

mod nsect;
mod section;
pub mod trace;

use alloc::boxed::Box;
use alloc::string::String;

pub use nsect::{corner_pair, last_circle_south_vertex, nsect_segment, Nsection};
pub use section::{section_angle, share_edge, AngleSection};
pub use trace::{
    verify_trace, ConstructionTrace, DrawnLine, FailureReason, Incidence, Pick, Primitive, Role, StepFailure, StepId,
    StepKind, TraceError, TraceStep, Verification,
};

use crate::kernel::{KernelError, Point};

/// A constructed point that disagrees with the parametric one, with the
/// trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub expected: Point,
    pub actual: Point,
    pub trace: ConstructionTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("need at least {min} parts, got {n}")]
    TooFewParts { n: u32, min: u32 },
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("angle has zero measure")]
    DegenerateAngle,
    #[error("step {step} ({kind}) failed: {message}")]
    Step { step: usize, kind: &'static str, message: String },
    /// The constructed point disagrees with the parametric one. This means
    /// the corner rule is wrong for this input.
    #[error("construction produced {}, expected {}", .0.actual, .0.expected)]
    Postcondition(Box<Mismatch>),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
