//! Replayable construction records.
//!
//! A [`ConstructionTrace`] is a list of compass and straightedge actions in
//! topological order. Each step names the earlier steps it consumes, records
//! the primitive it produced, and carries incidence claims about that
//! primitive. [`verify_trace`] replays the whole thing with kernel operations
//! and checks every claim exactly.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::{
    intersect_line_circle, intersect_lines, CompassPoint, IntersectionResult, KernelError, Line, Point, Ray,
    TaxicabCircle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepId(pub usize);

impl fmt::Display for StepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Which hit to keep when a drawn line crosses a circle twice, counted along
/// the line's drawing direction (`from` towards `to`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pick {
    First,
    Last,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    PlacePoint(Point),
    /// Compass centered on one point and opened to another.
    DrawCircle {
        center: StepId,
        through: StepId,
    },
    /// Straightedge through two points, oriented `from` → `to`.
    DrawLine {
        from: StepId,
        to: StepId,
    },
    IntersectLineCircle {
        line: StepId,
        circle: StepId,
        pick: Pick,
    },
    IntersectLines {
        first: StepId,
        second: StepId,
    },
    TakeCircleVertex {
        circle: StepId,
        corner: CompassPoint,
    },
    MarkResult {
        point: StepId,
    },
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::PlacePoint(_) => "PlacePoint",
            StepKind::DrawCircle { .. } => "DrawCircle",
            StepKind::DrawLine { .. } => "DrawLine",
            StepKind::IntersectLineCircle { .. } => "IntersectLineCircle",
            StepKind::IntersectLines { .. } => "IntersectLines",
            StepKind::TakeCircleVertex { .. } => "TakeCircleVertex",
            StepKind::MarkResult { .. } => "MarkResult",
        }
    }

    /// `(input, expected primitive class)` pairs.
    fn inputs(&self) -> Vec<(StepId, PrimitiveClass)> {
        use PrimitiveClass::*;
        match *self {
            StepKind::PlacePoint(_) => Vec::new(),
            StepKind::DrawCircle { center, through } => alloc::vec![(center, Point), (through, Point)],
            StepKind::DrawLine { from, to } => alloc::vec![(from, Point), (to, Point)],
            StepKind::IntersectLineCircle { line, circle, .. } => alloc::vec![(line, Line), (circle, Circle)],
            StepKind::IntersectLines { first, second } => alloc::vec![(first, Line), (second, Line)],
            StepKind::TakeCircleVertex { circle, .. } => alloc::vec![(circle, Circle)],
            StepKind::MarkResult { point } => alloc::vec![(point, Point)],
        }
    }

    fn output_class(&self) -> PrimitiveClass {
        match self {
            StepKind::DrawCircle { .. } => PrimitiveClass::Circle,
            StepKind::DrawLine { .. } => PrimitiveClass::Line,
            _ => PrimitiveClass::Point,
        }
    }
}

/// A straightedge stroke: the infinite line plus the two points it was laid
/// against, which fix its orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawnLine {
    pub from: Point,
    pub to: Point,
    pub line: Line,
}

impl DrawnLine {
    pub fn through(from: &Point, to: &Point) -> Result<DrawnLine, KernelError> {
        Ok(DrawnLine { from: from.clone(), to: to.clone(), line: Line::through(from, to)? })
    }

    pub fn as_ray(&self) -> Ray {
        Ray::new(self.from.clone(), crate::kernel::Direction::between(&self.from, &self.to).expect("distinct"))
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitive {
    Point(Point),
    Line(DrawnLine),
    Circle(TaxicabCircle),
}

impl Primitive {
    fn class(&self) -> PrimitiveClass {
        match self {
            Primitive::Point(_) => PrimitiveClass::Point,
            Primitive::Line(_) => PrimitiveClass::Line,
            Primitive::Circle(_) => PrimitiveClass::Circle,
        }
    }

    pub fn as_point(&self) -> Option<&Point> {
        match self {
            Primitive::Point(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_line(&self) -> Option<&DrawnLine> {
        match self {
            Primitive::Line(l) => Some(l),
            _ => None,
        }
    }

    pub fn as_circle(&self) -> Option<&TaxicabCircle> {
        match self {
            Primitive::Circle(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimitiveClass {
    Point,
    Line,
    Circle,
}

/// A claim about a step's own output, relative to an earlier step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Incidence {
    /// The output point lies on the line of the referenced step.
    OnLine(StepId),
    /// The output point lies on the circle of the referenced step.
    OnCircle(StepId),
    /// The output point equals the referenced point.
    SameAs(StepId),
    /// The output line or circle passes through the referenced point.
    PassesThrough(StepId),
}

impl Incidence {
    fn target(&self) -> StepId {
        match *self {
            Incidence::OnLine(s) | Incidence::OnCircle(s) | Incidence::SameAs(s) | Incidence::PassesThrough(s) => s,
        }
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Incidence::OnLine(s) => write!(f, "lies on line {s}"),
            Incidence::OnCircle(s) => write!(f, "lies on circle {s}"),
            Incidence::SameAs(s) => write!(f, "equals point {s}"),
            Incidence::PassesThrough(s) => write!(f, "passes through {s}"),
        }
    }
}

/// How a step is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Given,
    Auxiliary,
    Result,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub output: Primitive,
    pub assertions: Vec<Incidence>,
    pub label: Option<String>,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
    /// The final `MarkResult` step.
    pub result: StepId,
}

impl ConstructionTrace {
    pub fn step(&self, id: StepId) -> &TraceStep {
        &self.steps[id.0]
    }

    pub fn result_point(&self) -> Option<&Point> {
        self.steps.get(self.result.0).and_then(|s| s.output.as_point())
    }

    /// Outputs of every `MarkResult` step, in order.
    pub fn marked_points(&self) -> Vec<&Point> {
        self.steps
            .iter()
            .filter(|s| matches!(s.kind, StepKind::MarkResult { .. }))
            .filter_map(|s| s.output.as_point())
            .collect()
    }

    pub fn count(&self, pred: impl Fn(&TraceStep) -> bool) -> usize {
        self.steps.iter().filter(|s| pred(s)).count()
    }
}

/// The trace itself is ill-formed, independent of geometry.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("step {step} refers to {reference}, which does not precede it")]
    ForwardReference { step: StepId, reference: StepId },
    #[error("step {step} expects a {expected:?} from {reference}")]
    WrongInput { step: StepId, reference: StepId, expected: PrimitiveClass },
    #[error("step {step} records a {found:?} but a {kind} produces a {expected:?}")]
    WrongOutput { step: StepId, kind: &'static str, expected: PrimitiveClass, found: PrimitiveClass },
    #[error("result {0} is not a MarkResult step")]
    BadResult(StepId),
}

/// Why replaying a step did not go through.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// The kernel operation has no usable answer (empty or degenerate intersection).
    Inapplicable(String),
    /// Replay produced something other than what was recorded.
    OutputMismatch {
        recorded: Primitive,
        replayed: Primitive,
    },
    AssertionFailed(Incidence),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::Inapplicable(msg) => write!(f, "cannot apply step: {msg}"),
            FailureReason::OutputMismatch { recorded, replayed } => {
                write!(f, "recorded {recorded:?} but replay gives {replayed:?}")
            }
            FailureReason::AssertionFailed(inc) => write!(f, "assertion failed: output {inc}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFailure {
    pub step: StepId,
    pub kind: &'static str,
    pub reason: FailureReason,
}

impl fmt::Display for StepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {} ({}): {}", self.step, self.kind, self.reason)
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Verified { result: Point, marks: Vec<Point> },
    Failed(StepFailure),
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified { .. })
    }
}

/// Computes a step's output from already-computed outputs. Inputs must have
/// been checked for class and ordering.
pub(crate) fn apply<'a>(kind: &StepKind, output: impl Fn(StepId) -> &'a Primitive) -> Result<Primitive, String> {
    let point = |id: StepId| output(id).as_point().expect("checked class");
    let line = |id: StepId| output(id).as_line().expect("checked class");
    let circle = |id: StepId| output(id).as_circle().expect("checked class");
    Ok(match kind {
        StepKind::PlacePoint(p) => Primitive::Point(p.clone()),
        StepKind::DrawCircle { center, through } => Primitive::Circle(
            TaxicabCircle::through(point(*center).clone(), point(*through)).map_err(|e| e.to_string())?,
        ),
        StepKind::DrawLine { from, to } => {
            Primitive::Line(DrawnLine::through(point(*from), point(*to)).map_err(|e| e.to_string())?)
        }
        StepKind::IntersectLineCircle { line: l, circle: c, pick } => {
            let drawn = line(*l);
            let hits = match intersect_line_circle(&drawn.line, circle(*c)) {
                IntersectionResult::Empty => return Err("line misses the circle".into()),
                IntersectionResult::OverlapSegment(_) => return Err("line runs along a circle edge".into()),
                other => other.points(),
            };
            let ray = drawn.as_ray();
            let mut keyed: Vec<_> = hits.into_iter().map(|p| (ray.parameter_of(&p), p)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let chosen = match pick {
                Pick::First => keyed.into_iter().next(),
                Pick::Last => keyed.into_iter().last(),
            };
            Primitive::Point(chosen.expect("nonempty").1)
        }
        StepKind::IntersectLines { first, second } => match intersect_lines(&line(*first).line, &line(*second).line) {
            Ok(IntersectionResult::OnePoint(p)) => Primitive::Point(p),
            Ok(_) => return Err("lines are parallel".into()),
            Err(e) => return Err(e.to_string()),
        },
        StepKind::TakeCircleVertex { circle: c, corner } => Primitive::Point(circle(*c).vertex(*corner)),
        StepKind::MarkResult { point: p } => Primitive::Point(point(*p).clone()),
    })
}

fn check(inc: &Incidence, output: &Primitive, outputs: &[Primitive]) -> bool {
    let target = &outputs[inc.target().0];
    match (inc, output, target) {
        (Incidence::OnLine(_), Primitive::Point(p), Primitive::Line(l)) => l.line.contains(p),
        (Incidence::OnCircle(_), Primitive::Point(p), Primitive::Circle(c)) => c.contains_point(p),
        (Incidence::SameAs(_), Primitive::Point(p), Primitive::Point(q)) => p == q,
        (Incidence::PassesThrough(_), Primitive::Line(l), Primitive::Point(q)) => l.line.contains(q),
        (Incidence::PassesThrough(_), Primitive::Circle(c), Primitive::Point(q)) => c.contains_point(q),
        _ => false,
    }
}

fn check_structure(trace: &ConstructionTrace) -> Result<(), TraceError> {
    for (i, step) in trace.steps.iter().enumerate() {
        let id = StepId(i);
        let refs = step.kind.inputs();
        let asserted = step.assertions.iter().map(|a| a.target());
        for reference in refs.iter().map(|r| r.0).chain(asserted) {
            if reference.0 >= i {
                return Err(TraceError::ForwardReference { step: id, reference });
            }
        }
        for (reference, expected) in refs {
            if trace.steps[reference.0].kind.output_class() != expected {
                return Err(TraceError::WrongInput { step: id, reference, expected });
            }
        }
        let expected = step.kind.output_class();
        if step.output.class() != expected {
            return Err(TraceError::WrongOutput {
                step: id,
                kind: step.kind.name(),
                expected,
                found: step.output.class(),
            });
        }
    }
    match trace.steps.get(trace.result.0) {
        Some(TraceStep { kind: StepKind::MarkResult { .. }, .. }) => Ok(()),
        _ => Err(TraceError::BadResult(trace.result)),
    }
}

/// Replays `trace` from scratch. Structural problems are `Err`; geometric
/// problems are reported as [`Verification::Failed`] at the first bad step.
pub fn verify_trace(trace: &ConstructionTrace) -> Result<Verification, TraceError> {
    check_structure(trace)?;
    let mut replayed: Vec<Primitive> = Vec::with_capacity(trace.steps.len());
    for (i, step) in trace.steps.iter().enumerate() {
        let fail = |reason| Ok(Verification::Failed(StepFailure { step: StepId(i), kind: step.kind.name(), reason }));
        // Claims are checked against what the trace says it produced.
        for inc in &step.assertions {
            if !check(inc, &step.output, &replayed) {
                return fail(FailureReason::AssertionFailed(*inc));
            }
        }
        let out = match apply(&step.kind, |id| &replayed[id.0]) {
            Ok(out) => out,
            Err(msg) => return fail(FailureReason::Inapplicable(msg)),
        };
        if out != step.output {
            return fail(FailureReason::OutputMismatch { recorded: step.output.clone(), replayed: out });
        }
        replayed.push(out);
    }
    let marks = trace.marked_points().into_iter().cloned().collect();
    let result = trace.result_point().expect("checked structure").clone();
    Ok(Verification::Verified { result, marks })
}

/// Appends steps, computing each output with the same kernel operations the
/// verifier uses.
#[derive(Debug, Default)]
pub(crate) struct TraceBuilder {
    steps: Vec<TraceStep>,
}

impl TraceBuilder {
    pub fn new() -> Self {
        TraceBuilder { steps: Vec::new() }
    }

    pub fn push(
        &mut self,
        kind: StepKind,
        role: Role,
        label: Option<&str>,
        extra: &[Incidence],
    ) -> Result<StepId, super::ConstructionError> {
        let id = StepId(self.steps.len());
        let output = apply(&kind, |id| &self.steps[id.0].output).map_err(|msg| super::ConstructionError::Step {
            step: id.0,
            kind: kind.name(),
            message: msg,
        })?;
        let mut assertions = default_assertions(&kind);
        assertions.extend_from_slice(extra);
        self.steps.push(TraceStep { kind, output, assertions, label: label.map(String::from), role });
        Ok(id)
    }

    pub fn place(&mut self, p: Point, role: Role, label: Option<&str>) -> StepId {
        self.push(StepKind::PlacePoint(p), role, label, &[]).expect("placing a point cannot fail")
    }

    pub fn point(&self, id: StepId) -> &Point {
        self.steps[id.0].output.as_point().expect("point step")
    }

    pub fn finish(self, result: StepId) -> ConstructionTrace {
        ConstructionTrace { steps: self.steps, result }
    }
}

fn default_assertions(kind: &StepKind) -> Vec<Incidence> {
    match *kind {
        StepKind::PlacePoint(_) => Vec::new(),
        StepKind::DrawCircle { through, .. } => alloc::vec![Incidence::PassesThrough(through)],
        StepKind::DrawLine { from, to } => alloc::vec![Incidence::PassesThrough(from), Incidence::PassesThrough(to)],
        StepKind::IntersectLineCircle { line, circle, .. } => {
            alloc::vec![Incidence::OnLine(line), Incidence::OnCircle(circle)]
        }
        StepKind::IntersectLines { first, second } => alloc::vec![Incidence::OnLine(first), Incidence::OnLine(second)],
        StepKind::TakeCircleVertex { circle, .. } => alloc::vec![Incidence::OnCircle(circle)],
        StepKind::MarkResult { point } => alloc::vec![Incidence::SameAs(point)],
    }
}
