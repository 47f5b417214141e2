//! Splitting a segment into `n` equal taxicab parts with taxicab compass and
//! straightedge.
//!
//! For `n >= 3`, with `L = d(A, B)`:
//!
//! 1. circles of radius `L` about `B` and about `A`;
//! 2. `n - 3` more circles of radius `L` chained along the extension of `AB`
//!    beyond `A`, each centered where the previous circle meets that
//!    extension;
//! 3. a line from the far corner of the last circle to `B`, first meeting
//!    the circle about `B` at `P`;
//! 4. a line from `P` to the near corner of the circle about `A`, meeting
//!    `AB` at `C`, with `d(A, C) = L / n`.
//!
//! For `n = 2` the chain is empty and the far corner of the circle about `A`
//! is joined directly to the near corner of the circle about `B`.

use alloc::boxed::Box;

use crate::kernel::{CompassPoint, Direction, Point};
use crate::numeric::Rational;

use super::trace::{ConstructionTrace, Incidence, Pick, Role, StepId, StepKind, TraceBuilder};
use super::{ConstructionError, Mismatch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nsection {
    pub point: Point,
    pub trace: ConstructionTrace,
}

/// Corners used for a segment running from `a` towards `b`: the far corner
/// of the last chained circle and the near corner of the circle about `a`.
///
/// For segments heading up (or horizontal) these are South and North, the
/// corners of the slope 1 case. Heading down, the picture is mirrored in the
/// x axis. Vertical segments put every key point on one line, so the rule is
/// turned a quarter turn.
pub fn corner_pair(dir: &Direction) -> (CompassPoint, CompassPoint) {
    if dir.dx().is_zero() {
        (CompassPoint::West, CompassPoint::East)
    } else if dir.dy().is_negative() {
        (CompassPoint::North, CompassPoint::South)
    } else {
        (CompassPoint::South, CompassPoint::North)
    }
}

pub(crate) struct NsectSteps {
    pub segment: StepId,
    pub result: StepId,
}

/// Appends the construction for the segment from step `a` to step `b`.
pub(crate) fn build_nsect(
    tb: &mut TraceBuilder,
    a: StepId,
    b: StepId,
    n: u32,
    labelled: bool,
) -> Result<NsectSteps, ConstructionError> {
    let label = |s: &'static str| if labelled { Some(s) } else { None };
    let dir = Direction::between(tb.point(a), tb.point(b)).map_err(|_| ConstructionError::DegenerateSegment)?;
    let (far, near) = corner_pair(&dir);

    let segment = tb.push(StepKind::DrawLine { from: a, to: b }, Role::Given, None, &[])?;
    let circle_b = tb.push(StepKind::DrawCircle { center: b, through: a }, Role::Auxiliary, None, &[])?;
    let circle_a = tb.push(StepKind::DrawCircle { center: a, through: b }, Role::Auxiliary, None, &[])?;

    if n == 2 {
        let bottom =
            tb.push(StepKind::TakeCircleVertex { circle: circle_a, corner: far }, Role::Auxiliary, None, &[])?;
        let top = tb.push(StepKind::TakeCircleVertex { circle: circle_b, corner: near }, Role::Auxiliary, None, &[])?;
        let joining = tb.push(StepKind::DrawLine { from: bottom, to: top }, Role::Auxiliary, None, &[])?;
        let result =
            tb.push(StepKind::IntersectLines { first: joining, second: segment }, Role::Auxiliary, None, &[])?;
        return Ok(NsectSteps { segment, result });
    }

    let mut last_circle = circle_a;
    if n > 3 {
        let extension = tb.push(StepKind::DrawLine { from: b, to: a }, Role::Auxiliary, None, &[])?;
        let mut prev_center = a;
        for _ in 0..(n - 3) {
            let center = tb.push(
                StepKind::IntersectLineCircle { line: extension, circle: last_circle, pick: Pick::Last },
                Role::Auxiliary,
                None,
                &[],
            )?;
            last_circle = tb.push(StepKind::DrawCircle { center, through: prev_center }, Role::Auxiliary, None, &[])?;
            prev_center = center;
        }
    }

    let corner =
        tb.push(StepKind::TakeCircleVertex { circle: last_circle, corner: far }, Role::Auxiliary, None, &[])?;
    let to_b = tb.push(StepKind::DrawLine { from: corner, to: b }, Role::Auxiliary, None, &[])?;
    let p = tb.push(
        StepKind::IntersectLineCircle { line: to_b, circle: circle_b, pick: Pick::First },
        Role::Auxiliary,
        label("P"),
        &[],
    )?;
    let top = tb.push(StepKind::TakeCircleVertex { circle: circle_a, corner: near }, Role::Auxiliary, None, &[])?;
    let to_top = tb.push(StepKind::DrawLine { from: p, to: top }, Role::Auxiliary, None, &[])?;
    let result = tb.push(StepKind::IntersectLines { first: to_top, second: segment }, Role::Auxiliary, None, &[])?;
    Ok(NsectSteps { segment, result })
}

/// Constructs the point `C` on `ab` with `d(a, C) = d(a, b) / n`.
///
/// The constructed point is checked against `a + (b - a) / n`; a mismatch is
/// a [`ConstructionError::Postcondition`] carrying the offending trace.
pub fn nsect_segment(a: &Point, b: &Point, n: u32) -> Result<Nsection, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::TooFewParts { n, min: 2 });
    }
    if a == b {
        return Err(ConstructionError::DegenerateSegment);
    }
    let mut tb = TraceBuilder::new();
    let a_id = tb.place(a.clone(), Role::Given, Some("A"));
    let b_id = tb.place(b.clone(), Role::Given, Some("B"));
    let steps = build_nsect(&mut tb, a_id, b_id, n, true)?;
    let mark = tb.push(
        StepKind::MarkResult { point: steps.result },
        Role::Result,
        Some("C"),
        &[Incidence::OnLine(steps.segment)],
    )?;
    let point = tb.point(mark).clone();
    let trace = tb.finish(mark);
    let expected = a.nth_of_the_way(b, n);
    if point != expected {
        return Err(ConstructionError::Postcondition(Box::new(Mismatch { expected, actual: point, trace })));
    }
    Ok(Nsection { point, trace })
}

/// The South corner of the last circle in the chain, `a - (n-3)(b-a) - (0, L)`.
/// For `a = (0,0)`, `b = (l,l)` this is `((3-n)l, (1-n)l)`. Undefined for
/// `n < 3`, where there is no chain.
pub fn last_circle_south_vertex(a: &Point, b: &Point, n: u32) -> Result<Point, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooFewParts { n, min: 3 });
    }
    if a == b {
        return Err(ConstructionError::DegenerateSegment);
    }
    let back = -Rational::from(n as i64 - 3);
    let center = a.lerp(b, &back);
    let length = crate::kernel::taxicab_distance(a, b);
    Ok(center.offset(&Rational::zero(), &-length))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{verify_trace, Verification};

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn labelled(trace: &ConstructionTrace, label: &str) -> Point {
        let step = trace.steps.iter().find(|s| s.label.as_deref() == Some(label)).expect("label present");
        step.output.as_point().unwrap().clone()
    }

    #[test]
    fn slope_one_trisection_values() {
        // l = 3: C = (l/n, l/n), P = (l/(n-1), -l/(n-1))
        let r = nsect_segment(&Point::origin(), &Point::new(3, 3), 3).unwrap();
        assert_eq!(r.point, Point::new(1, 1));
        assert_eq!(labelled(&r.trace, "P"), Point::new(q(3, 2), q(-3, 2)));
    }

    #[test]
    fn bisection_of_diagonal() {
        let r = nsect_segment(&Point::origin(), &Point::new(1, 1), 2).unwrap();
        assert_eq!(r.point, Point::new(q(1, 2), q(1, 2)));
        assert!(verify_trace(&r.trace).unwrap().is_verified());
    }

    #[test]
    fn general_slope_quadrisection() {
        let r = nsect_segment(&Point::origin(), &Point::new(2, 1), 4).unwrap();
        assert_eq!(r.point, Point::new(q(1, 2), q(1, 4)));
        assert_eq!(labelled(&r.trace, "P"), Point::new(q(2, 3), q(-2, 3)));
        let corners: alloc::vec::Vec<Point> = r
            .trace
            .steps
            .iter()
            .filter(|s| matches!(s.kind, StepKind::TakeCircleVertex { .. }))
            .map(|s| s.output.as_point().unwrap().clone())
            .collect();
        assert_eq!(corners, [Point::new(-2, -4), Point::new(0, 3)]);
        assert!(verify_trace(&r.trace).unwrap().is_verified());
    }

    #[test]
    fn every_direction_class() {
        let a = Point::new(q(1, 3), -2);
        for (dx, dy) in [(2, 1), (-1, 3), (-2, -5), (4, -1), (1, 0), (-3, 0), (0, 2), (0, -7), (1, 1), (-1, 1)] {
            let b = a.offset(&Rational::from(dx), &Rational::from(dy));
            for n in 2..=7 {
                let r = nsect_segment(&a, &b, n).unwrap_or_else(|e| panic!("({dx},{dy}) n={n}: {e}"));
                assert_eq!(r.point, a.nth_of_the_way(&b, n));
                assert!(matches!(verify_trace(&r.trace), Ok(Verification::Verified { .. })));
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        let o = Point::origin();
        assert!(matches!(nsect_segment(&o, &Point::new(1, 1), 1), Err(ConstructionError::TooFewParts { .. })));
        assert!(matches!(nsect_segment(&o, &o, 3), Err(ConstructionError::DegenerateSegment)));
        assert!(last_circle_south_vertex(&o, &Point::new(1, 1), 2).is_err());
    }

    #[test]
    fn south_vertex_examples() {
        let o = Point::origin();
        assert_eq!(last_circle_south_vertex(&o, &Point::new(1, 1), 3).unwrap(), Point::new(0, -2));
        assert_eq!(last_circle_south_vertex(&o, &Point::new(1, 1), 5).unwrap(), Point::new(-2, -4));
        assert_eq!(last_circle_south_vertex(&o, &Point::new(2, 1), 4).unwrap(), Point::new(-2, -4));
    }

    #[test]
    fn chained_circle_count() {
        let r = nsect_segment(&Point::origin(), &Point::new(3, 3), 5).unwrap();
        let circles = r.trace.count(|s| matches!(s.kind, StepKind::DrawCircle { .. }));
        assert_eq!(circles, 4);
    }
}
