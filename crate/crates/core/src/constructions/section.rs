//! Splitting a taxicab angle into `n` equal angles.
//!
//! t-radians are arc length on a taxicab circle, and the arc between two
//! sides that cross the same edge is a straight chord of slope ±1. Splitting
//! the angle is then splitting that chord, which [`super::nsect`] does with
//! compass and straightedge. The chord is split once; the remaining
//! division points are stepped off along it with the compass, using that a
//! taxicab circle centred on a line meets it at two points symmetric about
//! the centre.

use alloc::vec::Vec;

use alloc::boxed::Box;

use crate::angles::{direction_to_param, measure_angle, param_to_point, Angle, ArcParam, PI_T};
use crate::kernel::{Direction, Point, Ray, TaxicabCircle};
use crate::numeric::Rational;

use super::nsect::build_nsect;
use super::trace::{ConstructionTrace, Incidence, Pick, Role, StepKind, TraceBuilder};
use super::{ConstructionError, Mismatch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleSection {
    /// The `n - 1` interior rays, in sweep order from `side1` to `side2`.
    pub rays: Vec<Ray>,
    /// Arc parameters of the rays, same order.
    pub params: Vec<ArcParam>,
    /// Present when both sides cross the same edge of the circle.
    pub trace: Option<ConstructionTrace>,
}

/// True when `p` and `q` lie on a common closed edge of `c`.
pub fn share_edge(c: &TaxicabCircle, p: &Point, q: &Point) -> bool {
    let (px, py) = p.delta(c.center());
    let (qx, qy) = q.delta(c.center());
    [(1, 1), (-1, 1), (-1, -1), (1, -1)].iter().any(|&(sx, sy)| {
        let (sx, sy) = (Rational::from(sx as i64), Rational::from(sy as i64));
        &sx * &px + &sy * &py == *c.radius() && &sx * &qx + &sy * &qy == *c.radius()
    })
}

/// Splits `angle` into `n` sub-angles of exactly `measure(angle) / n`
/// t-radians each.
///
/// The sweep runs from `side1` to `side2` the short way round; a straight
/// angle is swept counterclockwise. `radius` is the taxicab circle used for
/// the geometric construction and to scale the returned ray directions.
pub fn section_angle(angle: &Angle, n: u32, radius: &Rational) -> Result<AngleSection, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::TooFewParts { n, min: 2 });
    }
    if !radius.is_positive() {
        return Err(ConstructionError::Kernel(crate::kernel::KernelError::NonPositiveRadius(radius.clone())));
    }
    let measure = measure_angle(angle);
    if measure.is_zero() {
        return Err(ConstructionError::DegenerateAngle);
    }
    let ccw = angle.directed_measure();
    let sweep_sign = if ccw <= Rational::from(PI_T) { Rational::one() } else { -Rational::one() };
    let start = direction_to_param(&angle.side1).into_inner();
    let step = &sweep_sign * &measure / Rational::from(n as i64);

    let mut rays = Vec::with_capacity(n as usize - 1);
    let mut params = Vec::with_capacity(n as usize - 1);
    for k in 1..n {
        let t = ArcParam::wrapping(&(&start + &step * Rational::from(k as i64)));
        let on_circle = param_to_point(&t);
        let dir = Direction::new(radius * &on_circle.x, radius * &on_circle.y).expect("unit circle point is nonzero");
        rays.push(Ray::new(angle.vertex.clone(), dir));
        params.push(t);
    }

    let circle = TaxicabCircle::new(angle.vertex.clone(), radius.clone())?;
    let hit = |d: &Direction| {
        let u = d.normalized();
        angle.vertex.offset(&(radius * &u.x), &(radius * &u.y))
    };
    let (x1, x2) = (hit(&angle.side1), hit(&angle.side2));
    let trace = if share_edge(&circle, &x1, &x2) {
        let trace = chord_trace(angle, n, radius)?;
        let marks = trace.marked_points();
        for (mark, ray) in marks.iter().zip(&rays) {
            let expected = angle.vertex.translate(&ray.dir, &Rational::one());
            if **mark != expected {
                return Err(ConstructionError::Postcondition(Box::new(Mismatch {
                    expected,
                    actual: (*mark).clone(),
                    trace: trace.clone(),
                })));
            }
        }
        Some(trace)
    } else {
        None
    };
    Ok(AngleSection { rays, params, trace })
}

fn chord_trace(angle: &Angle, n: u32, radius: &Rational) -> Result<ConstructionTrace, ConstructionError> {
    let v = &angle.vertex;
    let mut tb = TraceBuilder::new();
    let vertex = tb.place(v.clone(), Role::Given, Some("A"));
    let marker = tb.place(v.offset(radius, &Rational::zero()), Role::Auxiliary, None);
    let circle = tb.push(StepKind::DrawCircle { center: vertex, through: marker }, Role::Auxiliary, None, &[])?;

    let side = |tb: &mut TraceBuilder, d: &Direction, label| -> Result<_, ConstructionError> {
        let toward = tb.place(v.translate(d, &Rational::one()), Role::Auxiliary, None);
        let line = tb.push(StepKind::DrawLine { from: vertex, to: toward }, Role::Given, None, &[])?;
        tb.push(StepKind::IntersectLineCircle { line, circle, pick: Pick::Last }, Role::Auxiliary, Some(label), &[])
    };
    let first = side(&mut tb, &angle.side1, "B")?;
    let last = side(&mut tb, &angle.side2, "C")?;

    let steps = build_nsect(&mut tb, first, last, n, false)?;
    let chord = steps.segment;
    let mark = |tb: &mut TraceBuilder, point| -> Result<_, ConstructionError> {
        let m = tb.push(
            StepKind::MarkResult { point },
            Role::Result,
            None,
            &[Incidence::OnLine(chord), Incidence::OnCircle(circle)],
        )?;
        tb.push(StepKind::DrawLine { from: vertex, to: m }, Role::Auxiliary, None, &[])?;
        Ok(m)
    };
    let (mut prev, mut current) = (first, mark(&mut tb, steps.result)?);
    for _ in 2..n {
        let step = tb.push(StepKind::DrawCircle { center: current, through: prev }, Role::Auxiliary, None, &[])?;
        let next = tb.push(
            StepKind::IntersectLineCircle { line: chord, circle: step, pick: Pick::Last },
            Role::Auxiliary,
            None,
            &[],
        )?;
        (prev, current) = (current, mark(&mut tb, next)?);
    }
    Ok(tb.finish(current))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::verify_trace;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn dir(x: i64, y: i64) -> Direction {
        Direction::new(x, y).unwrap()
    }

    fn through_points(s: &AngleSection, v: &Point) -> Vec<Point> {
        s.rays.iter().map(|r| v.translate(&r.dir, &Rational::one())).collect()
    }

    #[test]
    fn bisect_one_tradian() {
        let a = Angle::new(Point::origin(), dir(1, 0), dir(1, 1));
        let s = section_angle(&a, 2, &Rational::one()).unwrap();
        assert_eq!(through_points(&s, &a.vertex), [Point::new(q(3, 4), q(1, 4))]);
        let half = Angle::new(Point::origin(), dir(1, 0), s.rays[0].dir.clone());
        assert_eq!(measure_angle(&half), q(1, 2));
        let trace = s.trace.expect("both sides on the NE edge");
        assert!(verify_trace(&trace).unwrap().is_verified());
    }

    #[test]
    fn bisect_quadrant() {
        let a = Angle::new(Point::origin(), dir(1, 0), dir(0, 1));
        let s = section_angle(&a, 2, &Rational::one()).unwrap();
        assert_eq!(through_points(&s, &a.vertex), [Point::new(q(1, 2), q(1, 2))]);
        assert_eq!(measure_angle(&Angle::new(Point::origin(), dir(1, 0), s.rays[0].dir.clone())), Rational::one());
        // E and N corners share the NE edge
        assert!(s.trace.is_some());
    }

    #[test]
    fn quarter_straight_angle() {
        let a = Angle::new(Point::origin(), dir(1, 0), dir(-1, 0));
        let s = section_angle(&a, 4, &Rational::one()).unwrap();
        assert_eq!(
            through_points(&s, &a.vertex),
            [Point::new(q(1, 2), q(1, 2)), Point::new(0, 1), Point::new(q(-1, 2), q(1, 2))]
        );
        assert!(s.trace.is_none());
    }

    #[test]
    fn clockwise_sweep_and_offset_vertex() {
        let v = Point::new(5, q(-2, 3));
        let a = Angle::new(v.clone(), dir(1, 1), dir(3, -1));
        let s = section_angle(&a, 3, &q(5, 2)).unwrap();
        let m = measure_angle(&a);
        let mut prev = a.side1.clone();
        for r in &s.rays {
            assert_eq!(measure_angle(&Angle::new(v.clone(), prev.clone(), r.dir.clone())), &m / Rational::from(3));
            prev = r.dir.clone();
        }
        assert_eq!(measure_angle(&Angle::new(v.clone(), prev, a.side2.clone())), &m / Rational::from(3));
        assert!(s.trace.is_none());
    }

    #[test]
    fn rejects_bad_input() {
        let a = Angle::new(Point::origin(), dir(1, 0), dir(2, 0));
        assert!(matches!(section_angle(&a, 2, &Rational::one()), Err(ConstructionError::DegenerateAngle)));
        let a = Angle::new(Point::origin(), dir(1, 0), dir(0, 1));
        assert!(matches!(section_angle(&a, 1, &Rational::one()), Err(ConstructionError::TooFewParts { .. })));
        assert!(section_angle(&a, 2, &Rational::zero()).is_err());
    }
}
