use alloc::vec::Vec;

use crate::numeric::Rational;

use super::circle::TaxicabCircle;
use super::line::{Line, Ray, Segment};
use super::point::Point;
use super::KernelError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionResult {
    Empty,
    OnePoint(Point),
    /// Two distinct points, in a deterministic order (see each operation).
    TwoPoints(Point, Point),
    /// The operands share a whole segment, e.g. a slope ±1 line lying on a
    /// circle edge.
    OverlapSegment(Segment),
}

impl IntersectionResult {
    /// Every isolated point, plus both endpoints of an overlap.
    pub fn points(&self) -> Vec<Point> {
        match self {
            IntersectionResult::Empty => Vec::new(),
            IntersectionResult::OnePoint(p) => alloc::vec![p.clone()],
            IntersectionResult::TwoPoints(p, q) => alloc::vec![p.clone(), q.clone()],
            IntersectionResult::OverlapSegment(s) => alloc::vec![s.p().clone(), s.q().clone()],
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IntersectionResult::Empty)
    }

    fn from_sorted(points: Vec<Point>) -> IntersectionResult {
        let mut it = points.into_iter();
        match (it.next(), it.next()) {
            (None, _) => IntersectionResult::Empty,
            (Some(p), None) => IntersectionResult::OnePoint(p),
            (Some(p), Some(q)) => {
                debug_assert!(it.next().is_none(), "a line meets a convex boundary at most twice");
                IntersectionResult::TwoPoints(p, q)
            }
        }
    }
}

/// Intersection of two lines. Coincident lines are an error distinct from
/// the `Empty` result for parallel ones.
pub fn intersect_lines(m: &Line, n: &Line) -> Result<IntersectionResult, KernelError> {
    let det = m.a() * n.b() - n.a() * m.b();
    if det.is_zero() {
        return if m == n { Err(KernelError::CoincidentLines) } else { Ok(IntersectionResult::Empty) };
    }
    let x = (m.c() * n.b() - n.c() * m.b()) / &det;
    let y = (m.a() * n.c() - n.a() * m.c()) / &det;
    Ok(IntersectionResult::OnePoint(Point::new(x, y)))
}

/// Intersection of a line with the boundary of a taxicab circle.
/// `TwoPoints` are ordered lexicographically by `(x, y)`, as are the
/// endpoints of an overlapped edge.
pub fn intersect_line_circle(m: &Line, c: &TaxicabCircle) -> IntersectionResult {
    // Work relative to the centre: the line is a*u + b*v = k and the edge in
    // quadrant (s1, s2) is s1*u + s2*v = r with s1*u >= 0 and s2*v >= 0.
    let (a, b, r) = (m.a(), m.b(), c.radius());
    let k = m.c() - a * &c.center().x - b * &c.center().y;
    let vertices = c.vertices();
    let mut hits: Vec<Point> = Vec::new();
    for (i, (s1, s2)) in [(1, 1), (-1, 1), (-1, -1), (1, -1)].into_iter().enumerate() {
        let (s1, s2) = (Rational::from(s1), Rational::from(s2));
        let det = a * &s2 - b * &s1;
        if det.is_zero() {
            if k == a * &s1 * r {
                let (p, q) = ordered(vertices[i].clone(), vertices[(i + 1) % 4].clone());
                return IntersectionResult::OverlapSegment(Segment::new(p, q).expect("edge endpoints differ"));
            }
            continue;
        }
        let u = (&k * &s2 - b * r) / &det;
        let v = (a * r - &k * &s1) / &det;
        if (&s1 * &u).is_negative() || (&s2 * &v).is_negative() {
            continue;
        }
        let p = c.center().offset(&u, &v);
        if !hits.contains(&p) {
            hits.push(p);
        }
    }
    hits.sort();
    IntersectionResult::from_sorted(hits)
}

fn ordered(p: Point, q: Point) -> (Point, Point) {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

/// Clips a line/circle result to the parameter interval `[lo, hi]` along
/// `base` (`hi = None` means unbounded). Points come out ordered by parameter.
fn clip_along(result: IntersectionResult, base: &Ray, lo: &Rational, hi: Option<&Rational>) -> IntersectionResult {
    let inside = |t: &Rational| t >= lo && hi.is_none_or(|h| t <= h);
    match result {
        IntersectionResult::Empty => IntersectionResult::Empty,
        IntersectionResult::OverlapSegment(s) => {
            let (mut t0, mut t1) = (base.parameter_of(s.p()), base.parameter_of(s.q()));
            if t0 > t1 {
                core::mem::swap(&mut t0, &mut t1);
            }
            let from = t0.max(lo.clone());
            let to = match hi {
                Some(h) => t1.min(h.clone()),
                None => t1,
            };
            if from > to {
                IntersectionResult::Empty
            } else if from == to {
                IntersectionResult::OnePoint(base.point_at(&from))
            } else {
                IntersectionResult::OverlapSegment(
                    Segment::new(base.point_at(&from), base.point_at(&to)).expect("nonempty interval"),
                )
            }
        }
        other => {
            let mut keyed: Vec<(Rational, Point)> =
                other.points().into_iter().map(|p| (base.parameter_of(&p), p)).filter(|(t, _)| inside(t)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            IntersectionResult::from_sorted(keyed.into_iter().map(|(_, p)| p).collect())
        }
    }
}

/// Intersection of a ray with a taxicab circle, restricted to the forward
/// half and ordered by increasing ray parameter.
pub fn intersect_ray_circle(r: &Ray, c: &TaxicabCircle) -> IntersectionResult {
    let full = intersect_line_circle(&r.supporting_line(), c);
    clip_along(full, r, &Rational::zero(), None)
}

/// Intersection of a segment with a taxicab circle, ordered from `s.p()`.
pub fn intersect_segment_circle(s: &Segment, c: &TaxicabCircle) -> IntersectionResult {
    let base = Ray::new(s.p().clone(), super::Direction::between(s.p(), s.q()).expect("distinct endpoints"));
    let full = intersect_line_circle(&s.supporting_line(), c);
    clip_along(full, &base, &Rational::zero(), Some(&Rational::one()))
}

/// Intersection of two of line / ray / segment.
pub fn intersect_linear(a: &Linear, b: &Linear) -> Result<IntersectionResult, KernelError> {
    match intersect_lines(&a.carrier(), &b.carrier()) {
        Ok(IntersectionResult::OnePoint(p)) if a.contains(&p) && b.contains(&p) => Ok(IntersectionResult::OnePoint(p)),
        Ok(_) => Ok(IntersectionResult::Empty),
        Err(e) => Err(e),
    }
}

/// Borrowed view over the straight primitives.
#[derive(Clone, Copy, Debug)]
pub enum Linear<'a> {
    Line(&'a Line),
    Ray(&'a Ray),
    Segment(&'a Segment),
}

impl Linear<'_> {
    pub fn carrier(&self) -> Line {
        match self {
            Linear::Line(l) => (*l).clone(),
            Linear::Ray(r) => r.supporting_line(),
            Linear::Segment(s) => s.supporting_line(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Linear::Line(l) => l.contains(p),
            Linear::Ray(r) => r.contains(p),
            Linear::Segment(s) => s.contains(p),
        }
    }

    pub fn intersect_circle(&self, c: &TaxicabCircle) -> IntersectionResult {
        match self {
            Linear::Line(l) => intersect_line_circle(l, c),
            Linear::Ray(r) => intersect_ray_circle(r, c),
            Linear::Segment(s) => intersect_segment_circle(s, c),
        }
    }
}
