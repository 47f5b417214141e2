use core::fmt;

use crate::numeric::Rational;

use super::point::{Direction, Point};
use super::KernelError;

/// The locus `a*x + b*y = c`, scaled so the first nonzero of `a`, `b` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Line {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>, c: impl Into<Rational>) -> Result<Line, KernelError> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(KernelError::DegenerateLine);
        };
        Ok(Line { a: &a / &lead, b: &b / &lead, c: &c / &lead })
    }

    /// `y = slope * x + intercept`.
    pub fn from_slope_intercept(slope: impl Into<Rational>, intercept: impl Into<Rational>) -> Line {
        Line::new(-slope.into(), Rational::one(), intercept).expect("b = 1 is nonzero")
    }

    pub fn through(p: &Point, q: &Point) -> Result<Line, KernelError> {
        if p == q {
            return Err(KernelError::CoincidentPoints);
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        Line::new(a, b, c)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        &self.a * &p.x + &self.b * &p.y == self.c
    }

    /// `None` for vertical lines.
    pub fn slope(&self) -> Option<Rational> {
        if self.b.is_zero() {
            None
        } else {
            Some(-&self.a / &self.b)
        }
    }

    /// A direction vector along the line.
    pub fn direction(&self) -> Direction {
        Direction::new(self.b.clone(), -&self.a).expect("line normal is nonzero")
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        &self.a * &other.b == &self.b * &other.a
    }

    /// Some point on the line.
    pub fn anchor(&self) -> Point {
        if !self.b.is_zero() {
            Point::new(Rational::zero(), &self.c / &self.b)
        } else {
            Point::new(&self.c / &self.a, Rational::zero())
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.slope() {
            None => write!(f, "x = {}", &self.c / &self.a),
            Some(m) => {
                let k = &self.c / &self.b;
                write!(f, "y = ")?;
                if m.is_zero() {
                    return write!(f, "{k}");
                }
                if m == Rational::one() {
                    write!(f, "x")?;
                } else if m == -Rational::one() {
                    write!(f, "-x")?;
                } else {
                    write!(f, "{m}x")?;
                }
                if k.is_negative() {
                    write!(f, " - {}", k.abs())
                } else if k.is_positive() {
                    write!(f, " + {k}")
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line({})", self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray {
    pub origin: Point,
    pub dir: Direction,
}

impl Ray {
    pub fn new(origin: Point, dir: Direction) -> Ray {
        Ray { origin, dir }
    }

    pub fn supporting_line(&self) -> Line {
        Line::through(&self.origin, &self.origin.translate(&self.dir, &Rational::one()))
            .expect("ray direction is nonzero")
    }

    /// Parameter `t` with `p = origin + t * dir`, assuming `p` is on the supporting line.
    pub fn parameter_of(&self, p: &Point) -> Rational {
        let (dx, dy) = p.delta(&self.origin);
        let d = &self.dir;
        (dx * d.dx() + dy * d.dy()) / d.dot(d)
    }

    pub fn point_at(&self, t: &Rational) -> Point {
        self.origin.translate(&self.dir, t)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.supporting_line().contains(p) && !self.parameter_of(p).is_negative()
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ray {} -> {}", self.origin, self.dir)
    }
}

/// A closed segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    p: Point,
    q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Segment, KernelError> {
        if p == q {
            return Err(KernelError::CoincidentPoints);
        }
        Ok(Segment { p, q })
    }

    pub fn p(&self) -> &Point {
        &self.p
    }

    pub fn q(&self) -> &Point {
        &self.q
    }

    pub fn supporting_line(&self) -> Line {
        Line::through(&self.p, &self.q).expect("segment endpoints are distinct")
    }

    /// Parameter in `[0, 1]` for points of the segment, measured from `p`.
    pub fn parameter_of(&self, pt: &Point) -> Rational {
        Ray::new(self.p.clone(), Direction::between(&self.p, &self.q).expect("distinct")).parameter_of(pt)
    }

    pub fn contains(&self, pt: &Point) -> bool {
        if !self.supporting_line().contains(pt) {
            return false;
        }
        let t = self.parameter_of(pt);
        !t.is_negative() && t <= Rational::one()
    }

    pub fn midpoint(&self) -> Point {
        self.p.nth_of_the_way(&self.q, 2)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}–{}", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn line_through_examples() {
        // Bisecting a unit diagonal: bottom corner (0,-2) to top corner (1,3).
        let l = Line::through(&Point::new(0, -2), &Point::new(1, 3)).unwrap();
        assert_eq!(l, Line::from_slope_intercept(5, -2));
        assert_eq!(l.to_string(), "y = 5x - 2");

        let l = Line::through(&Point::origin(), &Point::new(1, 1)).unwrap();
        assert_eq!(l, Line::from_slope_intercept(1, 0));
        assert_eq!(l.to_string(), "y = x");

        // ((3-n)l, (1-n)l) to (l, l) with n = 3, l = 1
        let l = Line::through(&Point::new(0, -2), &Point::new(1, 1)).unwrap();
        assert_eq!(l, Line::from_slope_intercept(3, -2));
    }

    #[test]
    fn line_through_rejects_coincident_points() {
        let p = Point::new(q(1, 2), 3);
        assert_eq!(Line::through(&p, &p), Err(KernelError::CoincidentPoints));
    }

    #[test]
    fn canonical_scale() {
        let a = Line::new(2, 4, 6).unwrap();
        let b = Line::new(-1, -2, -3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.a(), &Rational::one());
        let v = Line::new(0, 3, 1).unwrap();
        assert_eq!(v.b(), &Rational::one());
        assert_eq!(v.c(), &q(1, 3));
        assert_eq!(Line::new(0, 0, 1), Err(KernelError::DegenerateLine));
        assert_eq!(Line::new(2, 0, 1).unwrap().to_string(), "x = 1/2");
    }

    #[test]
    fn ray_and_segment_membership() {
        let r = Ray::new(Point::new(1, 1), Direction::new(1, -1).unwrap());
        assert!(r.contains(&Point::new(3, -1)));
        assert!(r.contains(&Point::new(1, 1)));
        assert!(!r.contains(&Point::new(0, 2)));
        let s = Segment::new(Point::origin(), Point::new(2, 2)).unwrap();
        assert!(s.contains(&Point::new(q(1, 3), q(1, 3))));
        assert!(!s.contains(&Point::new(3, 3)));
        assert!(!s.contains(&Point::new(1, 0)));
        assert_eq!(s.midpoint(), Point::new(1, 1));
        assert!(Segment::new(Point::origin(), Point::origin()).is_err());
    }
}
