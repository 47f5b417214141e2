//! Taxicab angle measure in t-radians.
//!
//! A direction is located on the unit taxicab circle by its arc-length
//! parameter, measured counterclockwise from the East corner `(1, 0)`. The
//! unit circle has perimeter 8, so a straight angle is 4 t-radians.

use core::fmt;

use crate::kernel::{Direction, KernelError, Point, TaxicabCircle};
use crate::numeric::Rational;

/// Half the perimeter of the unit taxicab circle.
pub const PI_T: i64 = 4;

/// Perimeter of the unit taxicab circle.
pub const FULL_TURN: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AngleError {
    #[error("arc parameter {0} is outside [0, 8)")]
    OutOfRange(Rational),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Arc-length coordinate on the unit taxicab circle, in `[0, 8)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcParam(Rational);

impl ArcParam {
    pub fn new(t: Rational) -> Result<ArcParam, AngleError> {
        if t.is_negative() || t >= Rational::from(FULL_TURN) {
            return Err(AngleError::OutOfRange(t));
        }
        Ok(ArcParam(t))
    }

    /// Reduces any rational modulo 8.
    pub fn wrapping(t: &Rational) -> ArcParam {
        let full = Rational::from(FULL_TURN);
        let turns = t.checked_div(&full).expect("nonzero");
        let floor = floor(&turns);
        ArcParam(t - &full * floor)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

fn floor(x: &Rational) -> Rational {
    use num_integer::Integer;
    Rational::from_integer(x.numer().div_floor(x.denom()))
}

impl fmt::Display for ArcParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ArcParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArcParam({})", self.0)
    }
}

/// Cumulative arc length from `(1, 0)` counterclockwise to where `d` meets
/// the unit taxicab circle.
pub fn direction_to_param(d: &Direction) -> ArcParam {
    let p = d.normalized();
    let two = Rational::from(2);
    let (x, y) = (&p.x, &p.y);
    let t = if x.is_positive() && !y.is_negative() {
        // E -> N edge
        &two * y
    } else if !x.is_positive() && y.is_positive() {
        // N -> W edge
        &two - &two * x
    } else if x.is_negative() && !y.is_positive() {
        // W -> S edge
        Rational::from(4) - &two * y
    } else {
        // S -> E edge
        Rational::from(6) + &two * x
    };
    ArcParam(t)
}

/// The unit-circle point with arc parameter `t`.
pub fn param_to_point(t: &ArcParam) -> Point {
    let t = &t.0;
    let half = Rational::frac(1, 2);
    let one = Rational::one();
    if t < &Rational::from(2) {
        let u = t * &half;
        Point::new(&one - &u, u)
    } else if t < &Rational::from(4) {
        let u = (t - Rational::from(2)) * &half;
        Point::new(-&u, &one - &u)
    } else if t < &Rational::from(6) {
        let u = (t - Rational::from(4)) * &half;
        Point::new(&u - &one, -u)
    } else {
        let u = (t - Rational::from(6)) * &half;
        Point::new(u.clone(), u - one)
    }
}

/// An angle at `vertex` between two rays. Sides are direction classes: only
/// the normalized direction matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Angle {
    pub vertex: Point,
    pub side1: Direction,
    pub side2: Direction,
}

impl Angle {
    pub fn new(vertex: Point, side1: Direction, side2: Direction) -> Angle {
        Angle { vertex, side1, side2 }
    }

    /// Counterclockwise sweep from `side1` to `side2`, in `[0, 8)`.
    pub fn directed_measure(&self) -> Rational {
        let t1 = direction_to_param(&self.side1).into_inner();
        let t2 = direction_to_param(&self.side2).into_inner();
        ArcParam::wrapping(&(t2 - t1)).into_inner()
    }
}

/// Undirected measure in `[0, 4]` t-radians.
pub fn measure_angle(a: &Angle) -> Rational {
    let ccw = a.directed_measure();
    let cw = Rational::from(FULL_TURN) - &ccw;
    if ccw.is_zero() {
        ccw
    } else {
        ccw.min(cw)
    }
}

pub fn circumference(c: &TaxicabCircle) -> Rational {
    Rational::from(FULL_TURN) * c.radius()
}
