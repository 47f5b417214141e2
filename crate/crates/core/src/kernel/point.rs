use core::fmt;

use crate::numeric::Rational;

use super::KernelError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    /// `self + (dx, dy)`.
    pub fn offset(&self, dx: &Rational, dy: &Rational) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    /// `self + scale * v`.
    pub fn translate(&self, v: &Direction, scale: &Rational) -> Point {
        Point::new(&self.x + scale * v.dx(), &self.y + scale * v.dy())
    }

    /// Componentwise difference `self - other`.
    pub fn delta(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        let (dx, dy) = other.delta(self);
        Point::new(&self.x + t * dx, &self.y + t * dy)
    }

    /// `self + (other - self) / n`.
    pub fn nth_of_the_way(&self, other: &Point, n: u32) -> Point {
        self.lerp(other, &Rational::frac(1, n as i64))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A nonzero plane vector. Equality is componentwise; use
/// [`Direction::same_ray`] for equality up to positive scaling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    dx: Rational,
    dy: Rational,
}

impl Direction {
    pub fn new(dx: impl Into<Rational>, dy: impl Into<Rational>) -> Result<Self, KernelError> {
        let (dx, dy) = (dx.into(), dy.into());
        if dx.is_zero() && dy.is_zero() {
            return Err(KernelError::ZeroDirection);
        }
        Ok(Direction { dx, dy })
    }

    /// Direction from `from` towards `to`.
    pub fn between(from: &Point, to: &Point) -> Result<Self, KernelError> {
        let (dx, dy) = to.delta(from);
        Direction::new(dx, dy)
    }

    pub fn dx(&self) -> &Rational {
        &self.dx
    }

    pub fn dy(&self) -> &Rational {
        &self.dy
    }

    /// Taxicab norm `|dx| + |dy|`, always positive.
    pub fn norm(&self) -> Rational {
        self.dx.abs() + self.dy.abs()
    }

    /// Scaled onto the unit taxicab circle.
    pub fn normalized(&self) -> Point {
        let n = self.norm();
        Point::new(&self.dx / &n, &self.dy / &n)
    }

    pub fn reversed(&self) -> Direction {
        Direction { dx: -&self.dx, dy: -&self.dy }
    }

    pub fn scaled(&self, k: &Rational) -> Result<Direction, KernelError> {
        Direction::new(k * &self.dx, k * &self.dy)
    }

    /// True when `other` is a positive multiple of `self`.
    pub fn same_ray(&self, other: &Direction) -> bool {
        self.normalized() == other.normalized()
    }

    /// 2D cross product `self x other`.
    pub fn cross(&self, other: &Direction) -> Rational {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    pub fn dot(&self, other: &Direction) -> Rational {
        &self.dx * &other.dx + &self.dy * &other.dy
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn taxicab_distance(p: &Point, q: &Point) -> Rational {
    (&q.x - &p.x).abs() + (&q.y - &p.y).abs()
}

/// Squared Euclidean distance; squaring keeps it rational.
pub fn euclidean_distance_squared(p: &Point, q: &Point) -> Rational {
    let (dx, dy) = q.delta(p);
    &dx * &dx + &dy * &dy
}

/// The eight symmetries of the square about the origin. Each is an isometry
/// of the taxicab plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    ReflectX,
    ReflectY,
    ReflectDiagonal,
    ReflectAntiDiagonal,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rotate90,
        Symmetry::Rotate180,
        Symmetry::Rotate270,
        Symmetry::ReflectX,
        Symmetry::ReflectY,
        Symmetry::ReflectDiagonal,
        Symmetry::ReflectAntiDiagonal,
    ];

    fn map(self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        match self {
            Symmetry::Identity => (x.clone(), y.clone()),
            Symmetry::Rotate90 => (-y, x.clone()),
            Symmetry::Rotate180 => (-x, -y),
            Symmetry::Rotate270 => (y.clone(), -x),
            // ReflectX mirrors across the x axis.
            Symmetry::ReflectX => (x.clone(), -y),
            Symmetry::ReflectY => (-x, y.clone()),
            Symmetry::ReflectDiagonal => (y.clone(), x.clone()),
            Symmetry::ReflectAntiDiagonal => (-y, -x),
        }
    }

    pub fn apply(self, p: &Point) -> Point {
        let (x, y) = self.map(&p.x, &p.y);
        Point::new(x, y)
    }

    pub fn apply_dir(self, d: &Direction) -> Direction {
        let (dx, dy) = self.map(&d.dx, &d.dy);
        Direction { dx, dy }
    }
}
