use core::fmt;

use crate::numeric::Rational;

use super::line::Segment;
use super::point::{taxicab_distance, Point};
use super::KernelError;

/// The four corners of a taxicab circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompassPoint {
    North,
    South,
    East,
    West,
}

impl CompassPoint {
    /// Counterclockwise from East, the fixed order used for polygons and edges.
    pub const CCW: [CompassPoint; 4] =
        [CompassPoint::East, CompassPoint::North, CompassPoint::West, CompassPoint::South];

    pub fn opposite(self) -> CompassPoint {
        match self {
            CompassPoint::North => CompassPoint::South,
            CompassPoint::South => CompassPoint::North,
            CompassPoint::East => CompassPoint::West,
            CompassPoint::West => CompassPoint::East,
        }
    }

    /// Unit offset of this corner from the center.
    pub fn unit(self) -> (i64, i64) {
        match self {
            CompassPoint::North => (0, 1),
            CompassPoint::South => (0, -1),
            CompassPoint::East => (1, 0),
            CompassPoint::West => (-1, 0),
        }
    }

    pub fn letter(self) -> char {
        match self {
            CompassPoint::North => 'N',
            CompassPoint::South => 'S',
            CompassPoint::East => 'E',
            CompassPoint::West => 'W',
        }
    }

    pub fn from_letter(c: &str) -> Option<CompassPoint> {
        match c {
            "N" => Some(CompassPoint::North),
            "S" => Some(CompassPoint::South),
            "E" => Some(CompassPoint::East),
            "W" => Some(CompassPoint::West),
            _ => None,
        }
    }
}

/// Locus `|x - cx| + |y - cy| = radius`: a square standing on a corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaxicabCircle {
    center: Point,
    radius: Rational,
}

impl TaxicabCircle {
    pub fn new(center: Point, radius: impl Into<Rational>) -> Result<Self, KernelError> {
        let radius = radius.into();
        if !radius.is_positive() {
            return Err(KernelError::NonPositiveRadius(radius));
        }
        Ok(TaxicabCircle { center, radius })
    }

    /// Compass with its needle at `center` and pencil at `through`.
    pub fn through(center: Point, through: &Point) -> Result<Self, KernelError> {
        let r = taxicab_distance(&center, through);
        TaxicabCircle::new(center, r)
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn vertex(&self, which: CompassPoint) -> Point {
        let (ux, uy) = which.unit();
        self.center.offset(&(&self.radius * Rational::from(ux)), &(&self.radius * Rational::from(uy)))
    }

    /// Corners in E, N, W, S order.
    pub fn vertices(&self) -> [Point; 4] {
        CompassPoint::CCW.map(|c| self.vertex(c))
    }

    /// The four edges, counterclockwise starting with E→N.
    pub fn edges(&self) -> [Segment; 4] {
        let v = self.vertices();
        core::array::from_fn(|i| Segment::new(v[i].clone(), v[(i + 1) % 4].clone()).expect("radius is positive"))
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        taxicab_distance(&self.center, p) == self.radius
    }
}

impl fmt::Display for TaxicabCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "circle({}, {})", self.center, self.radius)
    }
}

pub fn circle_vertex(c: &TaxicabCircle, which: CompassPoint) -> Point {
    c.vertex(which)
}

pub fn point_on_circle(c: &TaxicabCircle, p: &Point) -> bool {
    c.contains_point(p)
}
