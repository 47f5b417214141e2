#![allow(dead_code)]

use proptest::prelude::*;
use taxisect_core::{Direction, Point, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| Rational::frac(n, d))
}

pub fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=1000, 1i64..=1000).prop_map(|(n, d)| Rational::frac(n, d))
}

pub fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

/// Directions biased towards the axes and diagonals, where the case
/// analysis in the kernel switches branches.
pub fn direction() -> impl Strategy<Value = Direction> {
    let special =
        (prop::sample::select(vec![(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]), positive())
            .prop_map(|((x, y), k)| Direction::new(Rational::from(x) * &k, Rational::from(y) * &k).unwrap());
    let general = (rational(), rational())
        .prop_filter("nonzero", |(x, y)| !(x.is_zero() && y.is_zero()))
        .prop_map(|(x, y)| Direction::new(x, y).unwrap());
    prop_oneof![1 => special, 3 => general]
}
