//! Reference figures rebuilt from the kernel.

use taxisect_core::kernel::{euclidean_distance_squared, taxicab_distance, Point, TaxicabCircle};
use taxisect_core::{nsect_segment, Rational};

use super::scene::{scene_from_trace, Item, LabelAt, Panel, Scene, Shape, Style};
use super::ExportError;

pub const FIGURES: [&str; 5] = ["distance", "circle", "tradian", "construction", "general"];

pub fn figure(name: &str) -> Result<Scene, ExportError> {
    match name {
        "distance" => Ok(distance()),
        "circle" => Ok(circle()),
        "tradian" => Ok(tradian()),
        "construction" => nsect_pair(Point::new(1, 1)),
        "general" => nsect_pair(Point::new(2, 1)),
        other => Err(ExportError::UnknownFigure(other.to_string())),
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// Two segments of Euclidean length 4 with different taxicab lengths. The
/// tilted one uses a 3-4-5 direction so its endpoint stays rational.
fn distance() -> Scene {
    let mut s = Scene::new();
    let pairs = [(Point::new(0, 0), Point::new(4, 0)), (Point::new(6, 0), Point::new(q(42, 5), q(16, 5)))];
    for (p, r) in pairs {
        let label = format!("dE² = {}, dt = {}", euclidean_distance_squared(&p, &r), taxicab_distance(&p, &r));
        let corner = Point::new(r.x.clone(), p.y.clone());
        s.push(Item::new(Shape::Polyline(vec![p.clone(), corner, r.clone()]), Style::AUXILIARY));
        s.push(Item::new(Shape::Point(p.clone()), Style::REGULAR));
        s.push(Item::labelled(label, Shape::Segment(p, r), Style::REGULAR.label_at(LabelAt::SouthWest)));
    }
    s
}

/// Points at taxicab distance 2 from a center, each reached by a
/// horizontal-then-vertical path, all on one diamond.
fn circle() -> Scene {
    let mut s = Scene::new();
    let center = Point::origin();
    let c = TaxicabCircle::new(center.clone(), 2).expect("positive");
    s.push(Item::new(Shape::Circle(c), Style::REGULAR));
    for (x, y) in [(q(3, 2), q(1, 2)), (q(1, 1), q(1, 1)), (q(1, 2), q(3, 2))] {
        let p = Point::new(x.clone(), y);
        let turn = Point::new(x, Rational::zero());
        s.push(Item::new(Shape::Polyline(vec![center.clone(), turn, p.clone()]), Style::AUXILIARY));
        s.push(Item::new(Shape::Point(p), Style::THIN));
    }
    s.push(Item::labelled("O", Shape::Point(center), Style::REGULAR.label_at(LabelAt::SouthWest)));
    s
}

/// The unit taxicab circle and the angle subtending an arc of length 1.
fn tradian() -> Scene {
    let mut s = Scene::new();
    let o = Point::origin();
    let east = Point::new(1, 0);
    let mid = Point::new(q(1, 2), q(1, 2));
    s.push(Item::new(Shape::Circle(TaxicabCircle::new(o.clone(), 1).expect("positive")), Style::REGULAR));
    s.push(Item::new(Shape::Segment(o.clone(), east.clone()), Style::REGULAR));
    s.push(Item::new(Shape::Segment(o.clone(), mid.clone()), Style::REGULAR));
    s.push(Item::labelled("1 t-radian", Shape::Polyline(vec![east, mid]), Style::EMPHASIS));
    s.push(Item::labelled("O", Shape::Point(o), Style::REGULAR.label_at(LabelAt::SouthWest)));
    s
}

/// Side-by-side n = 3 and n = 4 constructions on the segment from the
/// origin to `b`.
fn nsect_pair(b: Point) -> Result<Scene, ExportError> {
    let mut scenes = Vec::new();
    for n in [3, 4] {
        let built = nsect_segment(&Point::origin(), &b, n).map_err(|e| ExportError::Unverified(e.to_string()))?;
        let mut scene = scene_from_trace(&built.trace)?;
        scene.panels = vec![Panel { title: Some(format!("n = {n}")), items: scene.panels.remove(0).items }];
        scenes.push(scene);
    }
    Ok(Scene::side_by_side(scenes, &Rational::one()))
}
