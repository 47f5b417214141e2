use taxisect_core::constructions::{
    verify_trace, ConstructionTrace, Incidence, Primitive, Role, StepKind, Verification,
};
use taxisect_core::kernel::{intersect_linear, IntersectionResult, Line, Linear, Point, Ray, Segment, TaxicabCircle};
use taxisect_core::Rational;

use super::ExportError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stroke {
    Thin,
    Regular,
    Bold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dash {
    Solid,
    Dashed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelAt {
    NorthEast,
    NorthWest,
    SouthEast,
    SouthWest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Style {
    pub stroke: Stroke,
    pub dash: Dash,
    pub label_at: LabelAt,
}

impl Style {
    pub const REGULAR: Style = Style { stroke: Stroke::Regular, dash: Dash::Solid, label_at: LabelAt::NorthEast };
    pub const AUXILIARY: Style = Style { stroke: Stroke::Thin, dash: Dash::Dashed, label_at: LabelAt::NorthEast };
    pub const THIN: Style = Style { stroke: Stroke::Thin, dash: Dash::Solid, label_at: LabelAt::NorthEast };
    pub const EMPHASIS: Style = Style { stroke: Stroke::Bold, dash: Dash::Solid, label_at: LabelAt::NorthEast };

    pub fn label_at(mut self, at: LabelAt) -> Style {
        self.label_at = at;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Point(Point),
    Segment(Point, Point),
    /// Unbounded; drawn clipped to the view box.
    Line(Line),
    /// Unbounded; drawn clipped to the view box.
    Ray(Ray),
    Circle(TaxicabCircle),
    Polyline(Vec<Point>),
}

impl Shape {
    /// Points that must be visible. Empty for lines; the origin for rays.
    fn anchors(&self) -> Vec<Point> {
        match self {
            Shape::Point(p) => vec![p.clone()],
            Shape::Segment(p, q) => vec![p.clone(), q.clone()],
            Shape::Line(_) => Vec::new(),
            Shape::Ray(r) => vec![r.origin.clone()],
            Shape::Circle(c) => c.vertices().to_vec(),
            Shape::Polyline(ps) => ps.clone(),
        }
    }

    fn translated(&self, dx: &Rational, dy: &Rational) -> Shape {
        let mv = |p: &Point| p.offset(dx, dy);
        match self {
            Shape::Point(p) => Shape::Point(mv(p)),
            Shape::Segment(p, q) => Shape::Segment(mv(p), mv(q)),
            Shape::Line(l) => {
                let c = l.c() + l.a() * dx + l.b() * dy;
                Shape::Line(Line::new(l.a().clone(), l.b().clone(), c).expect("same normal"))
            }
            Shape::Ray(r) => Shape::Ray(Ray::new(mv(&r.origin), r.dir.clone())),
            Shape::Circle(c) => {
                Shape::Circle(TaxicabCircle::new(mv(c.center()), c.radius().clone()).expect("same radius"))
            }
            Shape::Polyline(ps) => Shape::Polyline(ps.iter().map(mv).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub label: Option<String>,
    pub shape: Shape,
    pub style: Style,
}

impl Item {
    pub fn new(shape: Shape, style: Style) -> Item {
        Item { label: None, shape, style }
    }

    pub fn labelled(label: impl Into<String>, shape: Shape, style: Style) -> Item {
        Item { label: Some(label.into()), shape, style }
    }
}

/// A group of items drawn together, e.g. one side of a side-by-side figure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Panel {
    pub title: Option<String>,
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViewBox {
    pub min: Point,
    pub max: Point,
}

impl ViewBox {
    pub fn width(&self) -> Rational {
        &self.max.x - &self.min.x
    }

    pub fn height(&self) -> Rational {
        &self.max.y - &self.min.y
    }

    pub fn extent(&self) -> Rational {
        self.width().max(self.height())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }

    fn edges(&self) -> [Segment; 4] {
        let (lo, hi) = (&self.min, &self.max);
        let c = [
            Point::new(lo.x.clone(), lo.y.clone()),
            Point::new(hi.x.clone(), lo.y.clone()),
            Point::new(hi.x.clone(), hi.y.clone()),
            Point::new(lo.x.clone(), hi.y.clone()),
        ];
        std::array::from_fn(|i| Segment::new(c[i].clone(), c[(i + 1) % 4].clone()).expect("positive size"))
    }

    /// The part of `line` inside the box, as a point pair.
    pub fn clip_line(&self, line: &Line) -> Option<(Point, Point)> {
        let mut hits: Vec<Point> = Vec::new();
        for edge in self.edges() {
            match intersect_linear(&Linear::Line(line), &Linear::Segment(&edge)) {
                Ok(IntersectionResult::OnePoint(p)) => {
                    if !hits.contains(&p) {
                        hits.push(p)
                    }
                }
                Err(_) => return Some((edge.p().clone(), edge.q().clone())),
                _ => {}
            }
        }
        hits.sort();
        match hits.len() {
            0 => None,
            _ => Some((hits[0].clone(), hits[hits.len() - 1].clone())),
        }
    }

    pub fn clip_ray(&self, ray: &Ray) -> Option<(Point, Point)> {
        let (p, q) = self.clip_line(&ray.supporting_line())?;
        let (mut tp, mut tq) = (ray.parameter_of(&p), ray.parameter_of(&q));
        if tp > tq {
            std::mem::swap(&mut tp, &mut tq);
        }
        if tq.is_negative() {
            return None;
        }
        let from = tp.max(Rational::zero());
        Some((ray.point_at(&from), ray.point_at(&tq)))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scene {
    pub panels: Vec<Panel>,
    /// Computed from the items (plus a 10% margin) when `None`.
    pub viewbox: Option<ViewBox>,
}

impl Scene {
    pub fn new() -> Scene {
        Scene::default()
    }

    pub fn push(&mut self, item: Item) {
        if self.panels.is_empty() {
            self.panels.push(Panel::default());
        }
        self.panels.last_mut().expect("nonempty").items.push(item);
    }

    pub fn items(&self) -> impl Iterator<Item = &Item> {
        self.panels.iter().flat_map(|p| p.items.iter())
    }

    pub fn is_empty(&self) -> bool {
        self.items().next().is_none()
    }

    /// Tight bounds of every bounded anchor, if any.
    pub fn bounds(&self) -> Option<ViewBox> {
        let mut anchors = self.items().flat_map(|i| i.shape.anchors());
        let first = anchors.next()?;
        let (mut min, mut max) = (first.clone(), first);
        for p in anchors {
            if p.x < min.x {
                min.x = p.x.clone();
            }
            if p.y < min.y {
                min.y = p.y.clone();
            }
            if p.x > max.x {
                max.x = p.x;
            }
            if p.y > max.y {
                max.y = p.y;
            }
        }
        Some(ViewBox { min, max })
    }

    /// The explicit view box, or the item bounds grown by 10% of the larger
    /// side on every edge. Degenerate bounds get a unit margin.
    pub fn effective_viewbox(&self) -> ViewBox {
        if let Some(vb) = &self.viewbox {
            return vb.clone();
        }
        let Some(b) = self.bounds() else {
            return ViewBox { min: Point::new(-1, -1), max: Point::new(1, 1) };
        };
        let extent = b.extent();
        let margin = if extent.is_zero() { Rational::one() } else { extent * Rational::frac(1, 10) };
        ViewBox { min: b.min.offset(&-margin.clone(), &-margin.clone()), max: b.max.offset(&margin, &margin) }
    }

    /// Lays the scenes out left to right, one panel each, with `gap` between
    /// their bounding boxes.
    pub fn side_by_side(scenes: Vec<Scene>, gap: &Rational) -> Scene {
        let mut out = Scene::new();
        let mut cursor: Option<Rational> = None;
        for scene in scenes {
            let Some(b) = scene.bounds() else { continue };
            let dx = match &cursor {
                None => Rational::zero(),
                Some(right) => right + gap - &b.min.x,
            };
            cursor = Some(&b.max.x + &dx);
            for panel in scene.panels {
                let items = panel
                    .items
                    .into_iter()
                    .map(|it| Item { shape: it.shape.translated(&dx, &Rational::zero()), ..it })
                    .collect();
                out.panels.push(Panel { title: panel.title, items });
            }
        }
        out
    }
}

fn quadrant(dx: &Rational, dy: &Rational) -> LabelAt {
    match (dx.is_negative(), dy.is_negative()) {
        (false, false) => LabelAt::NorthEast,
        (true, false) => LabelAt::NorthWest,
        (true, true) => LabelAt::SouthWest,
        (false, true) => LabelAt::SouthEast,
    }
}

fn away_from(centre: &Point, p: &Point) -> LabelAt {
    let (dx, dy) = p.delta(centre);
    quadrant(&dx, &dy)
}

/// One drawable per trace step, styled by role. Auxiliary straightedge
/// strokes are dashed and span every point later found on them; the marked
/// result is drawn bold.
pub fn scene_from_trace(trace: &ConstructionTrace) -> Result<Scene, ExportError> {
    match verify_trace(trace) {
        Ok(Verification::Verified { .. }) => {}
        Ok(Verification::Failed(f)) => return Err(ExportError::Unverified(f.to_string())),
        Err(e) => return Err(ExportError::Unverified(e.to_string())),
    }
    let centroid = |pts: Vec<&Point>| {
        let n = Rational::from(pts.len().max(1) as i64);
        Point::new(pts.iter().map(|p| &p.x).sum::<Rational>() / &n, pts.iter().map(|p| &p.y).sum::<Rational>() / &n)
    };
    // Given points are labelled away from each other, everything else away
    // from the middle of the whole figure.
    let given =
        centroid(trace.steps.iter().filter(|s| s.role == Role::Given).filter_map(|s| s.output.as_point()).collect());
    let middle = centroid(trace.steps.iter().filter_map(|s| s.output.as_point()).collect());
    let mut items = Vec::with_capacity(trace.steps.len());
    for (i, step) in trace.steps.iter().enumerate() {
        let label = step.label.clone();
        let item = match (&step.kind, &step.output) {
            (StepKind::MarkResult { .. }, Primitive::Point(p)) => {
                // to the left of the segment being divided, clear of both ends
                let side = step.assertions.iter().find_map(|inc| match inc {
                    Incidence::OnLine(id) => trace.step(*id).output.as_line(),
                    _ => None,
                });
                let at = match side {
                    Some(l) => {
                        let (dx, dy) = l.to.delta(&l.from);
                        quadrant(&-dy, &dx)
                    }
                    None => LabelAt::NorthWest,
                };
                Item { label, shape: Shape::Point(p.clone()), style: Style::EMPHASIS.label_at(at) }
            }
            (StepKind::PlacePoint(_), Primitive::Point(p)) => {
                let (style, from) =
                    if step.role == Role::Given { (Style::REGULAR, &given) } else { (Style::THIN, &middle) };
                Item { label, shape: Shape::Point(p.clone()), style: style.label_at(away_from(from, p)) }
            }
            (_, Primitive::Point(p)) => {
                Item { label, shape: Shape::Point(p.clone()), style: Style::THIN.label_at(away_from(&middle, p)) }
            }
            (_, Primitive::Circle(c)) => Item { label, shape: Shape::Circle(c.clone()), style: Style::THIN },
            (_, Primitive::Line(l)) => {
                if step.role == Role::Given {
                    Item { label, shape: Shape::Segment(l.from.clone(), l.to.clone()), style: Style::REGULAR }
                } else {
                    let ray = l.as_ray();
                    let mut on_line: Vec<(Rational, Point)> =
                        [&l.from, &l.to].into_iter().map(|p| (ray.parameter_of(p), p.clone())).collect();
                    for later in &trace.steps[i + 1..] {
                        let uses = match later.kind {
                            StepKind::IntersectLineCircle { line, .. } => line.0 == i,
                            StepKind::IntersectLines { first, second } => first.0 == i || second.0 == i,
                            _ => false,
                        };
                        if let (true, Some(p)) = (uses, later.output.as_point()) {
                            on_line.push((ray.parameter_of(p), p.clone()));
                        }
                    }
                    on_line.sort_by(|a, b| a.0.cmp(&b.0));
                    let first = on_line.first().expect("nonempty").1.clone();
                    let last = on_line.last().expect("nonempty").1.clone();
                    Item { label, shape: Shape::Segment(first, last), style: Style::AUXILIARY }
                }
            }
        };
        items.push(item);
    }
    Ok(Scene { panels: vec![Panel { title: None, items }], viewbox: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use taxisect_core::nsect_segment;

    fn counts(scene: &Scene) -> (usize, usize, usize) {
        let circles = scene.items().filter(|i| matches!(i.shape, Shape::Circle(_))).count();
        let aux_lines =
            scene.items().filter(|i| matches!(i.shape, Shape::Segment(..)) && i.style.dash == Dash::Dashed).count();
        let labelled_points = scene.items().filter(|i| matches!(i.shape, Shape::Point(_)) && i.label.is_some()).count();
        (circles, aux_lines, labelled_points)
    }

    #[test]
    fn trace_scene_counts() {
        let o = Point::origin();
        let n3 = nsect_segment(&o, &Point::new(3, 3), 3).unwrap();
        assert_eq!(counts(&scene_from_trace(&n3.trace).unwrap()), (2, 2, 4));
        let n2 = nsect_segment(&o, &Point::new(1, 1), 2).unwrap();
        assert_eq!(counts(&scene_from_trace(&n2.trace).unwrap()), (2, 1, 3));
        let n5 = nsect_segment(&o, &Point::new(3, 3), 5).unwrap();
        assert_eq!(counts(&scene_from_trace(&n5.trace).unwrap()).0, 4);
    }

    #[test]
    fn labels_follow_construction_lettering() {
        let r = nsect_segment(&Point::origin(), &Point::new(3, 3), 3).unwrap();
        let scene = scene_from_trace(&r.trace).unwrap();
        let mut labels: Vec<&str> = scene.items().filter_map(|i| i.label.as_deref()).collect();
        labels.sort();
        assert_eq!(labels, ["A", "B", "C", "P"]);
    }

    #[test]
    fn unverified_trace_rejected() {
        let mut r = nsect_segment(&Point::origin(), &Point::new(3, 3), 3).unwrap();
        let last = r.trace.result.0;
        r.trace.steps[last].output = Primitive::Point(Point::new(1, 2));
        assert!(matches!(scene_from_trace(&r.trace), Err(ExportError::Unverified(_))));
    }

    #[test]
    fn auto_viewbox_contains_items_with_margin() {
        let mut s = Scene::new();
        s.push(Item::new(Shape::Circle(TaxicabCircle::new(Point::origin(), 2).unwrap()), Style::REGULAR));
        let vb = s.effective_viewbox();
        assert_eq!(vb.min, Point::new(Rational::frac(-12, 5), Rational::frac(-12, 5)));
        assert_eq!(vb.max, Point::new(Rational::frac(12, 5), Rational::frac(12, 5)));
    }

    #[test]
    fn clipping() {
        let vb = ViewBox { min: Point::new(-1, -1), max: Point::new(1, 1) };
        let diag = Line::from_slope_intercept(1, 0);
        assert_eq!(vb.clip_line(&diag), Some((Point::new(-1, -1), Point::new(1, 1))));
        assert_eq!(vb.clip_line(&Line::from_slope_intercept(0, 5)), None);
        let r = Ray::new(Point::origin(), taxisect_core::Direction::new(1, 0).unwrap());
        assert_eq!(vb.clip_ray(&r), Some((Point::origin(), Point::new(1, 0))));
        let away = Ray::new(Point::new(2, 0), taxisect_core::Direction::new(1, 0).unwrap());
        assert_eq!(vb.clip_ray(&away), None);
    }

    #[test]
    fn side_by_side_separates_panels() {
        let o = Point::origin();
        let a = scene_from_trace(&nsect_segment(&o, &Point::new(1, 1), 3).unwrap().trace).unwrap();
        let b = scene_from_trace(&nsect_segment(&o, &Point::new(1, 1), 4).unwrap().trace).unwrap();
        let ab = a.bounds().unwrap();
        let both = Scene::side_by_side(vec![a, b], &Rational::one());
        assert_eq!(both.panels.len(), 2);
        let first_right = ab.max.x;
        let second_left = Scene { panels: vec![both.panels[1].clone()], viewbox: None }.bounds().unwrap().min.x;
        assert_eq!(second_left, first_right + Rational::one());
    }
}
