use std::fmt;

use taxisect_core::angles::{direction_to_param, measure_angle, Angle};
use taxisect_core::kernel::{
    euclidean_distance_squared, intersect_linear, taxicab_distance, CompassPoint, Direction, IntersectionResult, Line,
    Linear, Point, Ray, Segment, TaxicabCircle,
};
use taxisect_core::{circumference, nsect_segment, section_angle, Rational};

use super::ast::{Builtin, Expr, ExprKind, Script, Span, StatementKind};
use super::error::{ErrorKind, ScriptError};
use crate::export::{Item, Scene, Shape, Style};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Point(Point),
    Direction(Direction),
    Line(Line),
    Ray(Ray),
    Segment(Segment),
    Circle(TaxicabCircle),
    RayList(Vec<Ray>),
    Text(String),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Rational(_) => "rational",
            Value::Point(_) => "point",
            Value::Direction(_) => "direction",
            Value::Line(_) => "line",
            Value::Ray(_) => "ray",
            Value::Segment(_) => "segment",
            Value::Circle(_) => "circle",
            Value::RayList(_) => "raylist",
            Value::Text(_) => "string",
        }
    }

    fn shapes(&self) -> Vec<Shape> {
        match self {
            Value::Point(p) => vec![Shape::Point(p.clone())],
            Value::Line(l) => vec![Shape::Line(l.clone())],
            Value::Ray(r) => vec![Shape::Ray(r.clone())],
            Value::Segment(s) => vec![Shape::Segment(s.p().clone(), s.q().clone())],
            Value::Circle(c) => vec![Shape::Circle(c.clone())],
            Value::RayList(rs) => rs.iter().cloned().map(Shape::Ray).collect(),
            Value::Rational(_) | Value::Direction(_) | Value::Text(_) => Vec::new(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{r}"),
            Value::Point(p) => write!(f, "{p}"),
            Value::Direction(d) => write!(f, "{d}"),
            Value::Line(l) => write!(f, "{l}"),
            Value::Ray(r) => write!(f, "{r}"),
            Value::Segment(s) => write!(f, "{s}"),
            Value::Circle(c) => write!(f, "{c}"),
            Value::RayList(rs) => {
                f.write_str("[")?;
                for (i, r) in rs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{r}")?;
                }
                f.write_str("]")
            }
            Value::Text(t) => write!(f, "{t:?}"),
        }
    }
}

/// Bindings in definition order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Env {
    bindings: Vec<(String, Value)>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.bindings.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssertionFailure {
    pub span: Span,
    pub expected: Value,
    pub actual: Value,
}

impl fmt::Display for AssertionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: assertion failed: expected {}, actual {}", self.span, self.expected, self.actual)
    }
}

/// A `render` directive: the scene as it stood when the directive ran.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Render {
    pub span: Span,
    pub path: String,
    pub scene: Scene,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Execution {
    pub env: Env,
    pub scene: Scene,
    pub failures: Vec<AssertionFailure>,
    pub assertions: usize,
    pub renders: Vec<Render>,
    /// Environment snapshots taken by `dump`.
    pub dumps: Vec<Env>,
}

impl Execution {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `script` to completion. Failed assertions are collected and do not
/// stop execution; any other error does.
pub fn execute(script: &Script) -> Result<Execution, ScriptError> {
    let mut ex = Execution::default();
    for stmt in &script.statements {
        match &stmt.kind {
            StatementKind::Bind { name, value } => {
                if ex.env.get(name).is_some() {
                    return Err(ScriptError::new(
                        ErrorKind::Redefinition,
                        stmt.span,
                        format!("`{name}` is already defined"),
                    ));
                }
                let v = eval(&ex.env, value)?;
                let shapes = v.shapes();
                let many = shapes.len() > 1;
                for (i, shape) in shapes.into_iter().enumerate() {
                    let label = if many { format!("{name}{}", i + 1) } else { name.clone() };
                    ex.scene.push(Item::labelled(label, shape, Style::REGULAR));
                }
                ex.env.bindings.push((name.clone(), v));
            }
            StatementKind::AssertEq { actual, expected } => {
                let a = eval(&ex.env, actual)?;
                let e = eval(&ex.env, expected)?;
                if a.type_name() != e.type_name() {
                    return Err(ScriptError::new(
                        ErrorKind::Type,
                        expected.span,
                        format!("cannot compare {} with {}", a.type_name(), e.type_name()),
                    ));
                }
                ex.assertions += 1;
                if a != e {
                    ex.failures.push(AssertionFailure { span: stmt.span, expected: e, actual: a });
                }
            }
            StatementKind::Render { path } => {
                ex.renders.push(Render { span: stmt.span, path: path.clone(), scene: ex.scene.clone() });
            }
            StatementKind::Dump => ex.dumps.push(ex.env.clone()),
        }
    }
    Ok(ex)
}

fn literal(text: &str, span: Span) -> Result<Rational, ScriptError> {
    text.parse().map_err(|e| ScriptError::new(ErrorKind::Domain, span, format!("{text}: {e}")))
}

fn type_error(e: &Expr, want: &str, got: &Value) -> ScriptError {
    ScriptError::new(ErrorKind::Type, e.span, format!("expected {want}, got {}", got.type_name()))
}

fn domain(span: Span, e: impl fmt::Display) -> ScriptError {
    ScriptError::new(ErrorKind::Domain, span, e.to_string())
}

fn eval(env: &Env, e: &Expr) -> Result<Value, ScriptError> {
    match &e.kind {
        ExprKind::Number(n) => Ok(Value::Rational(literal(n, e.span)?)),
        ExprKind::Pair(x, y) => Ok(Value::Point(Point::new(literal(x, e.span)?, literal(y, e.span)?))),
        ExprKind::Str(s) => Ok(Value::Text(s.clone())),
        ExprKind::Var(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| ScriptError::new(ErrorKind::Unbound, e.span, format!("`{name}` is not defined"))),
        ExprKind::Call { func, args } => {
            let vals = args.iter().map(|a| eval(env, a)).collect::<Result<Vec<_>, _>>()?;
            call(*func, e.span, args, &vals)
        }
    }
}

struct Args<'a> {
    exprs: &'a [Expr],
    vals: &'a [Value],
}

impl Args<'_> {
    fn rational(&self, i: usize) -> Result<Rational, ScriptError> {
        match &self.vals[i] {
            Value::Rational(r) => Ok(r.clone()),
            v => Err(type_error(&self.exprs[i], "rational", v)),
        }
    }

    fn point(&self, i: usize) -> Result<Point, ScriptError> {
        match &self.vals[i] {
            Value::Point(p) => Ok(p.clone()),
            v => Err(type_error(&self.exprs[i], "point", v)),
        }
    }

    /// A direction, or a point read as a position vector.
    fn direction(&self, i: usize) -> Result<Direction, ScriptError> {
        match &self.vals[i] {
            Value::Direction(d) => Ok(d.clone()),
            Value::Point(p) => Direction::new(p.x.clone(), p.y.clone()).map_err(|e| domain(self.exprs[i].span, e)),
            v => Err(type_error(&self.exprs[i], "direction", v)),
        }
    }

    fn count(&self, i: usize) -> Result<u32, ScriptError> {
        let r = self.rational(i)?;
        r.to_i64()
            .filter(|_| r.is_integer())
            .and_then(|n| u32::try_from(n).ok())
            .ok_or_else(|| domain(self.exprs[i].span, format!("expected a whole number of parts, got {r}")))
    }

    fn circle(&self, i: usize) -> Result<TaxicabCircle, ScriptError> {
        match &self.vals[i] {
            Value::Circle(c) => Ok(c.clone()),
            v => Err(type_error(&self.exprs[i], "circle", v)),
        }
    }

    fn linear(&self, i: usize) -> Option<Linear<'_>> {
        match &self.vals[i] {
            Value::Line(l) => Some(Linear::Line(l)),
            Value::Ray(r) => Some(Linear::Ray(r)),
            Value::Segment(s) => Some(Linear::Segment(s)),
            _ => None,
        }
    }
}

fn call(func: Builtin, span: Span, exprs: &[Expr], vals: &[Value]) -> Result<Value, ScriptError> {
    let a = Args { exprs, vals };
    let at = |i: usize| exprs[i].span;
    let v = match func {
        Builtin::Point => Value::Point(Point::new(a.rational(0)?, a.rational(1)?)),
        Builtin::Dir => Value::Direction(Direction::new(a.rational(0)?, a.rational(1)?).map_err(|e| domain(span, e))?),
        Builtin::Segment => Value::Segment(Segment::new(a.point(0)?, a.point(1)?).map_err(|e| domain(span, e))?),
        Builtin::Ray => {
            let origin = a.point(0)?;
            let dir = match &vals[1] {
                Value::Point(p) => Direction::between(&origin, p).map_err(|e| domain(at(1), e))?,
                Value::Direction(d) => d.clone(),
                v => return Err(type_error(&exprs[1], "point or direction", v)),
            };
            Value::Ray(Ray::new(origin, dir))
        }
        Builtin::LineThrough => Value::Line(Line::through(&a.point(0)?, &a.point(1)?).map_err(|e| domain(span, e))?),
        Builtin::Circle => {
            let center = a.point(0)?;
            let c = match &vals[1] {
                Value::Rational(r) => TaxicabCircle::new(center, r.clone()),
                Value::Point(p) => TaxicabCircle::through(center, p),
                v => return Err(type_error(&exprs[1], "radius or point", v)),
            };
            Value::Circle(c.map_err(|e| domain(at(1), e))?)
        }
        Builtin::Tdist => Value::Rational(taxicab_distance(&a.point(0)?, &a.point(1)?)),
        Builtin::Edist2 => Value::Rational(euclidean_distance_squared(&a.point(0)?, &a.point(1)?)),
        Builtin::Intersect => {
            let result = match (a.linear(0), a.linear(1), &vals[0], &vals[1]) {
                (Some(l), Some(m), _, _) => intersect_linear(&l, &m).map_err(|e| domain(span, e))?,
                (Some(l), None, _, Value::Circle(c)) | (None, Some(l), Value::Circle(c), _) => l.intersect_circle(c),
                (None, _, v, _) => return Err(type_error(&exprs[0], "line, ray, segment or circle", v)),
                (_, None, _, v) => return Err(type_error(&exprs[1], "line, ray, segment or circle", v)),
            };
            pick_intersection(result, &a, span)?
        }
        Builtin::Vertex => {
            let c = a.circle(0)?;
            let corner = match &vals[1] {
                Value::Text(t) => CompassPoint::from_letter(t)
                    .ok_or_else(|| domain(at(1), format!("corner must be \"N\", \"S\", \"E\" or \"W\", got {t:?}")))?,
                v => return Err(type_error(&exprs[1], "string", v)),
            };
            Value::Point(c.vertex(corner))
        }
        Builtin::Nsect => {
            let n = a.count(2)?;
            Value::Point(nsect_segment(&a.point(0)?, &a.point(1)?, n).map_err(|e| domain(span, e))?.point)
        }
        Builtin::Section => {
            let angle = Angle::new(a.point(0)?, a.direction(1)?, a.direction(2)?);
            let n = a.count(3)?;
            let s = section_angle(&angle, n, &Rational::one()).map_err(|e| domain(span, e))?;
            Value::RayList(s.rays)
        }
        Builtin::Measure => Value::Rational(measure_angle(&Angle::new(a.point(0)?, a.direction(1)?, a.direction(2)?))),
        Builtin::Param => Value::Rational(direction_to_param(&a.direction(0)?).into_inner()),
        Builtin::Circumference => Value::Rational(circumference(&a.circle(0)?)),
    };
    Ok(v)
}

/// With no index the intersection must be a single point. Otherwise the
/// 0-based index selects among the points in the order the kernel reports
/// them (overlap endpoints included).
fn pick_intersection(result: IntersectionResult, a: &Args, span: Span) -> Result<Value, ScriptError> {
    if a.vals.len() == 3 {
        let k = a.count(2)? as usize;
        let pts = result.points();
        return pts
            .get(k)
            .cloned()
            .map(Value::Point)
            .ok_or_else(|| domain(a.exprs[2].span, format!("index {k} out of range; {} point(s)", pts.len())));
    }
    match result {
        IntersectionResult::OnePoint(p) => Ok(Value::Point(p)),
        IntersectionResult::Empty => Err(domain(span, "the objects do not meet")),
        IntersectionResult::TwoPoints(..) => Err(domain(span, "two intersection points; pass an index 0 or 1")),
        IntersectionResult::OverlapSegment(_) => {
            Err(domain(span, "the objects overlap along a segment; pass an index 0 or 1 for an endpoint"))
        }
    }
}
