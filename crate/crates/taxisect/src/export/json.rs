//! Canonical JSON: object keys sorted, rationals as `"p/q"` strings, points
//! as two-element arrays of rational strings.

use serde_json::{json, Map, Value};
use taxisect_core::constructions::{ConstructionTrace, Incidence, Pick, Primitive, Role, StepKind};
use taxisect_core::kernel::{Direction, Line, Point, Ray, Segment, TaxicabCircle};
use taxisect_core::Rational;

use super::scene::{Dash, Item, LabelAt, Scene, Shape, Stroke};
use crate::script::{Env, Execution, Value as ScriptValue};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

/// Pretty-printed canonical JSON with a trailing newline.
pub fn emit_json<T: ToJson + ?Sized>(value: &T) -> String {
    to_canonical_string(&value.to_json())
}

pub fn to_canonical_string(value: &Value) -> String {
    // serde_json's default map is a BTreeMap, so keys come out sorted.
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_rational(v: &Value) -> Option<Rational> {
    v.as_str()?.parse().ok()
}

pub fn parse_point(v: &Value) -> Option<Point> {
    match v.as_array()?.as_slice() {
        [x, y] => Some(Point::new(parse_rational(x)?, parse_rational(y)?)),
        _ => None,
    }
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for Point {
    fn to_json(&self) -> Value {
        json!([self.x.to_json(), self.y.to_json()])
    }
}

impl ToJson for Direction {
    fn to_json(&self) -> Value {
        json!({ "type": "direction", "dx": self.dx().to_json(), "dy": self.dy().to_json() })
    }
}

impl ToJson for Line {
    fn to_json(&self) -> Value {
        json!({ "type": "line", "a": self.a().to_json(), "b": self.b().to_json(), "c": self.c().to_json() })
    }
}

impl ToJson for Ray {
    fn to_json(&self) -> Value {
        json!({
            "type": "ray",
            "origin": self.origin.to_json(),
            "dir": [self.dir.dx().to_json(), self.dir.dy().to_json()],
        })
    }
}

impl ToJson for Segment {
    fn to_json(&self) -> Value {
        json!({ "type": "segment", "p": self.p().to_json(), "q": self.q().to_json() })
    }
}

impl ToJson for TaxicabCircle {
    fn to_json(&self) -> Value {
        json!({ "type": "circle", "center": self.center().to_json(), "radius": self.radius().to_json() })
    }
}

impl ToJson for Shape {
    fn to_json(&self) -> Value {
        match self {
            Shape::Point(p) => json!({ "kind": "point", "at": p.to_json() }),
            Shape::Segment(p, q) => json!({ "kind": "segment", "from": p.to_json(), "to": q.to_json() }),
            Shape::Line(l) => json!({ "kind": "line", "line": l.to_json() }),
            Shape::Ray(r) => json!({ "kind": "ray", "ray": r.to_json() }),
            Shape::Circle(c) => json!({
                "kind": "circle",
                "center": c.center().to_json(),
                "radius": c.radius().to_json(),
                "vertices": c.vertices().iter().map(ToJson::to_json).collect::<Vec<_>>(),
            }),
            Shape::Polyline(ps) => {
                json!({ "kind": "polyline", "points": ps.iter().map(ToJson::to_json).collect::<Vec<_>>() })
            }
        }
    }
}

impl ToJson for Item {
    fn to_json(&self) -> Value {
        let stroke = match self.style.stroke {
            Stroke::Thin => "thin",
            Stroke::Regular => "regular",
            Stroke::Bold => "bold",
        };
        let dash = match self.style.dash {
            Dash::Solid => "solid",
            Dash::Dashed => "dashed",
        };
        let label_at = match self.style.label_at {
            LabelAt::NorthEast => "ne",
            LabelAt::NorthWest => "nw",
            LabelAt::SouthEast => "se",
            LabelAt::SouthWest => "sw",
        };
        json!({
            "label": self.label,
            "shape": self.shape.to_json(),
            "style": { "stroke": stroke, "dash": dash, "label_at": label_at },
        })
    }
}

impl ToJson for Scene {
    fn to_json(&self) -> Value {
        let vb = self.effective_viewbox();
        let panels: Vec<Value> = self
            .panels
            .iter()
            .map(|p| json!({ "title": p.title, "items": p.items.iter().map(ToJson::to_json).collect::<Vec<_>>() }))
            .collect();
        json!({
            "panels": panels,
            "viewbox": { "min": vb.min.to_json(), "max": vb.max.to_json() },
        })
    }
}

fn primitive_json(p: &Primitive) -> Value {
    match p {
        Primitive::Point(p) => p.to_json(),
        Primitive::Line(l) => json!({
            "type": "drawn_line",
            "from": l.from.to_json(),
            "to": l.to.to_json(),
            "line": l.line.to_json(),
        }),
        Primitive::Circle(c) => c.to_json(),
    }
}

fn kind_json(kind: &StepKind) -> Value {
    let mut m = Map::new();
    m.insert("op".into(), Value::String(kind.name().into()));
    let mut put = |k: &str, v: Value| {
        m.insert(k.into(), v);
    };
    match kind {
        StepKind::PlacePoint(p) => put("at", p.to_json()),
        StepKind::DrawCircle { center, through } => {
            put("center", json!(center.0));
            put("through", json!(through.0));
        }
        StepKind::DrawLine { from, to } => {
            put("from", json!(from.0));
            put("to", json!(to.0));
        }
        StepKind::IntersectLineCircle { line, circle, pick } => {
            put("line", json!(line.0));
            put("circle", json!(circle.0));
            put("pick", json!(if *pick == Pick::First { "first" } else { "last" }));
        }
        StepKind::IntersectLines { first, second } => {
            put("first", json!(first.0));
            put("second", json!(second.0));
        }
        StepKind::TakeCircleVertex { circle, corner } => {
            put("circle", json!(circle.0));
            put("corner", json!(corner.letter().to_string()));
        }
        StepKind::MarkResult { point } => put("point", json!(point.0)),
    }
    Value::Object(m)
}

fn incidence_json(inc: &Incidence) -> Value {
    match inc {
        Incidence::OnLine(s) => json!({ "on_line": s.0 }),
        Incidence::OnCircle(s) => json!({ "on_circle": s.0 }),
        Incidence::SameAs(s) => json!({ "same_as": s.0 }),
        Incidence::PassesThrough(s) => json!({ "passes_through": s.0 }),
    }
}

impl ToJson for ConstructionTrace {
    fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                json!({
                    "index": i,
                    "step": kind_json(&s.kind),
                    "output": primitive_json(&s.output),
                    "assertions": s.assertions.iter().map(incidence_json).collect::<Vec<_>>(),
                    "label": s.label,
                    "role": match s.role { Role::Given => "given", Role::Auxiliary => "auxiliary", Role::Result => "result" },
                })
            })
            .collect();
        let scene = super::scene_from_trace(self).map(|s| s.to_json()).unwrap_or(Value::Null);
        json!({ "result": self.result.0, "steps": steps, "scene": scene })
    }
}

impl ToJson for ScriptValue {
    fn to_json(&self) -> Value {
        match self {
            ScriptValue::Rational(r) => r.to_json(),
            ScriptValue::Point(p) => p.to_json(),
            ScriptValue::Direction(d) => d.to_json(),
            ScriptValue::Line(l) => l.to_json(),
            ScriptValue::Ray(r) => r.to_json(),
            ScriptValue::Segment(s) => s.to_json(),
            ScriptValue::Circle(c) => c.to_json(),
            ScriptValue::RayList(rs) => Value::Array(rs.iter().map(ToJson::to_json).collect()),
            ScriptValue::Text(t) => Value::String(t.clone()),
        }
    }
}

/// Bindings as one object keyed by identifier.
impl ToJson for Env {
    fn to_json(&self) -> Value {
        Value::Object(self.iter().map(|(k, v)| (k.to_string(), v.to_json())).collect())
    }
}

/// Final bindings, scene and assertion outcome of a script run.
impl ToJson for Execution {
    fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "line": f.span.line,
                    "column": f.span.col,
                    "expected": f.expected.to_json(),
                    "actual": f.actual.to_json(),
                })
            })
            .collect();
        json!({
            "bindings": self.env.to_json(),
            "scene": self.scene.to_json(),
            "assertions": self.assertions,
            "failures": failures,
        })
    }
}
