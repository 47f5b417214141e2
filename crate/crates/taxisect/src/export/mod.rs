//! Scenes and their SVG and JSON serializations.

pub mod figures;
pub mod json;
pub mod scene;
pub mod svg;

pub use figures::{figure, FIGURES};
pub use json::{emit_json, parse_point, parse_rational, to_canonical_string, ToJson};
pub use scene::{scene_from_trace, Dash, Item, LabelAt, Panel, Scene, Shape, Stroke, Style, ViewBox};
pub use svg::emit_svg;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExportError {
    #[error("trace does not verify: {0}")]
    Unverified(String),
    #[error("unknown figure `{0}`; expected one of: {names}", names = figures::FIGURES.join(", "))]
    UnknownFigure(String),
}
