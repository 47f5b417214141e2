//! `.taxi` construction scripts.
//!
//! A script is a flat list of statements, one per line:
//!
//! ```text
//! # comments run to end of line
//! A = point(0, 0)
//! B = (3, 3)                  # a pair literal is a point
//! C = nsect(A, B, 3)
//! assert_eq tdist(A, C) 2     # exact comparison: actual, then expected
//! render "construction.svg"
//! dump
//! ```
//!
//! Numbers are exact: `2`, `-7/3` and `0.25` are all rationals. Every value
//! that can be drawn (points, lines, rays, segments, circles, ray lists) is
//! added to the scene under its binding name.

mod ast;
mod error;
mod interp;
mod lexer;
mod parser;

pub use ast::{Builtin, Expr, ExprKind, Script, Span, Statement, StatementKind};
pub use error::{ErrorKind, ScriptError};
pub use interp::{execute, AssertionFailure, Env, Execution, Render, Value};
pub use parser::parse;

/// Parses and executes in one go.
pub fn run(source: &str) -> Result<Execution, ScriptError> {
    execute(&parse(source)?)
}
