use std::fmt;

use super::ast::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    UnknownFunction,
    Arity,
    Type,
    Unbound,
    Redefinition,
    /// A geometric or arithmetic operation rejected its input.
    Domain,
}

impl ErrorKind {
    fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::UnknownFunction => "unknown function",
            ErrorKind::Arity => "wrong number of arguments",
            ErrorKind::Type => "type error",
            ErrorKind::Unbound => "unbound identifier",
            ErrorKind::Redefinition => "redefinition",
            ErrorKind::Domain => "domain error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {}: {message}", kind.as_str())]
pub struct ScriptError {
    pub kind: ErrorKind,
    pub span: Span,
    pub message: String,
}

impl ScriptError {
    pub fn new(kind: ErrorKind, span: Span, message: impl Into<String>) -> ScriptError {
        ScriptError { kind, span, message: message.into() }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
