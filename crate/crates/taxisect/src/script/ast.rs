use std::fmt;

/// 1-based source position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub kind: StatementKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    Bind { name: String, value: Expr },
    AssertEq { actual: Expr, expected: Expr },
    Render { path: String },
    Dump,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// Literal text in canonical shape: `-3`, `1/2`, `0.25`. Converted to an
    /// exact rational at run time, so `1/0` parses.
    Number(String),
    Pair(String, String),
    Call {
        func: Builtin,
        args: Vec<Expr>,
    },
    Var(String),
    Str(String),
}

macro_rules! builtins {
    ($($variant:ident => $name:literal, $min:literal ..= $max:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum Builtin {
            $($variant,)*
        }

        impl Builtin {
            pub const ALL: &'static [Builtin] = &[$(Builtin::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Builtin::$variant => $name,)*
                }
            }

            pub fn arity(self) -> (usize, usize) {
                match self {
                    $(Builtin::$variant => ($min, $max),)*
                }
            }

            pub fn lookup(name: &str) -> Option<Builtin> {
                match name {
                    $($name => Some(Builtin::$variant),)*
                    _ => None,
                }
            }
        }
    };
}

builtins! {
    Point => "point", 2..=2;
    Dir => "dir", 2..=2;
    Segment => "segment", 2..=2;
    Ray => "ray", 2..=2;
    LineThrough => "line_through", 2..=2;
    Circle => "circle", 2..=2;
    Tdist => "tdist", 2..=2;
    Edist2 => "edist2", 2..=2;
    Intersect => "intersect", 2..=3;
    Vertex => "vertex", 2..=2;
    Nsect => "nsect", 3..=3;
    Section => "section", 4..=4;
    Measure => "measure", 3..=3;
    Param => "param", 1..=1;
    Circumference => "circumference", 1..=1;
}

pub const KEYWORDS: [&str; 3] = ["assert_eq", "render", "dump"];

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(n) => f.write_str(n),
            ExprKind::Pair(x, y) => write!(f, "({x}, {y})"),
            ExprKind::Call { func, args } => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            ExprKind::Var(v) => f.write_str(v),
            ExprKind::Str(s) => f.write_str(&quote(s)),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StatementKind::Bind { name, value } => write!(f, "{name} = {value}"),
            StatementKind::AssertEq { actual, expected } => write!(f, "assert_eq {actual} {expected}"),
            StatementKind::Render { path } => write!(f, "render {}", quote(path)),
            StatementKind::Dump => f.write_str("dump"),
        }
    }
}

/// Pretty printer: one statement per line, comments dropped.
impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Expr {
    fn strip(&self) -> Expr {
        let kind = match &self.kind {
            ExprKind::Call { func, args } => {
                ExprKind::Call { func: *func, args: args.iter().map(Expr::strip).collect() }
            }
            other => other.clone(),
        };
        Expr { kind, span: Span::default() }
    }
}

impl Script {
    /// Copy with every location zeroed, for structural comparison.
    pub fn without_spans(&self) -> Script {
        let statements = self
            .statements
            .iter()
            .map(|s| Statement {
                span: Span::default(),
                kind: match &s.kind {
                    StatementKind::Bind { name, value } => {
                        StatementKind::Bind { name: name.clone(), value: value.strip() }
                    }
                    StatementKind::AssertEq { actual, expected } => {
                        StatementKind::AssertEq { actual: actual.strip(), expected: expected.strip() }
                    }
                    other => other.clone(),
                },
            })
            .collect();
        Script { statements }
    }
}
