//! Recursive descent over a token list. One statement per line.

use super::ast::{Builtin, Expr, ExprKind, Script, Span, Statement, StatementKind, KEYWORDS};
use super::error::{ErrorKind, ScriptError};
use super::lexer::{tokenize, Tok, Token};

pub fn parse(src: &str) -> Result<Script, ScriptError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let mut statements = Vec::new();
    loop {
        while p.peek() == &Tok::Newline {
            p.pos += 1;
        }
        if p.peek() == &Tok::Eof {
            break;
        }
        statements.push(p.statement()?);
        match p.peek() {
            Tok::Newline | Tok::Eof => {}
            other => return Err(p.error_here(format!("expected end of line, found {}", other.describe()))),
        }
    }
    Ok(Script { statements })
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    /// Builtins are always calls. Any other name is a call (and so an
    /// unknown function) only when `(` follows with no space, which keeps
    /// `assert_eq p (1, 2)` meaning a variable and a pair.
    fn is_call(&self, name: &str) -> bool {
        let (here, next) = (&self.tokens[self.pos], &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)]);
        next.tok == Tok::LParen
            && (Builtin::lookup(name).is_some()
                || (next.span.line == here.span.line && next.span.col == here.span.col + name.chars().count()))
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].span
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, msg: impl Into<String>) -> ScriptError {
        ScriptError::new(ErrorKind::Syntax, self.span(), msg)
    }

    fn expect(&mut self, want: Tok) -> Result<Token, ScriptError> {
        if *self.peek() == want {
            Ok(self.next())
        } else {
            Err(self.error_here(format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn statement(&mut self) -> Result<Statement, ScriptError> {
        let span = self.span();
        let Tok::Ident(word) = self.peek().clone() else {
            return Err(self.error_here(format!("expected a statement, found {}", self.peek().describe())));
        };
        let kind = match word.as_str() {
            "assert_eq" => {
                self.next();
                let actual = self.expr()?;
                let expected = self.expr()?;
                StatementKind::AssertEq { actual, expected }
            }
            "render" => {
                self.next();
                match self.next() {
                    Token { tok: Tok::Str(path), .. } => StatementKind::Render { path },
                    t => {
                        return Err(ScriptError::new(
                            ErrorKind::Syntax,
                            t.span,
                            format!("render expects a quoted path, found {}", t.tok.describe()),
                        ))
                    }
                }
            }
            "dump" => {
                self.next();
                StatementKind::Dump
            }
            _ => {
                if Builtin::lookup(&word).is_some() {
                    return Err(self.error_here(format!("`{word}` is a built-in function and cannot be rebound")));
                }
                self.next();
                self.expect(Tok::Equals)?;
                let value = self.expr()?;
                StatementKind::Bind { name: word, value }
            }
        };
        Ok(Statement { kind, span })
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let span = self.span();
        let kind = match self.peek().clone() {
            Tok::Number(_) | Tok::Minus => ExprKind::Number(self.rational()?),
            Tok::LParen => {
                self.next();
                let x = self.rational()?;
                self.expect(Tok::Comma)?;
                let y = self.rational()?;
                self.expect(Tok::RParen)?;
                ExprKind::Pair(x, y)
            }
            Tok::Str(s) => {
                self.next();
                ExprKind::Str(s)
            }
            Tok::Ident(name) if self.is_call(&name) => {
                let func = Builtin::lookup(&name).ok_or_else(|| {
                    ScriptError::new(ErrorKind::UnknownFunction, span, format!("no function named `{name}`"))
                })?;
                self.next();
                self.next();
                let mut args = Vec::new();
                if self.peek() != &Tok::RParen {
                    loop {
                        args.push(self.expr()?);
                        if self.peek() == &Tok::Comma {
                            self.next();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(Tok::RParen)?;
                let (min, max) = func.arity();
                if args.len() < min || args.len() > max {
                    let want = if min == max { min.to_string() } else { format!("{min} to {max}") };
                    return Err(ScriptError::new(
                        ErrorKind::Arity,
                        span,
                        format!("`{}` takes {want} argument(s), got {}", func.name(), args.len()),
                    ));
                }
                ExprKind::Call { func, args }
            }
            Tok::Ident(name) => {
                if KEYWORDS.contains(&name.as_str()) {
                    return Err(self.error_here(format!("`{name}` is a keyword")));
                }
                self.next();
                ExprKind::Var(name)
            }
            other => return Err(self.error_here(format!("expected an expression, found {}", other.describe()))),
        };
        Ok(Expr { kind, span })
    }

    /// `-`? NUMBER (`/` NUMBER)?, returned as normalized literal text.
    fn rational(&mut self) -> Result<String, ScriptError> {
        let mut text = String::new();
        if self.peek() == &Tok::Minus {
            self.next();
            text.push('-');
        }
        let num = self.number()?;
        text.push_str(&num);
        if self.peek() == &Tok::Slash {
            if num.contains('.') {
                return Err(self.error_here("a fraction needs integer numerator and denominator"));
            }
            self.next();
            let den = self.number()?;
            if den.contains('.') {
                return Err(self.error_here("a fraction needs integer numerator and denominator"));
            }
            text.push('/');
            text.push_str(&den);
        }
        Ok(text)
    }

    fn number(&mut self) -> Result<String, ScriptError> {
        match self.peek().clone() {
            Tok::Number(n) => {
                self.next();
                Ok(n)
            }
            other => Err(self.error_here(format!("expected a number, found {}", other.describe()))),
        }
    }
}
