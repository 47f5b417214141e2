use super::ast::Span;
use super::error::{ErrorKind, ScriptError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// Digits, optionally with one `.` inside.
    Number(String),
    Str(String),
    LParen,
    RParen,
    Comma,
    Slash,
    Minus,
    Equals,
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::Str(_) => "string".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ScriptError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);

    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            col += 1;
            c
        };
        match c {
            '\n' => {
                chars.next();
                out.push(Token { tok: Tok::Newline, span });
                line += 1;
                col = 1;
            }
            '\r' => {
                bump(&mut chars);
                if chars.peek() != Some(&'\n') {
                    return Err(ScriptError::new(ErrorKind::Syntax, span, "stray carriage return"));
                }
            }
            ' ' | '\t' => {
                bump(&mut chars);
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n' && c != '\r') {
                    bump(&mut chars);
                }
            }
            '(' | ')' | ',' | '/' | '-' | '=' => {
                bump(&mut chars);
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '/' => Tok::Slash,
                    '-' => Tok::Minus,
                    _ => Tok::Equals,
                };
                out.push(Token { tok, span });
            }
            '"' => {
                bump(&mut chars);
                let mut s = String::new();
                loop {
                    match bump(&mut chars) {
                        Some('"') => break,
                        Some('\\') => match bump(&mut chars) {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(ScriptError::new(ErrorKind::Syntax, span, "bad escape in string")),
                        },
                        Some('\n') | Some('\r') | None => {
                            return Err(ScriptError::new(ErrorKind::Syntax, span, "unterminated string"))
                        }
                        Some(c) => s.push(c),
                    }
                }
                out.push(Token { tok: Tok::Str(s), span });
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                let mut seen_dot = false;
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                    } else if c == '.' && !seen_dot {
                        seen_dot = true;
                        s.push(c);
                    } else {
                        break;
                    }
                    bump(&mut chars);
                }
                if s.ends_with('.') {
                    return Err(ScriptError::new(ErrorKind::Syntax, span, format!("malformed number `{s}`")));
                }
                out.push(Token { tok: Tok::Number(s), span });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        s.push(c);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                out.push(Token { tok: Tok::Ident(s), span });
            }
            other => {
                return Err(ScriptError::new(ErrorKind::Syntax, span, format!("unexpected character `{other}`")));
            }
        }
    }
    out.push(Token { tok: Tok::Eof, span: Span { line, col } });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn basic() {
        assert_eq!(
            toks("x = -1/2 # c\r\n"),
            [
                Tok::Ident("x".into()),
                Tok::Equals,
                Tok::Minus,
                Tok::Number("1".into()),
                Tok::Slash,
                Tok::Number("2".into()),
                Tok::Newline,
                Tok::Eof
            ]
        );
    }

    #[test]
    fn spans_are_one_based() {
        let t = tokenize("a\n  b").unwrap();
        assert_eq!(t[0].span, Span { line: 1, col: 1 });
        assert_eq!(t[2].span, Span { line: 2, col: 3 });
    }

    #[test]
    fn errors() {
        assert_eq!(tokenize("x = 1.").unwrap_err().span, Span { line: 1, col: 5 });
        assert!(tokenize("render \"abc").is_err());
        assert_eq!(tokenize("a\n $").unwrap_err().span, Span { line: 2, col: 2 });
    }
}
