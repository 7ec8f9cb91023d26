//! Lexer and recursive-descent parser for the expression grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := wedge (('*'|'/') wedge)*
//! wedge  := power ('^' power)*
//! power  := atom ('**' ['-'] integer)?
//! atom   := integer | 'i' | parameter | generator ['*'] | '(' expr ')'
//! ```
//!
//! A `*` directly after a generator marks a dual vector when the next
//! token cannot start a factor (`e5* + e4*`).

use std::fmt;

use crate::arith::Param;
use crate::error::{Error, Result};
use crate::lie::basis_index;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Pow,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str, line0: usize, col0: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (line0, col0);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, cl) = (line, col);
        let single = |t: Tok| Token { tok: t, line: l, column: cl };
        match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '+' => out.push(single(Tok::Plus)),
            '-' | '−' => out.push(single(Tok::Minus)),
            '/' => out.push(single(Tok::Slash)),
            '^' | '∧' => out.push(single(Tok::Caret)),
            '(' => out.push(single(Tok::LParen)),
            ')' => out.push(single(Tok::RParen)),
            '*' if chars.get(i + 1) == Some(&'*') => {
                out.push(single(Tok::Pow));
                i += 2;
                col += 2;
                continue;
            }
            '*' => out.push(single(Tok::Star)),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text.parse::<i64>().map_err(|_| Error::Parse {
                    line: l,
                    column: cl,
                    message: format!("integer literal `{text}` out of range"),
                })?;
                out.push(single(Tok::Int(n)));
                col += i - start;
                continue;
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(single(Tok::Ident(text)));
                col += i - start;
                continue;
            }
            other => {
                return Err(Error::Parse { line: l, column: cl, message: format!("unexpected character `{other}`") });
            }
        }
        i += 1;
        col += 1;
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

/// Syntax tree; kept so that repairs can edit individual summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(i64),
    I,
    Param(Param),
    Gen(String),
    Dual(String),
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Wedge(Vec<Expr>),
    Pow(Box<Expr>, i32),
}

impl Expr {
    /// Top-level summands (a non-sum is a single summand).
    pub fn summands(&self) -> Vec<&Expr> {
        match self {
            Expr::Sum(v) => v.iter().collect(),
            e => vec![e],
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(_) => 1,
            Expr::Neg(_) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Wedge(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::I => f.write_str("i"),
            Expr::Param(p) => write!(f, "{p}"),
            Expr::Gen(g) => f.write_str(g),
            Expr::Dual(g) => write!(f, "{g}*"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.fmt_at(f, 2)
            }
            Expr::Sum(v) => {
                for (k, e) in v.iter().enumerate() {
                    match (k, e) {
                        (0, Expr::Neg(inner)) => {
                            f.write_str("-")?;
                            inner.fmt_at(f, 2)?;
                        }
                        (_, Expr::Neg(inner)) => {
                            f.write_str(" - ")?;
                            inner.fmt_at(f, 2)?;
                        }
                        (0, e) => e.fmt_at(f, 2)?,
                        (_, e) => {
                            f.write_str(" + ")?;
                            e.fmt_at(f, 2)?;
                        }
                    }
                }
                Ok(())
            }
            Expr::Mul(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str("*")?;
                b.fmt_at(f, 3)
            }
            Expr::Div(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str("/")?;
                b.fmt_at(f, 3)
            }
            Expr::Wedge(v) => {
                for (k, e) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str("^")?;
                    }
                    e.fmt_at(f, 4)?;
                }
                Ok(())
            }
            Expr::Pow(a, e) => {
                a.fmt_at(f, 5)?;
                write!(f, "**{e}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

fn is_generator(name: &str) -> bool {
    basis_index(name).is_some() || matches!(name, "h4" | "h5" | "h6")
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Parse { line: t.line, column: t.column, message: message.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            terms.push(if negate { Expr::Neg(Box::new(t)) } else { t });
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.wedge()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.wedge()?));
                }
                Tok::Slash => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.wedge()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn wedge(&mut self) -> Result<Expr> {
        let mut parts = vec![self.power()?];
        while *self.peek() == Tok::Caret {
            self.bump();
            parts.push(self.power()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Expr::Wedge(parts) })
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Pow {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump().tok {
            Tok::Int(n) => {
                let e = i32::try_from(n).or_else(|_| self.error("exponent out of range"))?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => {
                self.pos -= 1;
                self.error("expected integer exponent after `**`")
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Tok::Ident(name) => {
                if name == "i" {
                    self.bump();
                    return Ok(Expr::I);
                }
                if is_generator(&name) {
                    self.bump();
                    // Postfix dual: `*` not followed by something that starts a factor.
                    if *self.peek() == Tok::Star
                        && matches!(self.peek_at(1), Tok::Plus | Tok::Minus | Tok::RParen | Tok::End)
                    {
                        self.bump();
                        return Ok(Expr::Dual(name));
                    }
                    return Ok(Expr::Gen(name));
                }
                match Param::lookup(&name) {
                    Ok(p) => {
                        self.bump();
                        Ok(Expr::Param(p))
                    }
                    Err(_) if looks_like_generator(&name) => {
                        self.error(format!("unknown generator `{name}`"))
                    }
                    Err(_) => self.error(format!("unregistered parameter `{name}`")),
                }
            }
            Tok::End => self.error("unexpected end of input"),
            other => self.error(format!("unexpected token {other:?}")),
        }
    }
}

fn looks_like_generator(name: &str) -> bool {
    let rest = name.strip_prefix("em").or_else(|| name.strip_prefix('e')).or_else(|| name.strip_prefix('h'));
    rest.is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()))
}

/// Parses one expression; positions in errors are relative to (`line`, `column`).
pub fn parse_at(src: &str, line: usize, column: usize) -> Result<Expr> {
    let toks = lex(src, line, column)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("trailing input");
    }
    Ok(e)
}

pub fn parse_ast(src: &str) -> Result<Expr> {
    parse_at(src, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_of_a_wedge_term() {
        let e = parse_ast("a*h2^e6").unwrap();
        assert_eq!(
            e,
            Expr::Mul(
                Box::new(Expr::Param(Param::A)),
                Box::new(Expr::Wedge(vec![Expr::Gen("h2".into()), Expr::Gen("e6".into())]))
            )
        );
    }

    #[test]
    fn duals_versus_products() {
        let e = parse_ast("e5* + e4*").unwrap();
        assert_eq!(e, Expr::Sum(vec![Expr::Dual("e5".into()), Expr::Dual("e4".into())]));
        assert!(matches!(parse_ast("2*e5").unwrap(), Expr::Mul(..)));
    }

    #[test]
    fn error_positions() {
        match parse_ast("e1 ^ e9") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (1, 6));
                assert!(message.contains("unknown generator"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_ast("zeta*e1") {
            Err(Error::Parse { message, .. }) => assert!(message.contains("unregistered parameter")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ast("(e1 + e2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ast("e1 $ e2"), Err(Error::Parse { column: 4, .. })));
    }

    #[test]
    fn display_round_trip() {
        for src in ["1/4*(3*h1 + 2*h2 + h3)^e1", "-e6^em5 + lam*(e4 + e5)^em3", "a1**-1*e1", "e5* + e4* + e1*"] {
            let e = parse_ast(src).unwrap();
            assert_eq!(parse_ast(&e.to_string()).unwrap(), e, "{src}");
        }
    }
}
