//! Recursive-descent parser for one statement per line.
//!
//! Precedence, loosest first: `==`/`!=` (non-associative), `+`/`-`
//! (left), `*` (left), unary `-`, `**` (right). The exponent of `**` is
//! itself a power or a postfix expression, so `-x**2` is `-(x**2)` and a
//! negative exponent needs parentheses.

use super::ast::{BinaryOp, Expr, ExprKind, Statement};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Str(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    StarStar,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Assign,
    EqEq,
    NotEq,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::Str(s) => format!("string \"{s}\""),
            Tok::Ident(s) => format!("name {s}"),
            Tok::End => "end of input".into(),
            other => format!("'{}'", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::StarStar => "**",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::Assign => "=",
            Tok::EqEq => "==",
            Tok::NotEq => "!=",
            _ => "",
        }
    }
}

/// A token and its 1-based column.
type Spanned = (Tok, usize);

fn syntax_error(column: usize, expected: &[&str], found: impl Into<String>) -> Error {
    Error::Syntax {
        column,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let column = |i: usize| chars.get(i).map_or(src.chars().count() + 1, |_| i + 1);
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (_, c) = chars[i];
        let start = i;
        let single = |t: Tok| (t, 1);
        let (tok, len) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '#' => break,
            '0'..='9' => {
                let n = chars[i..].iter().take_while(|(_, c)| c.is_ascii_digit()).count();
                (Tok::Int(chars[i..i + n].iter().map(|(_, c)| c).collect()), n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let n = chars[i..]
                    .iter()
                    .take_while(|(_, c)| c.is_ascii_alphanumeric() || *c == '_')
                    .count();
                (Tok::Ident(chars[i..i + n].iter().map(|(_, c)| c).collect()), n)
            }
            '"' => {
                let Some(n) = chars[i + 1..].iter().position(|(_, c)| *c == '"') else {
                    return Err(syntax_error(column(start), &["closing '\"'"], "end of input"));
                };
                (Tok::Str(chars[i + 1..i + 1 + n].iter().map(|(_, c)| c).collect()), n + 2)
            }
            '*' if matches!(chars.get(i + 1), Some((_, '*'))) => (Tok::StarStar, 2),
            '=' if matches!(chars.get(i + 1), Some((_, '='))) => (Tok::EqEq, 2),
            '!' if matches!(chars.get(i + 1), Some((_, '='))) => (Tok::NotEq, 2),
            '+' => single(Tok::Plus),
            '-' => single(Tok::Minus),
            '*' => single(Tok::Star),
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            '[' => single(Tok::LBracket),
            ']' => single(Tok::RBracket),
            ',' => single(Tok::Comma),
            '.' => single(Tok::Dot),
            '=' => single(Tok::Assign),
            other => return Err(syntax_error(column(start), &["an expression"], format!("character '{other}'"))),
        };
        toks.push((tok, column(start)));
        i += len;
    }
    toks.push((Tok::End, column(chars.len())));
    Ok(toks)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&str]) -> Error {
        syntax_error(self.column(), expected, self.peek().describe())
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{}'", tok.symbol())]))
        }
    }

    fn statement(&mut self) -> Result<Statement> {
        let expr = self.expr()?;
        if self.peek() == &Tok::Assign {
            let column = self.column();
            self.bump();
            let value = self.expr()?;
            self.finish()?;
            return match expr.kind {
                ExprKind::Name(name) => Ok(Statement::Assign { name, expr: value }),
                ExprKind::List(items) => {
                    let names = items
                        .into_iter()
                        .map(|e| match e.kind {
                            ExprKind::Name(n) => Ok(n),
                            _ => Err(syntax_error(e.column, &["a name"], "an expression")),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Statement::ListAssign { names, expr: value })
                }
                _ => Err(syntax_error(column, &["a name or a list of names before '='"], "'='")),
            };
        }
        self.finish()?;
        Ok(Statement::Expr(expr))
    }

    fn finish(&self) -> Result<()> {
        if self.peek() == &Tok::End {
            Ok(())
        } else {
            Err(self.error(&["end of input", "an operator"]))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let left = self.sum()?;
        let op = match self.peek() {
            Tok::EqEq => BinaryOp::Eq,
            Tok::NotEq => BinaryOp::Ne,
            _ => return Ok(left),
        };
        self.bump();
        let right = self.sum()?;
        let column = left.column;
        Ok(Expr::new(ExprKind::Binary(op, Box::new(left), Box::new(right)), column))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut left = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinaryOp::Add,
                Tok::Minus => BinaryOp::Sub,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.product()?;
            let column = left.column;
            left = Expr::new(ExprKind::Binary(op, Box::new(left), Box::new(right)), column);
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        while self.eat(&Tok::Star) {
            let right = self.unary()?;
            let column = left.column;
            left = Expr::new(ExprKind::Binary(BinaryOp::Mul, Box::new(left), Box::new(right)), column);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == &Tok::Minus {
            let (_, column) = self.bump();
            let operand = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(operand)), column));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.postfix()?;
        if self.eat(&Tok::StarStar) {
            if self.peek() == &Tok::Minus {
                return Err(self.error(&["a parenthesized negative exponent"]));
            }
            let exp = self.power()?;
            let column = base.column;
            return Ok(Expr::new(ExprKind::Binary(BinaryOp::Pow, Box::new(base), Box::new(exp)), column));
        }
        Ok(base)
    }

    fn args(&mut self, close: Tok) -> Result<Vec<Expr>> {
        let mut args = Vec::new();
        if self.eat(&close) {
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if self.eat(&close) {
                return Ok(args);
            }
            if !self.eat(&Tok::Comma) {
                return Err(self.error(&["','", &format!("'{}'", close.symbol())]));
            }
        }
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        loop {
            let column = e.column;
            match self.peek() {
                Tok::LParen => {
                    let ExprKind::Name(name) = e.kind else {
                        return Err(self.error(&["an operator"]));
                    };
                    self.bump();
                    let args = self.args(Tok::RParen)?;
                    e = Expr::new(ExprKind::Call(name, args), column);
                }
                Tok::Dot => {
                    self.bump();
                    let Tok::Ident(member) = self.peek().clone() else {
                        return Err(self.error(&["a name after '.'"]));
                    };
                    self.bump();
                    if self.eat(&Tok::LParen) {
                        let args = self.args(Tok::RParen)?;
                        e = Expr::new(ExprKind::MethodCall(Box::new(e), member, args), column);
                    } else if let ExprKind::Name(owner) = e.kind {
                        e = Expr::new(ExprKind::Qualified(owner, member), column);
                    } else {
                        return Err(self.error(&["'('"]));
                    }
                }
                Tok::LBracket => {
                    self.bump();
                    let index = self.expr()?;
                    self.expect(Tok::RBracket)?;
                    e = Expr::new(ExprKind::Index(Box::new(e), Box::new(index)), column);
                }
                _ => return Ok(e),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let column = self.column();
        let kind = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                ExprKind::Int(n)
            }
            Tok::Str(s) => {
                self.bump();
                ExprKind::Str(s)
            }
            Tok::Ident(name) => {
                self.bump();
                ExprKind::Name(name)
            }
            Tok::LParen => {
                self.bump();
                let mut inner = self.expr()?;
                self.expect(Tok::RParen)?;
                inner.column = column;
                return Ok(inner);
            }
            Tok::LBracket => {
                self.bump();
                ExprKind::List(self.args(Tok::RBracket)?)
            }
            _ => return Err(self.error(&["an integer", "a string", "a name", "'('", "'['"])),
        };
        Ok(Expr::new(kind, column))
    }
}

pub fn parse(src: &str) -> Result<Statement> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    p.statement()
}

/// Parses text that must be a single expression (no assignment).
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}
