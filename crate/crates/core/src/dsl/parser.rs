//! Recursive-descent parser for the relation language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ['^' expo]
//! base   := ident | int | '(' expr ')' | 'sum' '(' ident '=' bound '..' bound ',' expr ')'
//! expo   := int | ident | '(' bound ')'
//! bound  := integer arithmetic over int | ident with + - * ^ and parentheses
//! ```

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{ExpoExpr, Expr, Param};
use super::DslError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Eq,
    DotDot,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => alloc::format!("identifier {s:?}"),
            Tok::Int(n) => alloc::format!("integer {n}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Eq => "'='".into(),
            Tok::DotDot => "'..'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, DslError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'=' => Tok::Eq,
            b'.' if bytes.get(i + 1) == Some(&b'.') => {
                i += 1;
                Tok::DotDot
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..=i].parse::<u64>().map_err(|_| DslError::Syntax {
                    offset: start,
                    message: "integer literal too large".to_string(),
                })?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Tok::Ident(src[start..=i].to_string())
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(DslError::Syntax {
                    offset: start,
                    message: alloc::format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, DslError> {
        Err(DslError::Syntax {
            offset: self.offset(),
            message: alloc::format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), DslError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let base = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.expo_atom()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Expr, DslError> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "sum" => {
                self.bump();
                self.expect(Tok::LParen, "'(' after sum")?;
                let index = match self.peek().clone() {
                    Tok::Ident(i) if i != "sum" => {
                        self.bump();
                        i
                    }
                    _ => return self.error("summation index"),
                };
                self.expect(Tok::Eq, "'='")?;
                let lower = self.bound()?;
                self.expect(Tok::DotDot, "'..'")?;
                let upper = self.bound()?;
                self.expect(Tok::Comma, "','")?;
                let body = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Sum {
                    index,
                    lower,
                    upper,
                    body: Box::new(body),
                })
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::Var(name))
            }
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => self.error("a variable, integer, '(' or sum"),
        }
    }

    fn expo_atom(&mut self) -> Result<ExpoExpr, DslError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(ExpoExpr::Int(n))
            }
            Tok::Ident(name) if name != "sum" => {
                self.bump();
                Ok(match Param::from_name(&name) {
                    Some(p) => ExpoExpr::Param(p),
                    None => ExpoExpr::Index(name),
                })
            }
            Tok::LParen => {
                self.bump();
                let e = self.bound()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => self.error("an exponent"),
        }
    }

    fn bound(&mut self) -> Result<ExpoExpr, DslError> {
        let mut lhs = self.bound_term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = ExpoExpr::Add(Box::new(lhs), Box::new(self.bound_term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = ExpoExpr::Sub(Box::new(lhs), Box::new(self.bound_term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn bound_term(&mut self) -> Result<ExpoExpr, DslError> {
        let mut lhs = self.bound_pow()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = ExpoExpr::Mul(Box::new(lhs), Box::new(self.bound_pow()?));
        }
        Ok(lhs)
    }

    fn bound_pow(&mut self) -> Result<ExpoExpr, DslError> {
        let base = self.expo_atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.bound_pow()?;
            Ok(ExpoExpr::Pow(Box::new(base), Box::new(e)))
        } else {
            Ok(base)
        }
    }
}

/// Parses a relation-language expression.
pub fn parse_expr(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("an operator or end of input");
    }
    Ok(e)
}
