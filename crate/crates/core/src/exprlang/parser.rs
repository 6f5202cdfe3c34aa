//! Hand-written lexer and precedence-climbing parser.

use std::fmt;

use super::{BinOp, Expr, Func, Name};
use crate::vars::VarId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {}", n),
            Tok::Ident(s) => format!("identifier '{}'", s),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.peek() else {
                out.push(Spanned {
                    tok: Tok::Eof,
                    line,
                    col,
                });
                return Ok(out);
            };
            let tok = match c {
                b'+' => {
                    self.bump();
                    Tok::Plus
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'*' => {
                    self.bump();
                    Tok::Star
                }
                b'/' => {
                    self.bump();
                    Tok::Slash
                }
                b'^' => {
                    self.bump();
                    Tok::Caret
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b',' => {
                    self.bump();
                    Tok::Comma
                }
                b'0'..=b'9' => {
                    let mut n: i64 = 0;
                    while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                        let d = self.bump().unwrap();
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add((d - b'0') as i64))
                            .ok_or_else(|| ParseError {
                                line,
                                col,
                                message: "integer literal too large".into(),
                                expected: vec![],
                            })?;
                    }
                    Tok::Int(n)
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut s = String::new();
                    while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_')
                    {
                        s.push(self.bump().unwrap() as char);
                    }
                    Tok::Ident(s)
                }
                other => {
                    return Err(ParseError {
                        line,
                        col,
                        message: format!("unexpected character '{}'", other as char),
                        expected: vec!["expression"],
                    })
                }
            };
            out.push(Spanned { tok, line, col });
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, message: String, expected: Vec<&'static str>) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            col: t.col,
            message,
            expected,
        }
    }

    fn expect(&mut self, tok: Tok, what: &'static str) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.err(
                format!("found {}", self.peek().tok.describe()),
                vec![what],
            ))
        }
    }

    /// Precedence climbing over binary operators.
    fn expr(&mut self, min_prec: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                Tok::Caret => BinOp::Pow,
                _ => break,
            };
            if op.prec() < min_prec {
                break;
            }
            self.bump();
            let next_min = if op == BinOp::Pow {
                op.prec() // right-associative
            } else {
                op.prec() + 1
            };
            let rhs = self.expr(next_min)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            // unary minus binds below ^: -x^2 parses as -(x^2)
            let inner = self.unary_tail()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.unary_tail()
    }

    /// A primary together with any tighter-than-unary-minus `^` chain.
    fn unary_tail(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let exp = self.expr(BinOp::Pow.prec())?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr(1)?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let at = self.peek().clone();
                self.bump();
                if self.peek().tok == Tok::LParen {
                    let func = Func::from_name(&name).ok_or(ParseError {
                        line: at.line,
                        col: at.col,
                        message: format!("unknown function '{}'", name),
                        expected: vec!["a known function name"],
                    })?;
                    self.bump(); // (
                    let mut args = Vec::new();
                    if self.peek().tok != Tok::RParen {
                        loop {
                            args.push(self.expr(1)?);
                            match self.peek().tok {
                                Tok::Comma => {
                                    self.bump();
                                }
                                Tok::RParen => break,
                                _ => {
                                    return Err(self.err(
                                        format!("found {}", self.peek().tok.describe()),
                                        vec!["','", "')'"],
                                    ))
                                }
                            }
                        }
                    }
                    self.expect(Tok::RParen, "')'")?;
                    if args.len() != func.arity() {
                        return Err(ParseError {
                            line: at.line,
                            col: at.col,
                            message: format!(
                                "arity mismatch: {} takes {} argument(s), got {}",
                                func.text(),
                                func.arity(),
                                args.len()
                            ),
                            expected: vec![],
                        });
                    }
                    Ok(Expr::Call(func, args))
                } else {
                    match name.as_str() {
                        "i" => Ok(Expr::I),
                        "p" => Ok(Expr::Var(Name::P)),
                        "q" => Ok(Expr::Var(Name::Q)),
                        other => match VarId::from_name(other) {
                            Some(v) => Ok(Expr::Var(Name::Reg(v))),
                            None => Err(ParseError {
                                line: at.line,
                                col: at.col,
                                message: format!("unknown identifier '{}'", other),
                                expected: vec!["a registry variable", "p", "q", "i"],
                            }),
                        },
                    }
                }
            }
            other => Err(self.err(
                format!("found {}", other.describe()),
                vec!["integer", "identifier", "'('", "'-'"],
            )),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = Lexer::new(src).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr(1)?;
    if p.peek().tok != Tok::Eof {
        return Err(p.err(
            format!("trailing input: found {}", p.peek().tok.describe()),
            vec!["end of input"],
        ));
    }
    Ok(e)
}
