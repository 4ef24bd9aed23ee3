//! A small expression language over a universal logic.
//!
//! ```text
//! expr    = term { "|" term } ;
//! term    = unary { "&" unary } ;
//! unary   = ("star" | "closure") "(" expr ")"
//!         | ("join" | "meet" | "coproduct") "{" [ expr { "," expr } ] "}"
//!         | "top" | "bottom"
//!         | "(" label { "," label } ")"          (* tuple *)
//!         | "(" expr ")"
//!         | label ;                              (* single factor only *)
//! label   = 1*( letter | digit | "'" | "_" | "." ) ;
//! ```
//!
//! `|` and `join` are unions of down-sets, `&` and `meet` intersections;
//! `coproduct` is the closure of the union and requires closed arguments.

use std::fmt;

use crate::downset::DownSet;
use crate::error::{Error, Result};
use crate::universal::UniversalLogic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Tuple(Vec<String>),
    Label(String),
    Top,
    Bottom,
    Star(Box<Expr>),
    Closure(Box<Expr>),
    Join(Vec<Expr>),
    Meet(Vec<Expr>),
    Coproduct(Vec<Expr>),
    Or(Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Pipe,
    Amp,
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_label_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '\'' | '_' | '.')
}

fn lex(src: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let at = (line, col);
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '|' => Some(Tok::Pipe),
            '&' => Some(Tok::Amp),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            col += 1;
            out.push((t, at.0, at.1));
        } else if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if is_label_char(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !is_label_char(c) {
                    break;
                }
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), at.0, at.1));
        } else {
            return Err(Error::Syntax {
                line,
                col,
                expected: format!("a label or operator, found `{c}`"),
            });
        }
    }
    out.push((Tok::Eof, line, col));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let (tok, line, col) = &self.toks[self.pos];
        Error::Syntax {
            line: *line,
            col: *col,
            expected: format!("{expected}, found {}", tok.describe()),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&t.describe()))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            lhs = Expr::Or(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn label(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error("a label")),
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() == Tok::Comma {
                    let Expr::Label(first) = inner else {
                        return Err(self.error("`)`"));
                    };
                    let mut parts = vec![first];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        parts.push(self.label()?);
                    }
                    self.expect(Tok::RParen)?;
                    return Ok(Expr::Tuple(parts));
                }
                self.expect(Tok::RParen)?;
                Ok(match inner {
                    Expr::Label(l) => Expr::Tuple(vec![l]),
                    e => e,
                })
            }
            Tok::Ident(word) => {
                self.bump();
                let next = self.peek().clone();
                match (word.as_str(), next) {
                    ("star" | "closure", Tok::LParen) => {
                        self.bump();
                        let e = Box::new(self.expr()?);
                        self.expect(Tok::RParen)?;
                        Ok(if word == "star" { Expr::Star(e) } else { Expr::Closure(e) })
                    }
                    ("join" | "meet" | "coproduct", Tok::LBrace) => {
                        self.bump();
                        let mut items = Vec::new();
                        if *self.peek() != Tok::RBrace {
                            items.push(self.expr()?);
                            while *self.peek() == Tok::Comma {
                                self.bump();
                                items.push(self.expr()?);
                            }
                        }
                        self.expect(Tok::RBrace)?;
                        Ok(match word.as_str() {
                            "join" => Expr::Join(items),
                            "meet" => Expr::Meet(items),
                            _ => Expr::Coproduct(items),
                        })
                    }
                    ("top", _) => Ok(Expr::Top),
                    ("bottom", _) => Ok(Expr::Bottom),
                    _ => Ok(Expr::Label(word)),
                }
            }
            _ => Err(self.error("an expression")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, items: &[Expr]) -> fmt::Result {
    write!(f, "{name}{{")?;
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Tuple(parts) => write!(f, "({})", parts.join(",")),
            Expr::Label(l) => write!(f, "{l}"),
            Expr::Top => write!(f, "top"),
            Expr::Bottom => write!(f, "bottom"),
            Expr::Star(e) => write!(f, "star({e})"),
            Expr::Closure(e) => write!(f, "closure({e})"),
            Expr::Join(v) => write_list(f, "join", v),
            Expr::Meet(v) => write_list(f, "meet", v),
            Expr::Coproduct(v) => write_list(f, "coproduct", v),
            Expr::Or(a, b) => write!(f, "({a} | {b})"),
            Expr::And(a, b) => write!(f, "({a} & {b})"),
        }
    }
}

impl Expr {
    pub fn eval(&self, u: &UniversalLogic) -> Result<DownSet> {
        let p = u.poset();
        let many = |v: &[Expr]| v.iter().map(|e| e.eval(u)).collect::<Result<Vec<_>>>();
        Ok(match self {
            Expr::Tuple(parts) => p.principal(tuple_index(u, parts)?),
            Expr::Label(l) => {
                if p.arity() != 1 {
                    return Err(Error::Arity {
                        expected: p.arity(),
                        found: 1,
                    });
                }
                p.principal(tuple_index(u, std::slice::from_ref(l))?)
            }
            Expr::Top => p.full_set(),
            Expr::Bottom => p.bottom_set(),
            Expr::Star(e) => p.star(&e.eval(u)?),
            Expr::Closure(e) => p.closure(&e.eval(u)?),
            Expr::Join(v) => p.djoin(&many(v)?),
            Expr::Meet(v) => p.dmeet(&many(v)?),
            Expr::Coproduct(v) => u.coproduct(&many(v)?)?,
            Expr::Or(a, b) => p.djoin([&a.eval(u)?, &b.eval(u)?]),
            Expr::And(a, b) => p.dmeet([&a.eval(u)?, &b.eval(u)?]),
        })
    }
}

fn tuple_index(u: &UniversalLogic, parts: &[String]) -> Result<usize> {
    let p = u.poset();
    if parts.len() != p.arity() {
        return Err(Error::Arity {
            expected: p.arity(),
            found: parts.len(),
        });
    }
    let comps = parts
        .iter()
        .zip(p.factors())
        .map(|(l, f)| f.index_of(l))
        .collect::<Result<Vec<_>>>()?;
    p.tuple_index(&comps)
}

/// Parses and evaluates `src`, returning the labels of the maximal antichain.
pub fn eval_str(src: &str, u: &UniversalLogic) -> Result<Vec<String>> {
    let d = parse(src)?.eval(u)?;
    Ok(u.poset().antichain_labels(&d))
}
