//! S-expression text format:
//!
//! ```text
//! 42                              literal
//! kappa                           variable
//! (add e ..) (mul e ..) (max e ..)
//! (pow base exp) (binom n k)
//! (named NAME (args e ..) body)
//! (deferred NAME e ..)
//! (blackbox NAME "citation" e ..)
//! ```

use num_bigint::BigUint;

use super::ConstExpr;
use crate::error::parse_err;
use crate::{Error, Result};

pub fn to_text(e: &ConstExpr) -> String {
    let mut s = String::new();
    write(e, &mut s);
    s
}

fn write_list(head: &str, items: &[ConstExpr], out: &mut String) {
    out.push('(');
    out.push_str(head);
    for x in items {
        out.push(' ');
        write(x, out);
    }
    out.push(')');
}

fn write(e: &ConstExpr, out: &mut String) {
    match e {
        ConstExpr::Lit(v) => out.push_str(&v.to_string()),
        ConstExpr::Var(v) => out.push_str(v),
        ConstExpr::Add(v) => write_list("add", v, out),
        ConstExpr::Mul(v) => write_list("mul", v, out),
        ConstExpr::Max(v) => write_list("max", v, out),
        ConstExpr::Pow(a, b) => write_list("pow", &[(**a).clone(), (**b).clone()], out),
        ConstExpr::Binom(a, b) => write_list("binom", &[(**a).clone(), (**b).clone()], out),
        ConstExpr::Named { name, args, body } => {
            out.push_str("(named ");
            out.push_str(name);
            out.push(' ');
            write_list("args", args, out);
            out.push(' ');
            write(body, out);
            out.push(')');
        }
        ConstExpr::Deferred { name, args } => write_list(&format!("deferred {name}"), args, out),
        ConstExpr::BlackBox { name, citation, args } => {
            write_list(&format!("blackbox {name} \"{citation}\""), args, out)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
    Str(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' => {
                chars.next();
                out.push(Tok::Open);
            }
            ')' => {
                chars.next();
                out.push(Tok::Close);
            }
            '"' => {
                chars.next();
                let mut lit = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some(ch) => lit.push(ch),
                        None => return Err(parse_err(1, "unterminated string")),
                    }
                }
                out.push(Tok::Str(lit));
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let mut atom = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_whitespace() || ch == '(' || ch == ')' || ch == '"' {
                        break;
                    }
                    atom.push(ch);
                    chars.next();
                }
                out.push(Tok::Atom(atom));
            }
        }
    }
    Ok(out)
}

pub fn parse_expr(s: &str) -> Result<ConstExpr> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(1, "trailing input after expression"));
    }
    Ok(e)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Result<Tok> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| parse_err(1, "unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn atom(&mut self) -> Result<String> {
        match self.next()? {
            Tok::Atom(a) => Ok(a),
            t => Err(parse_err(1, format!("expected a name, got {t:?}"))),
        }
    }

    fn close(&mut self) -> Result<()> {
        match self.next()? {
            Tok::Close => Ok(()),
            t => Err(parse_err(1, format!("expected ')', got {t:?}"))),
        }
    }

    fn rest(&mut self) -> Result<Vec<ConstExpr>> {
        let mut items = Vec::new();
        while !matches!(self.peek(), Some(Tok::Close) | None) {
            items.push(self.expr()?);
        }
        self.close()?;
        Ok(items)
    }

    fn pair(&mut self, head: &str) -> Result<(Box<ConstExpr>, Box<ConstExpr>)> {
        let mut items = self.rest()?;
        if items.len() != 2 {
            return Err(parse_err(1, format!("{head} takes two arguments")));
        }
        let b = items.pop().unwrap();
        let a = items.pop().unwrap();
        Ok((Box::new(a), Box::new(b)))
    }

    fn expr(&mut self) -> Result<ConstExpr> {
        match self.next()? {
            Tok::Atom(a) => atom_expr(&a),
            Tok::Str(_) => Err(parse_err(1, "unexpected string")),
            Tok::Close => Err(parse_err(1, "unexpected ')'")),
            Tok::Open => {
                let head = self.atom()?;
                match head.as_str() {
                    "add" => Ok(ConstExpr::Add(self.rest()?)),
                    "mul" => Ok(ConstExpr::Mul(self.rest()?)),
                    "max" => Ok(ConstExpr::Max(self.rest()?)),
                    "pow" => self.pair("pow").map(|(a, b)| ConstExpr::Pow(a, b)),
                    "binom" => self.pair("binom").map(|(a, b)| ConstExpr::Binom(a, b)),
                    "named" => {
                        let name = self.atom()?;
                        if self.next()? != Tok::Open || self.atom()? != "args" {
                            return Err(parse_err(1, "named needs an (args ..) list"));
                        }
                        let args = self.rest()?;
                        let body = self.expr()?;
                        self.close()?;
                        Ok(ConstExpr::Named { name, args, body: Box::new(body) })
                    }
                    "deferred" => {
                        let name = self.atom()?;
                        Ok(ConstExpr::Deferred { name, args: self.rest()? })
                    }
                    "blackbox" => {
                        let name = self.atom()?;
                        let citation = match self.next()? {
                            Tok::Str(s) => s,
                            _ => return Err(parse_err(1, "blackbox needs a quoted citation")),
                        };
                        Ok(ConstExpr::BlackBox { name, citation, args: self.rest()? })
                    }
                    other => Err(parse_err(1, format!("unknown operator {other}"))),
                }
            }
        }
    }
}

fn atom_expr(a: &str) -> Result<ConstExpr> {
    if a.chars().all(|c| c.is_ascii_digit()) {
        return a
            .parse::<BigUint>()
            .map(ConstExpr::Lit)
            .map_err(|e| parse_err(1, e.to_string()));
    }
    let ok = a.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok {
        return Err(Error::Parse { line: 1, msg: format!("bad token {a:?}") });
    }
    Ok(ConstExpr::Var(a.to_string()))
}
