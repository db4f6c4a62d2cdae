//! Recursive-descent parser for the polynomial text grammar.

use crate::error::{Error, Result};
use crate::polyring::{elementary_symmetric, power_sum, Polynomial};
use crate::scalars::{RatFun, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

pub(crate) fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push(Token { tok: t, line: l0, col: c0 });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let val: Rational = text.parse().map_err(|_| perr(l0, c0, format!("invalid number '{text}'")))?;
            col += i - start;
            out.push(Token { tok: Tok::Num(val), line: l0, col: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
            continue;
        }
        return Err(perr(l0, c0, format!("unexpected character '{c}'")));
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

pub(crate) struct Cursor {
    toks: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Cursor { toks: tokenize(src)?, pos: 0 })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, msg: &str) -> Error {
        let t = self.peek();
        let what = match &t.tok {
            Tok::Eof => "unexpected end of input".to_string(),
            other => format!("unexpected {other:?}"),
        };
        perr(t.line, t.col, format!("{what}: {msg}"))
    }

    fn expect(&mut self, want: Tok, msg: &str) -> Result<()> {
        if self.peek().tok == want {
            self.next();
            Ok(())
        } else {
            Err(self.err_here(msg))
        }
    }

    fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    pub(crate) fn ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.col)),
            _ => Err(perr(t.line, t.col, "expected an identifier")),
        }
    }

    pub(crate) fn uint(&mut self) -> Result<u64> {
        let t = self.next();
        match &t.tok {
            Tok::Num(r) if r.is_integer() && !r.is_negative() => {
                r.to_i64().map(|v| v as u64).ok_or_else(|| perr(t.line, t.col, "integer too large"))
            }
            _ => Err(perr(t.line, t.col, "expected a nonnegative integer")),
        }
    }

    pub(crate) fn lparen(&mut self) -> Result<()> {
        self.expect(Tok::LParen, "expected '('")
    }

    pub(crate) fn rparen(&mut self) -> Result<()> {
        self.expect(Tok::RParen, "expected ')'")
    }

    /// Consumes a comma if present.
    pub(crate) fn comma(&mut self) -> bool {
        if self.peek().tok == Tok::Comma {
            self.next();
            true
        } else {
            false
        }
    }

    pub(crate) fn minus(&mut self) -> bool {
        if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        }
    }

    pub(crate) fn star(&mut self) -> bool {
        if self.peek().tok == Tok::Star {
            self.next();
            true
        } else {
            false
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.err_here("trailing input"))
        }
    }

    pub(crate) fn position(&self) -> (usize, usize) {
        (self.peek().line, self.peek().col)
    }
}

struct PolyParser<'a> {
    cur: Cursor,
    names: &'a [String],
    allow_t: bool,
}

type RP = Polynomial<RatFun>;

impl PolyParser<'_> {
    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<RP> {
        let mut acc = match self.cur.peek().tok {
            Tok::Minus => {
                self.cur.next();
                self.term()?.neg()
            }
            Tok::Plus => {
                self.cur.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.cur.peek().tok {
                Tok::Plus => {
                    self.cur.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.cur.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RP> {
        let mut acc = self.factor()?;
        loop {
            match self.cur.peek().tok {
                Tok::Star => {
                    self.cur.next();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Ident(_) | Tok::Num(_) | Tok::LParen => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RP> {
        let b = self.base()?;
        if self.cur.peek().tok == Tok::Caret {
            self.cur.next();
            let (l, c) = self.cur.position();
            let e = self.cur.uint().map_err(|_| perr(l, c, "exponent must be a nonnegative integer"))?;
            if e > 10_000 {
                return Err(perr(l, c, "exponent too large"));
            }
            return Ok(b.pow(e as u32));
        }
        Ok(b)
    }

    fn base(&mut self) -> Result<RP> {
        let t = self.cur.peek().clone();
        match t.tok {
            Tok::Num(r) => {
                self.cur.next();
                Ok(RP::constant(self.n(), RatFun::constant(r)))
            }
            Tok::LParen => {
                self.cur.next();
                let e = self.expr()?;
                self.cur.rparen()?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.cur.next();
                self.ident(&name, t.line, t.col)
            }
            Tok::Minus => {
                self.cur.next();
                Ok(self.factor()?.neg())
            }
            _ => Err(self.cur.err_here("expected a variable, number or '('")),
        }
    }

    fn ident(&mut self, name: &str, line: usize, col: usize) -> Result<RP> {
        if let Some(i) = self.names.iter().position(|v| v == name) {
            return Ok(RP::var(self.n(), i, &()));
        }
        if name == "t" {
            if !self.allow_t {
                return Err(perr(line, col, "the parameter t is not allowed here"));
            }
            return Ok(RP::constant(self.n(), RatFun::t()));
        }
        for (prefix, is_power) in [("p_", true), ("e_", false)] {
            if let Some(k) = name.strip_prefix(prefix) {
                let k: u32 = k.parse().map_err(|_| perr(line, col, format!("bad macro index in '{name}'")))?;
                let r = if is_power {
                    power_sum::<RatFun>(k, self.n(), &())
                } else {
                    elementary_symmetric::<RatFun>(k as usize, self.n(), &())
                };
                return r.map_err(|e| perr(line, col, e.to_string()));
            }
        }
        Err(perr(line, col, format!("unknown identifier '{name}'")))
    }
}

/// Parse with variables `x0 .. x{nvars-1}`.
pub fn parse_polynomial(src: &str, nvars: usize, allow_t: bool) -> Result<Polynomial<RatFun>> {
    parse_polynomial_with(src, &crate::polyring::default_names(nvars), allow_t)
}

/// Parse with explicit variable names.
pub fn parse_polynomial_with(src: &str, names: &[String], allow_t: bool) -> Result<Polynomial<RatFun>> {
    if names.is_empty() {
        return Err(Error::domain("at least one variable is required"));
    }
    let mut p = PolyParser { cur: Cursor::new(src)?, names, allow_t };
    if p.cur.at_eof() {
        return Err(p.cur.err_here("empty polynomial"));
    }
    let e = p.expr()?;
    p.cur.finish()?;
    Ok(e)
}

/// Parse a polynomial over Q.
pub fn parse_rational_polynomial(src: &str, nvars: usize) -> Result<Polynomial<Rational>> {
    parse_polynomial(src, nvars, false)?.to_rational()
}

/// Parse a comma- or whitespace-separated rational point.
pub fn parse_point(line: &str, lineno: usize) -> Result<Vec<Rational>> {
    let cleaned: String = line.chars().map(|c| if matches!(c, '(' | ')' | ':' | ',' | ';') { ' ' } else { c }).collect();
    cleaned
        .split_whitespace()
        .map(|s| s.parse::<Rational>().map_err(|_| perr(lineno, 1, format!("bad coordinate '{s}'"))))
        .collect()
}
