//! The system-file language and expression parser.
//!
//! Line-oriented: `#` starts a comment, `main_vars` / `params` / `order`
//! headers declare the ring, and each `poly` line holds one expression
//! over integers, rationals `a/b` and variables with `+ - * ^`,
//! parentheses, and `*` optional between factors.

use num_traits::Zero;

use crate::context::{Block, Ctx, VarContext};
use crate::domain::{Int, Rat, QQ};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::{BaseOrder, TermOrder};
use crate::parametric::Specialization;
use crate::poly::Poly;

/// A parsed system file.
#[derive(Debug, Clone)]
pub struct SystemFile {
    pub ctx: Ctx,
    pub order: TermOrder,
    pub order_name: String,
    pub polys: Vec<Poly<Rat>>,
    /// Indices of `poly` lines that parsed to the zero polynomial.
    pub degenerate: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col_base: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line,
            col_base: 1,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col_base + self.pos,
            msg: msg.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let col = self.col_base + self.pos;
            match c {
                b' ' | b'\t' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((Tok::Plus, col));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((Tok::Minus, col));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((Tok::Star, col));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((Tok::Caret, col));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((Tok::Slash, col));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((Tok::LParen, col));
                    self.pos += 1;
                }
                b')' => {
                    out.push((Tok::RParen, col));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let n: Int = text.parse().map_err(|_| self.err("bad integer"))?;
                    out.push((Tok::Int(n), col));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), col));
                }
                other => {
                    return Err(self.err(format!("unexpected character `{}`", other as char)));
                }
            }
        }
        Ok(out)
    }
}

struct ExprParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
    ctx: &'a Ctx,
}

impl<'a> ExprParser<'a> {
    fn err_at(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col,
            msg: msg.into(),
        }
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let col = self
            .toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or(self.end_col);
        self.err_at(col, msg)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Poly<Rat>> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg(&QQ)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&QQ, &self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&QQ, &self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// term := factor ('*'? factor)*
    fn term(&mut self) -> Result<Poly<Rat>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&QQ, &self.factor()?);
                }
                // juxtaposition: 6x, 2(x+1), x y
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&QQ, &self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// factor := base ('^' nat)?
    fn factor(&mut self) -> Result<Poly<Rat>> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = match self.bump() {
                Some(Tok::Int(n)) => {
                    u32::try_from(n.clone()).map_err(|_| self.err_here("exponent out of range"))?
                }
                _ => return Err(self.err_here("expected an exponent")),
            };
            let mut acc = Poly::constant(&QQ, self.ctx, Block::Full, Rat::from_integer(1.into()));
            for _ in 0..e {
                acc = acc.mul(&QQ, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    /// base := rational | integer | variable | '(' expr ')'
    fn base(&mut self) -> Result<Poly<Rat>> {
        let col = self
            .toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or(self.end_col);
        match self.bump().cloned() {
            Some(Tok::Int(n)) => {
                // a '/' directly after an integer makes a rational literal
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump().cloned() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(self.err_at(col, "zero denominator"));
                            }
                            Ok(Poly::constant(&QQ, self.ctx, Block::Full, Rat::new(n, d)))
                        }
                        _ => Err(self.err_here("expected a denominator")),
                    }
                } else {
                    Ok(Poly::constant(
                        &QQ,
                        self.ctx,
                        Block::Full,
                        Rat::from_integer(n),
                    ))
                }
            }
            Some(Tok::Ident(name)) => match self.ctx.lookup(Block::Full, &name) {
                Some(idx) => Ok(Poly::term(
                    &QQ,
                    self.ctx,
                    Block::Full,
                    Monomial::var(idx),
                    Rat::from_integer(1.into()),
                )),
                None => Err(self.err_at(col, format!("unknown variable `{name}`"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err_here("expected `)`")),
                }
            }
            _ => Err(self.err_at(col, "expected a number, variable or `(`")),
        }
    }
}

/// Parses one polynomial expression against a context.
pub fn parse_poly(text: &str, ctx: &Ctx, line: usize, col_offset: usize) -> Result<Poly<Rat>> {
    let mut lexer = Lexer::new(text, line);
    lexer.col_base = col_offset;
    let toks = lexer.tokens()?;
    let end_col = col_offset + text.len();
    let mut parser = ExprParser {
        toks: &toks,
        pos: 0,
        line,
        end_col,
        ctx,
    };
    let poly = parser.expr()?;
    if parser.pos != toks.len() {
        return Err(parser.err_here("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses a whole system file.
pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut main_vars: Option<Vec<String>> = None;
    let mut params: Vec<String> = Vec::new();
    let mut order_name = "deglex".to_string();
    let mut poly_lines: Vec<(usize, usize, String)> = Vec::new();

    for (lineno_zero, raw) in text.lines().enumerate() {
        let lineno = lineno_zero + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (head, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (trimmed, ""),
        };
        let err = |msg: &str| Error::Parse {
            line: lineno,
            col: 1,
            msg: msg.into(),
        };
        match head {
            "main_vars" => {
                if main_vars.is_some() {
                    return Err(err("duplicate main_vars declaration"));
                }
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(err("main_vars needs at least one name"));
                }
                main_vars = Some(names);
            }
            "params" => {
                if !params.is_empty() {
                    return Err(err("duplicate params declaration"));
                }
                params = rest.split_whitespace().map(String::from).collect();
            }
            "order" => {
                let name = rest.trim();
                if BaseOrder::from_name(name).is_none() {
                    return Err(err("order must be lex, deglex or degrevlex"));
                }
                order_name = name.to_string();
            }
            "poly" => {
                let col = line.len() - line.trim_start().len() + "poly".len() + 2;
                poly_lines.push((lineno, col, rest.to_string()));
            }
            other => {
                return Err(err(&format!("unknown directive `{other}`")));
            }
        }
    }

    let main_vars = main_vars.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "missing main_vars declaration".into(),
    })?;
    let ctx = VarContext::new(main_vars, params).map_err(|e| Error::Parse {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })?;
    if poly_lines.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "no poly lines".into(),
        });
    }

    let mut polys = Vec::new();
    let mut degenerate = Vec::new();
    for (i, (lineno, col, text)) in poly_lines.iter().enumerate() {
        let p = parse_poly(text, &ctx, *lineno, *col)?;
        if p.is_zero() {
            degenerate.push(i);
        }
        polys.push(p);
    }
    let base = BaseOrder::from_name(&order_name).expect("validated");
    Ok(SystemFile {
        ctx,
        order: TermOrder::Base(base),
        order_name,
        polys,
        degenerate,
    })
}

/// Parses `name=rational` assignments, comma-separated, into a
/// specialization ordered by parameter declaration.
pub fn parse_specialization(text: &str, ctx: &Ctx) -> Result<Specialization> {
    let m = ctx.n_params();
    let mut values: Vec<Option<Rat>> = vec![None; m];
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (name, value) = piece.split_once('=').ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected name=value, got `{piece}`"),
        })?;
        let idx = ctx
            .lookup(Block::Param, name.trim())
            .ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("unknown parameter `{}`", name.trim()),
            })?;
        if values[idx].is_some() {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: format!("parameter `{}` assigned twice", name.trim()),
            });
        }
        values[idx] = Some(parse_rational(value.trim())?);
    }
    let point: Vec<Rat> = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("parameter `{}` not assigned", ctx.name(Block::Param, i)),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Specialization::new(point))
}

/// Parses a rational literal `a`, `-a`, or `a/b`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let bad = || Error::Parse {
        line: 1,
        col: 1,
        msg: format!("bad rational `{text}`"),
    };
    let (num_s, den_s) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: Int = num_s.parse().map_err(|_| bad())?;
    let den: Int = den_s.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}
