//! Parser for polynomial expressions such as `x^5+y^5+x^2*y^2` or
//! `(1/2 + 1/3*x)*x^2`.
//!
//! Grammar (explicit `*` only):
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | '+' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer | symbol | '(' sum ')'
//! ```
//!
//! Division is only allowed by expressions free of ring variables.

use std::fmt;

use localstd_core::{BigInt, MonomialOrder, ParamCoeff, ParamPoly, QPoly, Scalar, VarCtx};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    Symbol(String),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

/// Position in the source, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("{pos}: unexpected character `{ch}`")]
    BadChar { ch: char, pos: Pos },
    #[error("{pos}: expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String, pos: Pos },
    #[error("{pos}: exponent must be a non-negative integer literal")]
    BadExponent { pos: Pos },
    #[error("{pos}: undeclared symbol `{name}`")]
    Undeclared { name: String, pos: Pos },
    #[error("{pos}: divisor must not involve the variables")]
    VariableDivisor { pos: Pos },
    #[error("{pos}: division by zero")]
    DivisionByZero { pos: Pos },
    #[error("the expression involves parameters where none are allowed")]
    HasParameters,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Op(char),
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{}`", n),
        Tok::Sym(s) => format!("`{}`", s),
        Tok::Op(c) => format!("`{}`", c),
        Tok::End => "end of input".to_string(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            col += i - start;
            out.push((Tok::Int(text.parse().expect("digits")), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Sym(chars[start..i].iter().collect()), pos));
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), pos));
            col += 1;
            i += 1;
            continue;
        }
        return Err(ParseError::BadChar { ch: c, pos });
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    /// Source position of every Div node, in creation order.
    div_pos: Vec<Pos>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn sum(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Op('/') => {
                    let pos = self.pos();
                    self.bump();
                    self.div_pos.push(pos);
                    lhs = ExprAst::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(ExprAst::Neg(Box::new(self.unary()?)))
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if let Tok::Op('^') = self.peek() {
            self.bump();
            let pos = self.pos();
            return match self.bump() {
                Tok::Int(n) => {
                    let e: u32 = n.try_into().map_err(|_| ParseError::BadExponent { pos })?;
                    Ok(ExprAst::Pow(Box::new(base), e))
                }
                _ => Err(ParseError::BadExponent { pos }),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(ExprAst::Int(n)),
            Tok::Sym(s) => Ok(ExprAst::Symbol(s)),
            Tok::Op('(') => {
                let inner = self.sum()?;
                let close = self.pos();
                match self.bump() {
                    Tok::Op(')') => Ok(inner),
                    t => Err(ParseError::Unexpected { expected: "`)`", found: describe(&t), pos: close }),
                }
            }
            t => Err(ParseError::Unexpected { expected: "a number, a symbol or `(`", found: describe(&t), pos }),
        }
    }
}

/// Parse source text into an expression tree.
pub fn parse_expr(src: &str) -> Result<ExprAst, ParseError> {
    parse_with_positions(src).map(|(ast, _, _)| ast)
}

/// The tree, the position of each `/`, and every symbol with its position.
type Located = (ExprAst, Vec<Pos>, Vec<(String, Pos)>);

fn parse_with_positions(src: &str) -> Result<Located, ParseError> {
    let toks = lex(src)?;
    if toks.len() == 1 {
        return Err(ParseError::Empty);
    }
    let symbols = toks
        .iter()
        .filter_map(|(t, p)| match t {
            Tok::Sym(s) => Some((s.clone(), *p)),
            _ => None,
        })
        .collect();
    let mut p = Parser { toks, at: 0, div_pos: Vec::new() };
    let ast = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::Unexpected {
            expected: "an operator or end of input",
            found: describe(p.peek()),
            pos: p.pos(),
        });
    }
    Ok((ast, p.div_pos, symbols))
}

struct Lowering<'a> {
    ctx: &'a VarCtx,
    order: &'a MonomialOrder,
    div_pos: Vec<Pos>,
    next_div: usize,
}

impl Lowering<'_> {
    fn lower(&mut self, e: &ExprAst) -> Result<ParamPoly, ParseError> {
        let n = self.ctx.arity();
        let o = self.order.clone();
        Ok(match e {
            ExprAst::Int(k) => ParamPoly::constant(n, o, ParamCoeff::from_rational(k.clone().into())),
            ExprAst::Symbol(s) => match (self.ctx.var_index(s), self.ctx.param_index(s)) {
                (Some(i), _) => ParamPoly::var(n, o, i),
                (None, Some(j)) => ParamPoly::constant(n, o, ParamCoeff::param(j)),
                (None, None) => unreachable!("checked before lowering"),
            },
            ExprAst::Neg(a) => self.lower(a)?.neg_poly(),
            ExprAst::Add(a, b) => self.lower(a)?.add_poly(&self.lower(b)?),
            ExprAst::Sub(a, b) => self.lower(a)?.sub_poly(&self.lower(b)?),
            ExprAst::Mul(a, b) => self.lower(a)?.mul_poly(&self.lower(b)?),
            ExprAst::Pow(a, k) => self.lower(a)?.pow(*k),
            ExprAst::Div(a, b) => {
                // Lowering visits divisions in the order the parser met them.
                let num = self.lower(a)?;
                let pos = self.div_pos[self.next_div];
                self.next_div += 1;
                let den = self.lower(b)?;
                if den.is_zero() {
                    return Err(ParseError::DivisionByZero { pos });
                }
                if den.degree() > 0 {
                    return Err(ParseError::VariableDivisor { pos });
                }
                num.div_scalar(&den.constant_term())
            }
        })
    }
}

/// Parse into a polynomial whose coefficients may involve the declared
/// parameters.
pub fn parse_poly(src: &str, ctx: &VarCtx, order: &MonomialOrder) -> Result<ParamPoly, ParseError> {
    let (ast, div_pos, symbols) = parse_with_positions(src)?;
    for (name, pos) in symbols {
        if ctx.var_index(&name).is_none() && ctx.param_index(&name).is_none() {
            return Err(ParseError::Undeclared { name, pos });
        }
    }
    let mut l = Lowering { ctx, order, div_pos, next_div: 0 };
    l.lower(&ast)
}

/// Parse a polynomial with plain rational coefficients.
pub fn parse_rational_poly(src: &str, ctx: &VarCtx, order: &MonomialOrder) -> Result<QPoly, ParseError> {
    parse_poly(src, ctx, order)?.to_rational().ok_or(ParseError::HasParameters)
}
