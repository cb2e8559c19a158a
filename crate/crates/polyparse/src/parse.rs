//! Recursive-descent parser for the system text format.
//!
//! ```text
//! system := line*            (exactly one `dx/dt = expr` and one `dy/dt = expr`)
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Division is accepted only by a nonzero constant, so `3/2*x` is a rational
//! coefficient. Lines starting with `#` and text after `#` are comments.

use crate::bipoly::BiPoly;
use crate::error::ParseError;
use crate::rat::Rat;
use crate::system::PolySystem;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Op(char),
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = col0 + k;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            if k < chars.len() && matches!(chars[k], '.' | 'e' | 'E') {
                while k < chars.len()
                    && (chars[k].is_ascii_alphanumeric() || matches!(chars[k], '.' | '+' | '-'))
                {
                    // Stop a trailing sign that is a binary operator, e.g. `1.5-x`.
                    if matches!(chars[k], '+' | '-') && !matches!(chars[k - 1], 'e' | 'E') {
                        break;
                    }
                    k += 1;
                }
                return Err(ParseError::NonRationalLiteral {
                    line,
                    col: col0 + start,
                    text: chars[start..k].iter().collect(),
                });
            }
            let text: String = chars[start..k].iter().collect();
            toks.push((Tok::Int(text.parse().expect("digits")), col));
        } else if c == '.' && chars.get(k + 1).is_some_and(|d| d.is_ascii_digit()) {
            let start = k;
            k += 1;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            return Err(ParseError::NonRationalLiteral {
                line,
                col,
                text: chars[start..k].iter().collect(),
            });
        } else if c == 'x' || c == 'y' {
            if chars.get(k + 1).is_some_and(|d| d.is_alphanumeric() || *d == '_') {
                let start = k;
                while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                let name: String = chars[start..k].iter().collect();
                return Err(syntax(line, col, format!("unknown identifier `{name}`")));
            }
            toks.push((Tok::Var(c), col));
            k += 1;
        } else if matches!(c, '+' | '-' | '*' | '/' | '^') {
            toks.push((Tok::Op(c), col));
            k += 1;
        } else if c == '(' {
            toks.push((Tok::LParen, col));
            k += 1;
        } else if c == ')' {
            toks.push((Tok::RParen, col));
            k += 1;
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let name: String = chars[start..k].iter().collect();
            return Err(syntax(line, col, format!("unknown identifier `{name}`")));
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    toks.push((Tok::End, col0 + chars.len()));
    Ok(Lexer { toks })
}

fn syntax(line: usize, col: usize, msg: String) -> ParseError {
    ParseError::Syntax { line, col, msg }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        syntax(self.line, self.col(), msg.into())
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let col = self.col();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(syntax(self.line, col, "division by a non-constant".into()));
                    }
                    let c = d.coeff(0, 0);
                    if c.is_zero() {
                        return Err(syntax(self.line, col, "division by zero".into()));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == &Tok::Op('^') {
            self.bump();
            match self.bump() {
                Tok::Int(e) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.err("exponent too large"))?;
                    if e > 1000 {
                        return Err(self.err("exponent too large"));
                    }
                    return Ok(base.pow(e));
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.err("expected a nonnegative integer exponent"));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        match self.bump() {
            Tok::Int(n) => Ok(BiPoly::constant(Rat::from_integer(n))),
            Tok::Var('x') => Ok(BiPoly::x()),
            Tok::Var(_) => Ok(BiPoly::y()),
            Tok::LParen => {
                let e = self.expr()?;
                match self.bump() {
                    Tok::RParen => Ok(e),
                    _ => {
                        self.pos -= 1;
                        Err(self.err("expected `)`"))
                    }
                }
            }
            Tok::End => Err(self.err("unexpected end of expression")),
            t => {
                self.pos -= 1;
                Err(self.err(format!("unexpected token {}", describe(&t))))
            }
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Var(c) => format!("`{c}`"),
        Tok::Op(c) => format!("`{c}`"),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of line".into(),
    }
}

fn parse_expr_at(src: &str, line: usize, col0: usize) -> Result<BiPoly, ParseError> {
    let lexer = lex(src, line, col0)?;
    let mut p = Parser {
        toks: lexer.toks,
        pos: 0,
        line,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.err(format!("unexpected token {}", describe(p.peek()))));
    }
    Ok(e)
}

/// Parses one polynomial expression.
pub fn parse_poly(src: &str) -> Result<BiPoly, ParseError> {
    parse_expr_at(src, 1, 1)
}

/// Parses a two-line system `dx/dt = ...`, `dy/dt = ...`.
pub fn parse_system(text: &str) -> Result<PolySystem, ParseError> {
    let mut p: Option<BiPoly> = None;
    let mut q: Option<BiPoly> = None;
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            let col = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            return Err(syntax(line, col, "expected `dx/dt = <expr>` or `dy/dt = <expr>`".into()));
        };
        let lhs: String = content[..eq].chars().filter(|c| !c.is_whitespace()).collect();
        let lhs_col = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let slot = match lhs.as_str() {
            "dx/dt" => &mut p,
            "dy/dt" => &mut q,
            _ => {
                return Err(syntax(
                    line,
                    lhs_col,
                    format!("expected `dx/dt` or `dy/dt`, found `{lhs}`"),
                ))
            }
        };
        if slot.is_some() {
            return Err(syntax(line, lhs_col, format!("duplicate assignment to `{lhs}`")));
        }
        let rhs = &content[eq + 1..];
        let col0 = content[..eq + 1].chars().count() + 1;
        *slot = Some(parse_expr_at(rhs, line, col0)?);
    }
    match (p, q) {
        (Some(p), Some(q)) => PolySystem::new(p, q),
        (None, _) => Err(syntax(last_line, 1, "missing `dx/dt = <expr>` line".into())),
        (_, None) => Err(syntax(last_line, 1, "missing `dy/dt = <expr>` line".into())),
    }
}
