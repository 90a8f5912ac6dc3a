//! Integer arithmetic expressions used inside partition exponents, e.g. the
//! `2n` in `2^{2n}` or the `2k-1` in `{2k-1}^{2m}`.
//!
//! Supported: decimal literals, identifiers looked up in a binding table,
//! `+`, `-`, `*`, parentheses, unary minus and implicit multiplication
//! (`2n` is `2*n`, `2(k+1)` is `2*(k+1)`).

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Identifier bindings supplied by the caller.
pub type Bindings = HashMap<String, i64>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let text = &src[i..end];
                let value = text
                    .parse::<i64>()
                    .map_err(|_| Error::parse(text, "integer literal out of range"))?;
                out.push(Tok::Num(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(src[i..end].to_string()));
            }
            '+' | '-' | '*' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                });
            }
            other => return Err(Error::parse(other.to_string(), "unexpected character in expression")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    bindings: &'a Bindings,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn overflow(&self) -> Error {
        Error::parse(self.src, "arithmetic overflow")
    }

    fn expr(&mut self) -> Result<i64> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_add(rhs).ok_or_else(|| self.overflow())?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_sub(rhs).ok_or_else(|| self.overflow())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<i64> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                // implicit multiplication
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {}
                _ => return Ok(acc),
            }
            let rhs = self.factor()?;
            acc = acc.checked_mul(rhs).ok_or_else(|| self.overflow())?;
        }
    }

    fn factor(&mut self) -> Result<i64> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(v)) => Ok(v),
            Some(Tok::Ident(name)) => self
                .bindings
                .get(&name)
                .copied()
                .ok_or_else(|| Error::parse(name, "unbound identifier")),
            Some(Tok::Minus) => {
                let v = self.factor()?;
                v.checked_neg().ok_or_else(|| self.overflow())
            }
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(Error::parse(self.src, "missing `)`")),
                }
            }
            Some(other) => Err(Error::parse(
                format!("{other:?}"),
                "expected a number, identifier or `(`",
            )),
            None => Err(Error::parse(self.src, "unexpected end of expression")),
        }
    }
}

/// Evaluates `src` with the given bindings.
pub fn eval(src: &str, bindings: &Bindings) -> Result<i64> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::parse(src, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        bindings,
        src,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(src, "trailing input in expression"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(pairs: &[(&str, i64)]) -> Bindings {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn implicit_multiplication() {
        let env = b(&[("n", 3), ("k", 2), ("m", 5)]);
        assert_eq!(eval("2n", &env).unwrap(), 6);
        assert_eq!(eval("2k-1", &env).unwrap(), 3);
        assert_eq!(eval("4m(k+n-1)", &env).unwrap(), 80);
        assert_eq!(eval("n*n - -1", &env).unwrap(), 10);
        assert_eq!(eval("2 k m", &env).unwrap(), 20);
    }

    #[test]
    fn errors_name_the_token() {
        let env = b(&[]);
        match eval("2q", &env) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "q"),
            other => panic!("{other:?}"),
        }
        assert!(eval("(1+2", &env).is_err());
        assert!(eval("1 $ 2", &env).is_err());
        assert!(eval("", &env).is_err());
        assert!(eval("1+", &env).is_err());
    }
}
