//! Rank-generic root and weight expressions such as `a1+2(a2+...+an)` or `w1+wn`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! sum     := item ('+' item)*
//! item    := '...' | INT? primary
//! primary := ('a' | 'w') index | '(' sum ')'
//! index   := INT | 'n' | 'n-' INT
//! ```
//!
//! `x_i + ... + x_j` denotes the consecutive run from `i` to `j`, which is
//! empty when `i > j`. Roots (`a`) and weights (`w`) cannot be mixed.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i64, rank: usize },
    #[error("expression mixes roots and weights")]
    MixedBasis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Simple-root coordinates.
    Root,
    /// Fundamental-weight coordinates.
    Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Index {
    Lit(i64),
    /// `n - k`.
    FromRank(i64),
}

impl Index {
    fn value(self, rank: usize) -> i64 {
        match self {
            Index::Lit(k) => k,
            Index::FromRank(k) => rank as i64 - k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Symbol(Basis, Index),
    Run(Basis, Index, Index),
    Scaled(i64, Box<Expr>),
    Sum(Vec<Expr>),
}

const MAX_NESTING: usize = 64;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, SymbolicError> {
        Err(SymbolicError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<Option<i64>, SymbolicError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        match text.parse::<i64>() {
            Ok(v) if v <= 1 << 20 => Ok(Some(v)),
            _ => {
                self.pos = start;
                self.err("integer too large")
            }
        }
    }

    fn index(&mut self) -> Result<Index, SymbolicError> {
        if let Some(k) = self.int()? {
            return Ok(Index::Lit(k));
        }
        if self.peek() == Some(b'n') {
            self.pos += 1;
            // `n-k`, but not the `-` of something else: the grammar has no subtraction.
            if self.peek() == Some(b'-') {
                self.pos += 1;
                return match self.int()? {
                    Some(k) => Ok(Index::FromRank(k)),
                    None => self.err("expected integer after 'n-'"),
                };
            }
            return Ok(Index::FromRank(0));
        }
        self.err("expected index")
    }

    fn primary(&mut self) -> Result<Expr, SymbolicError> {
        match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                Ok(Expr::Symbol(Basis::Root, self.index()?))
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Expr::Symbol(Basis::Weight, self.index()?))
            }
            Some(b'(') => {
                if self.depth == MAX_NESTING {
                    return self.err("nesting too deep");
                }
                self.pos += 1;
                self.depth += 1;
                let e = self.sum()?;
                self.depth -= 1;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected 'a', 'w' or '('"),
        }
    }

    fn is_ellipsis(&mut self) -> bool {
        self.skip_ws();
        self.s[self.pos..].starts_with(b"...")
    }

    fn sum(&mut self) -> Result<Expr, SymbolicError> {
        let mut items: Vec<Expr> = Vec::new();
        loop {
            if self.is_ellipsis() {
                self.pos += 3;
                let Some(Expr::Symbol(b, from)) = items.pop() else {
                    return self.err("'...' must follow a bare symbol");
                };
                if self.peek() != Some(b'+') {
                    return self.err("expected '+' after '...'");
                }
                self.pos += 1;
                match self.primary()? {
                    Expr::Symbol(b2, to) if b2 == b => items.push(Expr::Run(b, from, to)),
                    _ => return self.err("'...' must end at a bare symbol of the same kind"),
                }
            } else {
                let coef = self.int()?;
                let p = self.primary()?;
                items.push(match coef {
                    Some(c) => Expr::Scaled(c, Box::new(p)),
                    None => p,
                });
            }
            if self.peek() == Some(b'+') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Expr::Sum(items) })
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, SymbolicError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, depth: 0 };
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    fn basis(&self) -> Result<Basis, SymbolicError> {
        match self {
            Expr::Symbol(b, _) | Expr::Run(b, _, _) => Ok(*b),
            Expr::Scaled(_, e) => e.basis(),
            Expr::Sum(items) => {
                let b = items[0].basis()?;
                for i in &items[1..] {
                    if i.basis()? != b {
                        return Err(SymbolicError::MixedBasis);
                    }
                }
                Ok(b)
            }
        }
    }

    fn accumulate(&self, rank: usize, scale: i64, out: &mut [i64]) -> Result<(), SymbolicError> {
        let slot = |i: i64| -> Result<usize, SymbolicError> {
            if i >= 1 && i as usize <= rank {
                Ok(i as usize - 1)
            } else {
                Err(SymbolicError::IndexOutOfRange { index: i, rank })
            }
        };
        match self {
            Expr::Symbol(_, i) => {
                let k = slot(i.value(rank))?;
                out[k] = out[k].saturating_add(scale);
            }
            Expr::Run(_, from, to) => {
                let (a, b) = (from.value(rank), to.value(rank));
                for k in a..=b {
                    let k = slot(k)?;
                    out[k] = out[k].saturating_add(scale);
                }
            }
            Expr::Scaled(c, e) => e.accumulate(rank, scale.saturating_mul(*c), out)?,
            Expr::Sum(items) => {
                for e in items {
                    e.accumulate(rank, scale, out)?;
                }
            }
        }
        Ok(())
    }

    /// Coordinates at a concrete rank.
    pub fn eval(&self, rank: usize) -> Result<(Basis, Vec<i64>), SymbolicError> {
        let b = self.basis()?;
        let mut out = vec![0i64; rank];
        self.accumulate(rank, 1, &mut out)?;
        Ok((b, out))
    }
}

/// Parses and evaluates in one step.
pub fn eval_expr(s: &str, rank: usize) -> Result<(Basis, Vec<i64>), SymbolicError> {
    parse_expr(s)?.eval(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_and_scaling() {
        assert_eq!(eval_expr("a1+2(a2+...+an)", 4).unwrap(), (Basis::Root, vec![1, 2, 2, 2]));
        assert_eq!(eval_expr("a1+2(a2+...+an-1)+an", 3).unwrap(), (Basis::Root, vec![1, 2, 1]));
        assert_eq!(eval_expr("a2+(a1+a2+2(a3+...+an-2)+an-1+an)", 4).unwrap(), (Basis::Root, vec![1, 2, 1, 1]));
        assert_eq!(eval_expr("w1 + wn", 5).unwrap(), (Basis::Weight, vec![1, 0, 0, 0, 1]));
        assert_eq!(eval_expr("2w3", 3).unwrap(), (Basis::Weight, vec![0, 0, 2]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_expr("").is_err());
        assert!(parse_expr("a1+").is_err());
        assert!(parse_expr("a1+...").is_err());
        assert!(parse_expr("2(a1+w2)").unwrap().eval(3).is_err());
        assert!(eval_expr("a5", 3).is_err());
        assert!(parse_expr("(a1").is_err());
        assert!(parse_expr("a1 a2").is_err());
        assert!(parse_expr(&"(".repeat(10_000)).is_err());
    }
}
