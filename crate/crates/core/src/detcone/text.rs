//! Plain-text ideals.
//!
//! ```text
//! vars: x_0_0 x_0_1 x_0_2 z
//! order: lex
//! x_0_0*x_0_2 - x_0_1^2 + 3/2*x_0_1*z
//! ```
//!
//! `vars` lists the variables; `order: lex` ranks them in that order (first
//! most significant) unless a permutation of the names follows `lex`. Every
//! further non-empty line is one polynomial; `#` starts a comment.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::groebner::Ideal;
use super::poly::{MonomialOrder, Poly};
use crate::linalg::Q;

const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing '{0}' header")]
    MissingHeader(&'static str),
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, TextError> {
    Err(TextError::Syntax { line, msg: msg.into() })
}

fn is_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_') && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

fn format_coeff(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Terms from the leading one down.
pub fn format_poly(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let factors: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        if factors.is_empty() {
            out.push_str(&format_coeff(&a));
        } else {
            if !a.is_one() {
                out.push_str(&format_coeff(&a));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

pub fn format_ideal(ideal: &Ideal) -> String {
    let mut s = format!("vars: {}\norder: lex", ideal.names.join(" "));
    if !ideal.order.is_identity() {
        for &v in &ideal.order.ranking {
            s.push(' ');
            s.push_str(&ideal.names[v]);
        }
    }
    s.push('\n');
    for g in &ideal.generators {
        s.push_str(&format_poly(g, &ideal.names));
        s.push('\n');
    }
    s
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] == b' ' || self.s[self.pos] == b'\t') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn name(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

fn parse_coeff(lx: &mut Lexer) -> Result<Option<Q>, TextError> {
    let Some(n) = lx.digits() else { return Ok(None) };
    let n: BigInt = n.parse().unwrap();
    if lx.peek() == Some(b'/') {
        lx.pos += 1;
        let Some(d) = lx.digits() else { return syntax(lx.line, "expected denominator") };
        let d: BigInt = d.parse().unwrap();
        if d.is_zero() {
            return syntax(lx.line, "zero denominator");
        }
        return Ok(Some(Q::new(n, d)));
    }
    Ok(Some(Q::from_integer(n)))
}

fn parse_factor(lx: &mut Lexer, index: &HashMap<&str, usize>, mono: &mut [u32]) -> Result<(), TextError> {
    let Some(name) = lx.name() else { return syntax(lx.line, "expected variable") };
    let Some(&i) = index.get(name) else { return syntax(lx.line, format!("unknown variable '{name}'")) };
    let mut e = 1u32;
    if lx.peek() == Some(b'^') {
        lx.pos += 1;
        let Some(d) = lx.digits() else { return syntax(lx.line, "expected exponent") };
        e = match d.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return syntax(lx.line, "exponent too large"),
        };
    }
    mono[i] = mono[i].checked_add(e).filter(|&x| x <= MAX_EXPONENT).ok_or(TextError::Syntax { line: lx.line, msg: "exponent too large".into() })?;
    Ok(())
}

/// Parses one polynomial over the given variable names.
pub fn parse_poly(s: &str, names: &[String]) -> Result<Poly, TextError> {
    parse_poly_line(s, names, 1)
}

fn parse_poly_line(s: &str, names: &[String], line: usize) -> Result<Poly, TextError> {
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let n = names.len();
    let mut lx = Lexer { s: s.as_bytes(), pos: 0, line };
    let mut p = Poly::zero(n);
    let mut first = true;
    loop {
        let mut sign = Q::one();
        match lx.peek() {
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            None if first => return syntax(line, "empty polynomial"),
            None => break,
            _ if !first => return syntax(line, "expected '+' or '-'"),
            _ => {}
        }
        first = false;
        let mut mono = vec![0u32; n];
        let coeff = parse_coeff(&mut lx)?;
        let has_factors = match coeff {
            None => true,
            Some(_) if lx.peek() == Some(b'*') => {
                lx.pos += 1;
                true
            }
            Some(_) => false,
        };
        if has_factors {
            parse_factor(&mut lx, &index, &mut mono)?;
            while lx.peek() == Some(b'*') {
                lx.pos += 1;
                parse_factor(&mut lx, &index, &mut mono)?;
            }
        }
        p.add_term(mono, sign * coeff.unwrap_or_else(Q::one));
    }
    Ok(p)
}

fn header<'a>(line: &'a str, key: &'static str) -> Option<&'a str> {
    line.strip_prefix(key).and_then(|r| r.trim_start().strip_prefix(':'))
}

pub fn parse_ideal(s: &str) -> Result<Ideal, TextError> {
    let mut lines = s.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim())).filter(|(_, l)| !l.is_empty());
    let Some((ln, vars_line)) = lines.next() else { return Err(TextError::MissingHeader("vars")) };
    let Some(vars) = header(vars_line, "vars") else { return Err(TextError::MissingHeader("vars")) };
    let names: Vec<String> = vars.split_whitespace().map(str::to_string).collect();
    if let Some(bad) = names.iter().find(|n| !is_name(n)) {
        return syntax(ln, format!("bad variable name '{bad}'"));
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return syntax(ln, format!("duplicate variable '{a}'"));
        }
    }
    let Some((ln, order_line)) = lines.next() else { return Err(TextError::MissingHeader("order")) };
    let Some(order) = header(order_line, "order") else { return Err(TextError::MissingHeader("order")) };
    let mut words = order.split_whitespace();
    if words.next() != Some("lex") {
        return syntax(ln, "only 'lex' is supported");
    }
    let ranking: Vec<&str> = words.collect();
    let order = if ranking.is_empty() {
        MonomialOrder::lex(names.len())
    } else {
        let mut r = Vec::new();
        for w in ranking {
            match names.iter().position(|n| n == w) {
                Some(i) => r.push(i),
                None => return syntax(ln, format!("unknown variable '{w}' in ranking")),
            }
        }
        let o = MonomialOrder { ranking: r };
        if !o.is_permutation(names.len()) {
            return syntax(ln, "ranking must list every variable once");
        }
        o
    };
    let mut generators = Vec::new();
    for (ln, l) in lines {
        generators.push(parse_poly_line(l, &names, ln)?);
    }
    Ok(Ideal { names, order, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qf;

    #[test]
    fn round_trip() {
        let text = "vars: x y z\norder: lex\nx*z - y^2 + 3/2*y*z\n-2*x + 7\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(ideal.generators.len(), 2);
        assert_eq!(ideal.generators[0].coeff(&[0, 1, 1]), qf(3, 2));
        assert_eq!(format_ideal(&ideal), "vars: x y z\norder: lex\nx*z - y^2 + 3/2*y*z\n-2*x + 7\n");
        assert_eq!(parse_ideal(&format_ideal(&ideal)).unwrap(), ideal);
    }

    #[test]
    fn ranking_header() {
        let ideal = parse_ideal("vars: a b\norder: lex b a\na - b\n").unwrap();
        assert_eq!(ideal.order.ranking, vec![1, 0]);
        assert_eq!(parse_ideal(&format_ideal(&ideal)).unwrap(), ideal);
        assert!(parse_ideal("vars: a b\norder: lex b\n").is_err());
    }

    #[test]
    fn rejects() {
        for bad in ["", "vars: x\n", "vars: x x\norder: lex\n", "vars: x\norder: lex\nx +\n", "vars: x\norder: lex\ny\n", "vars: x\norder: lex\n1/0\n", "vars: x\norder: lex\nx^99999999\n", "vars: x\norder: lex\nx x\n"] {
            assert!(parse_ideal(bad).is_err(), "{bad:?}");
        }
    }
}
