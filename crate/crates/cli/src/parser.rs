//! LL(1) expression parser for ring elements. Variables a, b, g, Q; sector
//! atoms `t[bits]:h{s}:{index}`; rational literals `p` or `p/q`; operators
//! + - * ^ and parentheses. Whitespace is insignificant. Diagnostics carry
//! the byte offset and the expected-token set.

use num_bigint::BigInt;
use qcoh_core::monomial::{ALPHA, BETA, GAMMA, QPARAM};
use qcoh_core::rational::Rational;
use qcoh_core::sector::{SectorBasisElement, TorsionClass};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Var(usize),
    Sector(SectorBasisElement),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(usize),
    Sector { bits: String, s: u32, index: u32 },
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    offset: usize,
}

fn err(offset: usize, message: impl Into<String>, expected: Vec<&'static str>) -> ParseError {
    ParseError { offset, message: message.into(), expected }
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Spanned { tok: Tok::Plus, offset: start });
                i += 1;
            }
            '-' => {
                out.push(Spanned { tok: Tok::Minus, offset: start });
                i += 1;
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, offset: start });
                i += 1;
            }
            '/' => {
                out.push(Spanned { tok: Tok::Slash, offset: start });
                i += 1;
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, offset: start });
                i += 1;
            }
            '(' => {
                out.push(Spanned { tok: Tok::LParen, offset: start });
                i += 1;
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, offset: start });
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                out.push(Spanned { tok: Tok::Num(input[i..j].to_string()), offset: start });
                i = j;
            }
            'a' => {
                out.push(Spanned { tok: Tok::Var(ALPHA), offset: start });
                i += 1;
            }
            'b' => {
                out.push(Spanned { tok: Tok::Var(BETA), offset: start });
                i += 1;
            }
            'g' => {
                out.push(Spanned { tok: Tok::Var(GAMMA), offset: start });
                i += 1;
            }
            'Q' => {
                out.push(Spanned { tok: Tok::Var(QPARAM), offset: start });
                i += 1;
            }
            't' => {
                let (tok, next) = lex_sector(input, i)?;
                out.push(Spanned { tok, offset: start });
                i = next;
            }
            other => {
                return Err(err(
                    start,
                    format!("unexpected character '{}'", other),
                    vec!["a", "b", "g", "Q", "t[...]", "number", "(", "+", "-", "*", "^"],
                ));
            }
        }
    }
    Ok(out)
}

fn lex_sector(input: &str, start: usize) -> Result<(Tok, usize), ParseError> {
    let bytes = input.as_bytes();
    let mut i = start + 1;
    if i >= bytes.len() || bytes[i] != b'[' {
        return Err(err(i, "sector atom starts with 't['", vec!["["]));
    }
    i += 1;
    let bits_start = i;
    while i < bytes.len() && (bytes[i] == b'0' || bytes[i] == b'1') {
        i += 1;
    }
    if i >= bytes.len() || bytes[i] != b']' {
        return Err(err(i, "sector bits are 0/1 digits closed by ']'", vec!["0", "1", "]"]));
    }
    let bits = input[bits_start..i].to_string();
    i += 1;
    if i >= bytes.len() || bytes[i] != b':' {
        return Err(err(i, "sector atom continues ':h<degree>:<index>'", vec![":"]));
    }
    i += 1;
    if i >= bytes.len() || bytes[i] != b'h' {
        return Err(err(i, "sector degree is written 'h<degree>'", vec!["h"]));
    }
    i += 1;
    let (s, next) = lex_small_number(input, i, "sector degree")?;
    i = next;
    if i >= bytes.len() || bytes[i] != b':' {
        return Err(err(i, "sector atom continues ':<index>'", vec![":"]));
    }
    i += 1;
    let (index, next) = lex_small_number(input, i, "sector index")?;
    Ok((Tok::Sector { bits, s, index }, next))
}

fn lex_small_number(input: &str, start: usize, what: &str) -> Result<(u32, usize), ParseError> {
    let bytes = input.as_bytes();
    let mut i = start;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == start {
        return Err(err(start, format!("{} must be a number", what), vec!["digit"]));
    }
    input[start..i]
        .parse::<u32>()
        .map(|n| (n, i))
        .map_err(|_| err(start, format!("{} out of range", what), vec!["digit"]))
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    genus: u32,
    input_len: usize,
    _marker: std::marker::PhantomData<&'a ()>,
}

/// Parse an expression for the given genus. Sector atoms are validated
/// against the genus here: bit length, nonzero class, even degree in range,
/// index within the sector rank.
pub fn parse(input: &str, genus: u32) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        genus,
        input_len: input.len(),
        _marker: std::marker::PhantomData,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(err(
            t.offset,
            "trailing input after expression",
            vec!["+", "-", "*", "^", "end of input"],
        ));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eof_offset(&self) -> usize {
        self.input_len
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut node = if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.bump();
                    node = Expr::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    node = Expr::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut node = self.factor()?;
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
            self.bump();
            node = Expr::Mul(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            self.bump();
            let off = self.peek().map(|t| t.offset).unwrap_or_else(|| self.eof_offset());
            match self.bump().map(|t| t.tok) {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.parse().map_err(|_| {
                        err(off, "exponent out of range", vec!["non-negative integer"])
                    })?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(err(
                    off,
                    "exponent must be a non-negative integer",
                    vec!["non-negative integer"],
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let off = self.peek().map(|t| t.offset).unwrap_or_else(|| self.eof_offset());
        match self.bump().map(|t| t.tok) {
            Some(Tok::Num(n)) => {
                let numerator = BigInt::parse_bytes(n.as_bytes(), 10)
                    .ok_or_else(|| err(off, "bad numeral", vec!["number"]))?;
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.bump();
                    let doff = self.peek().map(|t| t.offset).unwrap_or_else(|| self.eof_offset());
                    match self.bump().map(|t| t.tok) {
                        Some(Tok::Num(d)) => {
                            let denominator = BigInt::parse_bytes(d.as_bytes(), 10)
                                .ok_or_else(|| err(doff, "bad numeral", vec!["number"]))?;
                            if denominator == BigInt::from(0) {
                                return Err(err(doff, "zero denominator", vec!["nonzero integer"]));
                            }
                            Ok(Expr::Rational(Rational::new(numerator, denominator)))
                        }
                        _ => Err(err(doff, "denominator must be an integer", vec!["number"])),
                    }
                } else {
                    Ok(Expr::Rational(Rational::from_integer(numerator)))
                }
            }
            Some(Tok::Var(i)) => Ok(Expr::Var(i)),
            Some(Tok::Sector { bits, s, index }) => {
                let kappa = TorsionClass::from_bit_str(self.genus, &bits)
                    .map_err(|e| err(off, e.to_string(), vec!["bit string of length 2*genus"]))?;
                let elem = SectorBasisElement::new(kappa, s, index)
                    .map_err(|e| err(off, e.to_string(), vec!["valid sector generator"]))?;
                Ok(Expr::Sector(elem))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let coff = self.peek().map(|t| t.offset).unwrap_or_else(|| self.eof_offset());
                match self.bump().map(|t| t.tok) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(coff, "unclosed parenthesis", vec![")"])),
                }
            }
            other => Err(err(
                off,
                match other {
                    None => "unexpected end of input".to_string(),
                    Some(t) => format!("unexpected token {:?}", t),
                },
                vec!["number", "a", "b", "g", "Q", "t[...]", "("],
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert!(parse("a^2*b + 8*Q", 2).is_ok());
        assert!(parse("t[1000]:h2:1 * a", 2).is_ok());
        assert!(parse("4/3*a*g - (b + Q)^2", 2).is_ok());
        assert!(parse("2 / 3", 2).is_ok());
    }

    #[test]
    fn negative_exponent_is_rejected_at_its_offset() {
        let e = parse("a^-1", 2).unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.expected.contains(&"non-negative integer"));
    }

    #[test]
    fn sector_validation() {
        // Wrong bit length for the genus.
        let e = parse("t[100]:h2:1", 2).unwrap_err();
        assert!(e.message.contains("length"));
        // Odd degree.
        let e = parse("t[1000]:h1:1", 2).unwrap_err();
        assert!(e.message.contains("odd"));
        // Zero torsion class.
        let e = parse("t[0000]:h0:1", 2).unwrap_err();
        assert!(e.message.contains("nonzero"));
        // Index out of range.
        let e = parse("t[1000]:h2:2", 2).unwrap_err();
        assert!(e.message.contains("index"));
    }

    #[test]
    fn diagnostics_have_offsets() {
        let e = parse("a + ?", 2).unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse("(a + b", 2).unwrap_err();
        assert_eq!(e.offset, 6);
        let e = parse("a b", 2).unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse("1/0", 2).unwrap_err();
        assert_eq!(e.offset, 2);
    }
}
