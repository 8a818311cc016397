//! Text grammar for scalars and elements.
//!
//! ```text
//! element := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)* ['#' group]
//! factor  := INT ['/' INT] | 'q' ['^' INT] | '(' scalar ')'
//!          | word | 'K' INT ['^' INT] | 'g' ['^' INT] | 'x' ['^' INT]
//! word    := '[' (e INT (',' e INT)*)? ']'
//! group   := '1' | gen ('*' gen)*      gen := 'K' INT ['^' INT] | 'g' | 'x' | word
//! scalar  := ['+'|'-'] sterm (('+'|'-') sterm)*
//! sterm   := satom ('*' satom)*
//! satom   := INT ['/' INT] | 'q' ['^' INT] | '(' scalar ')'
//! ```
//!
//! Parsing produces [`RawTerm`]s: a Laurent coefficient plus uninterpreted key
//! factors. Turning those into typed basis keys is the job of
//! [`ParseKey`](crate::freemod::ParseKey).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::{LaurentPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

/// One generator-like factor of a basis key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeyFactor {
    /// `[e1,e2,...]`
    Word(Vec<u32>),
    /// `K<index>^<exp>`
    K { index: u32, exp: i64 },
    /// `g^<exp>` or `x^<exp>`
    Symbol { name: char, exp: i64 },
}

/// Key factors of one term, split at `#` when present.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawKey {
    pub position: usize,
    pub left: Vec<KeyFactor>,
    pub right: Option<Vec<KeyFactor>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: LaurentPoly,
    pub key: RawKey,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn unsigned(&mut self) -> Result<num_bigint::BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn small_unsigned(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos;
        let n = self.unsigned()?;
        u32::try_from(n).map_err(|_| ParseError::new(pos, "integer too large"))
    }

    fn signed_exponent(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let pos = self.pos;
        let n = self.unsigned()?;
        let n = i64::try_from(n).map_err(|_| ParseError::new(pos, "exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn optional_exponent(&mut self) -> Result<i64, ParseError> {
        if self.eat(b'^') {
            self.signed_exponent()
        } else {
            Ok(1)
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.unsigned()?;
        if self.eat(b'/') {
            let pos = self.pos;
            let den = self.unsigned()?;
            if den.is_zero() {
                return Err(ParseError::new(pos, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn scalar_atom(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let s = self.scalar()?;
                self.expect(b')')?;
                Ok(s)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(LaurentPoly::q_pow(self.optional_exponent()?))
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::constant(self.rational()?)),
            _ => Err(self.error("expected a scalar")),
        }
    }

    fn scalar_term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.scalar_atom()?;
        while self.eat(b'*') {
            acc = &acc * &self.scalar_atom()?;
        }
        Ok(acc)
    }

    fn scalar(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let mut acc = LaurentPoly::zero();
        loop {
            let t = self.scalar_term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => neg = false,
                Some(b'-') => neg = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn letter_index(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some(b'e') {
            return Err(self.error("expected a letter `e<INT>`"));
        }
        self.pos += 1;
        let pos = self.pos;
        let i = self.small_unsigned()?;
        if i == 0 {
            return Err(ParseError::new(pos, "letter indices start at 1"));
        }
        Ok(i)
    }

    fn word(&mut self) -> Result<Vec<u32>, ParseError> {
        self.expect(b'[')?;
        let mut letters = Vec::new();
        if self.eat(b']') {
            return Ok(letters);
        }
        loop {
            letters.push(self.letter_index()?);
            if self.eat(b']') {
                return Ok(letters);
            }
            self.expect(b',')?;
        }
    }

    fn k_factor(&mut self) -> Result<KeyFactor, ParseError> {
        self.expect(b'K')?;
        let pos = self.pos;
        let index = self.small_unsigned()?;
        if index == 0 {
            return Err(ParseError::new(pos, "group generators start at K1"));
        }
        Ok(KeyFactor::K { index, exp: self.optional_exponent()? })
    }

    /// Key factors after `#`; a lone `1` is the identity.
    fn right_factors(&mut self) -> Result<Vec<KeyFactor>, ParseError> {
        if self.eat(b'1') {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(b'K') => out.push(self.k_factor()?),
                Some(b'[') => out.push(KeyFactor::Word(self.word()?)),
                Some(c @ (b'g' | b'x')) => {
                    self.pos += 1;
                    let exp = self.optional_exponent()?;
                    out.push(KeyFactor::Symbol { name: c as char, exp });
                }
                _ => return Err(self.error("expected a basis key after `#`")),
            }
            if !self.eat(b'*') {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let position = {
            self.skip_ws();
            self.pos
        };
        let mut coeff = LaurentPoly::one();
        let mut left = Vec::new();
        loop {
            match self.peek() {
                Some(b'[') => left.push(KeyFactor::Word(self.word()?)),
                Some(b'K') => left.push(self.k_factor()?),
                Some(c @ (b'g' | b'x')) => {
                    self.pos += 1;
                    let exp = self.optional_exponent()?;
                    left.push(KeyFactor::Symbol { name: c as char, exp });
                }
                Some(b'(' | b'q') => coeff = &coeff * &self.scalar_atom()?,
                Some(c) if c.is_ascii_digit() => {
                    coeff = &coeff * &LaurentPoly::constant(self.rational()?)
                }
                _ => return Err(self.error("expected a scalar or a basis key")),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        let right = if self.eat(b'#') { Some(self.right_factors()?) } else { None };
        Ok(RawTerm { coeff, key: RawKey { position, left, right } })
    }
}

/// Parses a scalar expression such as `(2*q^2 - 1/3*q^-1)`.
pub fn parse_scalar(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut cur = Cursor::new(text);
    let s = cur.scalar()?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(s)
}

/// Parses an element into raw terms with their signs folded into the
/// coefficients. `0` parses to no terms.
pub fn parse_terms(text: &str) -> Result<Vec<RawTerm>, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek() == Some(b'0') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.at_end() {
            return Ok(Vec::new());
        }
        cur.pos = save;
    }
    let mut neg = cur.eat(b'-');
    if !neg {
        cur.eat(b'+');
    }
    let mut out = Vec::new();
    loop {
        let mut t = cur.term()?;
        if neg {
            t.coeff = -t.coeff;
        }
        out.push(t);
        match cur.peek() {
            Some(b'+') => neg = false,
            Some(b'-') => neg = true,
            None => return Ok(out),
            Some(_) => return Err(cur.error("expected `+`, `-` or end of input")),
        }
        cur.pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_expressions() {
        let s = parse_scalar("(2*q^2 - 1/3*q^-1)").unwrap();
        assert_eq!(s.to_string(), "-1/3*q^-1+2*q^2");
        assert_eq!(parse_scalar("q*q^-1").unwrap(), LaurentPoly::one());
        assert_eq!(parse_scalar("-(1+q)").unwrap().to_string(), "-1-q");
    }

    #[test]
    fn smash_term() {
        let terms = parse_terms("[e1,e2] # K1^2*K2^-1").unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coeff, LaurentPoly::one());
        assert_eq!(terms[0].key.left, vec![KeyFactor::Word(vec![1, 2])]);
        assert_eq!(
            terms[0].key.right,
            Some(vec![KeyFactor::K { index: 1, exp: 2 }, KeyFactor::K { index: 2, exp: -1 }])
        );
    }

    #[test]
    fn two_terms_with_scalar() {
        let terms = parse_terms("(q^2+1)*[e1] + [e2]").unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].coeff.to_string(), "1+q^2");
        assert_eq!(terms[1].key.left, vec![KeyFactor::Word(vec![2])]);
    }

    #[test]
    fn signs_fold_into_coefficients() {
        let terms = parse_terms("-2*g*x - x").unwrap();
        assert_eq!(terms[0].coeff, LaurentPoly::from_int(-2));
        assert_eq!(terms[1].coeff, LaurentPoly::from_int(-1));
    }

    #[test]
    fn zero_is_empty() {
        assert!(parse_terms("0").unwrap().is_empty());
        assert!(parse_terms(" 0 ").unwrap().is_empty());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_terms("[e1,,e2]").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(parse_terms("[e1] +").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_terms("[e0]").is_err());
    }
}
