//! Text syntax for Seifert invariants: `M(g; (a1,b1), (a2,b2), ...)`.
//!
//! Whitespace is allowed between tokens, the pair list may be empty
//! (`M(1;)`), and every integer may carry a sign.  [`SeifertData`] implements
//! [`std::str::FromStr`] through this parser.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::seifert::{InvalidSeifertData, SeifertData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("base genus must fit a non-negative machine integer, got {got}")]
    GenusOutOfRange { got: BigInt },

    #[error("pair {index} is invalid")]
    InvalidPair {
        index: usize,
        source: InvalidSeifertData,
    },
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn error(&self, message: String) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message,
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected an integer".into()));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(text).expect("validated digits"))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.error("trailing input".into()));
        }
        Ok(())
    }
}

/// Parses `M(g; (a1,b1), ...)` into validated Seifert invariants.
pub fn parse_seifert(input: &str) -> Result<SeifertData, ParseError> {
    let mut s = Scanner::new(input);
    s.skip_ws();
    if s.bytes.get(s.pos) != Some(&b'M') {
        return Err(s.error("expected 'M'".into()));
    }
    s.pos += 1;
    s.expect(b'(')?;
    let genus = s.integer()?;
    if genus.is_negative() {
        return Err(ParseError::GenusOutOfRange { got: genus });
    }
    let genus = u64::try_from(&genus).map_err(|_| ParseError::GenusOutOfRange { got: genus })?;
    s.expect(b';')?;

    let mut raw: Vec<(BigInt, BigInt)> = Vec::new();
    if s.peek() != Some(b')') {
        loop {
            s.expect(b'(')?;
            let alpha = s.integer()?;
            s.expect(b',')?;
            let beta = s.integer()?;
            s.expect(b')')?;
            raw.push((alpha, beta));
            match s.peek() {
                Some(b',') => {
                    s.pos += 1;
                }
                _ => break,
            }
        }
    }
    s.expect(b')')?;
    s.finish()?;

    let mut pairs = Vec::with_capacity(raw.len());
    for (index, (alpha, beta)) in raw.into_iter().enumerate() {
        pairs.push(
            crate::seifert::ExceptionalPair::new(alpha, beta)
                .map_err(|source| ParseError::InvalidPair { index, source })?,
        );
    }
    Ok(SeifertData::new(genus, pairs))
}

impl FromStr for SeifertData {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_seifert(s)
    }
}
