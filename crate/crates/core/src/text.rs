//! Line tokenizer shared by the instance and bin-packing formats.
//!
//! `#` starts a comment running to the end of the line; blank lines are skipped.
//! Tokens are base-10 integers separated by spaces (tabs are accepted too).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub line: usize,
    pub column: usize,
    pub text: &'a str,
}

impl Token<'_> {
    pub fn int(&self) -> Result<i64> {
        self.text.parse::<i64>().map_err(|e| {
            Error::parse(
                self.line,
                self.column,
                format!("expected an integer, found `{}` ({e})", self.text),
            )
        })
    }

    pub fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, message)
    }
}

#[derive(Debug)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    pub fn expect_len(&self, len: usize, what: &str) -> Result<()> {
        if self.tokens.len() == len {
            return Ok(());
        }
        let column = self.tokens.get(len).map(|t| t.column).unwrap_or_else(|| {
            self.tokens
                .last()
                .map(|t| t.column + t.text.len())
                .unwrap_or(1)
        });
        Err(Error::parse(
            self.number,
            column,
            format!(
                "{what}: expected {len} integer(s), found {}",
                self.tokens.len()
            ),
        ))
    }
}

/// Splits `input` into its non-empty, comment-stripped lines.
pub(crate) fn lines(input: &str) -> Vec<Line<'_>> {
    input
        .lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let body = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in body
                .char_indices()
                .chain(std::iter::once((body.len(), ' ')))
            {
                if ch == ' ' || ch == '\t' || ch == '\r' {
                    if let Some(s) = start.take() {
                        tokens.push(Token {
                            line: idx + 1,
                            column: body[..s].chars().count() + 1,
                            text: &body[s..pos],
                        });
                    }
                } else if start.is_none() {
                    start = Some(pos);
                }
            }
            (!tokens.is_empty()).then_some(Line {
                number: idx + 1,
                tokens,
            })
        })
        .collect()
}

/// Error for input that ended before `what` was read.
pub(crate) fn unexpected_eof(input: &str, what: &str) -> Error {
    Error::parse(
        input.lines().count() + 1,
        1,
        format!("unexpected end of input, expected {what}"),
    )
}
