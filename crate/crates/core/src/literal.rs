//! Text form of elements: `1+2e1-0.5e7`, `-e3`, `2.5`.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! literal := sign? term (('+' | '-') term)*
//! term    := number | number? 'e' index
//! number  := digits ('.' digits?)? | '.' digits
//! ```
//!
//! `e0` is a scalar term. Exponent notation is not accepted, since `2e1`
//! already means `2·e_1`. Each basis unit may appear at most once.

use crate::algebra::AlgebraKind;
use crate::element::Element;
use crate::error::ParseError;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat_digits(&mut self) -> usize {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        let start = self.pos;
        let int_digits = self.eat_digits();
        let mut frac_digits = 0;
        if self.peek() == Some(b'.') {
            self.pos += 1;
            frac_digits = self.eat_digits();
        }
        if int_digits == 0 && frac_digits == 0 {
            if self.pos > start {
                return Err(ParseError::new(start, "malformed number"));
            }
            return Ok(None);
        }
        let slice = &self.text[start..self.pos];
        slice
            .parse::<f64>()
            .map(Some)
            .map_err(|e| ParseError::new(start, format!("malformed number `{slice}`: {e}")))
    }
}

/// Parses an element literal for the given algebra.
pub fn parse_element(text: &str, kind: AlgebraKind) -> Result<Element, ParseError> {
    parse_at(text, kind, 0)
}

/// Like [`parse_element`], with error positions shifted by `offset`. Used by
/// the matrix and state parsers, which hand over sub-slices.
pub(crate) fn parse_at(
    text: &str,
    kind: AlgebraKind,
    offset: usize,
) -> Result<Element, ParseError> {
    let shift = |mut e: ParseError| {
        e.position += offset;
        e
    };
    let mut cur = Cursor { text, pos: 0 };
    let mut out = Element::zero(kind);
    let mut seen = [false; 8];

    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(shift(ParseError::new(0, "empty element literal")));
    }

    let mut first = true;
    loop {
        cur.skip_ws();
        let sign_pos = cur.pos;
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                1.0
            }
            Some(b'-') => {
                cur.pos += 1;
                -1.0
            }
            _ if first => 1.0,
            Some(c) => {
                return Err(shift(ParseError::new(
                    sign_pos,
                    format!("expected '+' or '-', found `{}`", c as char),
                )))
            }
            None => unreachable!(),
        };
        cur.skip_ws();

        let term_pos = cur.pos;
        let number = cur.number().map_err(shift)?;
        cur.skip_ws();
        let index = if cur.peek() == Some(b'e') {
            cur.pos += 1;
            cur.skip_ws();
            let idx_pos = cur.pos;
            if cur.eat_digits() == 0 {
                return Err(shift(ParseError::new(
                    idx_pos,
                    "expected basis index after `e`",
                )));
            }
            let index: usize = cur.text[idx_pos..cur.pos]
                .parse()
                .map_err(|_| shift(ParseError::new(idx_pos, "basis index too large")))?;
            if index >= kind.dim() {
                return Err(shift(ParseError::new(
                    idx_pos,
                    format!(
                        "basis unit e{index} out of range for {kind} (dimension {})",
                        kind.dim()
                    ),
                )));
            }
            index
        } else if number.is_some() {
            0
        } else {
            let msg = match cur.peek() {
                Some(c) => format!("expected number or basis unit, found `{}`", c as char),
                None => "expected number or basis unit, found end of input".to_string(),
            };
            return Err(shift(ParseError::new(cur.pos, msg)));
        };

        if seen[index] {
            return Err(shift(ParseError::new(
                term_pos,
                format!("duplicate basis unit e{index}"),
            )));
        }
        seen[index] = true;
        let magnitude = number.unwrap_or(1.0);
        out.coeffs_mut()[index] = if sign < 0.0 { -magnitude } else { magnitude };

        first = false;
        cur.skip_ws();
        if cur.peek().is_none() {
            return Ok(out);
        }
    }
}

/// Formats an element so that [`parse_element`] reads back bit-identical
/// coefficients. Zero terms are omitted (except `-0.0`, which is kept to
/// preserve its sign); the zero element prints as `0`.
pub fn format_element(a: &Element) -> String {
    let mut out = String::new();
    for (i, &c) in a.coeffs().iter().enumerate() {
        if c == 0.0 && c.is_sign_positive() {
            continue;
        }
        let negative = c.is_sign_negative();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        match (i, mag == 1.0) {
            (0, _) => out.push_str(&mag.to_string()),
            (_, true) => out.push_str(&format!("e{i}")),
            (_, false) => out.push_str(&format!("{mag}e{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
