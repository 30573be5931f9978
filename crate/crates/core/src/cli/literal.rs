//! Digit-string literals: `SEQ ["(" SEQ ")"]`, where `SEQ` is a run of
//! decimal digits or a bracketed list `[n1,n2,...]`. A parenthesized
//! suffix is the repeating period; without one the word ends in `0^ω`.

use std::fmt;

use crate::expansion::{EPWord, FiniteDigitString};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset of the offending character.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.offset)
    }
}

impl std::error::Error for SyntaxError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn seq(&mut self) -> Result<Vec<u64>, SyntaxError> {
        if self.peek() == Some('[') {
            self.pos += 1;
            let mut digits = Vec::new();
            loop {
                while self.peek() == Some(' ') {
                    self.pos += 1;
                }
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error("expected a digit value"));
                }
                let d = self.text[start..self.pos]
                    .parse()
                    .map_err(|_| SyntaxError {
                        offset: start,
                        message: "digit too large".into(),
                    })?;
                digits.push(d);
                while self.peek() == Some(' ') {
                    self.pos += 1;
                }
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(']') => {
                        self.pos += 1;
                        return Ok(digits);
                    }
                    _ => return Err(self.error("expected ',' or ']'")),
                }
            }
        }
        let mut digits = Vec::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(u64::from(c.to_digit(10).unwrap()));
            self.pos += 1;
        }
        Ok(digits)
    }
}

/// Parses a literal into its canonical word.
pub fn parse_digit_string(text: &str) -> Result<EPWord, SyntaxError> {
    let text = text.trim();
    let mut c = Cursor { text, pos: 0 };
    let pre = c.seq()?;
    let mut period = Vec::new();
    let mut has_period = false;
    if c.peek() == Some('(') {
        c.pos += 1;
        period = c.seq()?;
        if period.is_empty() {
            return Err(c.error("empty period"));
        }
        if c.peek() != Some(')') {
            return Err(c.error("expected ')'"));
        }
        c.pos += 1;
        has_period = true;
    }
    if let Some(ch) = c.peek() {
        return Err(c.error(format!("unexpected character {ch:?}")));
    }
    if pre.is_empty() && !has_period {
        return Err(c.error("empty literal"));
    }
    Ok(EPWord::new(pre, period))
}

/// Parses a literal that must denote a word with finite support.
pub fn parse_finite(text: &str) -> Result<FiniteDigitString, SyntaxError> {
    let w = parse_digit_string(text)?;
    w.as_finite().ok_or_else(|| SyntaxError {
        offset: text.find('(').unwrap_or(0),
        message: "expected a finite digit string".into(),
    })
}

pub fn format_word(w: &EPWord) -> String {
    w.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        let w = parse_digit_string("2010").unwrap();
        assert_eq!(w, EPWord::finite(vec![2, 0, 1]));
        assert_eq!(format_word(&w), "2010");
        let w = parse_digit_string("34(21)").unwrap();
        assert_eq!(
            (w.preperiod(), w.period()),
            (&[3u64, 4][..], &[2u64, 1][..])
        );
        assert_eq!(format_word(&w), "34(21)");
        let w = parse_digit_string("[12,0](3)").unwrap();
        assert_eq!((w.preperiod(), w.period()), (&[12u64, 0][..], &[3u64][..]));
        assert_eq!(format_word(&w), "[12,0](3)");
        assert_eq!(
            format_word(&parse_digit_string("[12, 5]").unwrap()),
            "[12,5,0]"
        );
        assert_eq!(format_word(&parse_digit_string("0").unwrap()), "0");
        assert_eq!(format_word(&parse_digit_string("(10)").unwrap()), "(10)");
        assert_eq!(
            parse_finite("000020010").unwrap().digits(),
            &[0, 0, 0, 0, 2, 0, 0, 1]
        );
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse_digit_string("12x").unwrap_err().offset, 2);
        assert_eq!(parse_digit_string("1(2").unwrap_err().offset, 3);
        assert_eq!(parse_digit_string("[1,]").unwrap_err().offset, 3);
        assert!(parse_digit_string("").is_err());
        assert!(parse_digit_string("1()").is_err());
        assert!(parse_finite("1(2)").is_err());
    }
}
