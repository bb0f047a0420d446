//! Tokenizer shared by the link and graph text formats.
//!
//! Records are `X(a,b,c,d)` crossings, `V(h1,...,hk)` vertex stars and bare
//! `U` tokens for crossingless unknot components. Records are separated by
//! whitespace or commas; `#` starts a comment running to the end of the line.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Record {
    Crossing([u32; 4]),
    Vertex(Vec<u32>),
    Unknot,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(line_text: &'a str, line: usize) -> Self {
        Cursor {
            chars: line_text.char_indices().peekable(),
            line,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next().map(|(_, c)| c);
        if c.is_some() {
            self.column += 1;
        }
        c
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn skip_blank(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_blank();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of line"))),
        }
    }

    fn label(&mut self) -> Result<u32> {
        self.skip_blank();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected an arc label, found '{c}'")),
                None => self.error("expected an arc label, found end of line"),
            });
        }
        let value: u32 = digits
            .parse()
            .map_err(|_| self.error(format!("arc label {digits} is out of range")))?;
        if value == 0 {
            return Err(self.error("arc labels must be positive"));
        }
        Ok(value)
    }

    /// Parses `( l1, l2, ... )`, possibly empty.
    fn label_list(&mut self) -> Result<Vec<u32>> {
        self.expect('(')?;
        let mut labels = Vec::new();
        self.skip_blank();
        if self.peek() == Some(')') {
            self.bump();
            return Ok(labels);
        }
        loop {
            labels.push(self.label()?);
            self.skip_blank();
            match self.bump() {
                Some(',') => continue,
                Some(')') => return Ok(labels),
                Some(c) => return Err(self.error(format!("expected ',' or ')', found '{c}'"))),
                None => return Err(self.error("unterminated record")),
            }
        }
    }
}

pub(crate) fn records(text: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        out.extend(line_records(line, idx + 1)?);
    }
    Ok(out)
}

/// Parses one line; comment and blank lines yield no records.
pub(crate) fn line_records(line: &str, line_no: usize) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut cur = Cursor::new(line, line_no);
    loop {
        cur.skip_blank();
        let Some(c) = cur.peek() else { break };
        match c {
            '#' => break,
            ',' => {
                cur.bump();
            }
            'X' | 'x' => {
                cur.bump();
                let labels = cur.label_list()?;
                let arcs: [u32; 4] = labels.as_slice().try_into().map_err(|_| {
                    cur.error(format!("crossing needs 4 labels, got {}", labels.len()))
                })?;
                out.push(Record::Crossing(arcs));
            }
            'V' | 'v' => {
                cur.bump();
                out.push(Record::Vertex(cur.label_list()?));
            }
            'U' | 'u' => {
                cur.bump();
                out.push(Record::Unknot);
            }
            other => return Err(cur.error(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_records() {
        let r = records("# comment\nX(1,2, 3,4) U\n V(5,6,7),V()\n").unwrap();
        assert_eq!(
            r,
            vec![
                Record::Crossing([1, 2, 3, 4]),
                Record::Unknot,
                Record::Vertex(vec![5, 6, 7]),
                Record::Vertex(vec![]),
            ]
        );
    }

    #[test]
    fn error_positions() {
        match records("X(1,2,3,4)\nX(1,2,q,4)") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(records("X(1,2,3)"), Err(Error::Syntax { .. })));
        assert!(matches!(records("X(0,2,3,4)"), Err(Error::Syntax { .. })));
        assert!(matches!(records("Y(1)"), Err(Error::Syntax { .. })));
        assert!(matches!(records("X(1,2,3,4"), Err(Error::Syntax { .. })));
    }
}
