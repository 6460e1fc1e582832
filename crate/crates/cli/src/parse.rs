//! Reader for `gl(M|N) [a1,...,aM | b1,...,bN]`.

use std::fmt;

use supercup_core::SuperWeight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        self.ws();
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            self.err(format!("expected `{lit}`"))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    // Comma separated integers up to (not including) `end`.
    fn list(&mut self, end: u8) -> Result<Vec<i64>, ParseError> {
        let mut v = vec![];
        if self.peek() == Some(end) {
            return Ok(v);
        }
        loop {
            v.push(self.int()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(c) if c == end => return Ok(v),
                _ => return self.err(format!("expected `,` or `{}`", end as char)),
            }
        }
    }
}

pub fn parse_weight(input: &str) -> Result<SuperWeight, ParseError> {
    let mut c = Cursor { s: input.as_bytes(), pos: 0 };
    c.ws();
    if c.s[c.pos..].len() >= 2 && c.s[c.pos..c.pos + 2].eq_ignore_ascii_case(b"gl") {
        c.pos += 2;
    } else {
        return c.err("expected `gl`");
    }
    c.expect("(")?;
    let m = c.int()?;
    c.expect("|")?;
    let n = c.int()?;
    c.expect(")")?;
    if m < 0 || n < 0 {
        return Err(ParseError { pos: 0, msg: "m and n must be non-negative".into() });
    }
    c.expect("[")?;
    let top_at = c.pos;
    let top = c.list(b'|')?;
    c.expect("|")?;
    let bottom_at = c.pos;
    let bottom = c.list(b']')?;
    c.expect("]")?;
    c.ws();
    if c.pos != c.s.len() {
        return c.err("trailing input");
    }
    let (m, n) = (m as usize, n as usize);
    if top.len() != m {
        return Err(ParseError { pos: top_at, msg: format!("expected {m} top entries, got {}", top.len()) });
    }
    if bottom.len() != n {
        return Err(ParseError {
            pos: bottom_at,
            msg: format!("expected {n} bottom entries, got {}", bottom.len()),
        });
    }
    SuperWeight::new(m, n, top, bottom).map_err(|e| ParseError { pos: top_at, msg: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let w = parse_weight("gl(4|2) [0,0,0,-5 | 5,0]").unwrap();
        assert_eq!(w.top, vec![0, 0, 0, -5]);
        assert_eq!(w.bottom, vec![5, 0]);
        assert_eq!(parse_weight(&w.to_string()).unwrap(), w);
        assert_eq!(parse_weight("GL(0|0)[|]").unwrap(), SuperWeight::trivial(0, 0));
    }

    #[test]
    fn reports_positions() {
        let e = parse_weight("gl(2|1) [0,x | 0]").unwrap_err();
        assert_eq!(e.pos, 11);
        assert!(parse_weight("gl(2|1) [0,1 | 0]").unwrap_err().msg.contains("decreasing"));
        assert!(parse_weight("gl(2|1) [0 | 0]").unwrap_err().msg.contains("expected 2"));
        assert!(parse_weight("gl(2|1) [0,0 | 0] x").is_err());
    }
}
