use std::str::FromStr;

use num_bigint::BigInt;

use super::{narrow, Exponent, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at byte {position}: {message}")]
pub struct ParsePolyError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParsePolyError {
        ParsePolyError { position: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Result<&'a str, ParsePolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn signed_int(&mut self) -> Result<i64, ParsePolyError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }

    /// factor ('*' factor)*
    fn term(&mut self) -> Result<(BigInt, Exponent), ParsePolyError> {
        let mut coeff = BigInt::from(1);
        let mut exp = [0i64; 3];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits()?;
                    coeff *= d.parse::<BigInt>().expect("digits");
                }
                Some(c @ (b'q' | b's' | b't')) => {
                    self.pos += 1;
                    let mut k = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        k = self.signed_int()?;
                    }
                    let slot = match c {
                        b'q' => 0,
                        b's' => 1,
                        _ => 2,
                    };
                    exp[slot] += k;
                }
                Some(_) => return Err(self.err("expected a coefficient or one of q, s, t")),
                None => return Err(self.err("unexpected end of input")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Exponent::new(narrow(exp[0]), narrow(exp[1]), narrow(exp[2]))))
    }
}

/// Parses the canonical rendering (and any reordering of it): a signed sum of
/// terms, each a `*`-separated product of integers and powers of `q`, `s`, `t`.
impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match cur.peek() {
                None if first => return Err(cur.err("empty input")),
                None => break,
                Some(b'-') => {
                    cur.pos += 1;
                    true
                }
                Some(b'+') => {
                    cur.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(_) => return Err(cur.err("expected '+' or '-' between terms")),
            };
            first = false;
            let (c, e) = cur.term()?;
            terms.push((if negative { -c } else { c }, e));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
