//! Recursive-descent parser for the multisegment notation.
//!
//! ```text
//! segment      := '[' int ',' int ']' ('@' label ':' degree)?
//! multisegment := ('Z'|'Q') '{' segment (',' segment)* '}' ('*' 'v^' rational)?
//! product      := multisegment ('x' multisegment)*
//! ```
//!
//! Exponents in the surface syntax are integers; the optional twist is an
//! integer or half-integer written `n` or `n/2`. A segment without `@`
//! defaults to the principal degree-one line `c1`.

use std::fmt;

use periods_core::{CuspidalLine, Factor, Form, FormalProduct, Multisegment, Segment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{}`", c as char))
        }
    }

    fn try_eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return self.error("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<i64>() {
            Ok(v) if v.abs() <= 1_000_000 => Ok(v),
            _ => Err(ParseError {
                position: start,
                message: format!("integer `{text}` out of range"),
            }),
        }
    }

    fn label(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a line label");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }

    fn segment(&mut self) -> Result<Segment, ParseError> {
        self.eat(b'[')?;
        let start = self.int()?;
        self.eat(b',')?;
        let end = self.int()?;
        self.eat(b']')?;
        let line = if self.try_eat(b'@') {
            let label = self.label()?;
            self.eat(b':')?;
            let at = self.pos;
            let degree = self.int()?;
            if degree < 1 {
                return Err(ParseError {
                    position: at,
                    message: format!("line degree must be positive, got {degree}"),
                });
            }
            CuspidalLine::new(label, degree as u32)
        } else {
            CuspidalLine::principal()
        };
        Segment::new(line, start as i32, end as i32).map_err(|e| ParseError {
            position: self.pos,
            message: e.to_string(),
        })
    }

    /// Twist suffix `* v^n` or `* v^n/2`, in doubled units.
    fn twist2(&mut self) -> Result<i64, ParseError> {
        if !self.try_eat(b'*') {
            return Ok(0);
        }
        self.skip_ws();
        if self.peek() != Some(b'v') {
            return self.error("expected `v^` after `*`");
        }
        self.pos += 1;
        self.eat(b'^')?;
        let num = self.int()?;
        if self.try_eat(b'/') {
            let at = self.pos;
            let den = self.int()?;
            if den != 2 {
                return Err(ParseError {
                    position: at,
                    message: "only half-integer twists are supported (denominator 2)".into(),
                });
            }
            Ok(num)
        } else {
            Ok(2 * num)
        }
    }

    fn multisegment(&mut self) -> Result<Multisegment, ParseError> {
        self.skip_ws();
        let form = match self.peek() {
            Some(b'Z') => Form::Z,
            Some(b'Q') => Form::Q,
            _ => return self.error("expected `Z` or `Q`"),
        };
        self.pos += 1;
        self.eat(b'{')?;
        let mut segments = vec![self.segment()?];
        while self.try_eat(b',') {
            segments.push(self.segment()?);
        }
        self.eat(b'}')?;
        let twist2 = self.twist2()?;
        Multisegment::new(form, segments, twist2).map_err(|e| ParseError {
            position: self.pos,
            message: e.to_string(),
        })
    }

    fn product(&mut self) -> Result<FormalProduct, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'x') {
                self.pos += 1;
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(FormalProduct::new(factors))
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        // A factor twist shifts the factor's exponents, so it is folded in
        // right away; half-integer twists land on the half-shifted lattice.
        let m = self.multisegment()?.twist_folded();
        if m.len() == 1 {
            Ok(Factor::Seg(m.form(), m.segments()[0].clone()))
        } else {
            Ok(Factor::Label(m))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }
}

pub fn parse_multisegment(src: &str) -> Result<Multisegment, ParseError> {
    let mut p = Parser::new(src);
    let m = p.multisegment()?;
    p.finish()?;
    Ok(m)
}

pub fn parse_product(src: &str) -> Result<FormalProduct, ParseError> {
    let mut p = Parser::new(src);
    let prod = p.product()?;
    p.finish()?;
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_forms() {
        let m = parse_multisegment("Z{[0,1],[1,4]}").unwrap();
        assert_eq!(m.to_string(), "Z{[0,1],[1,4]}");
        let m = parse_multisegment("Q{[0,1]}*v^-3/2").unwrap();
        assert_eq!(m.twist2(), -3);
        let m = parse_multisegment("Z{[0,1]@rho2:2}").unwrap();
        assert_eq!(m.segments()[0].line.degree, 2);
    }

    #[test]
    fn parses_products() {
        let p = parse_product("Z{[0,1]} x Z{[1,2]} x Z{[3,4]}").unwrap();
        assert_eq!(p.factors.len(), 3);
        assert_eq!(p.dimension(), 6);
    }

    #[test]
    fn reports_positions() {
        let e = parse_multisegment("Z{[0,1],[2}").unwrap_err();
        assert!(e.position > 0);
        assert!(e.to_string().contains("parse error at byte"));
        assert!(parse_multisegment("Z{[0,1]} trailing").is_err());
        assert!(parse_multisegment("W{[0,1]}").is_err());
    }
}
