//! Parser for the textual polynomial grammar.
//!
//! ```text
//! polynomial ::= ["+"|"-"] term { ("+"|"-") term }
//! term       ::= rational [ "*" var-power { "*" var-power } ]
//!              |          var-power { "*" var-power }
//! var-power  ::= "z" index [ "^" exponent ]
//! rational   ::= integer [ "/" positive-integer ]
//! ```
//!
//! Whitespace is insignificant between tokens. A leading coefficient of `1`
//! may be omitted (`z3`, `-z2` are valid terms), which is exactly the
//! shorthand the canonical printer emits. Errors carry a 1-based line and
//! column pointing at the offending character.

use num::bigint::BigInt;
use num::traits::Zero;

use crate::poly::Poly;
use crate::rat::{rone, Rat};

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    fn line_col(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in self.chars.iter().take(pos) {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.line_col(pos.min(self.chars.len()));
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Reads a nonempty digit run as a `BigInt`.
    fn digits(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(start, format!("expected {what}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| self.error(start, format!("invalid {what}")))
    }

    fn digits_usize(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        let start = self.pos;
        let big = self.digits(what)?;
        let val: usize = big
            .try_into()
            .map_err(|_| self.error(start, format!("{what} too large")))?;
        Ok((val, start))
    }
}

/// `var-power ::= "z" index ["^" exponent]`; returns `(index, exponent)`.
fn var_power(cur: &mut Cursor, nvars: usize) -> Result<(usize, u32), ParseError> {
    let zpos = cur.pos;
    if !cur.eat('z') {
        return Err(cur.error(zpos, "expected variable 'z<index>'"));
    }
    let (index, ipos) = cur.digits_usize("variable index")?;
    if index < 1 || index > nvars {
        return Err(cur.error(ipos, format!("variable index {index} out of range 1..={nvars}")));
    }
    cur.skip_ws();
    let exp = if cur.eat('^') {
        cur.skip_ws();
        let (e, epos) = cur.digits_usize("exponent")?;
        u32::try_from(e).map_err(|_| cur.error(epos, "exponent too large"))?
    } else {
        1
    };
    Ok((index, exp))
}

/// One term, without its leading sign; adds it into `acc` scaled by `sign`.
fn term(cur: &mut Cursor, nvars: usize, sign: Rat, acc: &mut Poly) -> Result<(), ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    let mut coeff = rone();
    let mut saw_coeff = false;

    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let num = cur.digits("integer")?;
        cur.skip_ws();
        coeff = if cur.eat('/') {
            cur.skip_ws();
            let dpos = cur.pos;
            let den = cur.digits("positive integer denominator")?;
            if den.is_zero() {
                return Err(cur.error(dpos, "zero denominator"));
            }
            Rat::new(num, den)
        } else {
            Rat::from_integer(num)
        };
        saw_coeff = true;
    }

    let mut powers: Vec<(usize, u32)> = Vec::new();
    if saw_coeff {
        loop {
            cur.skip_ws();
            let save = cur.pos;
            if cur.eat('*') {
                cur.skip_ws();
                powers.push(var_power(cur, nvars)?);
            } else {
                cur.pos = save;
                break;
            }
        }
    } else {
        if cur.peek() != Some('z') {
            return Err(cur.error(start, "expected a rational coefficient or a variable"));
        }
        powers.push(var_power(cur, nvars)?);
        loop {
            cur.skip_ws();
            let save = cur.pos;
            if cur.eat('*') {
                cur.skip_ws();
                powers.push(var_power(cur, nvars)?);
            } else {
                cur.pos = save;
                break;
            }
        }
    }

    let mono = Poly::monomial(nvars, &powers, sign * coeff);
    *acc = acc.add(&mono);
    Ok(())
}

/// Parses a polynomial in the textual grammar on a chart with `nvars`
/// variables. Whitespace is insignificant; errors carry line/column.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly, ParseError> {
    let mut cur = Cursor::new(text);
    let mut acc = Poly::zero(nvars);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error(cur.pos, "empty polynomial"));
    }
    // Optional sign on the first term.
    let first_sign = if cur.eat('-') {
        -rone()
    } else {
        cur.eat('+');
        rone()
    };
    term(&mut cur, nvars, first_sign, &mut acc)?;
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.bump();
                term(&mut cur, nvars, rone(), &mut acc)?;
            }
            Some('-') => {
                cur.bump();
                term(&mut cur, nvars, -rone(), &mut acc)?;
            }
            Some(c) => {
                return Err(cur.error(cur.pos, format!("unexpected character '{c}'")));
            }
        }
    }
    let _ = cur.text;
    Ok(acc)
}
