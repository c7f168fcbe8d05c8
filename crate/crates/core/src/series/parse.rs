//! Recursive-descent parser for series literals.
//!
//! ```text
//! series := sign? term (('+'|'-') term)* (('+') bigoh)?
//! term   := rat ('*' tpow)? | tpow
//! tpow   := 't' ('^' exp)?
//! exp    := rat | '(' sign? rat ')'
//! rat    := int ('/' posint)?
//! bigoh  := 'O' '(' tpow ')'
//! ```
//!
//! The leading sign and the trailing `O(t^k)` are extensions over the bare
//! grammar so that every `Display` output parses back.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Exponent, PuiseuxNumber, SeriesError};

pub fn parse_series(text: &str) -> Result<PuiseuxNumber, SeriesError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let value = p.series()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a rational number such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<BigRational, SeriesError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let neg = p.eat(b'-');
    if !neg {
        p.eat(b'+');
    }
    p.skip_ws();
    let r = p.rat()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(if neg { -r } else { r })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> SeriesError {
        SeriesError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<(), SeriesError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn series(&mut self) -> Result<PuiseuxNumber, SeriesError> {
        let mut terms: Vec<(Exponent, BigRational)> = Vec::new();
        let mut precision: Option<Exponent> = None;
        self.skip_ws();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        self.skip_ws();
        if self.peek() == Some(b'O') {
            precision = Some(self.bigoh()?);
        } else {
            let (e, c) = self.term()?;
            terms.push((e, if negate { -c } else { c }));
        }
        loop {
            self.skip_ws();
            let negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            if precision.is_some() {
                return Err(self.error("no terms may follow O(...)"));
            }
            self.pos += 1;
            self.skip_ws();
            if self.peek() == Some(b'O') {
                if negate {
                    return Err(self.error("O(...) must be added, not subtracted"));
                }
                precision = Some(self.bigoh()?);
                continue;
            }
            let (e, c) = self.term()?;
            terms.push((e, if negate { -c } else { c }));
        }
        let exact = PuiseuxNumber::from_terms(terms);
        Ok(match precision {
            Some(p) => exact.truncate(p),
            None => exact,
        })
    }

    fn bigoh(&mut self) -> Result<Exponent, SeriesError> {
        self.expect(b'O', "expected 'O'")?;
        self.skip_ws();
        self.expect(b'(', "expected '(' after 'O'")?;
        self.skip_ws();
        let e = self.tpow()?;
        self.skip_ws();
        self.expect(b')', "expected ')'")?;
        Ok(e)
    }

    fn term(&mut self) -> Result<(Exponent, BigRational), SeriesError> {
        match self.peek() {
            Some(b't') => Ok((self.tpow()?, BigRational::one())),
            Some(b'0'..=b'9') => {
                let c = self.rat()?;
                self.skip_ws();
                if self.eat(b'*') {
                    self.skip_ws();
                    Ok((self.tpow()?, c))
                } else {
                    Ok((Exponent::ZERO, c))
                }
            }
            _ => Err(self.error("expected a number or 't'")),
        }
    }

    fn tpow(&mut self) -> Result<Exponent, SeriesError> {
        self.expect(b't', "expected 't'")?;
        self.skip_ws();
        if !self.eat(b'^') {
            return Ok(Exponent::ONE);
        }
        self.skip_ws();
        if self.eat(b'(') {
            self.skip_ws();
            let neg = self.eat(b'-');
            if !neg {
                self.eat(b'+');
            }
            self.skip_ws();
            let r = self.small_rat()?;
            self.skip_ws();
            self.expect(b')', "expected ')'")?;
            Ok(if neg { -r } else { r })
        } else {
            self.small_rat()
        }
    }

    fn small_rat(&mut self) -> Result<Exponent, SeriesError> {
        let start = self.pos;
        let r = self.rat()?;
        let n = i64::try_from(r.numer()).ok();
        let d = i64::try_from(r.denom()).ok();
        match (n, d) {
            (Some(n), Some(d)) => Ok(Exponent::new(n, d)),
            _ => Err(SeriesError::Syntax { offset: start, message: "exponent out of range".into() }),
        }
    }

    fn digits(&mut self) -> Result<BigInt, SeriesError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("ascii digits"))
    }

    fn rat(&mut self) -> Result<BigRational, SeriesError> {
        let n = self.digits()?;
        let save = self.pos;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(SeriesError::Syntax { offset: at, message: "zero denominator".into() });
            }
            Ok(BigRational::new(n, d))
        } else {
            self.pos = save;
            Ok(BigRational::from_integer(n))
        }
    }
}
