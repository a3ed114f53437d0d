//! Canonical text form: `-3*x[+]^2*y[-] + A^-3 + 7`.
//!
//! Terms appear in canonical monomial order, coefficients of magnitude one
//! are omitted (except for the constant term) and exponents equal to one are
//! omitted. `parse(to_string(p)) == p` for every polynomial.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;



use super::{Coefficient, Color, Monomial, MultiPoly, PolyError, Var};

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::LowerX(c) => write!(f, "x[{c}]"),
            Var::LowerY(c) => write!(f, "y[{c}]"),
            Var::UpperX(c) => write!(f, "X[{c}]"),
            Var::UpperY(c) => write!(f, "Y[{c}]"),
            Var::XLoc => f.write_str("Xloc"),
            Var::YLoc => f.write_str("Yloc"),
            Var::D => f.write_str("d"),
            Var::A => f.write_str("A"),
            Var::Q => f.write_str("q"),
            Var::PlainX => f.write_str("x"),
            Var::PlainY => f.write_str("y"),
            Var::PlainZ => f.write_str("z"),
            Var::Kappa => f.write_str("kappa"),
            Var::Alpha(k) => write!(f, "alpha[{k}]"),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Error from [`MultiPoly::from_str`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at byte {offset}: {message}")]
pub struct ParsePolyError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: &str) -> Result<T, ParsePolyError> {
        Err(ParsePolyError { offset: self.pos, message: message.to_string() })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn bracketed(&mut self) -> Result<&'a str, ParsePolyError> {
        if !self.eat('[') {
            return self.err("expected '['");
        }
        let inner = self.take_while(|c| c != ']');
        if !self.eat(']') {
            return self.err("unterminated '['");
        }
        Ok(inner)
    }

    fn var(&mut self) -> Result<Var, ParsePolyError> {
        let name = self.take_while(|c| c.is_ascii_alphabetic());
        let color = |p: &mut Self| -> Result<Color, ParsePolyError> {
            let inner = p.bracketed()?;
            Color::new(inner).or_else(|_| p.err("invalid color name"))
        };
        let v = match name {
            "x" if self.peek() == Some('[') => Var::LowerX(color(self)?),
            "y" if self.peek() == Some('[') => Var::LowerY(color(self)?),
            "X" => Var::UpperX(color(self)?),
            "Y" => Var::UpperY(color(self)?),
            "x" => Var::PlainX,
            "y" => Var::PlainY,
            "z" => Var::PlainZ,
            "Xloc" => Var::XLoc,
            "Yloc" => Var::YLoc,
            "d" => Var::D,
            "A" => Var::A,
            "q" => Var::Q,
            "kappa" => Var::Kappa,
            "alpha" => {
                let inner = self.bracketed()?;
                match inner.parse::<u32>() {
                    Ok(k) => Var::Alpha(k),
                    Err(_) => return self.err("alpha index must be a nonnegative integer"),
                }
            }
            "" => return self.err("expected a variable or a number"),
            _ => return self.err("unknown variable"),
        };
        Ok(v)
    }

    fn exponent(&mut self) -> Result<i32, ParsePolyError> {
        if !self.eat('^') {
            return Ok(1);
        }
        let start = self.pos;
        self.eat('-');
        self.take_while(|c| c.is_ascii_digit());
        match self.src[start..self.pos].parse::<i32>() {
            Ok(e) => Ok(e),
            Err(_) => self.err("bad exponent"),
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<(C, Vec<(Var, i32)>), ParsePolyError> {
        let mut coeff = C::one();
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let text = self.take_while(|c| c.is_ascii_digit() || c == '/');
                    match C::from_str(text) {
                        Ok(k) => coeff = coeff * k,
                        Err(_) => return self.err("bad coefficient"),
                    }
                }
                _ => {
                    let v = self.var()?;
                    let e = self.exponent()?;
                    factors.push((v, e));
                }
            }
            self.skip_ws();
            if !self.eat('*') {
                return Ok((coeff, factors));
            }
        }
    }

    fn poly<C: Coefficient>(&mut self) -> Result<MultiPoly<C>, ParsePolyError> {
        let mut out = MultiPoly::zero();
        self.skip_ws();
        let mut negative = self.eat('-');
        loop {
            let (c, factors) = self.term::<C>()?;
            let m = match Monomial::from_factors(factors) {
                Ok(m) => m,
                Err(PolyError::NotInvertible(_)) => {
                    return self.err("negative exponent on a non-invertible variable")
                }
                Err(_) => return self.err("bad monomial"),
            };
            let c = if negative { -c } else { c };
            out += MultiPoly::term(c, m);
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
    }
}

impl<C: Coefficient> FromStr for MultiPoly<C> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser { src: s, pos: 0 }.poly()
    }
}
