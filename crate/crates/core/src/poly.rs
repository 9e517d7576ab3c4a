//! Sparse polynomials in `x` and `y` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    // (x exponent, y exponent) -> coefficient; zero coefficients are never stored
    terms: BTreeMap<(u32, u32), i128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub x: u32,
    pub y: u32,
    pub c: i128,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(coefficient: i128, x: u32, y: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(coefficient, x, y);
        p
    }

    /// Builds `Σ c x^a y^b` from `(c, a, b)` triples.
    pub fn from_terms(terms: &[(i128, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, a, b) in terms {
            p.add_term(c, a, b);
        }
        p
    }

    pub fn add_term(&mut self, coefficient: i128, x: u32, y: u32) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry((x, y)).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&(x, y));
        }
    }

    pub fn coefficient(&self, x: u32, y: u32) -> i128 {
        self.terms.get(&(x, y)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(x, y), &c)| ((x + a, y + b), c)).collect(),
        }
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.terms
            .iter()
            .map(|(&(a, b), &c)| c * x.pow(a) * y.pow(b))
            .sum()
    }

    /// Terms in display order: `x` exponent descending, then `y` ascending.
    pub fn terms(&self) -> Vec<Term> {
        let mut terms: Vec<Term> = self.terms.iter().map(|(&(x, y), &c)| Term { x, y, c }).collect();
        terms.sort_by(|a, b| b.x.cmp(&a.x).then(a.y.cmp(&b.y)));
        terms
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire {
            terms: Vec<Term>,
        }
        serde_json::to_string(&Wire { terms: self.terms() }).expect("terms serialize")
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), &c) in &rhs.terms {
            out.add_term(c, a, b);
        }
        out
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self + &rhs
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &rhs.terms {
                out.add_term(c1 * c2, a1 + a2, b1 + b2);
            }
        }
        out
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, name: &str, exp: u32, first: &mut bool) -> fmt::Result {
    if exp == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    f.write_str(name)?;
    if exp > 1 {
        write!(f, "^{exp}")?;
    }
    Ok(())
}

/// `x^3+2*x^2+x+2*x*y+y+y^2`: `x` exponent descending, then `y` ascending.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in terms.iter().enumerate() {
            if t.c < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = t.c.unsigned_abs();
            let mut first = true;
            if mag != 1 || (t.x == 0 && t.y == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            write_monomial(f, "x", t.x, &mut first)?;
            write_monomial(f, "y", t.y, &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts the usual hand-written forms: `x^3+2x^2+(4y+2)x`, `2*x*y`, `-y`.
impl FromStr for BivariatePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { chars, pos: 0 };
        let p = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(p)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("polynomial: {what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<BivariatePolynomial> {
        let mut acc = BivariatePolynomial::zero();
        let mut sign = 1;
        if let Some(c @ ('+' | '-')) = self.peek() {
            sign = if c == '-' { -1 } else { 1 };
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = &acc + &(&t * &BivariatePolynomial::monomial(sign, 0, 0));
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<BivariatePolynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == 'x' || c == 'y' || c == '(' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<BivariatePolynomial> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.number()?;
        let mut out = BivariatePolynomial::one();
        for _ in 0..exp {
            out = &out * &base;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<BivariatePolynomial> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(BivariatePolynomial::x())
            }
            Some('y') => {
                self.pos += 1;
                Ok(BivariatePolynomial::y())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(BivariatePolynomial::monomial(n as i128, 0, 0))
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("expected a number"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_order() {
        let p = BivariatePolynomial::from_terms(&[(1, 3, 0), (2, 2, 0), (1, 1, 0), (2, 1, 1), (1, 0, 1), (1, 0, 2)]);
        assert_eq!(p.to_string(), "x^3+2*x^2+x+2*x*y+y+y^2");
        assert_eq!(BivariatePolynomial::one().to_string(), "1");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
        assert_eq!(BivariatePolynomial::from_terms(&[(-1, 1, 0), (-3, 0, 0)]).to_string(), "-x-3");
    }

    #[test]
    fn parses_hand_written_forms() {
        let k4: BivariatePolynomial = "y^3+3y^2+2y+(4y+2)x+3x^2+x^3".parse().unwrap();
        assert_eq!(k4.to_string(), "x^3+3*x^2+2*x+4*x*y+2*y+3*y^2+y^3");
        assert_eq!(k4.eval(1, 1), 16);
        let p: BivariatePolynomial = "x^3+2x^2+x+2xy+y+y^2".parse().unwrap();
        assert_eq!(p.eval(1, 1), 8);
        assert_eq!("-x+x".parse::<BivariatePolynomial>().unwrap(), BivariatePolynomial::zero());
        assert!("x+".parse::<BivariatePolynomial>().is_err());
        assert!("(x".parse::<BivariatePolynomial>().is_err());
    }

    #[test]
    fn json_shape() {
        let p = BivariatePolynomial::from_terms(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(p.to_json(), r#"{"terms":[{"x":1,"y":0,"c":1},{"x":0,"y":1,"c":1}]}"#);
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePolynomial> {
        prop::collection::vec((-5i128..=5, 0u32..4, 0u32..4), 0..6)
            .prop_map(|terms| BivariatePolynomial::from_terms(&terms))
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), x in -3i128..=3, y in -3i128..=3) {
            prop_assert_eq!((&p + &q).eval(x, y), p.eval(x, y) + q.eval(x, y));
            prop_assert_eq!((&p * &q).eval(x, y), p.eval(x, y) * q.eval(x, y));
        }

        #[test]
        fn display_parses_back(p in arb_poly()) {
            let back: BivariatePolynomial = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
