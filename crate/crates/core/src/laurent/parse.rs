//! Expression parser for Laurent and rational expressions.
//!
//! Grammar (ASCII, whitespace insignificant):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := ('-' | '+') unary | power
//! power    := atom ('^' exponent)?
//! exponent := ('-' | '+')? INT | '(' ('-' | '+')? INT ')'
//! atom     := INT | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers match `[a-zA-Z][a-zA-Z0-9_]*`; rational literals `p/q` are
//! ordinary divisions. Implicit multiplication is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use super::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownVariable(String),
    ZeroDenominator,
    BadExponent(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 0-based character offset into the input.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = self.position + 1;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?} at column {col}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t} at column {col}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input at column {col}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {v:?} at column {col}"),
            ParseErrorKind::ZeroDenominator => write!(f, "division by zero at column {col}"),
            ParseErrorKind::BadExponent(m) => write!(f, "bad exponent at column {col}: {m}"),
        }
    }
}

/// A quotient `num / den` of Laurent polynomials with `den ≠ 0`.
#[derive(Clone, Debug)]
pub struct RationalExpr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if num.rank() != den.rank() {
            return Err(LaurentError::RankMismatch(num.rank(), den.rank()));
        }
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(RationalExpr { num, den }.simplified())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.rank()).with_names_of(&p);
        RationalExpr { num: p, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Division by a unit monomial is absorbed into the numerator, an exact
    /// quotient collapses the denominator to 1, and the denominator's leading
    /// coefficient is scaled to 1.
    fn simplified(mut self) -> Self {
        let rank = self.num.rank();
        if self.num.is_zero() {
            self.den = LaurentPoly::one(rank).with_names_of(&self.num);
            return self;
        }
        if let Ok(Some(q)) = self.num.exact_div(&self.den) {
            let den = LaurentPoly::one(rank).with_names_of(&q);
            return RationalExpr { num: q, den };
        }
        let (_, lead) = self.den.leading_term().unwrap();
        if !lead.is_one() {
            let k = lead.recip();
            self.num = self.num.scale(&k);
            self.den = self.den.scale(&k);
        }
        self
    }

    pub fn add(&self, other: &RationalExpr) -> Result<RationalExpr, LaurentError> {
        let (num, den) = if self.den == other.den {
            (self.num.try_add(&other.num)?, self.den.clone())
        } else if let Some(k) = other.den.exact_div(&self.den)? {
            (self.num.try_mul(&k)?.try_add(&other.num)?, other.den.clone())
        } else if let Some(k) = self.den.exact_div(&other.den)? {
            (self.num.try_add(&other.num.try_mul(&k)?)?, self.den.clone())
        } else {
            (
                self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?,
                self.den.try_mul(&other.den)?,
            )
        };
        Ok(RationalExpr { num, den }.simplified())
    }

    pub fn neg(&self) -> RationalExpr {
        RationalExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RationalExpr) -> Result<RationalExpr, LaurentError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalExpr) -> Result<RationalExpr, LaurentError> {
        Ok(RationalExpr {
            num: self.num.try_mul(&other.num)?,
            den: self.den.try_mul(&other.den)?,
        }
        .simplified())
    }

    pub fn recip(&self) -> Result<RationalExpr, LaurentError> {
        if self.num.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(RationalExpr {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .simplified())
    }

    pub fn div(&self, other: &RationalExpr) -> Result<RationalExpr, LaurentError> {
        self.mul(&other.recip()?)
    }

    pub fn pow(&self, k: i64) -> Result<RationalExpr, LaurentError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let k = u32::try_from(k.unsigned_abs()).map_err(|_| LaurentError::Overflow)?;
        Ok(RationalExpr {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
        .simplified())
    }

    /// Same function on the torus: `a/b = c/d` iff `a·d = c·b`.
    pub fn equivalent(&self, other: &RationalExpr) -> bool {
        match (self.num.try_mul(&other.den), other.num.try_mul(&self.den)) {
            (Ok(l), Ok(r)) => l == r,
            _ => false,
        }
    }

    /// The exact Laurent polynomial `num / den`, or `NotLaurent`.
    pub fn laurent_normalize(&self) -> Result<LaurentPoly, LaurentError> {
        match self.num.exact_div(&self.den)? {
            Some(q) => Ok(q),
            None => Err(LaurentError::NotLaurent {
                num: self.num.render(),
                den: self.den.render(),
            }),
        }
    }

    pub fn render(&self) -> String {
        if self.den.len() == 1 && self.den.constant_term().is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(other),
                    position: start,
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.offset(),
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn lift(&self, at: usize, e: LaurentError) -> ParseError {
        let kind = match e {
            LaurentError::ZeroDenominator => ParseErrorKind::ZeroDenominator,
            other => ParseErrorKind::BadExponent(other.to_string()),
        };
        ParseError { kind, position: at }
    }

    fn expr(&mut self) -> Result<RationalExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).map_err(|e| self.lift(at, e))?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).map_err(|e| self.lift(at, e))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalExpr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs).map_err(|e| self.lift(at, e))?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs).map_err(|e| self.lift(at, e))?;
                }
                // Two adjacent operands: implicit multiplication is not allowed.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => return Err(self.unexpected()),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalExpr, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalExpr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let k = self.exponent()?;
        base.pow(k).map_err(|e| self.lift(at, e))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parenthesized = self.peek() == Some(&Tok::LParen);
        if parenthesized {
            self.pos += 1;
        }
        let negative = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let k = match self.peek() {
            Some(Tok::Int(n)) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| self.err(ParseErrorKind::BadExponent("exponent too large".into())))?;
                if v > u32::MAX as i64 {
                    return Err(self.err(ParseErrorKind::BadExponent("exponent too large".into())));
                }
                self.pos += 1;
                v
            }
            _ => return Err(self.unexpected()),
        };
        if parenthesized {
            if self.peek() != Some(&Tok::RParen) {
                return Err(self.unexpected());
            }
            self.pos += 1;
        }
        Ok(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<RationalExpr, ParseError> {
        let rank = self.vars.len();
        let names = self.vars.to_vec();
        let lift = |p: LaurentPoly| RationalExpr::from_poly(p.with_varnames(names.clone()).expect("rank"));
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(lift(LaurentPoly::constant(rank, BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                let Some(i) = self.vars.iter().position(|v| *v == name) else {
                    return Err(self.err(ParseErrorKind::UnknownVariable(name)));
                };
                self.pos += 1;
                Ok(lift(LaurentPoly::variable(rank, i)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses `text` over the ordered variable list into a single `num/den`.
pub fn parse<S: AsRef<str>>(text: &str, varnames: &[S]) -> Result<RationalExpr, ParseError> {
    let vars: Vec<String> = varnames.iter().map(|s| s.as_ref().to_string()).collect();
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        vars: &vars,
    };
    let result = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(parser.unexpected());
    }
    Ok(result)
}

#[derive(Debug, Error)]
pub enum ParseLaurentError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// `parse` followed by `laurent_normalize`.
pub fn parse_laurent<S: AsRef<str>>(text: &str, varnames: &[S]) -> Result<LaurentPoly, ParseLaurentError> {
    Ok(parse(text, varnames)?.laurent_normalize()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{rational, ExponentVector};

    const XY: [&str; 2] = ["x", "y"];

    #[test]
    fn direct_syntax() {
        let e = parse("x + y + x^-1*y^-1", &XY).unwrap();
        assert!(e.den().is_monomial() && e.den().constant_term() == rational(1));
        let f = e.laurent_normalize().unwrap();
        assert_eq!(f.len(), 3);
        for exp in [[1, 0], [0, 1], [-1, -1]] {
            assert_eq!(f.coefficient(&ExponentVector::from(exp)).unwrap(), rational(1));
        }
    }

    #[test]
    fn binomial_over_monomial() {
        let f = parse_laurent("(1+y)^2/(x*y)", &XY).unwrap();
        let expected = LaurentPoly::from_int_terms(2, vec![([-1, -1], 1), ([-1, 0], 2), ([-1, 1], 1)]);
        assert_eq!(f, expected);
    }

    #[test]
    fn cancellation() {
        let f = parse_laurent("x - x", &XY).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            parse_laurent("(x^2-1)/(x-1)", &["x"]).unwrap(),
            LaurentPoly::from_int_terms(1, vec![([1], 1), ([0], 1)])
        );
        assert_eq!(
            parse_laurent("(x+y)/(x*y)", &XY).unwrap(),
            LaurentPoly::from_int_terms(2, vec![([0, -1], 1), ([-1, 0], 1)])
        );
        let e = parse("(x+1)/(y+1)", &XY).unwrap();
        assert!(matches!(e.laurent_normalize(), Err(LaurentError::NotLaurent { .. })));
    }

    #[test]
    fn rational_literals_and_unary() {
        let f = parse_laurent("-1/2*x^2 + 3/4", &["x"]).unwrap();
        assert_eq!(
            f.coefficient(&ExponentVector::from([2])).unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(f.constant_term(), BigRational::new(3.into(), 4.into()));
        let g = parse_laurent("x^(-2) - -x", &["x"]).unwrap();
        assert_eq!(g, LaurentPoly::from_int_terms(1, vec![([-2], 1), ([1], 1)]));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("x + w", &XY).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        assert_eq!(e.position, 4);

        let e = parse("x / 0", &XY).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(e.position, 2);

        let e = parse("2x", &XY).unwrap_err();
        assert_eq!(e.position, 1);

        let e = parse("(x + y", &XY).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);

        let e = parse("x $ y", &XY).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('$'));

        assert!(parse("x^y", &XY).is_err());
        assert!(parse("", &XY).is_err());
        assert!(parse("(x-x)^-1", &XY).is_err());
    }

    #[test]
    fn general_division_stays_rational() {
        let e = parse("x/(1+y)", &XY).unwrap();
        assert_eq!(e.den(), &parse_laurent("1+y", &XY).unwrap());
        let back = e.mul(&parse("1+y", &XY).unwrap()).unwrap();
        assert_eq!(back.laurent_normalize().unwrap(), parse_laurent("x", &XY).unwrap());
        assert!(e.equivalent(&parse("(x*y + x)/((1+y)^2)", &XY).unwrap()));
    }
}
