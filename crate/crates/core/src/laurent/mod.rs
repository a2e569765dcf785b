//! Exact sparse Laurent polynomials over a rank-`n` exponent lattice.
//!
//! A [`LaurentPoly`] is a finite map from [`ExponentVector`]s to nonzero
//! [`BigRational`] coefficients. This is the carrier for super-potentials,
//! their powers and constant terms, and the images of monomial changes of
//! coordinates and mutations.
//!
//! Arithmetic is exact and results are always in canonical form: no stored
//! coefficient is zero, so structural equality is ring equality.

mod parse;
mod polytope;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::IntMatrix;

pub use parse::{parse, parse_laurent, ParseError, ParseErrorKind, ParseLaurentError, RationalExpr};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("expected {expected} variable names, got {got}")]
    VarnameCount { expected: usize, got: usize },
    #[error("not a Laurent polynomial: denominator {den} does not divide numerator {num}")]
    NotLaurent { num: String, den: String },
    #[error("division by zero")]
    ZeroDenominator,
    #[error("evaluation point has a zero coordinate at index {0}")]
    ZeroCoordinate(usize),
    #[error("Newton polytope of the zero polynomial is empty")]
    EmptyPolynomial,
    #[error("monomial map has {cols} columns but the polynomial has rank {rank}")]
    MapDimension { cols: usize, rank: usize },
    #[error("exponent overflow")]
    Overflow,
}

/// Integer exponent of a monomial `x^e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(rank: usize) -> Self {
        ExponentVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|e| e * k).collect())
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn default_varnames(rank: usize) -> Vec<String> {
    match rank {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=rank).map(|i| format!("x{i}")).collect(),
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed lexicographically by exponent; the
/// lexicographic maximum is the leading term used by exact division.
#[derive(Clone)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
    varnames: Vec<String>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
            varnames: default_varnames(rank),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigRational::one())
    }

    pub fn constant(rank: usize, c: BigRational) -> Self {
        Self::monomial(ExponentVector::zero(rank), c)
    }

    pub fn monomial(exp: ExponentVector, c: BigRational) -> Self {
        let rank = exp.len();
        let mut p = Self::zero(rank);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The `i`-th coordinate function `x_i`.
    pub fn variable(rank: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(rank, i), BigRational::one())
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "exponent length must equal rank");
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer-coefficient terms.
    pub fn from_int_terms<E: Into<ExponentVector>>(rank: usize, terms: Vec<(E, i64)>) -> Self {
        Self::from_terms(rank, terms.into_iter().map(|(e, c)| (e.into(), rational(c))))
    }

    pub fn with_varnames(mut self, names: Vec<String>) -> Result<Self, LaurentError> {
        if names.len() != self.rank {
            return Err(LaurentError::VarnameCount {
                expected: self.rank,
                got: names.len(),
            });
        }
        self.varnames = names;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn varnames(&self) -> &[String] {
        &self.varnames
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is a single monomial.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.rank != other.rank {
            Err(LaurentError::RankMismatch(self.rank, other.rank))
        } else {
            Ok(())
        }
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Result<BigRational, LaurentError> {
        if e.len() != self.rank {
            return Err(LaurentError::RankMismatch(self.rank, e.len()));
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(BigRational::zero))
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&ExponentVector::zero(self.rank))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut out = LaurentPoly::zero(self.rank);
        out.varnames = self.varnames.clone();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term(e + f, c * d);
            }
        }
        Ok(out)
    }

    /// Multiplication with the outer loop split across rayon workers.
    ///
    /// Each worker accumulates a partial product over a chunk of `self`'s
    /// terms; partials are merged in chunk order. Exact arithmetic makes the
    /// result identical to [`LaurentPoly::try_mul`].
    pub fn try_mul_par(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let left: Vec<_> = self.terms.iter().collect();
        let chunk = (left.len() / (4 * rayon::current_num_threads()).max(1)).max(16);
        let partials: Vec<LaurentPoly> = left
            .par_chunks(chunk)
            .map(|part| {
                let mut acc = LaurentPoly::zero(self.rank);
                for (e, c) in part {
                    for (f, d) in &other.terms {
                        acc.add_term(*e + f, *c * d);
                    }
                }
                acc
            })
            .collect();
        let mut out = LaurentPoly::zero(self.rank);
        out.varnames = self.varnames.clone();
        for p in partials {
            for (e, c) in p.terms {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigRational) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero(self.rank).with_names_of(self);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    /// Multiplies by the monomial `c·x^e`.
    pub fn shift(&self, e: &ExponentVector, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank).with_names_of(self);
        }
        let terms = self.terms.iter().map(|(f, d)| (f + e, d * c)).collect();
        LaurentPoly {
            rank: self.rank,
            terms,
            varnames: self.varnames.clone(),
        }
    }

    /// `f^k` by iterated multiplication `f · f^(k-1)`; `f^0 = 1` for every `f`.
    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.rank).with_names_of(self);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub(crate) fn with_names_of(mut self, other: &LaurentPoly) -> LaurentPoly {
        if other.rank == self.rank {
            self.varnames = other.varnames.clone();
        }
        self
    }

    /// Pulls back along the monomial map `x^e ↦ y^(A·e)`.
    ///
    /// Column `j` of `a` is the image exponent of the `j`-th source variable;
    /// the result has rank `a.nrows()` and colliding images are summed.
    pub fn monomial_substitute(&self, a: &IntMatrix) -> Result<LaurentPoly, LaurentError> {
        if a.ncols() != self.rank {
            return Err(LaurentError::MapDimension {
                cols: a.ncols(),
                rank: self.rank,
            });
        }
        let mut out = LaurentPoly::zero(a.nrows());
        for (e, c) in &self.terms {
            let image = a.mul_vec(e.as_slice()).map_err(|_| LaurentError::Overflow)?;
            out.add_term(ExponentVector(image), c.clone());
        }
        Ok(out)
    }

    /// Vertices of the Newton polytope, sorted lexicographically.
    pub fn newton_polytope(&self) -> Result<Vec<ExponentVector>, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::EmptyPolynomial);
        }
        let points: Vec<ExponentVector> = self.terms.keys().cloned().collect();
        Ok(polytope::hull_vertices(&points))
    }

    /// Numeric value at a point of the complex torus.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64, LaurentError> {
        if point.len() != self.rank {
            return Err(LaurentError::RankMismatch(self.rank, point.len()));
        }
        if let Some(i) = point.iter().position(|z| z.norm() == 0.0) {
            return Err(LaurentError::ZeroCoordinate(i));
        }
        let mut total = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = Complex64::new(rational_to_f64(c), 0.0);
            for (z, &k) in point.iter().zip(e.as_slice()) {
                m *= z.powi(k as i32);
            }
            total += m;
        }
        Ok(total)
    }

    /// Exact quotient `self / den` in the Laurent ring, if it exists.
    ///
    /// Division with remainder against the lexicographic leading term. Every
    /// quotient exponent must lie in the box `[min(num) - min(den), max(num) -
    /// max(den)]` coordinate-wise (Newton polytopes add under multiplication),
    /// so leaving that box proves non-divisibility and bounds the loop.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<Option<LaurentPoly>, LaurentError> {
        self.check_rank(den)?;
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.rank).with_names_of(self)));
        }
        if den.is_monomial() {
            let (e, c) = den.leading_term().unwrap();
            return Ok(Some(self.shift(&-e, &c.recip())));
        }
        let (lo_n, hi_n) = self.bounding_box();
        let (lo_d, hi_d) = den.bounding_box();
        let lo: Vec<i64> = lo_n.iter().zip(&lo_d).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_n.iter().zip(&hi_d).map(|(a, b)| a - b).collect();

        let (lead_e, lead_c) = den.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero(self.rank).with_names_of(self);
        while let Some((re, rc)) = rem.leading_term() {
            let qe = re - &lead_e;
            let in_box = qe
                .as_slice()
                .iter()
                .zip(lo.iter().zip(&hi))
                .all(|(q, (l, h))| l <= q && q <= h);
            if !in_box {
                return Ok(None);
            }
            let qc = rc / &lead_c;
            rem = rem.try_sub(&den.shift(&qe, &qc))?;
            quotient.add_term(qe, qc);
        }
        Ok(Some(quotient))
    }

    /// Coordinate-wise minimum and maximum exponents over the support.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for e in self.terms.keys() {
            for (i, &v) in e.as_slice().iter().enumerate() {
                lo[i] = lo[i].min(v);
                hi[i] = hi[i].max(v);
            }
        }
        (lo, hi)
    }

    /// Terms in display order: graded by total degree, then lexicographic,
    /// both descending.
    pub fn display_terms(&self) -> Vec<(&ExponentVector, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.total_degree().cmp(&a.total_degree()).then_with(|| b.cmp(a)));
        terms
    }

    /// Renders in the expression grammar accepted by [`parse`].
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.display_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial: Vec<String> = e
                .as_slice()
                .iter()
                .zip(&self.varnames)
                .filter(|(k, _)| **k != 0)
                .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            if monomial.is_empty() {
                out.push_str(&coeff);
            } else if abs.is_one() {
                out.push_str(&monomial.join("*"));
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&monomial.join("*"));
            }
        }
        out
    }
}

/// Parses `n` or `p/q` (optionally signed decimal integers).
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let num: BigInt = num.trim().parse().ok()?;
    let den: BigInt = den.trim().parse().ok()?;
    (!den.is_zero()).then(|| BigRational::new(num, den))
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.rank, self.render())
    }
}

// Operator impls panic on rank mismatch; the `try_*` methods report it.

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("rank mismatch in Laurent addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("rank mismatch in Laurent subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("rank mismatch in Laurent multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, vars: &[&str]) -> LaurentPoly {
        parse_laurent(text, vars).unwrap()
    }

    fn e<const N: usize>(v: [i64; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = LaurentPoly::variable(2, 0);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn square_of_x_plus_inverse() {
        let f = p("x + 1/x", &["x"]);
        assert_eq!(&f * &f, p("x^2 + 2 + x^-2", &["x"]));
    }

    #[test]
    fn scaling() {
        let f = p("x+y+1/(x*y)", &["x", "y"]);
        assert_eq!(f.scale(&rational(2)), p("2*x+2*y+2/(x*y)", &["x", "y"]));
        assert!(f.scale(&rational(0)).is_zero());
    }

    #[test]
    fn rank_mismatch_reported() {
        let a = LaurentPoly::variable(2, 0);
        let b = LaurentPoly::variable(3, 0);
        assert_eq!(a.try_add(&b), Err(LaurentError::RankMismatch(2, 3)));
        assert_eq!(a.try_mul(&b), Err(LaurentError::RankMismatch(2, 3)));
        assert!(a.coefficient(&e([0, 0, 0])).is_err());
    }

    #[test]
    fn powers() {
        let f = p("x+y", &["x", "y"]);
        assert_eq!(f.pow(2), p("x^2 + 2*x*y + y^2", &["x", "y"]));
        assert_eq!(LaurentPoly::zero(2).pow(0), LaurentPoly::one(2));
        assert!(LaurentPoly::zero(2).pow(3).is_zero());
        let w = p("x+y+1/(x*y)", &["x", "y"]);
        let w3 = w.pow(3);
        // multinomial enumeration: x*y*(xy)^-1 arises in 3! orders
        assert_eq!(w3.constant_term(), rational(6));
        // x*y^2: 3!/(1!2!) = 3
        assert_eq!(w3.coefficient(&e([1, 2])).unwrap(), rational(3));
    }

    #[test]
    fn quadric_constant_term() {
        let f = p("x + (1+y)^2/(x*y)", &["x", "y"]);
        assert_eq!(f.pow(2).constant_term(), rational(4));
        assert_eq!(p("x+y+1/(x*y)", &["x", "y"]).constant_term(), rational(0));
    }

    #[test]
    fn monomial_substitution_examples() {
        let g = p("v + u + 1/u + 1/(u^2*v)", &["u", "v"]);
        // u -> (-1,-1), v -> (2,0)
        let a = IntMatrix::from_columns(&[[-1, -1], [2, 0]]).unwrap();
        let image = g.monomial_substitute(&a).unwrap();
        assert_eq!(image, p("x^2 + x*y + y^2 + 1/(x*y)", &["x", "y"]));

        let f = p("x+y", &["x", "y"]);
        assert_eq!(f.monomial_substitute(&IntMatrix::identity(2)).unwrap(), f);
        let collapse = IntMatrix::from_rows(&[[1, 1]]).unwrap();
        assert_eq!(
            f.monomial_substitute(&collapse).unwrap(),
            LaurentPoly::from_int_terms(1, vec![([1], 2)])
        );
        assert!(f.monomial_substitute(&IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn newton_polytope_examples() {
        let w = p("x+y+1/(x*y)", &["x", "y"]);
        assert_eq!(w.newton_polytope().unwrap(), vec![e([-1, -1]), e([0, 1]), e([1, 0])]);
        let sq = p("(x+y)^2", &["x", "y"]);
        assert_eq!(sq.newton_polytope().unwrap(), vec![e([0, 2]), e([2, 0])]);
        assert_eq!(
            LaurentPoly::constant(2, rational(5)).newton_polytope().unwrap(),
            vec![e([0, 0])]
        );
        assert_eq!(
            LaurentPoly::zero(2).newton_polytope(),
            Err(LaurentError::EmptyPolynomial)
        );
    }

    #[test]
    fn evaluation() {
        let w = p("x+y+1/(x*y)", &["x", "y"]);
        let one = Complex64::new(1.0, 0.0);
        assert!((w.evaluate(&[one, one]).unwrap() - 3.0).norm() < 1e-14);
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let v = w.evaluate(&[omega, omega]).unwrap();
        assert!((v - 3.0 * omega).norm() < 1e-12);
        assert_eq!(
            w.evaluate(&[one, Complex64::new(0.0, 0.0)]),
            Err(LaurentError::ZeroCoordinate(1))
        );
        let g = p("3*x^2 - 1/2*y + 7", &["x", "y"]);
        assert!((g.evaluate(&[one, one]).unwrap() - 9.5).norm() < 1e-14);
    }

    #[test]
    fn exact_division() {
        let num = p("x^2 - 1", &["x"]);
        let den = p("x - 1", &["x"]);
        assert_eq!(num.exact_div(&den).unwrap(), Some(p("x + 1", &["x"])));
        let a = p("x + 1", &["x", "y"]);
        let b = p("y + 1", &["x", "y"]);
        assert_eq!(a.exact_div(&b).unwrap(), None);
        let c = p("(1+y)^4*x^-3 + (1+y)^2", &["x", "y"]);
        assert_eq!(
            c.exact_div(&p("(1+y)^2", &["x", "y"])).unwrap(),
            Some(p("(1+y)^2*x^-3 + 1", &["x", "y"]))
        );
    }

    #[test]
    fn render_is_graded_lex() {
        let f = p("x + (1+y)^2/(x*y)", &["x", "y"]);
        assert_eq!(f.render(), "x + x^-1*y + 2*x^-1 + x^-1*y^-1");
        assert_eq!(p("1/2*x - 3", &["x"]).render(), "1/2*x - 3");
        assert_eq!(p("-x", &["x"]).render(), "-x");
        assert_eq!(LaurentPoly::zero(1).render(), "0");
    }
}
