//! Birational substitutions of torus coordinates and the Laurent check on
//! their images.

use std::collections::HashMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{parse, LaurentError, LaurentPoly, ParseError, RationalExpr};
use crate::periods::period_sequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("substitution has {images} images for {vars} variables")]
    Arity { vars: usize, images: usize },
    #[error("image {index} is zero")]
    ZeroImage { index: usize },
    #[error("image {index}: {source}")]
    Parse { index: usize, source: ParseError },
    #[error("invalid substitution file: {0}")]
    File(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// `xᵢ ↦ imagesᵢ`, each image a rational function in the same variables.
#[derive(Debug, Clone)]
pub struct Substitution {
    vars: Vec<String>,
    images: Vec<RationalExpr>,
}

#[derive(Deserialize, Serialize)]
struct SubstitutionFile {
    vars: Vec<String>,
    images: Vec<String>,
}

impl Substitution {
    pub fn new(vars: Vec<String>, images: Vec<RationalExpr>) -> Result<Self, MutationError> {
        if vars.len() != images.len() {
            return Err(MutationError::Arity {
                vars: vars.len(),
                images: images.len(),
            });
        }
        for (index, img) in images.iter().enumerate() {
            if img.rank() != vars.len() {
                return Err(LaurentError::RankMismatch(vars.len(), img.rank()).into());
            }
            if img.is_zero() {
                return Err(MutationError::ZeroImage { index });
            }
        }
        Ok(Substitution { vars, images })
    }

    pub fn identity(vars: Vec<String>) -> Self {
        let n = vars.len();
        let images = (0..n)
            .map(|i| RationalExpr::from_poly(LaurentPoly::variable(n, i)))
            .collect();
        Substitution { vars, images }
    }

    /// Parses one expression per variable.
    pub fn parse<S: AsRef<str>>(vars: &[S], images: &[S]) -> Result<Self, MutationError> {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let exprs = images
            .iter()
            .enumerate()
            .map(|(index, text)| parse(text.as_ref(), &names).map_err(|source| MutationError::Parse { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(names, exprs)
    }

    /// `{"vars": [...], "images": [...]}`.
    pub fn from_json(text: &str) -> Result<Self, MutationError> {
        let file: SubstitutionFile = serde_json::from_str(text).map_err(|e| MutationError::File(e.to_string()))?;
        Self::parse(&file.vars, &file.images)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SubstitutionFile {
            vars: self.vars.clone(),
            images: self.images.iter().map(RationalExpr::render).collect(),
        })
        .expect("plain data serializes")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn images(&self) -> &[RationalExpr] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    /// The image of `f` as a rational function, before the Laurent check.
    pub fn apply_rational(&self, f: &LaurentPoly) -> Result<RationalExpr, MutationError> {
        if f.rank() != self.rank() {
            return Err(LaurentError::RankMismatch(self.rank(), f.rank()).into());
        }
        let mut powers: HashMap<(usize, i64), RationalExpr> = HashMap::new();
        let mut acc = RationalExpr::from_poly(LaurentPoly::zero(self.rank()));
        for (e, c) in f.display_terms() {
            let mut term = RationalExpr::from_poly(LaurentPoly::constant(self.rank(), c.clone()));
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = match powers.get(&(i, k)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = self.images[i].pow(k)?;
                        powers.insert((i, k), p.clone());
                        p
                    }
                };
                term = term.mul(&p)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// `f(images)`, which must again be a Laurent polynomial.
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly, MutationError> {
        let image = self.apply_rational(f)?.laurent_normalize()?;
        Ok(image.with_varnames(self.vars.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodComparisonRow {
    pub k: usize,
    pub left: BigRational,
    pub right: BigRational,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodComparison {
    pub rows: Vec<PeriodComparisonRow>,
    pub pass: bool,
}

impl PeriodComparison {
    pub fn first_mismatch(&self) -> Option<&PeriodComparisonRow> {
        self.rows.iter().find(|r| !r.matches)
    }
}

/// Compares `c₀(f^k)` and `c₀(g^k)` for `0 ≤ k ≤ k_max`.
pub fn check_period_invariance(f: &LaurentPoly, g: &LaurentPoly, k_max: usize) -> PeriodComparison {
    let (a, b) = rayon::join(|| period_sequence(f, k_max), || period_sequence(g, k_max));
    let rows: Vec<PeriodComparisonRow> = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .enumerate()
        .map(|(k, (l, r))| PeriodComparisonRow {
            k,
            left: l.clone(),
            right: r.clone(),
            matches: l == r,
        })
        .collect();
    let pass = rows.iter().all(|r| r.matches);
    PeriodComparison { rows, pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_laurent;

    fn poly(s: &str) -> LaurentPoly {
        parse_laurent(s, &["x", "y"]).unwrap()
    }

    fn sub(images: [&str; 2]) -> Substitution {
        Substitution::parse(&["x", "y"], &images).unwrap()
    }

    #[test]
    fn identity() {
        let f = poly("x + 3*y^-2 - 1/2");
        let id = Substitution::identity(vec!["x".into(), "y".into()]);
        assert_eq!(id.apply(&f).unwrap(), f);
        assert_eq!(sub(["x", "y"]).apply(&f).unwrap(), f);
    }

    #[test]
    fn square_to_plane_quotient() {
        let s = sub(["x/(1+y)", "x*y/(1+y)"]);
        let g = s.apply(&poly("x+y+1/x+1/y")).unwrap();
        assert_eq!(g, poly("x + (1+y)^2/(x*y)"));
    }

    #[test]
    fn second_mutation_expands() {
        let s = sub(["x*y/(1+y)^2", "y"]);
        let g = s.apply(&poly("(1+x)^2*(1+y)^2/(x*y) - 4")).unwrap();
        assert_eq!(g, poly("(1+y)^4/(x*y^2) + 2*(1+y)^2/y + x - 4"));
    }

    #[test]
    fn non_laurent_image() {
        let s = sub(["x/(1+y)", "y"]);
        assert!(matches!(
            s.apply(&poly("x+y")),
            Err(MutationError::Laurent(LaurentError::NotLaurent { .. }))
        ));
    }

    #[test]
    fn period_checks() {
        let ok = check_period_invariance(&poly("x+y+1/x+1/y"), &poly("x + (1+y)^2/(x*y)"), 10);
        assert!(ok.pass);
        let bad = check_period_invariance(&poly("x+y+1/(x*y)"), &poly("x+y+2/(x*y)"), 3);
        assert!(!bad.pass);
        let row = bad.first_mismatch().unwrap();
        assert_eq!(
            (row.k, row.left.to_string(), row.right.to_string()),
            (3, "6".into(), "12".into())
        );
    }

    #[test]
    fn json_file() {
        let s = Substitution::from_json(r#"{"vars":["x","y"],"images":["x/(1+y)","x*y/(1+y)"]}"#).unwrap();
        assert_eq!(s.apply(&poly("x+y+1/x+1/y")).unwrap(), poly("x + (1+y)^2/(x*y)"));
        let again = Substitution::from_json(&s.to_json().to_string()).unwrap();
        assert_eq!(again.apply(&poly("x+y+1/x+1/y")).unwrap(), poly("x + (1+y)^2/(x*y)"));
        assert!(matches!(
            Substitution::from_json(r#"{"vars":["x"],"images":["x","y"]}"#),
            Err(MutationError::Parse { index: 1, .. })
        ));
        assert!(matches!(
            Substitution::parse(&["x"], &["x - x"]),
            Err(MutationError::ZeroImage { index: 0 })
        ));
    }
}
