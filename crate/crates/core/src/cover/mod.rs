//! Potentials of tori in cyclic branched covers.
//!
//! The base potential is split by a divisor functional into the part that
//! misses the branch divisor and the part that meets it once. Upstairs the
//! potential is `W_comp + W_div^r − c`, where `c` is the descendant
//! constant; the deck group acts by a character derived from the split, and
//! rewriting on its invariant sublattice gives the quotient potential.

mod discs;
mod tangency;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use discs::{
    cover_connected, lift_classes, maslov_positive, monotonicity_check, riemann_hurwitz_lift, DiscClass, LiftResult,
    MaslovReport, MaslovRow,
};
pub use tangency::{tangency_number, TangencyMode, TangencyReport};

use crate::lattice::{
    invariant_sublattice, rewrite_in_sublattice, solve_congruences, CharacterAction, LatticeError, Sublattice,
};
use crate::laurent::{parse_laurent, parse_rational, ExponentVector, LaurentError, LaurentPoly};
use crate::periods::DescendantConstant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("functional is not 0/1-valued on the support: {}", format_offenders(.0))]
    InvalidFunctional(Vec<(ExponentVector, BigRational)>),
    #[error("no character of order {r} realizes the functional on the support")]
    Inconsistent { r: i64 },
    #[error("upstairs exponent {0} is not fixed by the deck action")]
    InvariantViolation(ExponentVector),
    #[error("cover degree must be at least 2, got {0}")]
    Degree(usize),
    #[error("rank mismatch: expected {expected}, got {got}")]
    Rank { expected: usize, got: usize },
    #[error("descendant constant is for r = {got}, cover has r = {expected}")]
    DescendantDegree { expected: usize, got: usize },
    #[error("multiplicities sum to {sum}, expected r = {r}")]
    MultiplicitySum { sum: u64, r: usize },
    #[error("supplied basis does not span the invariant sublattice")]
    BasisMismatch,
    #[error("invalid cover spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

fn format_offenders(items: &[(ExponentVector, BigRational)]) -> String {
    items
        .iter()
        .map(|(e, d)| format!("deg{e} = {d}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `deg(e) = a·e + b`: intersection number with the branch divisor of the
/// Maslov-2 class whose boundary is `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorFunctional {
    linear: Vec<BigRational>,
    constant: BigRational,
}

impl DivisorFunctional {
    pub fn new(linear: Vec<BigRational>, constant: BigRational) -> Self {
        DivisorFunctional { linear, constant }
    }

    /// `deg ≡ c`.
    pub fn constant(rank: usize, c: i64) -> Self {
        Self::new(vec![BigRational::zero(); rank], BigRational::from_integer(c.into()))
    }

    /// `deg(e) = (a·e + b) / q` with integer data.
    pub fn from_ratios(linear: &[i64], constant: i64, denominator: i64) -> Self {
        let q = BigRational::from_integer(denominator.into());
        Self::new(
            linear
                .iter()
                .map(|&a| BigRational::from_integer(a.into()) / &q)
                .collect(),
            BigRational::from_integer(constant.into()) / &q,
        )
    }

    pub fn rank(&self) -> usize {
        self.linear.len()
    }

    pub fn linear(&self) -> &[BigRational] {
        &self.linear
    }

    pub fn constant_part(&self) -> &BigRational {
        &self.constant
    }

    pub fn degree(&self, e: &ExponentVector) -> BigRational {
        self.linear
            .iter()
            .zip(e.as_slice())
            .fold(self.constant.clone(), |acc, (a, &x)| {
                acc + a * BigRational::from_integer(x.into())
            })
    }

    /// Degrees on the support, each checked to be 0 or 1.
    fn support_degrees(&self, f: &LaurentPoly) -> Result<Vec<(ExponentVector, bool)>, CoverError> {
        if f.rank() != self.rank() {
            return Err(CoverError::Rank {
                expected: f.rank(),
                got: self.rank(),
            });
        }
        let mut out = Vec::with_capacity(f.len());
        let mut bad = Vec::new();
        for e in f.support() {
            let d = self.degree(e);
            if d.is_zero() {
                out.push((e.clone(), false));
            } else if d.is_one() {
                out.push((e.clone(), true));
            } else {
                bad.push((e.clone(), d));
            }
        }
        if bad.is_empty() {
            Ok(out)
        } else {
            Err(CoverError::InvalidFunctional(bad))
        }
    }
}

/// `(W_comp, W_div)`: terms of degree 0 and 1.
pub fn split_potential(f: &LaurentPoly, d: &DivisorFunctional) -> Result<(LaurentPoly, LaurentPoly), CoverError> {
    let degrees = d.support_degrees(f)?;
    let mut comp = Vec::new();
    let mut div = Vec::new();
    for (e, hits) in degrees {
        let c = f.coefficient(&e)?;
        if hits {
            div.push((e, c));
        } else {
            comp.push((e, c));
        }
    }
    let names = f.varnames().to_vec();
    Ok((
        LaurentPoly::from_terms(f.rank(), comp).with_varnames(names.clone())?,
        LaurentPoly::from_terms(f.rank(), div).with_varnames(names)?,
    ))
}

/// Weights `w` with `w·e ≡ deg(e) (mod r)` on the support; the lex-least
/// solution in `[0, r)ⁿ` when several exist.
pub fn derive_action(f: &LaurentPoly, d: &DivisorFunctional, r: usize) -> Result<CharacterAction, CoverError> {
    if r < 2 {
        return Err(CoverError::Degree(r));
    }
    let degrees = d.support_degrees(f)?;
    let rows: Vec<Vec<i64>> = degrees.iter().map(|(e, _)| e.as_slice().to_vec()).collect();
    let rhs: Vec<i64> = degrees.iter().map(|(_, h)| *h as i64).collect();
    let r = r as i64;
    let sol = solve_congruences(&rows, &rhs, f.rank(), r).ok_or(CoverError::Inconsistent { r })?;
    Ok(CharacterAction::new(sol.particular, r)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    pub name: Option<String>,
    pub potential: LaurentPoly,
    pub functional: DivisorFunctional,
    pub r: usize,
    pub descendant: DescendantConstant,
    /// Preferred basis for the quotient coordinates. Must span the same
    /// lattice as the invariant sublattice.
    pub basis: Option<Sublattice>,
}

impl CoverSpec {
    pub fn new(potential: LaurentPoly, functional: DivisorFunctional, r: usize, descendant: BigRational) -> Self {
        CoverSpec {
            name: None,
            potential,
            functional,
            r,
            descendant: DescendantConstant::new(r, descendant),
            basis: None,
        }
    }

    pub fn with_basis(mut self, basis: Sublattice) -> Self {
        self.basis = Some(basis);
        self
    }

    pub fn validate(&self) -> Result<(), CoverError> {
        if self.r < 2 {
            return Err(CoverError::Degree(self.r));
        }
        if self.descendant.r != self.r {
            return Err(CoverError::DescendantDegree {
                expected: self.r,
                got: self.descendant.r,
            });
        }
        if let Some(b) = &self.basis {
            if b.ambient_rank() != self.potential.rank() {
                return Err(CoverError::Rank {
                    expected: self.potential.rank(),
                    got: b.ambient_rank(),
                });
            }
        }
        self.functional.support_degrees(&self.potential).map(|_| ())
    }

    pub fn from_json(text: &str) -> Result<Self, CoverError> {
        let file: CoverSpecFile = serde_json::from_str(text).map_err(|e| CoverError::Spec(e.to_string()))?;
        file.into_spec()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = CoverSpecFile {
            name: self.name.clone(),
            potential: self.potential.render(),
            vars: self.potential.varnames().to_vec(),
            functional: FunctionalFile {
                linear: self
                    .functional
                    .linear
                    .iter()
                    .map(|a| RationalField::Text(a.to_string()))
                    .collect(),
                constant: RationalField::Text(self.functional.constant.to_string()),
            },
            r: self.r,
            descendant: RationalField::Text(self.descendant.value.to_string()),
            basis: self.basis.as_ref().map(|b| b.basis().columns()),
        };
        serde_json::to_value(file).expect("plain data serializes")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum RationalField {
    Int(i64),
    Text(String),
}

impl RationalField {
    fn value(&self) -> Result<BigRational, CoverError> {
        match self {
            RationalField::Int(n) => Ok(BigRational::from_integer((*n).into())),
            RationalField::Text(s) => parse_rational(s).ok_or_else(|| CoverError::Spec(format!("bad rational {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FunctionalFile {
    linear: Vec<RationalField>,
    constant: RationalField,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    potential: String,
    vars: Vec<String>,
    functional: FunctionalFile,
    r: usize,
    descendant: RationalField,
    /// Columns of the quotient basis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Vec<i64>>>,
}

impl CoverSpecFile {
    fn into_spec(self) -> Result<CoverSpec, CoverError> {
        let potential = parse_laurent(&self.potential, &self.vars).map_err(|e| CoverError::Spec(e.to_string()))?;
        let linear = self
            .functional
            .linear
            .iter()
            .map(RationalField::value)
            .collect::<Result<Vec<_>, _>>()?;
        let functional = DivisorFunctional::new(linear, self.functional.constant.value()?);
        let basis = match self.basis {
            Some(cols) => Some(Sublattice::from_columns(&cols)?),
            None => None,
        };
        let spec = CoverSpec {
            name: self.name,
            potential,
            functional,
            r: self.r,
            descendant: DescendantConstant::new(self.r, self.descendant.value()?),
            basis,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub complement: LaurentPoly,
    pub divisor: LaurentPoly,
    /// On the base torus; every exponent is fixed by `action`.
    pub upstairs: LaurentPoly,
    pub action: CharacterAction,
    pub sublattice: Sublattice,
    /// `upstairs` in the coordinates of `sublattice`.
    pub quotient: LaurentPoly,
}

pub fn build_cover_potential(spec: &CoverSpec) -> Result<CoverResult, CoverError> {
    spec.validate()?;
    let f = &spec.potential;
    let (complement, divisor) = split_potential(f, &spec.functional)?;
    let action = derive_action(f, &spec.functional, spec.r)?;
    let r = u32::try_from(spec.r).map_err(|_| CoverError::Degree(spec.r))?;
    let shift = LaurentPoly::constant(f.rank(), spec.descendant.value.clone());
    let upstairs = complement.try_add(&divisor.pow(r))?.try_sub(&shift)?;
    if let Some(e) = upstairs.support().find(|e| !action.fixes(e)) {
        return Err(CoverError::InvariantViolation(e.clone()));
    }
    let canonical = invariant_sublattice(&action);
    let sublattice = match &spec.basis {
        Some(b) if b.same_lattice(&canonical) => b.clone(),
        Some(_) => return Err(CoverError::BasisMismatch),
        None => canonical,
    };
    let quotient = rewrite_in_sublattice(&upstairs, &sublattice)?;
    Ok(CoverResult {
        complement,
        divisor,
        upstairs,
        action,
        sublattice,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periods::period_sequence;

    fn poly(s: &str) -> LaurentPoly {
        parse_laurent(s, &["x", "y"]).unwrap()
    }

    fn poly1(s: &str) -> LaurentPoly {
        parse_laurent(s, &["x"]).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn plane_functional() -> DivisorFunctional {
        DivisorFunctional::from_ratios(&[1, 1], 2, 3)
    }

    #[test]
    fn split_plane_potential() {
        let (comp, div) = split_potential(&poly("x+y+1/(x*y)"), &plane_functional()).unwrap();
        assert_eq!(comp, poly("1/(x*y)"));
        assert_eq!(div, poly("x+y"));
        let (comp, div) = split_potential(&poly("x+y"), &DivisorFunctional::from_ratios(&[1, 0], 0, 1)).unwrap();
        assert_eq!((comp, div), (poly("y"), poly("x")));
        let (comp, div) = split_potential(&poly("x+y+1/(x*y)"), &DivisorFunctional::constant(2, 1)).unwrap();
        assert!(comp.is_zero());
        assert_eq!(div, poly("x+y+1/(x*y)"));
    }

    #[test]
    fn split_rejects_bad_degree() {
        let err = split_potential(&poly("x+y"), &DivisorFunctional::from_ratios(&[2, 0], 0, 1)).unwrap_err();
        assert_eq!(
            err,
            CoverError::InvalidFunctional(vec![(ExponentVector::from(&[1, 0][..]), q(2))])
        );
    }

    #[test]
    fn actions() {
        let a = derive_action(&poly("x+y+1/(x*y)"), &plane_functional(), 2).unwrap();
        assert_eq!(a.weights(), &[1, 1]);
        let z = derive_action(&poly("x+y+1/(x*y)"), &DivisorFunctional::constant(2, 0), 5).unwrap();
        assert_eq!(z.weights(), &[0, 0]);
        let s = derive_action(&poly("x + (1+y)^2/(x*y)"), &DivisorFunctional::constant(2, 1), 2).unwrap();
        assert_eq!(s.weights(), &[1, 0]);
        // x and x^-1 with deg 1 and 0 under r = 3 need w ≡ 1 and w ≡ 0.
        let bad = derive_action(&poly1("x + 1/x"), &DivisorFunctional::from_ratios(&[1], 1, 2), 3);
        assert_eq!(bad, Err(CoverError::Inconsistent { r: 3 }));
    }

    #[test]
    fn plane_conic_cover() {
        let spec = CoverSpec::new(poly("x+y+1/(x*y)"), plane_functional(), 2, q(0))
            .with_basis(Sublattice::from_columns(&[[-1, -1], [1, -1]]).unwrap());
        let res = build_cover_potential(&spec).unwrap();
        assert_eq!(res.upstairs, poly("1/(x*y) + (x+y)^2"));
        assert_eq!(res.quotient, poly("x + (1+y)^2/(x*y)"));
    }

    #[test]
    fn quadric_cover() {
        let spec = CoverSpec::new(poly("x + (1+y)^2/(x*y)"), DivisorFunctional::constant(2, 1), 2, q(4));
        let res = build_cover_potential(&spec).unwrap();
        assert_eq!(res.upstairs, poly("(x + (1+y)^2/(x*y))^2 - 4"));
        assert_eq!(res.sublattice.basis().columns(), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(res.quotient, poly("x + 2/y + 2*y + (1+y)^4/(x*y^2)"));
        let k = 6;
        let lhs = period_sequence(&res.quotient, 1).coeffs()[1].clone();
        let rhs = -spec.descendant.value.clone() + res.complement.constant_term() + res.divisor.pow(2).constant_term();
        assert_eq!(lhs, rhs);
        assert_eq!(period_sequence(&res.quotient, k).coeffs().len(), k + 1);
    }

    #[test]
    fn rank_one_cover() {
        let spec = CoverSpec::new(poly1("x + 1/x"), DivisorFunctional::constant(1, 1), 2, q(2));
        let res = build_cover_potential(&spec).unwrap();
        assert_eq!(res.upstairs, poly1("x^2 + x^-2"));
        assert_eq!(res.quotient, poly1("x + 1/x"));
    }

    #[test]
    fn wrong_basis_is_rejected() {
        let spec = CoverSpec::new(poly("x+y+1/(x*y)"), plane_functional(), 2, q(0))
            .with_basis(Sublattice::from_columns(&[[2, 0], [0, 1]]).unwrap());
        assert_eq!(build_cover_potential(&spec), Err(CoverError::BasisMismatch));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "potential": "x + y + 1/(x*y)",
            "vars": ["x", "y"],
            "functional": {"linear": ["1/3", "1/3"], "constant": "2/3"},
            "r": 2,
            "descendant": "0",
            "basis": [[-1, -1], [1, -1]]
        }"#;
        let spec = CoverSpec::from_json(text).unwrap();
        assert_eq!(spec.functional, plane_functional());
        let again = CoverSpec::from_json(&spec.to_json().to_string()).unwrap();
        assert_eq!(again, spec);
        assert!(matches!(
            CoverSpec::from_json(r#"{"potential": 3}"#),
            Err(CoverError::Spec(_))
        ));
        let int_form =
            r#"{"potential":"x+1/x","vars":["x"],"functional":{"linear":[0],"constant":1},"r":2,"descendant":2}"#;
        assert_eq!(CoverSpec::from_json(int_form).unwrap().descendant.value, q(2));
    }
}
