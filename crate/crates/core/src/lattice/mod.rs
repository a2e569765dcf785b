//! Integer normal forms and the sublattices cut out by cyclic characters.

mod congruence;
mod hermite;
mod snf;

use serde::Serialize;
use thiserror::Error;

pub use congruence::{solve_congruences, CongruenceSolution};
pub use hermite::hermite_basis;
pub use snf::{smith_normal_form, SnfDecomposition};

use crate::laurent::{ExponentVector, LaurentError, LaurentPoly};
use crate::matrix::{IntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("modulus must be at least 1, got {0}")]
    Modulus(i64),
    #[error("basis is not square and nonsingular: {0}")]
    Basis(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    Rank { expected: usize, got: usize },
    #[error("monomial with exponent {0} is not in the sublattice")]
    NotInSublattice(ExponentVector),
    #[error("lattices differ")]
    DifferentLattices,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// `ζ · xᵉ = ζ^{w·e} xᵉ` for a primitive `r`-th root of unity `ζ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CharacterAction {
    weights: Vec<i64>,
    modulus: i64,
}

impl CharacterAction {
    pub fn new(weights: Vec<i64>, modulus: i64) -> Result<Self, LatticeError> {
        if modulus < 1 {
            return Err(LatticeError::Modulus(modulus));
        }
        let weights = weights.into_iter().map(|w| w.rem_euclid(modulus)).collect();
        Ok(CharacterAction { weights, modulus })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// `w · e mod r`, in `[0, r)`.
    pub fn character(&self, e: &ExponentVector) -> i64 {
        let s: i128 = e
            .as_slice()
            .iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a as i128 * w as i128)
            .sum();
        s.rem_euclid(self.modulus as i128) as i64
    }

    pub fn fixes(&self, e: &ExponentVector) -> bool {
        self.character(e) == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }
}

/// Finite-index sublattice of `Zⁿ`, given by the columns of `basis`.
#[derive(Debug, Clone, Serialize)]
pub struct Sublattice {
    basis: IntMatrix,
    index: u64,
    #[serde(skip)]
    adjugate: Vec<Vec<i128>>,
    #[serde(skip)]
    det: i128,
}

impl PartialEq for Sublattice {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Sublattice {}

impl Sublattice {
    pub fn from_basis(basis: IntMatrix) -> Result<Self, LatticeError> {
        if !basis.is_square() || basis.nrows() == 0 {
            return Err(LatticeError::Basis(format!(
                "{}x{} matrix",
                basis.nrows(),
                basis.ncols()
            )));
        }
        let det = basis.det()?;
        if det == 0 {
            return Err(LatticeError::Basis("singular matrix".into()));
        }
        let adjugate = basis.adjugate()?;
        let index = u64::try_from(det.unsigned_abs()).map_err(|_| MatrixError::Overflow)?;
        Ok(Sublattice {
            basis,
            index,
            adjugate,
            det,
        })
    }

    pub fn from_columns<C: AsRef<[i64]>>(columns: &[C]) -> Result<Self, LatticeError> {
        Self::from_basis(IntMatrix::from_columns(columns)?)
    }

    pub fn full(n: usize) -> Self {
        Self::from_basis(IntMatrix::identity(n)).expect("identity is a basis")
    }

    pub fn ambient_rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Coordinates `c` with `basis · c = e`, if `e` lies in the lattice.
    pub fn membership(&self, e: &ExponentVector) -> Option<ExponentVector> {
        let n = self.ambient_rank();
        if e.len() != n {
            return None;
        }
        let mut coords = Vec::with_capacity(n);
        for row in &self.adjugate {
            let s: i128 = row.iter().zip(e.as_slice()).map(|(a, &x)| a * x as i128).sum();
            if s % self.det != 0 {
                return None;
            }
            coords.push(i64::try_from(s / self.det).ok()?);
        }
        Some(ExponentVector::new(coords))
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.membership(e).is_some()
    }

    pub fn same_lattice(&self, other: &Sublattice) -> bool {
        self.transition_to(other).is_ok()
    }

    /// Unimodular `T` with `other.basis · T = self.basis`; coordinates in
    /// `self` map to coordinates in `other` by `c ↦ T·c`.
    pub fn transition_to(&self, other: &Sublattice) -> Result<IntMatrix, LatticeError> {
        if self.ambient_rank() != other.ambient_rank() {
            return Err(LatticeError::Rank {
                expected: self.ambient_rank(),
                got: other.ambient_rank(),
            });
        }
        if self.index != other.index {
            return Err(LatticeError::DifferentLattices);
        }
        let cols: Option<Vec<Vec<i64>>> = self
            .basis
            .columns()
            .into_iter()
            .map(|c| other.membership(&ExponentVector::new(c)).map(ExponentVector::into_vec))
            .collect();
        let t = IntMatrix::from_columns(&cols.ok_or(LatticeError::DifferentLattices)?)?;
        if t.is_unimodular() {
            Ok(t)
        } else {
            Err(LatticeError::DifferentLattices)
        }
    }
}

/// `{e : w·e ≡ 0 (mod r)}` in Hermite column form.
pub fn invariant_sublattice(action: &CharacterAction) -> Sublattice {
    let n = action.rank();
    let sol = solve_congruences(std::slice::from_ref(&action.weights), &[0], n, action.modulus)
        .expect("homogeneous congruences are always solvable");
    Sublattice::from_basis(sol.homogeneous).expect("finite-index kernel")
}

/// Rewrites `f` in the coordinates of `s`. Exponents `e` become `c` with
/// `basis · c = e`; coefficients are unchanged.
pub fn rewrite_in_sublattice(f: &LaurentPoly, s: &Sublattice) -> Result<LaurentPoly, LatticeError> {
    if f.rank() != s.ambient_rank() {
        return Err(LatticeError::Rank {
            expected: s.ambient_rank(),
            got: f.rank(),
        });
    }
    let mut terms = Vec::with_capacity(f.len());
    // Display order, so the reported offender is the leading one.
    for (e, c) in f.display_terms() {
        let coords = s
            .membership(e)
            .ok_or_else(|| LatticeError::NotInSublattice(e.clone()))?;
        terms.push((coords, c.clone()));
    }
    Ok(LaurentPoly::from_terms(f.rank(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn trivial_action_gives_full_lattice() {
        let s = invariant_sublattice(&CharacterAction::new(vec![0, 0], 2).unwrap());
        assert_eq!(s.index(), 1);
        assert_eq!(*s.basis(), IntMatrix::identity(2));
    }

    #[test]
    fn diagonal_parity_action() {
        let s = invariant_sublattice(&CharacterAction::new(vec![1, 1], 2).unwrap());
        assert_eq!(s.index(), 2);
        let chosen = Sublattice::from_columns(&[[-1, -1], [1, -1]]).unwrap();
        assert!(s.same_lattice(&chosen));
        for c in s.basis().columns() {
            assert_eq!((c[0] + c[1]).rem_euclid(2), 0);
        }
    }

    #[test]
    fn first_coordinate_even() {
        let s = invariant_sublattice(&CharacterAction::new(vec![1, 0], 2).unwrap());
        assert_eq!(s.basis().columns(), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(s.index(), 2);
    }

    #[test]
    fn membership_examples() {
        let full = Sublattice::full(2);
        assert_eq!(full.membership(&ev(&[3, -7])), Some(ev(&[3, -7])));
        let s = Sublattice::from_columns(&[[-1, -1], [1, -1]]).unwrap();
        assert_eq!(s.membership(&ev(&[2, 0])), Some(ev(&[-1, 1])));
        let t = Sublattice::from_columns(&[[2, 0], [0, 1]]).unwrap();
        assert_eq!(t.membership(&ev(&[1, 0])), None);
    }

    #[test]
    fn rewrite_rejects_odd_exponent() {
        let f = LaurentPoly::from_int_terms(2, vec![([1, 0], 1), ([0, 1], 1)]);
        let s = Sublattice::from_columns(&[[1, 1], [1, -1]]).unwrap();
        assert_eq!(
            rewrite_in_sublattice(&f, &s),
            Err(LatticeError::NotInSublattice(ev(&[1, 0])))
        );
    }

    #[test]
    fn rewrite_round_trip() {
        let f = LaurentPoly::from_int_terms(2, vec![([-1, -1], 1), ([2, 0], 1), ([1, 1], 2), ([0, 2], 1)]);
        let s = Sublattice::from_columns(&[[-1, -1], [1, -1]]).unwrap();
        let g = rewrite_in_sublattice(&f, &s).unwrap();
        let expected = LaurentPoly::from_int_terms(2, vec![([1, 0], 1), ([-1, 1], 1), ([-1, 0], 2), ([-1, -1], 1)]);
        assert_eq!(g, expected);
        assert_eq!(g.monomial_substitute(s.basis()).unwrap(), f);
    }

    #[test]
    fn transition_is_unimodular() {
        let a = Sublattice::from_columns(&[[1, 1], [0, 2]]).unwrap();
        let b = Sublattice::from_columns(&[[-1, -1], [1, -1]]).unwrap();
        let t = a.transition_to(&b).unwrap();
        assert!(t.is_unimodular());
        assert_eq!(b.basis().mul(&t).unwrap(), *a.basis());
        let c = Sublattice::from_columns(&[[2, 0], [0, 1]]).unwrap();
        assert!(!a.same_lattice(&c));
    }
}
