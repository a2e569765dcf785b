//! Generators shared by the property suites.
#![allow(dead_code)]

use lgforge::laurent::{ExponentVector, LaurentPoly};
use lgforge::matrix::IntMatrix;
use num_rational::BigRational;
use proptest::prelude::*;

pub const CASES: u32 = 200;

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

pub fn exponent(rank: usize, bound: i64) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(-bound..=bound, rank).prop_map(ExponentVector::new)
}

pub fn poly(rank: usize, max_terms: usize, bound: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((exponent(rank, bound), small_rational()), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(rank, terms))
}

/// Integer coefficients in `1..=3`, so the polynomial has no vanishing terms
/// and stays numerically tame.
pub fn positive_poly(rank: usize, max_terms: usize, bound: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((exponent(rank, bound), 1i64..=3), 1..=max_terms).prop_map(move |terms| {
        LaurentPoly::from_terms(
            rank,
            terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    })
}

/// Product of a few elementary integer operations: always unimodular.
pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..6).prop_map(move |ops| {
        let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, k, negate) in ops {
            if i != j {
                let src = rows[j].clone();
                for (a, b) in rows[i].iter_mut().zip(src) {
                    *a += k * b;
                }
            } else if negate {
                rows[i].iter_mut().for_each(|a| *a = -*a);
            } else if n > 1 {
                rows.swap(i, (i + 1) % n);
            }
        }
        IntMatrix::from_rows(&rows).unwrap()
    })
}

pub fn int_matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, cols), rows)
        .prop_map(|r| IntMatrix::from_rows(&r).unwrap())
}
