mod common;

use std::collections::HashMap;

use common::{exponent, poly, small_rational, unimodular, CASES};
use lgforge::laurent::{parse_laurent, ExponentVector, LaurentPoly};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn names(rank: usize) -> Vec<String> {
    (0..rank).map(|i| format!("x{i}")).collect()
}

/// Product by plain convolution over a hash map: the oracle for `try_mul`.
fn dense_product(f: &LaurentPoly, g: &LaurentPoly) -> HashMap<Vec<i64>, BigRational> {
    let mut out: HashMap<Vec<i64>, BigRational> = HashMap::new();
    for (a, c) in f.terms() {
        for (b, d) in g.terms() {
            let e: Vec<i64> = a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigRational::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn point(rank: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((0.5f64..2.0, -3.1f64..3.1), rank)
        .prop_map(|v| v.into_iter().map(|(r, t)| Complex64::from_polar(r, t)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn ring_axioms(f in poly(2, 5, 3), g in poly(2, 5, 3), h in poly(2, 5, 3)) {
        let zero = LaurentPoly::zero(2);
        let one = LaurentPoly::one(2);
        prop_assert_eq!(&(&f + &g), &(&g + &f));
        prop_assert_eq!(&(&(&f + &g) + &h), &(&f + &(&g + &h)));
        prop_assert_eq!(&(&f * &g), &(&g * &f));
        prop_assert_eq!(&(&(&f * &g) * &h), &(&f * &(&g * &h)));
        prop_assert_eq!(&(&f * &(&g + &h)), &(&(&f * &g) + &(&f * &h)));
        prop_assert_eq!(&(&f + &zero), &f);
        prop_assert_eq!(&(&f * &one), &f);
        prop_assert!((&f + &(-&f)).is_zero());
        prop_assert_eq!(&(&f + &(-&g)), &(&f - &g));
    }

    #[test]
    fn product_matches_dense_oracle(f in poly(3, 6, 2), g in poly(3, 6, 2), probe in exponent(3, 4)) {
        let p = f.try_mul(&g).unwrap();
        let oracle = dense_product(&f, &g);
        prop_assert_eq!(p.len(), oracle.len());
        for (e, c) in p.terms() {
            prop_assert_eq!(Some(c), oracle.get(e.as_slice()));
        }
        let want = oracle.get(probe.as_slice()).cloned().unwrap_or_else(BigRational::zero);
        prop_assert_eq!(p.coefficient(&probe).unwrap(), want);
        prop_assert_eq!(f.try_mul_par(&g).unwrap(), p);
    }

    #[test]
    fn power_is_additive(f in poly(2, 4, 2), a in 0u32..4, b in 0u32..4) {
        prop_assert_eq!(f.pow(a + b), &f.pow(a) * &f.pow(b));
    }

    #[test]
    fn evaluation_is_a_ring_map(f in poly(2, 5, 3), g in poly(2, 5, 3), z in point(2)) {
        let fg = (&f * &g).evaluate(&z).unwrap();
        let prod = f.evaluate(&z).unwrap() * g.evaluate(&z).unwrap();
        let sum = (&f + &g).evaluate(&z).unwrap();
        let scale = 1.0 + fg.norm().max(prod.norm());
        prop_assert!((fg - prod).norm() < 1e-9 * scale);
        prop_assert!((sum - f.evaluate(&z).unwrap() - g.evaluate(&z).unwrap()).norm() < 1e-9 * (1.0 + sum.norm()));
    }

    #[test]
    fn render_round_trips(f in poly(3, 6, 3)) {
        let named = f.clone().with_varnames(names(3)).unwrap();
        let back = parse_laurent(&named.render(), &names(3)).unwrap();
        prop_assert_eq!(back, named);
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly(2, 4, 2), g in poly(2, 3, 2)) {
        prop_assume!(!g.is_zero());
        let q = (&f * &g).exact_div(&g).unwrap();
        prop_assert_eq!(q, Some(f));
    }

    #[test]
    fn monomial_substitution_composes(f in poly(2, 5, 3), a in unimodular(2), b in unimodular(2)) {
        let step = f.monomial_substitute(&a).unwrap().monomial_substitute(&b).unwrap();
        let once = f.monomial_substitute(&b.mul(&a).unwrap()).unwrap();
        prop_assert_eq!(&step, &once);
        let back = step.monomial_substitute(&b.mul(&a).unwrap().unimodular_inverse().unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn scaling_and_shift(f in poly(2, 5, 3), c in small_rational(), e in exponent(2, 3)) {
        let m = LaurentPoly::monomial(e.clone(), c.clone());
        prop_assert_eq!(f.shift(&e, &c), &f * &m);
        prop_assert_eq!(f.scale(&c), &f * &LaurentPoly::constant(2, c));
        let zero = ExponentVector::zero(2);
        prop_assert_eq!(f.coefficient(&zero).unwrap(), f.constant_term());
    }
}
