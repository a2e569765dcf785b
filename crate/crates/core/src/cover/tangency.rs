use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::CoverError;
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::periods::DescendantConstant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TangencyMode {
    /// Normal-crossings divisor with components met `rᵢ` times; the
    /// polynomial is the full potential.
    Snc { multiplicities: Vec<u32> },
    /// Smooth divisor; the polynomial is the divisor part of the potential.
    Smooth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangencyReport {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub value: BigRational,
    /// `[W^r]_α`.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub coefficient: BigRational,
    /// `Π rᵢ! / r!` in snc mode, 1 for a smooth divisor.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub factor: BigRational,
    pub spherical: bool,
    /// False signals inconsistent inputs.
    pub integral: bool,
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Solves the counting relation
/// `(r!/Π rᵢ!)·τ + [α spherical]·c = [W^r]_α` for `τ`.
///
/// The descendant `c` only enters for the zero boundary class.
pub fn tangency_number(
    w: &LaurentPoly,
    r: usize,
    mode: &TangencyMode,
    descendant: &DescendantConstant,
    boundary: &ExponentVector,
) -> Result<TangencyReport, CoverError> {
    if boundary.len() != w.rank() {
        return Err(CoverError::Rank {
            expected: w.rank(),
            got: boundary.len(),
        });
    }
    if descendant.r != r {
        return Err(CoverError::DescendantDegree {
            expected: r,
            got: descendant.r,
        });
    }
    let exponent = u32::try_from(r).map_err(|_| CoverError::Degree(r))?;
    let factor = match mode {
        TangencyMode::Smooth => BigRational::one(),
        TangencyMode::Snc { multiplicities } => {
            let sum: u64 = multiplicities.iter().map(|&m| m as u64).sum();
            if sum != r as u64 {
                return Err(CoverError::MultiplicitySum { sum, r });
            }
            let num = multiplicities
                .iter()
                .fold(BigInt::one(), |acc, &m| acc * factorial(m as u64));
            BigRational::new(num, factorial(r as u64))
        }
    };
    let coefficient = w.pow(exponent).coefficient(boundary)?;
    let spherical = boundary.is_zero();
    let shifted = if spherical {
        &coefficient - &descendant.value
    } else {
        coefficient.clone()
    };
    let value = &factor * shifted;
    Ok(TangencyReport {
        integral: value.is_integer(),
        value,
        coefficient,
        factor,
        spherical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_laurent;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn plane_examples() {
        let w = parse_laurent("x+y+1/(x*y)", &["x", "y"]).unwrap();
        let alpha = ExponentVector::from(&[1, 2][..]);
        let none = DescendantConstant::zero(3);
        let snc = TangencyMode::Snc {
            multiplicities: vec![0, 1, 2],
        };
        let t = tangency_number(&w, 3, &snc, &none, &alpha).unwrap();
        assert_eq!((t.value.clone(), t.coefficient.clone()), (q(1), q(3)));
        assert!(t.integral && !t.spherical);
        assert_eq!(t.factor, BigRational::new(1.into(), 3.into()));

        let e = tangency_number(&w, 3, &TangencyMode::Smooth, &none, &alpha).unwrap();
        assert_eq!(e.value, q(3));

        let sphere = tangency_number(
            &w,
            3,
            &TangencyMode::Smooth,
            &DescendantConstant::new(3, q(6)),
            &ExponentVector::zero(2),
        )
        .unwrap();
        assert_eq!(sphere.value, q(0));
        assert!(sphere.spherical);
    }

    #[test]
    fn non_integral_is_flagged() {
        let w = parse_laurent("x+y+1/(x*y)", &["x", "y"]).unwrap();
        let snc = TangencyMode::Snc {
            multiplicities: vec![3],
        };
        let t = tangency_number(
            &w,
            3,
            &snc,
            &DescendantConstant::zero(3),
            &ExponentVector::from(&[1, 2][..]),
        )
        .unwrap();
        assert_eq!(t.value, BigRational::new(3.into(), 1.into()));
        let odd = tangency_number(
            &w,
            3,
            &TangencyMode::Snc {
                multiplicities: vec![1, 1, 1],
            },
            &DescendantConstant::zero(3),
            &ExponentVector::from(&[1, 2][..]),
        )
        .unwrap();
        assert_eq!(odd.value, BigRational::new(1.into(), 2.into()));
        assert!(!odd.integral);
    }

    #[test]
    fn multiplicities_must_sum_to_r() {
        let w = parse_laurent("x+1/x", &["x"]).unwrap();
        let snc = TangencyMode::Snc {
            multiplicities: vec![1, 2],
        };
        assert_eq!(
            tangency_number(&w, 2, &snc, &DescendantConstant::zero(2), &ExponentVector::zero(1)),
            Err(CoverError::MultiplicitySum { sum: 3, r: 2 })
        );
    }

    #[test]
    fn single_component_matches_smooth_formula() {
        let w = parse_laurent("x + 2*y + 1/(x*y) - 1/3", &["x", "y"]).unwrap();
        let d = DescendantConstant::new(3, q(5));
        for b in [[0, 0], [1, 2], [-1, 0], [3, 0]] {
            let b = ExponentVector::from(&b[..]);
            let snc = tangency_number(
                &w,
                3,
                &TangencyMode::Snc {
                    multiplicities: vec![3],
                },
                &d,
                &b,
            )
            .unwrap();
            let smooth = tangency_number(&w, 3, &TangencyMode::Smooth, &d, &b).unwrap();
            assert_eq!(snc.value, smooth.value);
        }
    }
}
