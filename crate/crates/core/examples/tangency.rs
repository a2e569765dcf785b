//! Tangency numbers of the Clifford torus in the plane from coefficients of
//! `W³`: against the toric boundary, against a smooth cubic, and for the
//! spherical class with descendant constant 6.

use std::error::Error;

use lgforge::catalog::projective_plane;
use lgforge::cover::{tangency_number, TangencyMode};
use lgforge::laurent::{rational, ExponentVector};
use lgforge::periods::DescendantConstant;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = projective_plane();
    let alpha = ExponentVector::new(vec![1, 2]);
    let cases = [
        (
            "toric boundary, contact (0,1,2)",
            TangencyMode::Snc {
                multiplicities: vec![0, 1, 2],
            },
            alpha.clone(),
            DescendantConstant::zero(3),
            1,
        ),
        (
            "smooth cubic",
            TangencyMode::Smooth,
            alpha,
            DescendantConstant::zero(3),
            3,
        ),
        (
            "spherical class",
            TangencyMode::Smooth,
            ExponentVector::zero(2),
            DescendantConstant::new(3, rational(6)),
            0,
        ),
    ];
    for (label, mode, boundary, descendant, want) in cases {
        let t = tangency_number(&w, 3, &mode, &descendant, &boundary)?;
        println!(
            "{label:<32} [W^3]_{boundary} = {}, factor {}, tau = {}",
            t.coefficient, t.factor, t.value
        );
        if t.value != rational(want) || !t.integral {
            return Err(format!("{label}: expected tau = {want}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
