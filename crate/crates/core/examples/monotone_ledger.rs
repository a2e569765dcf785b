//! Disc-class bookkeeping for the double plane branched along a conic:
//! the base torus is not monotone, its lifts are, with `λ = 1/2`.

use std::error::Error;

use lgforge::catalog::hypersurface_base_classes;
use lgforge::cover::{cover_connected, lift_classes, maslov_positive, monotonicity_check, riemann_hurwitz_lift};
use num_rational::BigRational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let base = hypersurface_base_classes(2, 2);
    for (k, c) in base.iter().enumerate() {
        println!(
            "v{k}: mu/2 = {}, hits = {:?}, area = {}",
            c.half_maslov, c.divisor_hits, c.area
        );
    }
    let positive = maslov_positive(&base, &[0]);
    println!("Maslov positive: {}", positive.pass);
    let lambda = monotonicity_check(&base);
    println!("base torus monotone: {lambda:?}");
    if lambda.is_some() || !positive.pass {
        return Err("the base torus should be Maslov positive and not monotone".into());
    }

    let rh = riemann_hurwitz_lift(3, 3, 3);
    println!(
        "Maslov-6 disc meeting the branch locus 3 times in a 3-fold cover lifts with mu/2 = {}",
        rh.half_maslov
    );

    let lifted = lift_classes(&base, 2, 2);
    let maslov_two: Vec<_> = lifted.iter().filter(|c| c.half_maslov == 1).cloned().collect();
    for c in &maslov_two {
        println!("lift: boundary {}, area {}", c.boundary, c.area);
    }
    let half = BigRational::new(1.into(), 2.into());
    if maslov_two.len() != 4 || monotonicity_check(&lifted) != Some(half) {
        return Err("expected four Maslov-2 lifts, all of area 1/2".into());
    }

    let connected = cover_connected(&[1, 1, 0], 2);
    println!("preimage torus connected: {connected}");
    if !connected {
        return Err("the preimage torus should be connected".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
