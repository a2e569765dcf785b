//! Period sequences: the three evaluation strategies, the descendant
//! constant, and a weak Landau-Ginzburg check against reference data.
//!
//! Run with `cargo run --release --example periods`.

use std::error::Error;
use std::path::Path;

use lgforge::catalog::projective_plane;
use lgforge::periods::{
    descendant_constant, ingest_reference, is_weak_lg, period_sequence_with, PeriodStrategy, DEFAULT_K_MIN,
};
use num_bigint::BigInt;
use num_rational::BigRational;

fn multinomial(m: u32) -> BigInt {
    let fact = |n: u32| (1..=n).fold(BigInt::from(1), |acc, k| acc * k);
    fact(3 * m) / fact(m).pow(3)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = projective_plane();
    let k_max = 24;
    let sequences: Vec<_> = [
        PeriodStrategy::Incremental,
        PeriodStrategy::Parallel,
        PeriodStrategy::Split,
    ]
    .into_iter()
    .map(|s| period_sequence_with(&f, k_max, s))
    .collect();
    if sequences.windows(2).any(|w| w[0] != w[1]) {
        return Err("strategies disagree".into());
    }
    let p = &sequences[0];
    println!("periods of {f}:");
    for m in 1..=8u32 {
        let c = p.get(3 * m as usize).ok_or("sequence too short")?;
        println!("  c_{:<2} = {c}", 3 * m);
        if *c != BigRational::from_integer(multinomial(m)) {
            return Err(format!("c_{} is not (3m)!/(m!)^3", 3 * m).into());
        }
    }

    let c = descendant_constant(p, 3)?;
    println!("descendant constant at r = 3: {}", c.value);

    let reference = ingest_reference(
        &Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/plane_periods.csv"),
        None,
    )?;
    let report = is_weak_lg(&f, &reference, 12, DEFAULT_K_MIN)?;
    println!(
        "weak LG against {} for k = {}..{}: {}",
        reference.name(),
        report.k_min,
        report.k_max,
        if report.pass { "PASS" } else { "FAIL" }
    );
    if !report.pass {
        return Err("reference mismatch".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
