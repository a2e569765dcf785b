//! Rank-one sanity check: the double cover of the line branched at two
//! points turns `x + 1/x` into `x² + x⁻²`, whose periods are the central
//! binomial coefficients.

use std::error::Error;

use lgforge::catalog::line_double_cover;
use lgforge::cover::build_cover_potential;
use lgforge::laurent::parse_laurent;
use lgforge::periods::{is_weak_lg, PeriodSequence};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let out = build_cover_potential(&line_double_cover())?;
    println!("upstairs {}, quotient {}", out.upstairs, out.quotient);
    if out.upstairs != parse_laurent("x^2 + x^-2", &["x"])? {
        return Err("upstairs should be x^2 + x^-2".into());
    }
    let binomials: Vec<i64> = (0..=12)
        .map(|k: i64| {
            if k % 2 == 1 {
                return 0;
            }
            let m = k / 2;
            (1..=m).fold(1, |acc, i| acc * (m + i) / i)
        })
        .collect();
    let reference = PeriodSequence::from_integers("central binomial", &binomials);
    let report = is_weak_lg(&out.upstairs, &reference, 12, 1)?;
    for row in &report.rows {
        println!("  k = {:>2}: {:>4}", row.k, row.computed);
    }
    if !report.pass {
        return Err("periods are not the central binomials".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
