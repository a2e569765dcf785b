//! Critical values of the quotient potential of a degree-d hypersurface,
//! compared with the closed form `(n+2-d)·λ`, `λ^(n+2-d) = d^d`.
//!
//! Run with `cargo run --release --example hypersurface_critical`.

use std::error::Error;

use lgforge::catalog::{hypersurface_critical_values, hypersurface_quotient};
use lgforge::critical::{critical_values, CriticalOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = CriticalOptions::default();
    for (n, d) in [(2, 1), (2, 2), (3, 2), (3, 3), (4, 3)] {
        let f = hypersurface_quotient(n, d);
        let (found, report) = critical_values(&f, &opts);
        let expected = hypersurface_critical_values(n, d);
        println!("n = {n}, d = {d}: W = {f}");
        println!(
            "  {} of {} starts converged, {} distinct points",
            report.converged,
            report.starts,
            report.points.len()
        );
        let mut worst = 0.0f64;
        for want in &expected {
            let got = found
                .iter()
                .map(|v| (v.value - want).norm())
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(got);
            println!("  {:>+10.6} {:>+10.6}i  deviation {got:.1e}", want.re, want.im);
        }
        let nondegenerate = report.points.iter().all(|p| p.nondegenerate);
        println!(
            "  found {} values, expected {}; max deviation {worst:.1e}; all nondegenerate: {nondegenerate}",
            found.len(),
            expected.len()
        );
        if found.len() != expected.len() || worst >= 1e-9 || !nondegenerate {
            return Err(format!("critical values of the (n, d) = ({n}, {d}) potential disagree").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
