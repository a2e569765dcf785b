//! Parsing rational expressions, normalizing to Laurent polynomials,
//! rejecting non-Laurent quotients, evaluation and Newton polytopes.

use std::error::Error;

use lgforge::laurent::{parse, parse_laurent, ParseLaurentError};
use num_complex::Complex64;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let vars = ["x", "y"];

    // Exact division of the numerator by the denominator.
    let w = parse_laurent("(x^2*y - y^3)/(x - y) + 1/(x*y)", &vars)?;
    println!("normalized: {w}");
    if w != parse_laurent("x*y + y^2 + x^-1*y^-1", &vars)? {
        return Err("normalization disagrees".into());
    }

    // A quotient that is a rational function but not a Laurent polynomial.
    match parse_laurent("(x + 1)/(y + 1)", &vars) {
        Err(ParseLaurentError::Laurent(e)) => println!("rejected: {e}"),
        other => return Err(format!("expected a NotLaurent error, got {other:?}").into()),
    }

    // Syntax errors carry a column.
    match parse_laurent("x + * y", &vars) {
        Err(ParseLaurentError::Parse(e)) => println!("syntax error: {e}"),
        other => return Err(format!("expected a parse error, got {other:?}").into()),
    }

    // Rational expressions are kept as fractions until normalized.
    let r = parse("x/(1+y) + 1/x", &vars)?;
    println!("rational: {}", r.render());
    if r.laurent_normalize().is_ok() {
        return Err("x/(1+y) + 1/x is not a Laurent polynomial".into());
    }

    let f = parse_laurent("x + y + 1/(x*y)", &vars)?;
    let z = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.5)];
    let value = f.evaluate(&z)?;
    println!("W(1, -1+0.5i) = {value}");
    let want = z[0] + z[1] + 1.0 / (z[0] * z[1]);
    if (value - want).norm() > 1e-12 {
        return Err("evaluation disagrees".into());
    }

    let vertices = f.newton_polytope()?;
    let listed: Vec<String> = vertices.iter().map(ToString::to_string).collect();
    println!("Newton polytope vertices: {}", listed.join(" "));
    if vertices.len() != 3 {
        return Err("the triangle has three vertices".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
