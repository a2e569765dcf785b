//! Smith normal form, invariant sublattices of a cyclic character, and
//! rewriting a potential on a sublattice.

use std::error::Error;

use lgforge::lattice::{invariant_sublattice, rewrite_in_sublattice, smith_normal_form, CharacterAction, Sublattice};
use lgforge::laurent::parse_laurent;
use lgforge::matrix::IntMatrix;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12]])?;
    let snf = smith_normal_form(&a);
    println!("SNF of {:?}: diagonal {:?}", a.to_rows(), snf.diagonal());
    if snf.diagonal() != vec![2, 6] {
        return Err("wrong invariant factors".into());
    }
    if snf.u.mul(&snf.d)?.mul(&snf.v)? != a {
        return Err("U·D·V does not reproduce A".into());
    }

    // Z/2 acting with weights (1,1): invariant monomials have even total degree.
    let action = CharacterAction::new(vec![1, 1], 2)?;
    let s = invariant_sublattice(&action);
    println!("invariant basis {:?}, index {}", s.basis().columns(), s.index());

    let preferred = Sublattice::from_columns(&[[-1, -1], [1, -1]])?;
    println!(
        "(-1,-1), (1,-1) spans the same lattice: {}; transition {:?}",
        preferred.same_lattice(&s),
        preferred.transition_to(&s)?.to_rows()
    );

    let upstairs = parse_laurent("1/(x*y) + (x+y)^2", &["x", "y"])?;
    let quotient = rewrite_in_sublattice(&upstairs, &preferred)?;
    println!("{upstairs}  ->  {quotient}");
    if quotient != parse_laurent("x + (1+y)^2/(x*y)", &["x", "y"])? {
        return Err("quotient disagrees".into());
    }

    // An odd exponent is not in the sublattice.
    match rewrite_in_sublattice(&parse_laurent("x + y^2", &["x", "y"])?, &s) {
        Err(e) => println!("rejected: {e}"),
        Ok(q) => return Err(format!("x + y^2 should not rewrite, got {q}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
