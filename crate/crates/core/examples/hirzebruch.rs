//! The second Hirzebruch surface as a double cover of the plane: the
//! invariant part of `x² + xy + y² + 1/(xy)` under `(x, y) ↦ (−x, −y)` is the
//! toric potential of the surface.

use std::error::Error;

use lgforge::catalog::{hirzebruch_basis, hirzebruch_toric, hirzebruch_upstairs};
use lgforge::lattice::{invariant_sublattice, rewrite_in_sublattice, CharacterAction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let upstairs = hirzebruch_upstairs();
    let action = CharacterAction::new(vec![1, 1], 2)?;
    if let Some((e, _)) = upstairs.terms().find(|(e, _)| !action.fixes(e)) {
        return Err(format!("exponent {e} is not invariant").into());
    }
    let basis = hirzebruch_basis();
    if !basis.same_lattice(&invariant_sublattice(&action)) {
        return Err("u = (-1,-1), v = (2,0) do not span the invariant lattice".into());
    }
    let quotient = rewrite_in_sublattice(&upstairs, &basis)?;
    println!("{upstairs}  ->  {quotient}");
    if quotient != hirzebruch_toric() {
        return Err("quotient is not the toric potential".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
