use num_integer::Integer;

use super::hermite::hermite_basis;
use super::snf::smith_full;
use crate::matrix::IntMatrix;

/// Solutions of `rows · w ≡ rhs (mod r)` in `Zⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSolution {
    /// Lex-least solution with every coordinate in `[0, r)`.
    pub particular: Vec<i64>,
    /// Hermite basis (columns) of the homogeneous solution lattice.
    pub homogeneous: IntMatrix,
}

/// `None` when the system is inconsistent. `r` must be positive.
pub fn solve_congruences(rows: &[Vec<i64>], rhs: &[i64], n: usize, r: i64) -> Option<CongruenceSolution> {
    assert!(r > 0, "modulus must be positive");
    assert_eq!(rows.len(), rhs.len());
    let m = rows.len();
    let (z, steps, v_inv) = if m == 0 {
        (vec![0i128; n], vec![1i64; n], IntMatrix::identity(n))
    } else {
        let a = IntMatrix::from_rows(rows).ok()?;
        if a.ncols() != n {
            return None;
        }
        let snf = smith_full(&a);
        let b: Vec<i128> = (0..m)
            .map(|i| (0..m).map(|k| snf.u_inv[(i, k)] as i128 * rhs[k] as i128).sum())
            .collect();
        let r128 = r as i128;
        let mut z = vec![0i128; n];
        let mut steps = vec![1i64; n];
        for i in 0..m {
            let d = if i < n { snf.d[(i, i)] as i128 } else { 0 };
            let bi = b[i].rem_euclid(r128);
            let g = d.gcd(&r128);
            if bi % g != 0 {
                return None;
            }
            if i >= n {
                continue;
            }
            let modulus = r128 / g;
            steps[i] = modulus as i64;
            if modulus > 1 {
                let inv = (d / g).extended_gcd(&modulus).x.rem_euclid(modulus);
                z[i] = ((bi / g) * inv).rem_euclid(modulus);
            }
        }
        (z, steps, snf.v_inv)
    };
    // w = V⁻¹ z, homogeneous lattice spanned by V⁻¹ · diag(steps) and r·Zⁿ.
    let mut w: Vec<i128> = (0..n)
        .map(|i| (0..n).map(|k| v_inv[(i, k)] as i128 * z[k]).sum())
        .collect();
    let mut gens: Vec<Vec<i64>> = (0..n)
        .map(|k| (0..n).map(|i| v_inv[(i, k)] * steps[k]).collect())
        .collect();
    gens.extend((0..n).map(|i| {
        let mut e = vec![0; n];
        e[i] = r;
        e
    }));
    let h = hermite_basis(&gens, n)?;
    for i in 0..n {
        let d = h[(i, i)] as i128;
        let q = w[i].div_euclid(d);
        if q != 0 {
            for (j, x) in w.iter_mut().enumerate() {
                *x -= q * h[(j, i)] as i128;
            }
        }
    }
    Some(CongruenceSolution {
        particular: w.into_iter().map(|x| x as i64).collect(),
        homogeneous: h,
    })
}
