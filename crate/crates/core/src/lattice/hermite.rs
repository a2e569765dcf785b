use crate::matrix::IntMatrix;

/// Echelon ("Hermite") basis of the lattice spanned by `generators` in `Zⁿ`.
///
/// Returns the basis as the columns of a lower-triangular matrix `H` with a
/// positive diagonal and every off-diagonal entry in row `i` reduced into
/// `[0, H[i][i])`. `None` when the generators do not span a rank-`n` lattice.
pub fn hermite_basis(generators: &[Vec<i64>], n: usize) -> Option<IntMatrix> {
    let mut pool: Vec<Vec<i64>> = generators
        .iter()
        .filter(|g| g.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(n);
    for i in 0..n {
        // Euclid on coordinate i across the pool until one vector remains.
        loop {
            let mut nonzero: Vec<usize> = (0..pool.len()).filter(|&k| pool[k][i] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&k| pool[k][i].abs());
            let piv = nonzero[0];
            let p = pool[piv][i];
            let pivot_vec = pool[piv].clone();
            for &k in &nonzero[1..] {
                let q = pool[k][i].div_euclid(p);
                for (x, y) in pool[k].iter_mut().zip(&pivot_vec) {
                    *x -= q * y;
                }
            }
            pool.retain(|g| g.iter().any(|&x| x != 0));
        }
        let idx = (0..pool.len()).find(|&k| pool[k][i] != 0)?;
        let mut h = pool.swap_remove(idx);
        if h[i] < 0 {
            h.iter_mut().for_each(|x| *x = -*x);
        }
        basis.push(h);
    }
    for i in 0..n {
        let d = basis[i][i];
        let hi = basis[i].clone();
        for b in basis.iter_mut().take(i) {
            let q = b[i].div_euclid(d);
            if q != 0 {
                for (x, y) in b.iter_mut().zip(&hi) {
                    *x -= q * y;
                }
            }
        }
    }
    IntMatrix::from_columns(&basis).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_sum_lattice() {
        let h = hermite_basis(&[vec![2, 0], vec![0, 2], vec![1, 1]], 2).unwrap();
        assert_eq!(h.columns(), vec![vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn rank_deficient() {
        assert!(hermite_basis(&[vec![1, 1], vec![2, 2]], 2).is_none());
    }

    #[test]
    fn reduces_off_diagonal() {
        let h = hermite_basis(&[vec![3, 7], vec![0, 5]], 2).unwrap();
        assert_eq!(h.columns(), vec![vec![3, 2], vec![0, 5]]);
        assert_eq!(h.det().unwrap(), 15);
    }
}
