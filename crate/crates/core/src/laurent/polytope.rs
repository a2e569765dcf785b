//! Vertices of the convex hull of a finite set of lattice points.
//!
//! A support point is a vertex iff it is not a convex combination of the other
//! points. That membership question is a feasibility LP, solved here exactly
//! with a phase-one simplex over rationals and Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rational, ExponentVector};

pub(crate) fn hull_vertices(points: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut vertices: Vec<ExponentVector> = points
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<&ExponentVector> = points
                .iter()
                .enumerate()
                .filter(|(j, _)| j != i)
                .map(|(_, q)| q)
                .collect();
            !in_convex_hull(p, &others)
        })
        .map(|(_, p)| p.clone())
        .collect();
    vertices.sort();
    vertices.dedup();
    vertices
}

/// Is `p` a convex combination of `points`?
pub(crate) fn in_convex_hull(p: &ExponentVector, points: &[&ExponentVector]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = p.len();
    let m = points.len();
    // Constraints: sum_j lambda_j * q_j = p (dim rows), sum_j lambda_j = 1.
    let rows = dim + 1;
    let cols = m + rows; // lambdas then artificials
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let (coeffs, rhs): (Vec<i64>, i64) = if i < dim {
            (points.iter().map(|q| q.as_slice()[i]).collect(), p.as_slice()[i])
        } else {
            (vec![1; m], 1)
        };
        let flip = rhs < 0;
        let mut row: Vec<BigRational> = coeffs.iter().map(|&a| rational(if flip { -a } else { a })).collect();
        row.extend((0..rows).map(|k| {
            if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        row.push(rational(rhs.abs()));
        tab.push(row);
    }
    let mut basis: Vec<usize> = (m..cols).collect();
    // Phase-one objective: minimize the sum of artificials. The reduced cost
    // row starts as minus the column sums of the lambda block.
    let mut cost: Vec<BigRational> = (0..=cols)
        .map(|j| {
            if j >= m && j < cols {
                BigRational::zero()
            } else {
                -tab.iter().map(|r| r[j].clone()).fold(BigRational::zero(), |a, b| a + b)
            }
        })
        .collect();

    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // Unbounded is impossible for a phase-one problem.
            break;
        };
        let pivot = tab[pivot_row][enter].clone();
        for v in tab[pivot_row].iter_mut() {
            *v /= &pivot;
        }
        let prow = tab[pivot_row].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pivot_row && !row[enter].is_zero() {
                let k = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &k * pv;
                }
            }
        }
        if !cost[enter].is_zero() {
            let k = cost[enter].clone();
            for (v, pv) in cost.iter_mut().zip(&prow) {
                *v -= &k * pv;
            }
        }
        basis[pivot_row] = enter;
    }
    // cost[cols] holds minus the optimal phase-one objective.
    cost[cols].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn square_with_center() {
        let pts: Vec<ExponentVector> = [[0, 0], [2, 0], [0, 2], [2, 2], [1, 1], [1, 0]]
            .iter()
            .map(|p| ev(p))
            .collect();
        assert_eq!(
            hull_vertices(&pts),
            vec![ev(&[0, 0]), ev(&[0, 2]), ev(&[2, 0]), ev(&[2, 2])]
        );
    }

    #[test]
    fn simplex_in_3d_with_interior_point() {
        let pts: Vec<ExponentVector> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1], [0, 0, 0]]
            .iter()
            .map(|p| ev(p))
            .collect();
        let v = hull_vertices(&pts);
        assert_eq!(v.len(), 4);
        assert!(!v.contains(&ev(&[0, 0, 0])));
    }

    #[test]
    fn collinear_and_single() {
        let pts = vec![ev(&[-3]), ev(&[0]), ev(&[5]), ev(&[1])];
        assert_eq!(hull_vertices(&pts), vec![ev(&[-3]), ev(&[5])]);
        assert_eq!(hull_vertices(&[ev(&[4, 4])]), vec![ev(&[4, 4])]);
    }
}
