use serde::Serialize;

use crate::matrix::IntMatrix;

/// `A = U · D · V` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d[(i, i)])
            .collect()
    }
}

/// Decomposition together with the inverses of the unimodular factors.
pub(crate) struct SnfFull {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let full = smith_full(a);
    SnfDecomposition {
        u: full.u,
        d: full.d,
        v: full.v,
    }
}

/// Elementary-operation SNF. Each row operation `R` on the working matrix is
/// mirrored as `U ← U·R⁻¹`, `U⁻¹ ← R·U⁻¹` (columns likewise on `V`), so that
/// `A = U · cur · V` holds throughout.
pub(crate) fn smith_full(a: &IntMatrix) -> SnfFull {
    let (m, n) = (a.nrows(), a.ncols());
    let mut cur = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut u_inv = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    macro_rules! swap_rows {
        ($a:expr, $b:expr) => {{
            cur.swap_rows($a, $b);
            u.swap_cols($a, $b);
            u_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! swap_cols {
        ($a:expr, $b:expr) => {{
            cur.swap_cols($a, $b);
            v.swap_rows($a, $b);
            v_inv.swap_cols($a, $b);
        }};
    }
    // row[dst] += k * row[src]
    macro_rules! add_row {
        ($dst:expr, $src:expr, $k:expr) => {{
            cur.add_row_multiple($dst, $src, $k);
            u.add_col_multiple($src, $dst, -$k);
            u_inv.add_row_multiple($dst, $src, $k);
        }};
    }
    // col[dst] += k * col[src]
    macro_rules! add_col {
        ($dst:expr, $src:expr, $k:expr) => {{
            cur.add_col_multiple($dst, $src, $k);
            v.add_row_multiple($src, $dst, -$k);
            v_inv.add_col_multiple($dst, $src, $k);
        }};
    }

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = cur[(i, j)];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < cur[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            swap_rows!(t, bi);
            swap_cols!(t, bj);
            let p = cur[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let q = cur[(i, t)] / p;
                add_row!(i, t, -q);
                clean &= cur[(i, t)] == 0;
            }
            for j in t + 1..n {
                let q = cur[(t, j)] / p;
                add_col!(j, t, -q);
                clean &= cur[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| cur[(i, j)] % p != 0));
            match offender {
                Some(i) => add_row!(t, i, 1),
                None => break,
            }
        }
        if cur[(t, t)] < 0 {
            cur.negate_row(t);
            u.negate_col(t);
            u_inv.negate_row(t);
        }
    }
    SnfFull {
        u,
        u_inv,
        d: cur,
        v,
        v_inv,
    }
}
