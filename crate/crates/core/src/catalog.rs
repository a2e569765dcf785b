//! Named potentials, cover specs and disc-class families used by the
//! examples, the command-line tool and the regression tests.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cover::{CoverSpec, DiscClass, DivisorFunctional};
use crate::lattice::Sublattice;
use crate::laurent::{parse_laurent, rational, ExponentVector, LaurentPoly};
use crate::mutation::Substitution;

fn xy(text: &str) -> LaurentPoly {
    parse_laurent(text, &["x", "y"]).expect("catalog expression parses")
}

/// `x + y + 1/(xy)`, the Clifford torus in the projective plane.
pub fn projective_plane() -> LaurentPoly {
    xy("x + y + 1/(x*y)")
}

/// `x + y + 1/x + 1/y`, the product torus in the quadric surface.
pub fn quadric_surface() -> LaurentPoly {
    xy("x + y + 1/x + 1/y")
}

/// `x + (1+y)²/(xy)`: the quotient potential of the double plane branched
/// along a conic.
pub fn quadric_quotient() -> LaurentPoly {
    xy("x + (1+y)^2/(x*y)")
}

/// `(1+x)²(1+y)²/(xy) − 4` on the degree-4 del Pezzo surface.
pub fn del_pezzo_four() -> LaurentPoly {
    xy("(1+x)^2*(1+y)^2/(x*y) - 4")
}

/// `x² + xy + y² + 1/(xy)`: double cover of the plane giving the second
/// Hirzebruch surface.
pub fn hirzebruch_upstairs() -> LaurentPoly {
    xy("x^2 + x*y + y^2 + 1/(x*y)")
}

/// `x + y + 1/x + 1/(x²y)`, the toric potential of the second Hirzebruch
/// surface.
pub fn hirzebruch_toric() -> LaurentPoly {
    xy("x + y + 1/x + 1/(x^2*y)")
}

/// Basis `u = (−1,−1)`, `v = (2,0)` identifying the invariant lattice of the
/// Hirzebruch cover with the toric coordinates `(x, y) = (u, v)`.
pub fn hirzebruch_basis() -> Sublattice {
    Sublattice::from_columns(&[[-1, -1], [2, 0]]).expect("nonsingular")
}

/// `deg(e) = (e₁ + e₂ + 2)/3`: the conic meets the discs of `x` and `y` once
/// and misses the disc of `1/(xy)`.
pub fn plane_conic_functional() -> DivisorFunctional {
    DivisorFunctional::from_ratios(&[1, 1], 2, 3)
}

/// Quotient basis `x = (−1,−1)`, `y = (1,−1)` for the conic double cover.
pub fn plane_conic_basis() -> Sublattice {
    Sublattice::from_columns(&[[-1, -1], [1, -1]]).expect("nonsingular")
}

/// Double plane branched along a conic; no descendant correction since the
/// pseudo-index of the plane exceeds 2.
pub fn del_pezzo_stage1() -> CoverSpec {
    let mut spec = CoverSpec::new(projective_plane(), plane_conic_functional(), 2, BigRational::zero())
        .with_basis(plane_conic_basis());
    spec.name = Some("plane double cover along a conic".into());
    spec
}

/// Double quadric branched along an anticanonical curve, with descendant 4.
pub fn del_pezzo_stage2() -> CoverSpec {
    let mut spec = CoverSpec::new(quadric_quotient(), DivisorFunctional::constant(2, 1), 2, rational(4))
        .with_basis(Sublattice::from_columns(&[[2, 0], [0, 1]]).expect("nonsingular"));
    spec.name = Some("quadric double cover along an anticanonical curve".into());
    spec
}

/// `(x, y) ↦ (x/(1+y), xy/(1+y))`.
pub fn square_mutation() -> Substitution {
    Substitution::parse(&["x", "y"], &["x/(1+y)", "x*y/(1+y)"]).expect("valid")
}

/// `(x, y) ↦ (xy/(1+y)², y)`.
pub fn del_pezzo_mutation() -> Substitution {
    Substitution::parse(&["x", "y"], &["x*y/(1+y)^2", "y"]).expect("valid")
}

/// Double cover of the projective line branched at two points.
pub fn line_double_cover() -> CoverSpec {
    let f = parse_laurent("x + 1/x", &["x"]).expect("parses");
    let mut spec = CoverSpec::new(f, DivisorFunctional::constant(1, 1), 2, rational(2));
    spec.name = Some("line double cover".into());
    spec
}

/// Variable names `x0 … x_{n−d}, y1 … y_{d−1}` of [`hypersurface_quotient`].
pub fn hypersurface_varnames(n: usize, d: usize) -> Vec<String> {
    (0..=n - d)
        .map(|i| format!("x{i}"))
        .chain((1..d).map(|j| format!("y{j}")))
        .collect()
}

/// Quotient potential of the torus in a degree-`d` hypersurface of
/// projective `(n+1)`-space:
/// `x0 + … + x_{n−d} + (1 + y1 + … + y_{d−1})^d / (x0⋯x_{n−d}·y1⋯y_{d−1})`.
///
/// Requires `1 ≤ d ≤ n`.
pub fn hypersurface_quotient(n: usize, d: usize) -> LaurentPoly {
    assert!(d >= 1 && d <= n, "need 1 <= d <= n");
    let names = hypersurface_varnames(n, d);
    let xs: Vec<&str> = names[..=n - d].iter().map(String::as_str).collect();
    let ys: Vec<&str> = names[n - d + 1..].iter().map(String::as_str).collect();
    let linear = xs.join(" + ");
    let inner = std::iter::once("1")
        .chain(ys.iter().copied())
        .collect::<Vec<_>>()
        .join(" + ");
    let monomial = xs.iter().chain(ys.iter()).copied().collect::<Vec<_>>().join("*");
    let text = format!("{linear} + ({inner})^{d}/({monomial})");
    parse_laurent(&text, &names).expect("hypersurface potential parses")
}

/// `{(n+2−d)·λ : λ^{n+2−d} = d^d}`, sorted by real then imaginary part.
pub fn hypersurface_critical_values(n: usize, d: usize) -> Vec<Complex64> {
    let m = (n + 2 - d) as f64;
    let modulus = (d as f64).powf(d as f64 / m);
    let mut out: Vec<Complex64> = (0..n + 2 - d)
        .map(|k| Complex64::from_polar(m * modulus, std::f64::consts::TAU * k as f64 / m))
        .collect();
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    out
}

/// Basic disc classes `v0 … vn` of the torus in projective `n`-space used
/// for the degree-`d` hypersurface: `μ/2 = 1`, one hit on the branch
/// hyperplane for `k < d`, and area `ℓ(v_k)/(n+2−d)` with
/// `ℓ(v) = μ/2 − (d−1)/d · v·H`.
pub fn hypersurface_base_classes(n: usize, d: usize) -> Vec<DiscClass> {
    let m = BigRational::from_integer(((n + 2 - d) as i64).into());
    (0..=n)
        .map(|k| {
            let hits = i64::from(k < d);
            let ell = rational(1) - BigRational::new(((d as i64 - 1) * hits).into(), (d as i64).into());
            let mut boundary = vec![0i64; n];
            if k == 0 {
                boundary.iter_mut().for_each(|x| *x = -1);
            } else {
                boundary[k - 1] = 1;
            }
            DiscClass::new(1, vec![hits], ExponentVector::new(boundary), ell / &m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::{critical_values, CriticalOptions};

    #[test]
    fn hypersurface_shapes() {
        assert_eq!(
            hypersurface_quotient(2, 1),
            projective_plane().with_varnames(hypersurface_varnames(2, 1)).unwrap()
        );
        let q = hypersurface_quotient(2, 2);
        assert_eq!(q, quadric_quotient());
        assert_eq!(hypersurface_varnames(4, 3), vec!["x0", "x1", "y1", "y2"]);
        assert_eq!(hypersurface_quotient(4, 3).rank(), 4);
    }

    #[test]
    fn closed_form_values() {
        let v = hypersurface_critical_values(2, 2);
        assert!((v[0] + 4.0).norm() < 1e-12 && (v[1] - 4.0).norm() < 1e-12);
        let (found, _) = critical_values(&hypersurface_quotient(2, 2), &CriticalOptions::default());
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn base_classes() {
        let c = hypersurface_base_classes(2, 2);
        let areas: Vec<String> = c.iter().map(|d| d.area.to_string()).collect();
        assert_eq!(areas, vec!["1/4", "1/4", "1/2"]);
        assert_eq!(c[0].boundary, ExponentVector::new(vec![-1, -1]));
    }
}
