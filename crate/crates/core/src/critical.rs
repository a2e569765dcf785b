//! Critical points of Laurent potentials on the complex torus.
//!
//! Newton's method runs in logarithmic coordinates `x = exp(t)`, where the
//! system `θᵢ f = xᵢ ∂f/∂xᵢ = 0` becomes `Σ c·eᵢ·exp(e·t) = 0` and the
//! Jacobian is the log-Hessian `θᵢθⱼ f`.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::laurent::{rational, rational_to_f64, LaurentPoly};

/// `θᵢ f = Σ eᵢ·c·x^e` for each coordinate `i`.
pub fn log_gradient(f: &LaurentPoly) -> Vec<LaurentPoly> {
    (0..f.rank())
        .map(|i| {
            let terms = f
                .terms()
                .filter(|(e, _)| e.as_slice()[i] != 0)
                .map(|(e, c)| (e.clone(), c * rational(e.as_slice()[i])));
            LaurentPoly::from_terms(f.rank(), terms)
                .with_varnames(f.varnames().to_vec())
                .expect("same rank")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalOptions {
    pub starts: usize,
    /// Largest accepted `max |θᵢ f|`.
    pub tol: f64,
    pub max_iter: usize,
    /// Max-norm distance on coordinates below which points are merged.
    pub dedupe_radius: f64,
    pub seed: u64,
    /// Start moduli are log-uniform in `[1/radius, radius]`.
    pub radius: f64,
    /// Threshold on `|det H| / Π‖Hᵢ‖` for nondegeneracy.
    pub degeneracy_threshold: f64,
}

impl Default for CriticalOptions {
    fn default() -> Self {
        CriticalOptions {
            starts: 200,
            tol: 1e-10,
            max_iter: 100,
            dedupe_radius: 1e-6,
            seed: 0,
            radius: 4.0,
            degeneracy_threshold: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalPoint {
    #[serde(serialize_with = "crate::serde_util::complexes")]
    pub coords: Vec<Complex64>,
    #[serde(serialize_with = "crate::serde_util::complex")]
    pub value: Complex64,
    #[serde(serialize_with = "crate::serde_util::complex")]
    pub log_hessian_det: Complex64,
    pub nondegenerate: bool,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalReport {
    pub points: Vec<CriticalPoint>,
    /// Every `θᵢ f` is identically zero, so there is nothing to solve.
    pub gradient_vanishes: bool,
    pub starts: usize,
    /// Starts that converged before deduplication.
    pub converged: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalValue {
    #[serde(serialize_with = "crate::serde_util::complex")]
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Floating-point copy of `f` for the solver.
struct Compiled {
    rank: usize,
    exps: Vec<Vec<f64>>,
    coeffs: Vec<Complex64>,
}

impl Compiled {
    fn new(f: &LaurentPoly) -> Self {
        let (exps, coeffs) = f
            .terms()
            .map(|(e, c)| {
                (
                    e.as_slice().iter().map(|&x| x as f64).collect(),
                    Complex64::new(rational_to_f64(c), 0.0),
                )
            })
            .unzip();
        Compiled {
            rank: f.rank(),
            exps,
            coeffs,
        }
    }

    /// Per-term values `c·exp(e·t)`.
    fn term_values(&self, t: &[Complex64]) -> Vec<Complex64> {
        self.exps
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| {
                let s: Complex64 = e.iter().zip(t).map(|(a, x)| x * a).sum();
                c * s.exp()
            })
            .collect()
    }

    fn gradient(&self, vals: &[Complex64]) -> DVector<Complex64> {
        DVector::from_fn(self.rank, |i, _| {
            self.exps.iter().zip(vals).map(|(e, v)| v * e[i]).sum()
        })
    }

    fn hessian(&self, vals: &[Complex64]) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rank, self.rank, |i, j| {
            self.exps.iter().zip(vals).map(|(e, v)| v * (e[i] * e[j])).sum()
        })
    }
}

fn max_abs(v: &DVector<Complex64>) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Damped Newton from `t0`. Returns the final log-coordinates on success.
fn newton(sys: &Compiled, mut t: Vec<Complex64>, opts: &CriticalOptions) -> Option<Vec<Complex64>> {
    let mut vals = sys.term_values(&t);
    let mut g = sys.gradient(&vals);
    let mut res = max_abs(&g);
    for _ in 0..opts.max_iter {
        if !res.is_finite() {
            return None;
        }
        let h = sys.hessian(&vals);
        let step = h.lu().solve(&(-&g))?;
        if step.iter().any(|z| !z.is_finite()) {
            return None;
        }
        let step_size = max_abs(&step);
        // Halve the step until the residual drops; accept the last try anyway
        // so iterates cannot stall on a plateau.
        let mut alpha = 1.0;
        let mut next;
        loop {
            next = t
                .iter()
                .zip(step.iter())
                .map(|(a, d)| a + d * alpha)
                .collect::<Vec<_>>();
            let nv = sys.term_values(&next);
            let ng = sys.gradient(&nv);
            let nres = max_abs(&ng);
            if nres < res || alpha < 1.0 / 64.0 {
                vals = nv;
                g = ng;
                res = nres;
                break;
            }
            alpha /= 2.0;
        }
        t = next;
        if t.iter().any(|z| z.re.abs() > 60.0) {
            return None;
        }
        if step_size * alpha < 1e-15 || res < opts.tol * 1e-3 {
            break;
        }
    }
    // A few full steps to polish to machine precision.
    for _ in 0..2 {
        let h = sys.hessian(&vals);
        let Some(step) = h.lu().solve(&(-&g)) else { break };
        let cand: Vec<Complex64> = t.iter().zip(step.iter()).map(|(a, d)| a + d).collect();
        let cv = sys.term_values(&cand);
        let cg = sys.gradient(&cv);
        if max_abs(&cg) <= res {
            t = cand;
            vals = cv;
            g = cg;
            res = max_abs(&g);
        } else {
            break;
        }
    }
    (res < opts.tol).then_some(t)
}

fn random_starts(rank: usize, opts: &CriticalOptions) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let log_r = opts.radius.max(1.0).ln();
    (0..opts.starts)
        .map(|_| {
            (0..rank)
                .map(|_| {
                    let re = if log_r > 0.0 {
                        rng.gen_range(-log_r..=log_r)
                    } else {
                        0.0
                    };
                    Complex64::new(re, rng.gen_range(0.0..TAU))
                })
                .collect()
        })
        .collect()
}

fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

fn cmp_points(a: &CriticalPoint, b: &CriticalPoint) -> Ordering {
    cmp_complex(&a.value, &b.value).then_with(|| {
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| cmp_complex(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn describe(f: &LaurentPoly, sys: &Compiled, t: &[Complex64], opts: &CriticalOptions) -> CriticalPoint {
    let coords: Vec<Complex64> = t.iter().map(|z| z.exp()).collect();
    let vals = sys.term_values(t);
    let value: Complex64 = vals.iter().sum();
    let h = sys.hessian(&vals);
    let det = h.clone().lu().determinant();
    let scale: f64 = h
        .row_iter()
        .map(|row| row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .product();
    let nondegenerate = scale > 0.0 && det.norm() / scale > opts.degeneracy_threshold;
    // Residual from the exact gradient polynomials, independent of `sys`.
    let residual = log_gradient(f)
        .iter()
        .map(|g| g.evaluate(&coords).map(|z| z.norm()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    CriticalPoint {
        coords,
        value,
        log_hessian_det: det,
        nondegenerate,
        residual,
    }
}

pub fn critical_points(f: &LaurentPoly, opts: &CriticalOptions) -> CriticalReport {
    let gradient_vanishes = f.rank() == 0 || log_gradient(f).iter().all(LaurentPoly::is_zero);
    if gradient_vanishes {
        return CriticalReport {
            points: Vec::new(),
            gradient_vanishes,
            starts: opts.starts,
            converged: 0,
        };
    }
    let sys = Compiled::new(f);
    let starts = random_starts(f.rank(), opts);
    let mut found: Vec<CriticalPoint> = starts
        .into_par_iter()
        .filter_map(|t0| newton(&sys, t0, opts))
        .map(|t| describe(f, &sys, &t, opts))
        .filter(|p| p.residual < opts.tol)
        .collect();
    let converged = found.len();
    found.sort_by(cmp_points);
    let mut points: Vec<CriticalPoint> = Vec::new();
    for p in found {
        let dup = points.iter().any(|q| {
            q.coords
                .iter()
                .zip(&p.coords)
                .all(|(a, b)| (a - b).norm() <= opts.dedupe_radius)
        });
        if !dup {
            points.push(p);
        }
    }
    CriticalReport {
        points,
        gradient_vanishes,
        starts: opts.starts,
        converged,
    }
}

/// Clusters the values of `points` within `radius·max(1, |v|)`.
pub fn cluster_values(points: &[CriticalPoint], radius: f64) -> Vec<CriticalValue> {
    let mut out: Vec<CriticalValue> = Vec::new();
    for p in points {
        match out
            .iter_mut()
            .find(|c| (c.value - p.value).norm() <= radius * c.value.norm().max(1.0))
        {
            Some(c) => c.multiplicity += 1,
            None => out.push(CriticalValue {
                value: p.value,
                multiplicity: 1,
            }),
        }
    }
    out.sort_by(|a, b| cmp_complex(&a.value, &b.value));
    out
}

pub fn critical_values(f: &LaurentPoly, opts: &CriticalOptions) -> (Vec<CriticalValue>, CriticalReport) {
    let report = critical_points(f, opts);
    (cluster_values(&report.points, opts.dedupe_radius), report)
}
