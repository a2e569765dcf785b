//! Bookkeeping for disc classes: lifting through the cover, Maslov
//! positivity, monotonicity and connectedness of the lifted torus.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::laurent::ExponentVector;

/// A relative class with its Maslov index, divisor intersections, boundary
/// and area.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscClass {
    pub half_maslov: i64,
    pub divisor_hits: Vec<i64>,
    pub boundary: ExponentVector,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub area: BigRational,
}

impl DiscClass {
    pub fn new(half_maslov: i64, divisor_hits: Vec<i64>, boundary: ExponentVector, area: BigRational) -> Self {
        DiscClass {
            half_maslov,
            divisor_hits,
            boundary,
            area,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftResult {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub half_maslov: BigRational,
    /// Whether the lifted value is a possible Maslov index of a class.
    pub integral: bool,
}

/// `μ_X/2 = μ_Y/2 − (r−1)/r · hits` for a disc downstairs meeting the
/// branch divisor `hits` times.
pub fn riemann_hurwitz_lift(half_maslov_y: i64, hits: i64, r: i64) -> LiftResult {
    assert!(r >= 2, "cover degree must be at least 2");
    let value = BigRational::from_integer(half_maslov_y.into()) - BigRational::new(((r - 1) * hits).into(), r.into());
    LiftResult {
        integral: value.is_integer(),
        half_maslov: value,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaslovRow {
    pub index: usize,
    pub half_maslov: i64,
    pub hits: i64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaslovReport {
    pub rows: Vec<MaslovRow>,
    pub pass: bool,
}

/// Checks `μ/2 ≥ max(Σ_{i ∈ selected} hitsᵢ, 1)` class by class.
pub fn maslov_positive(classes: &[DiscClass], selected: &[usize]) -> MaslovReport {
    let rows: Vec<MaslovRow> = classes
        .iter()
        .enumerate()
        .map(|(index, c)| {
            let hits: i64 = selected
                .iter()
                .map(|&i| c.divisor_hits.get(i).copied().unwrap_or(0))
                .sum();
            MaslovRow {
                index,
                half_maslov: c.half_maslov,
                hits,
                ok: c.half_maslov >= hits.max(1),
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.ok);
    MaslovReport { rows, pass }
}

/// The common ratio `λ = area / (μ/2)`, if there is one.
pub fn monotonicity_check(classes: &[DiscClass]) -> Option<BigRational> {
    let mut lambda: Option<BigRational> = None;
    for c in classes {
        if c.half_maslov <= 0 || !c.area.is_positive() {
            return None;
        }
        let ratio = &c.area / BigRational::from_integer(c.half_maslov.into());
        match &lambda {
            None => lambda = Some(ratio),
            Some(l) if *l == ratio => {}
            Some(_) => return None,
        }
    }
    lambda
}

/// Combinations `Σ a_k v_k` (`a_k ≥ 0`, `1 ≤ Σ a_k ≤ max_total`) of the base
/// classes whose total divisor hits are divisible by `r`, lifted through the
/// cover. Areas and boundaries add; the lifted class meets the ramification
/// divisor `hits / r` times.
pub fn lift_classes(base: &[DiscClass], r: i64, max_total: usize) -> Vec<DiscClass> {
    let mut out = Vec::new();
    let mut counts = vec![0usize; base.len()];
    fn rec(
        base: &[DiscClass],
        r: i64,
        remaining: usize,
        pos: usize,
        counts: &mut Vec<usize>,
        out: &mut Vec<DiscClass>,
    ) {
        if pos == base.len() {
            if counts.iter().all(|&a| a == 0) {
                return;
            }
            let rank = base[0].boundary.len();
            let mut half_maslov = 0i64;
            let mut hits = 0i64;
            let mut boundary = ExponentVector::zero(rank);
            let mut area = BigRational::from_integer(0.into());
            for (c, &a) in base.iter().zip(counts.iter()) {
                let a = a as i64;
                half_maslov += a * c.half_maslov;
                hits += a * c.divisor_hits.iter().sum::<i64>();
                boundary = &boundary + &c.boundary.scaled(a);
                area += &c.area * BigRational::from_integer(a.into());
            }
            if hits % r != 0 {
                return;
            }
            let lift = riemann_hurwitz_lift(half_maslov, hits, r);
            if lift.integral {
                let half = lift.half_maslov.to_integer().try_into().unwrap_or(i64::MAX);
                out.push(DiscClass::new(half, vec![hits / r], boundary, area));
            }
            return;
        }
        for a in 0..=remaining {
            counts[pos] = a;
            rec(base, r, remaining - a, pos + 1, counts, out);
        }
        counts[pos] = 0;
    }
    if !base.is_empty() {
        rec(base, r, max_total, 0, &mut counts, &mut out);
    }
    out
}

/// The lifted torus is connected iff the linking numbers of a generating
/// set of loops, together with `r`, have gcd 1.
pub fn cover_connected(values: &[i64], r: i64) -> bool {
    values.iter().fold(r, |g, v| g.gcd(v)) == 1
}
