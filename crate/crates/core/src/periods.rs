//! Period sequences `k ↦ c₀(f^k)`, descendant constants, weak-LG checks and
//! reference-data ingestion.

use std::fmt;
use std::path::Path;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{parse_rational, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodError {
    #[error("index {r} is beyond the last coefficient k = {max}")]
    OutOfRange { r: usize, max: usize },
    #[error("reference stops at k = {have}, need k = {need}")]
    ReferenceTooShort { have: usize, need: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate entry for k = {k}")]
    DuplicateK { k: usize, line: usize },
    #[error("reference file is empty")]
    Empty,
    #[error("cannot read reference: {0}")]
    Io(String),
    #[error("unknown reference format for {0} (use .csv or .json)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeriodSource {
    Computed,
    Ingested,
}

/// Coefficients `c₀ … c_K`, with `c_k` at index `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSequence {
    name: String,
    coeffs: Vec<BigRational>,
    source: PeriodSource,
}

impl PeriodSequence {
    pub fn new(name: impl Into<String>, coeffs: Vec<BigRational>, source: PeriodSource) -> Self {
        PeriodSequence {
            name: name.into(),
            coeffs,
            source,
        }
    }

    /// Integer-coefficient sequence, mainly for tests and fixtures.
    pub fn from_integers(name: impl Into<String>, values: &[i64]) -> Self {
        let coeffs = values.iter().map(|&v| BigRational::from_integer(v.into())).collect();
        Self::new(name, coeffs, PeriodSource::Ingested)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn source(&self) -> PeriodSource {
        self.source
    }

    /// `K`, the largest index present. `None` for an empty sequence.
    pub fn max_k(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    /// `{name, coeffs: [[k, "c_k"], …]}` listing the nonzero `c_k`, `k ≥ 1`.
    pub fn to_reference_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| serde_json::json!([k, c.to_string()]))
            .collect();
        serde_json::json!({
            "name": self.name,
            "coeffs": coeffs,
            "k_max": self.max_k(),
        })
    }
}

impl fmt::Display for PeriodSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// How powers of `f` are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PeriodStrategy {
    /// `f^k = f · f^(k-1)`, keeping only the previous power.
    #[default]
    Incremental,
    /// Same recurrence with each product split across worker threads.
    Parallel,
    /// `c₀(f^k) = Σ_e [f^⌈k/2⌉]_e · [f^⌊k/2⌋]_(−e)`, powers only up to `⌈K/2⌉`.
    Split,
}

/// `Σ_e a_e · b_(−e)`, the constant term of `a·b` without forming the product.
fn paired_constant(a: &LaurentPoly, b: &LaurentPoly) -> BigRational {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = BigRational::zero();
    for (e, c) in small.terms() {
        let d = large.coefficient(&-e).expect("equal ranks");
        if !d.is_zero() {
            acc += c * d;
        }
    }
    acc
}

pub fn period_sequence(f: &LaurentPoly, k_max: usize) -> PeriodSequence {
    period_sequence_with(f, k_max, PeriodStrategy::Incremental)
}

pub fn period_sequence_with(f: &LaurentPoly, k_max: usize, strategy: PeriodStrategy) -> PeriodSequence {
    let coeffs = match strategy {
        PeriodStrategy::Incremental => incremental(f, k_max, false),
        PeriodStrategy::Parallel => incremental(f, k_max, true),
        PeriodStrategy::Split => split(f, k_max),
    };
    PeriodSequence::new(f.render(), coeffs, PeriodSource::Computed)
}

fn incremental(f: &LaurentPoly, k_max: usize, parallel: bool) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(BigRational::one());
    let mut power = LaurentPoly::one(f.rank());
    for k in 1..=k_max {
        // c₀(f^k) pairs f^(k-1) against f; the full power is built only if
        // a later k needs it.
        out.push(paired_constant(&power, f));
        if k < k_max {
            power = if parallel {
                power.try_mul_par(f)
            } else {
                power.try_mul(f)
            }
            .expect("equal ranks");
        }
    }
    out
}

fn split(f: &LaurentPoly, k_max: usize) -> Vec<BigRational> {
    let half = k_max.div_ceil(2);
    let mut powers = Vec::with_capacity(half + 1);
    powers.push(LaurentPoly::one(f.rank()));
    for j in 1..=half {
        let next = powers[j - 1].try_mul(f).expect("equal ranks");
        powers.push(next);
    }
    (0..=k_max)
        .map(|k| paired_constant(&powers[k.div_ceil(2)], &powers[k / 2]))
        .collect()
}

/// `r!⟨ψ_{r-2} pt⟩_r`, read off as the `r`-th period coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescendantConstant {
    pub r: usize,
    pub value: BigRational,
}

impl DescendantConstant {
    pub fn new(r: usize, value: BigRational) -> Self {
        DescendantConstant { r, value }
    }

    pub fn zero(r: usize) -> Self {
        Self::new(r, BigRational::zero())
    }
}

pub fn descendant_constant(p: &PeriodSequence, r: usize) -> Result<DescendantConstant, PeriodError> {
    p.get(r)
        .map(|v| DescendantConstant::new(r, v.clone()))
        .ok_or(PeriodError::OutOfRange {
            r,
            max: p.max_k().unwrap_or(0),
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakLgRow {
    pub k: usize,
    pub computed: BigRational,
    pub reference: BigRational,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakLgReport {
    pub k_min: usize,
    pub k_max: usize,
    pub rows: Vec<WeakLgRow>,
    pub pass: bool,
}

impl WeakLgReport {
    pub fn first_mismatch(&self) -> Option<&WeakLgRow> {
        self.rows.iter().find(|r| !r.matches)
    }
}

pub const DEFAULT_K_MIN: usize = 2;

/// Compares `c₀(f^k)` with `reference` for `k_min ≤ k ≤ k_max`.
pub fn is_weak_lg(
    f: &LaurentPoly,
    reference: &PeriodSequence,
    k_max: usize,
    k_min: usize,
) -> Result<WeakLgReport, PeriodError> {
    let have = reference.max_k().unwrap_or(0);
    if have < k_max {
        return Err(PeriodError::ReferenceTooShort { have, need: k_max });
    }
    let computed = period_sequence(f, k_max);
    let rows: Vec<WeakLgRow> = (k_min..=k_max)
        .map(|k| {
            let c = computed.coeffs[k].clone();
            let r = reference.coeffs[k].clone();
            WeakLgRow {
                k,
                matches: c == r,
                computed: c,
                reference: r,
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.matches);
    Ok(WeakLgReport {
        k_min,
        k_max,
        rows,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceFormat {
    Csv,
    Json,
}

impl ReferenceFormat {
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(ReferenceFormat::Csv),
            "json" => Some(ReferenceFormat::Json),
            _ => None,
        }
    }
}

pub fn ingest_reference(path: &Path, format: Option<ReferenceFormat>) -> Result<PeriodSequence, PeriodError> {
    let format = format
        .or_else(|| ReferenceFormat::from_path(path))
        .ok_or_else(|| PeriodError::UnknownFormat(path.display().to_string()))?;
    let text = std::fs::read_to_string(path).map_err(|e| PeriodError::Io(format!("{}: {e}", path.display())))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    match format {
        ReferenceFormat::Csv => parse_reference_csv(&text, &stem),
        ReferenceFormat::Json => parse_reference_json(&text),
    }
}

fn parse_coeff(s: &str, line: usize) -> Result<BigRational, PeriodError> {
    parse_rational(s).ok_or_else(|| PeriodError::Parse {
        line,
        message: format!("bad coefficient {:?}", s.trim()),
    })
}

/// Builds `[c₀ … c_K]` from sparse `(k, c_k, line)` entries; `c₀` defaults to 1.
fn assemble(
    name: &str,
    entries: Vec<(usize, BigRational, usize)>,
    k_max: Option<usize>,
) -> Result<PeriodSequence, PeriodError> {
    let top = entries
        .iter()
        .map(|(k, _, _)| *k)
        .max()
        .unwrap_or(0)
        .max(k_max.unwrap_or(0));
    let mut coeffs = vec![BigRational::zero(); top + 1];
    coeffs[0] = BigRational::one();
    let mut seen = vec![false; top + 1];
    for (k, c, line) in entries {
        if seen[k] {
            return Err(PeriodError::DuplicateK { k, line });
        }
        seen[k] = true;
        coeffs[k] = c;
    }
    Ok(PeriodSequence::new(name, coeffs, PeriodSource::Ingested))
}

/// CSV with header `k,coeff`, one row per nonzero coefficient.
pub fn parse_reference_csv(text: &str, name: &str) -> Result<PeriodSequence, PeriodError> {
    if text.trim().is_empty() {
        return Err(PeriodError::Empty);
    }
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| PeriodError::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    if headers.len() != 2 || &headers[0] != "k" || &headers[1] != "coeff" {
        return Err(PeriodError::Parse {
            line: 1,
            message: "expected header `k,coeff`".into(),
        });
    }
    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| PeriodError::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != 2 {
            return Err(PeriodError::Parse {
                line,
                message: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let k = record[0].parse::<usize>().map_err(|_| PeriodError::Parse {
            line,
            message: format!("bad index {:?}", &record[0]),
        })?;
        entries.push((k, parse_coeff(&record[1], line)?, line));
    }
    assemble(name, entries, None)
}

#[derive(Deserialize)]
struct ReferenceJson {
    name: String,
    coeffs: Vec<(usize, String)>,
    #[serde(default)]
    k_max: Option<usize>,
}

/// JSON `{"name": …, "coeffs": [[k, "c_k"], …]}`.
pub fn parse_reference_json(text: &str) -> Result<PeriodSequence, PeriodError> {
    if text.trim().is_empty() {
        return Err(PeriodError::Empty);
    }
    let doc: ReferenceJson = serde_json::from_str(text).map_err(|e| PeriodError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    // serde_json does not expose per-element lines; report the entry index + 1.
    let entries = doc
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, (k, c))| Ok((*k, parse_coeff(c, i + 1)?, i + 1)))
        .collect::<Result<Vec<_>, PeriodError>>()?;
    assemble(&doc.name, entries, doc.k_max)
}
