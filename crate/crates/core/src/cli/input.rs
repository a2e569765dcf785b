use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Deserialize;

use super::{CliError, InputHasher, PolyInput};
use crate::cover::DiscClass;
use crate::laurent::{parse_laurent, parse_rational, ExponentVector, LaurentPoly, ParseLaurentError};
use crate::matrix::IntMatrix;

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

#[derive(Deserialize)]
struct PotentialFile {
    #[serde(alias = "expr")]
    potential: String,
    vars: Vec<String>,
}

pub(crate) fn laurent_error(e: ParseLaurentError, what: &str) -> CliError {
    match e {
        ParseLaurentError::Parse(p) => CliError::Usage(format!("{what}: {p}")),
        ParseLaurentError::Laurent(l) => CliError::Compute(format!("{what}: {l}")),
    }
}

/// Resolved potential with the text and variables it came from.
pub(crate) struct Potential {
    pub poly: LaurentPoly,
    pub vars: Vec<String>,
}

pub(crate) fn resolve(
    input: &PolyInput,
    stdin: &mut dyn Read,
    hasher: &mut InputHasher,
    warnings: &mut Vec<String>,
) -> Result<Potential, CliError> {
    let (text, vars) = match &input.spec {
        Some(path) => {
            if input.expr.is_some() || !input.vars.is_empty() {
                warnings.push(format!("--spec {} overrides --expr/--vars", path.display()));
            }
            let raw = read_file(path)?;
            let file: PotentialFile =
                serde_json::from_str(&raw).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            (file.potential, file.vars)
        }
        None => {
            let expr = input
                .expr
                .clone()
                .ok_or_else(|| CliError::Usage("give --expr and --vars, or --spec".into()))?;
            let text = if expr == "-" {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
                s.trim().to_string()
            } else {
                expr
            };
            if input.vars.is_empty() {
                return Err(CliError::Usage("--vars is required with --expr".into()));
            }
            (text, input.vars.clone())
        }
    };
    hasher.add(&text);
    hasher.add(vars.join(","));
    let poly = parse_laurent(&text, &vars).map_err(|e| laurent_error(e, "expression"))?;
    Ok(Potential { poly, vars })
}

/// `a`, `bi`, `a+bi`, `a-bi`, with `i` or `j`.
pub(crate) fn parse_complex(text: &str) -> Option<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not an exponent sign or leading.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re.parse::<f64>().ok()?, im))
}

pub(crate) fn parse_point(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.split(',')
        .map(|p| parse_complex(p).ok_or_else(|| CliError::Usage(format!("bad coordinate {p:?}"))))
        .collect()
}

/// Columns separated by `;`, entries by `,`.
pub(crate) fn parse_basis(text: &str) -> Result<IntMatrix, CliError> {
    let cols = text
        .split(';')
        .map(|col| {
            col.split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("bad basis {text:?}: {e}")))?;
    IntMatrix::from_columns(&cols).map_err(|e| CliError::Usage(format!("bad basis {text:?}: {e}")))
}

pub(crate) fn parse_rational_arg(text: &str, what: &str) -> Result<BigRational, CliError> {
    parse_rational(text).ok_or_else(|| CliError::Usage(format!("{what}: bad rational {text:?}")))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AreaField {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct ClassFile {
    half_maslov: i64,
    #[serde(default)]
    divisor_hits: Vec<i64>,
    boundary: Vec<i64>,
    area: AreaField,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ClassesFile {
    Bare(Vec<ClassFile>),
    Wrapped { classes: Vec<ClassFile> },
}

pub(crate) fn parse_classes(text: &str) -> Result<Vec<DiscClass>, CliError> {
    let file: ClassesFile = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("classes: {e}")))?;
    let list = match file {
        ClassesFile::Bare(v) | ClassesFile::Wrapped { classes: v } => v,
    };
    let rank = list.first().map_or(0, |c| c.boundary.len());
    list.into_iter()
        .enumerate()
        .map(|(i, c)| {
            if c.boundary.len() != rank {
                return Err(CliError::Usage(format!("class {i}: boundary has the wrong length")));
            }
            let area = match c.area {
                AreaField::Int(n) => BigRational::from_integer(n.into()),
                AreaField::Text(s) => parse_rational_arg(&s, &format!("class {i} area"))?,
            };
            Ok(DiscClass::new(
                c.half_maslov,
                c.divisor_hits,
                ExponentVector::new(c.boundary),
                area,
            ))
        })
        .collect()
}
