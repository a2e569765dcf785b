//! Serialization helpers: exact rationals and complex numbers as JSON.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serializer;

/// Exact rationals are written as decimal strings, `"p"` or `"p/q"`.
pub fn rational<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

/// `[re, im]`.
pub fn complex<S: Serializer>(value: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq([value.re, value.im])
}

pub fn complexes<S: Serializer>(values: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| [v.re, v.im]))
}
