//! Exact size guarantees.

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Rational = Ratio<u128>;

/// An integer count checked against an exact rational lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub label: &'static str,
    pub achieved: usize,
    pub required: Rational,
}

impl Bound {
    pub fn new(label: &'static str, achieved: usize, required: Rational) -> Self {
        Bound {
            label,
            achieved,
            required,
        }
    }

    pub fn holds(&self) -> bool {
        Rational::from_integer(self.achieved as u128) >= self.required
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Bound", 5)?;
        s.serialize_field("label", self.label)?;
        s.serialize_field("achieved", &self.achieved)?;
        s.serialize_field("required", &self.required.to_string())?;
        s.serialize_field("required_approx", &to_f64(&self.required))?;
        s.serialize_field("holds", &self.holds())?;
        s.end()
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn int(v: usize) -> Rational {
    Rational::from_integer(v as u128)
}

/// `base^exp` as a rational.
pub fn pow(base: usize, exp: u32) -> Rational {
    int(base).pow(exp as i32)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read {0:?} as a non-negative rational (expected p/q or a decimal)")]
pub struct ParseRationalError(String);

/// Parses `"p/q"`, an integer, or a finite decimal like `"0.125"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: u128 = p.trim().parse().map_err(|_| err())?;
        let q: u128 = q.trim().parse().map_err(|_| err())?;
        if q == 0 {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    let (whole, frac) = text.split_once('.').unwrap_or((text, ""));
    if whole.is_empty() && frac.is_empty() || frac.len() > 30 {
        return Err(err());
    }
    let digits = |s: &str| s.is_empty() || s.bytes().all(|b| b.is_ascii_digit());
    if !digits(whole) || !digits(frac) {
        return Err(err());
    }
    let whole: u128 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| err())? };
    let scale = 10u128.pow(frac.len() as u32);
    let frac: u128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| err())? };
    Ok(Rational::new(whole * scale + frac, scale))
}
