//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over the rationals so that subspaces
//! have canonical representations and equality is decidable. `Rat` is an
//! arbitrary-precision fraction kept reduced with a positive denominator,
//! serialized as `"p/q"` (`"p"` when the denominator is 1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `p/q`; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Formats as `"p/q"`, omitting `/q` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde helper: a rational given either as a JSON integer or a `"p/q"`
/// string. Output always uses the string form.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(untagged)]
pub enum RatInput {
    Int(i64),
    Str(String),
}

impl RatInput {
    pub fn into_rat(self) -> Result<Rat> {
        match self {
            RatInput::Int(n) => Ok(rat_i(n)),
            RatInput::Str(s) => parse_rat(&s),
        }
    }
}

/// File-format rational: reads integers or `"p/q"` strings, writes `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqRat(pub Rat);

impl serde::Serialize for PqRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> serde::Deserialize<'de> for PqRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RatInput::deserialize(d)?;
        raw.into_rat().map(PqRat).map_err(serde::de::Error::custom)
    }
}

/// Exact square root when `r` is a perfect rational square.
pub fn exact_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}
