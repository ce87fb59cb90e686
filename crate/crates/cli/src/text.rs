//! Text forms of rationals and points.
//!
//! Rationals use the canonical `-35/9` form. Affine points print as
//! `(x,y)`, projective points as `[a:b:c]`. Parsing also accepts `x,y`,
//! spaces after commas and the literal `O` for a base point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use tricurve_core::Rat;

/// A rational that serializes as its canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatText(pub Rat);

impl From<Rat> for RatText {
    fn from(r: Rat) -> Self {
        RatText(r)
    }
}

impl From<&Rat> for RatText {
    fn from(r: &Rat) -> Self {
        RatText(r.clone())
    }
}

impl fmt::Display for RatText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for RatText {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_rat(s).map(RatText)
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|_| format!("not a rational number: {s:?}"))
}

pub fn rats<const N: usize>(values: &[Rat; N]) -> [RatText; N] {
    std::array::from_fn(|i| RatText(values[i].clone()))
}

/// Comma separated rationals, e.g. `3,4,5`.
pub fn parse_list(s: &str) -> Result<Vec<Rat>, String> {
    s.split(',').map(parse_rat).collect()
}

pub fn parse_triple(s: &str) -> Result<[Rat; 3], String> {
    let v = parse_list(s)?;
    <[Rat; 3]>::try_from(v).map_err(|v| format!("expected three values, got {}", v.len()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointText {
    Affine(Rat, Rat),
    Projective(Vec<Rat>),
    /// The distinguished base point of a model.
    Base,
}

impl PointText {
    pub fn affine(x: &Rat, y: &Rat) -> Self {
        PointText::Affine(x.clone(), y.clone())
    }

    pub fn projective(coords: &[Rat]) -> Self {
        PointText::Projective(coords.to_vec())
    }
}

impl fmt::Display for PointText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointText::Affine(x, y) => write!(f, "({x},{y})"),
            PointText::Projective(c) => {
                write!(f, "[")?;
                for (i, v) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ":")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
            PointText::Base => write!(f, "O"),
        }
    }
}

impl FromStr for PointText {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "O" {
            return Ok(PointText::Base);
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coords = inner.split(':').map(parse_rat).collect::<Result<Vec<_>, _>>()?;
            if coords.len() < 3 || coords.iter().all(Rat::is_zero) {
                return Err(format!("bad projective point: {s:?}"));
            }
            return Ok(PointText::Projective(coords));
        }
        let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        match parse_list(inner)?.as_slice() {
            [x, y] => Ok(PointText::Affine(x.clone(), y.clone())),
            _ => Err(format!("expected a point x,y: {s:?}")),
        }
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                ser.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
                let s = String::deserialize(de)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(RatText);
serde_via_text!(PointText);

/// Decimal rendering for the approximate `--lengths` output.
pub fn approx(v: f64) -> String {
    format!("{v:.9}")
}
