//! Addition laws for tangents and hyperbolic tangents, carried exactly.
//!
//! Nothing here evaluates a trigonometric function: angles are represented
//! by their tangents and lengths by their hyperbolic tangents.

use core::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// The hyperbolic tangent of a real length, so strictly inside (-1, 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TanhValue(Rat);

impl TanhValue {
    pub fn new(value: Rat) -> Result<Self> {
        if value.abs() >= 1 {
            return Err(Error::Domain("tanh value must satisfy |t| < 1"));
        }
        Ok(TanhValue(value))
    }

    pub fn get(&self) -> &Rat {
        &self.0
    }

    pub fn into_inner(self) -> Rat {
        self.0
    }

    /// tanh of the sum of the two lengths.
    pub fn add(&self, other: &TanhValue) -> TanhValue {
        // |a|,|b| < 1 keeps 1 + ab > 0 and the result inside (-1, 1)
        TanhValue(tanh_add2(&self.0, &other.0).expect("1 + ab > 0 inside the unit interval"))
    }
}

impl fmt::Debug for TanhValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tanh⁻¹({})", self.0)
    }
}

/// `(A + B) / (1 + AB)`.
pub fn tanh_add2(a: &Rat, b: &Rat) -> Result<Rat> {
    let den = Rat::one() + a * b;
    if den.is_zero() {
        return Err(Error::Pole("1 + AB = 0"));
    }
    Ok((a + b) / den)
}

/// `(A + B + C + ABC) / (1 + AB + BC + CA)`.
pub fn tanh_add3(a: &Rat, b: &Rat, c: &Rat) -> Result<Rat> {
    let ab = a * b;
    let den = Rat::one() + &ab + b * c + c * a;
    if den.is_zero() {
        return Err(Error::Pole("1 + AB + BC + CA = 0"));
    }
    Ok((a + b + c + &ab * c) / den)
}

/// Tangent of the third angle of a triangle whose other two angles have
/// tangents `t1`, `t2`: `(t1 + t2) / (t1·t2 − 1)`.
pub fn third_tangent(t1: &Rat, t2: &Rat) -> Result<Rat> {
    let den = t1 * t2 - 1;
    if den.is_zero() {
        return Err(Error::Degenerate("t1·t2 = 1, the third angle is right"));
    }
    Ok((t1 + t2) / den)
}

/// Third contact length `k2 (a + b) / (ab − k2)`; Euclidean callers pass
/// `k2 = r²`, hyperbolic callers pass contact tanh values and `k2 = ρ²`.
pub fn third_contact(a: &Rat, b: &Rat, k2: &Rat) -> Result<Rat> {
    if !k2.is_positive() {
        return Err(Error::Domain("k2 must be positive"));
    }
    let den = a * b - k2;
    if den.is_zero() {
        return Err(Error::Degenerate("a·b = k2"));
    }
    Ok(k2 * &(a + b) / den)
}
