use core::fmt;

use crate::error::{Error, Result};
use crate::form::{BinaryForm, Param};
use crate::projective::{cross3, proportional, PPoint2};
use crate::rat::Rat;

use super::EuclidParams;

/// A point of the projective closure of `C_{r,s}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicPoint {
    point: PPoint2,
    params: EuclidParams,
}

impl CubicPoint {
    /// Checks membership; fails on singular parameters.
    pub fn new(params: EuclidParams, point: PPoint2) -> Result<Self> {
        params.require_nonsingular()?;
        if !params.cubic_eval(point.coords()).is_zero() {
            return Err(Error::NotOnCurve);
        }
        Ok(CubicPoint { point, params })
    }

    pub fn from_affine(params: EuclidParams, x: &Rat, y: &Rat) -> Result<Self> {
        CubicPoint::new(params, PPoint2::from_affine(x, y))
    }

    fn at_infinity(params: EuclidParams, x: i64, y: i64) -> Self {
        let point = PPoint2::new([Rat::int(x), Rat::int(y), Rat::zero()]).unwrap();
        CubicPoint { point, params }
    }

    /// The group identity `[1, −1, 0]`.
    pub fn identity(params: EuclidParams) -> Self {
        CubicPoint::at_infinity(params, 1, -1)
    }

    /// `[1, 0, 0]`, of order three.
    pub fn infinity_x(params: EuclidParams) -> Self {
        CubicPoint::at_infinity(params, 1, 0)
    }

    /// `[0, 1, 0]`, of order three.
    pub fn infinity_y(params: EuclidParams) -> Self {
        CubicPoint::at_infinity(params, 0, 1)
    }

    pub fn point(&self) -> &PPoint2 {
        &self.point
    }

    pub fn params(&self) -> &EuclidParams {
        &self.params
    }

    pub fn is_identity(&self) -> bool {
        self.point.coords() == &[Rat::one(), Rat::int(-1), Rat::zero()]
    }

    pub fn affine(&self) -> Option<(Rat, Rat)> {
        self.point.affine()
    }

    pub fn on_curve(&self) -> bool {
        self.params.cubic_eval(self.point.coords()).is_zero()
    }

    /// Swaps the first two coordinates (the reflection in `y = x`).
    fn swapped(&self) -> Self {
        let [x, y, z] = self.point.coords().clone();
        CubicPoint { point: PPoint2::new([y, x, z]).unwrap(), params: self.params.clone() }
    }
}

impl fmt::Debug for CubicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.affine() {
            Some((x, y)) => write!(f, "({x}, {y})"),
            None => write!(f, "{:?}", self.point),
        }
    }
}

fn same_curve(p: &CubicPoint, q: &CubicPoint) -> Result<()> {
    if p.params != q.params {
        return Err(Error::CurveMismatch);
    }
    p.params.require_nonsingular()
}

/// Restriction of the homogenized cubic to the line `u·A + v·B`.
fn restrict(params: &EuclidParams, a: &[Rat; 3], b: &[Rat; 3]) -> BinaryForm {
    let lin = |i: usize| BinaryForm::linear(a[i].clone(), b[i].clone());
    let (x, y, z) = (lin(0), lin(1), lin(2));
    let xy = &x * &y;
    let z2 = &z * &z;
    let xyz = &xy * &z;
    let z3 = &z2 * &z;
    let x_plus_y = &x + &y;
    let lhs = &xyz.scale(params.s()) + &z3.scale(&-params.sr2());
    &lhs + &(&xy * &x_plus_y).scale(&Rat::int(-1))
}

/// Some point of `line` other than `p`.
fn second_point_on(line: &[Rat; 3], p: &[Rat; 3]) -> [Rat; 3] {
    for e in 0..3 {
        let mut basis: [Rat; 3] = core::array::from_fn(|_| Rat::zero());
        basis[e] = Rat::one();
        let q = cross3(line, &basis);
        if !q.iter().all(Rat::is_zero) && !proportional(&q, p) {
            return q;
        }
    }
    unreachable!("a projective line has more than one point")
}

/// The third intersection `P ∗ Q` of the curve with the secant (or tangent)
/// line through `P` and `Q`.
pub fn cubic_third_point(p: &CubicPoint, q: &CubicPoint) -> Result<CubicPoint> {
    same_curve(p, q)?;
    let params = &p.params;
    let a = p.point.coords();
    let (b, known) = if p == q {
        let line = params.cubic_gradient(a);
        if line.iter().all(Rat::is_zero) {
            return Err(Error::SingularCurve);
        }
        let b = second_point_on(&line, a);
        (b, [(Param::new(Rat::one(), Rat::zero()), 2)].to_vec())
    } else {
        let b = q.point.coords().clone();
        (b, [(Param::new(Rat::one(), Rat::zero()), 1), (Param::new(Rat::zero(), Rat::one()), 1)].to_vec())
    };
    let form = restrict(params, a, &b);
    if form.is_zero() {
        return Err(Error::Inconsistency("line contained in the cubic"));
    }
    let rest = form.deflate(&known)?;
    let t = rest.linear_root()?;
    let coords: [Rat; 3] = core::array::from_fn(|i| &t.t0 * &a[i] + &t.t1 * &b[i]);
    let third = CubicPoint { point: PPoint2::new(coords)?, params: params.clone() };
    debug_assert!(third.on_curve());
    Ok(third)
}

/// Chord-tangent sum: the reflection of `P ∗ Q` in `y = x`.
pub fn cubic_add(p: &CubicPoint, q: &CubicPoint) -> Result<CubicPoint> {
    Ok(cubic_third_point(p, q)?.swapped())
}

/// `−(a, b) = (b, a)`.
pub fn cubic_neg(p: &CubicPoint) -> CubicPoint {
    p.swapped()
}

/// `n·P` by double-and-add.
pub fn cubic_mul(n: i64, p: &CubicPoint) -> Result<CubicPoint> {
    p.params.require_nonsingular()?;
    let mut base = if n < 0 { cubic_neg(p) } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = CubicPoint::identity(p.params.clone());
    while k > 0 {
        if k & 1 == 1 {
            acc = cubic_add(&acc, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = cubic_add(&base, &base)?;
        }
    }
    Ok(acc)
}
