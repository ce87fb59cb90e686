use core::fmt;

use crate::error::{Error, Result};
use crate::projective::PPoint2;
use crate::rat::Rat;

use super::{CubicPoint, EuclidParams};

/// A point of `E_{r,s}: Y²Z + sXYZ + sr²YZ² = X³`; identity `[0, 1, 0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassPoint {
    point: PPoint2,
    params: EuclidParams,
}

fn weierstrass_eval(params: &EuclidParams, c: &[Rat; 3]) -> Rat {
    let [x, y, z] = c;
    let yz = y * z;
    &yz * y + &(params.s() * x) * &yz + &(&params.sr2() * &yz) * z - x.pow(3)
}

impl WeierstrassPoint {
    pub fn new(params: EuclidParams, point: PPoint2) -> Result<Self> {
        params.require_nonsingular()?;
        if !weierstrass_eval(&params, point.coords()).is_zero() {
            return Err(Error::NotOnCurve);
        }
        Ok(WeierstrassPoint { point, params })
    }

    pub fn from_affine(params: EuclidParams, x: &Rat, y: &Rat) -> Result<Self> {
        WeierstrassPoint::new(params, PPoint2::from_affine(x, y))
    }

    pub fn identity(params: EuclidParams) -> Self {
        let point = PPoint2::new([Rat::zero(), Rat::one(), Rat::zero()]).unwrap();
        WeierstrassPoint { point, params }
    }

    pub fn is_identity(&self) -> bool {
        !self.point.is_affine()
    }

    pub fn point(&self) -> &PPoint2 {
        &self.point
    }

    pub fn params(&self) -> &EuclidParams {
        &self.params
    }

    pub fn affine(&self) -> Option<(Rat, Rat)> {
        self.point.affine()
    }

    pub fn on_curve(&self) -> bool {
        weierstrass_eval(&self.params, self.point.coords()).is_zero()
    }
}

impl fmt::Debug for WeierstrassPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.affine() {
            Some((x, y)) => write!(f, "({x}, {y})"),
            None => write!(f, "O"),
        }
    }
}

/// `[x, y, z] ↦ [−sr²z, sr²y, x]`.
pub fn to_weierstrass(p: &CubicPoint) -> WeierstrassPoint {
    let [x, y, z] = p.point().coords();
    let k = p.params().sr2();
    let point = PPoint2::new([-(&k * z), &k * y, x.clone()]).expect("map is a bijection on P²");
    WeierstrassPoint { point, params: p.params().clone() }
}

/// `[X, Y, Z] ↦ [sr²Z, Y, −X]`, inverse of [`to_weierstrass`].
pub fn from_weierstrass(p: &WeierstrassPoint) -> CubicPoint {
    let [x, y, z] = p.point.coords();
    let k = p.params.sr2();
    let point = PPoint2::new([&k * z, y.clone(), -x]).expect("map is a bijection on P²");
    CubicPoint::new(p.params.clone(), point).expect("image of a curve point lies on the cubic")
}

/// `(X, Y) ↦ (X, −Y − sX − sr²)`.
pub fn weierstrass_neg(p: &WeierstrassPoint) -> WeierstrassPoint {
    match p.affine() {
        None => p.clone(),
        Some((x, y)) => {
            let ny = -&y - p.params.s() * &x - p.params.sr2();
            WeierstrassPoint { point: PPoint2::from_affine(&x, &ny), params: p.params.clone() }
        }
    }
}

pub fn weierstrass_add(p: &WeierstrassPoint, q: &WeierstrassPoint) -> Result<WeierstrassPoint> {
    if p.params != q.params {
        return Err(Error::CurveMismatch);
    }
    p.params.require_nonsingular()?;
    let (Some((x1, y1)), Some((x2, y2))) = (p.affine(), q.affine()) else {
        return Ok(if p.is_identity() { q.clone() } else { p.clone() });
    };
    let a1 = p.params.s();
    let a3 = p.params.sr2();
    let lambda = if x1 != x2 {
        (&y2 - &y1) / (&x2 - &x1)
    } else {
        // vertical line: either inverses, or a doubling
        let denom = &y1 + &y2 + a1 * &x2 + &a3;
        if denom.is_zero() {
            return Ok(WeierstrassPoint::identity(p.params.clone()));
        }
        (x1.square() * 3 - a1 * &y1) / (&y1 * 2 + a1 * &x1 + &a3)
    };
    let nu = &y1 - &lambda * &x1;
    let x3 = lambda.square() + a1 * &lambda - &x1 - &x2;
    let y3 = -(&(&lambda + a1) * &x3) - nu - a3;
    Ok(WeierstrassPoint { point: PPoint2::from_affine(&x3, &y3), params: p.params.clone() })
}

pub fn weierstrass_mul(n: i64, p: &WeierstrassPoint) -> Result<WeierstrassPoint> {
    p.params.require_nonsingular()?;
    let mut base = if n < 0 { weierstrass_neg(p) } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = WeierstrassPoint::identity(p.params.clone());
    while k > 0 {
        if k & 1 == 1 {
            acc = weierstrass_add(&acc, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = weierstrass_add(&base, &base)?;
        }
    }
    Ok(acc)
}

/// `φ⁻¹(n·φ(P))`: the multiple taken on the Weierstrass model. It differs
/// from [`cubic_mul`](super::cubic_mul) by a translation of order three,
/// which permutes the sides of the triangle.
pub fn weierstrass_multiple(n: i64, p: &CubicPoint) -> Result<CubicPoint> {
    Ok(from_weierstrass(&weierstrass_mul(n, &to_weierstrass(p))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn params() -> EuclidParams {
        EuclidParams::new(rat!(1), rat!(6)).unwrap()
    }

    #[test]
    fn birational_map_examples() {
        let p = CubicPoint::from_affine(params(), &rat!(1), &rat!(3)).unwrap();
        let w = to_weierstrass(&p);
        assert_eq!(w.affine().unwrap(), (rat!(-6), rat!(18)));
        assert!(w.on_curve());
        assert_eq!(from_weierstrass(&w), p);

        let w = to_weierstrass(&CubicPoint::infinity_x(params()));
        assert_eq!(w.affine().unwrap(), (rat!(0), rat!(0)));
        let w = to_weierstrass(&CubicPoint::identity(params()));
        assert_eq!(w.affine().unwrap(), (rat!(0), rat!(-6)));
        assert!(to_weierstrass(&CubicPoint::infinity_y(params())).is_identity());
    }

    #[test]
    fn tripling() {
        let p = WeierstrassPoint::from_affine(params(), &rat!(-6), &rat!(18)).unwrap();
        let q = weierstrass_mul(3, &p).unwrap();
        assert_eq!(q.affine().unwrap(), (rat!(-35, 9), rat!(343, 27)));
        assert_eq!(weierstrass_mul(1, &p).unwrap(), p);
        assert_eq!(from_weierstrass(&q).affine().unwrap(), (rat!(54, 35), rat!(49, 15)));
        let c = CubicPoint::from_affine(params(), &rat!(1), &rat!(3)).unwrap();
        assert_eq!(weierstrass_multiple(3, &c).unwrap(), from_weierstrass(&q));
    }

    #[test]
    fn order_three_point() {
        let t = WeierstrassPoint::from_affine(params(), &rat!(0), &rat!(0)).unwrap();
        let t2 = weierstrass_mul(2, &t).unwrap();
        assert_eq!(t2.affine().unwrap(), (rat!(0), rat!(-6)));
        assert_eq!(t2, weierstrass_neg(&t));
        assert!(weierstrass_mul(3, &t).unwrap().is_identity());
    }

    #[test]
    fn rejects_points_off_curve() {
        assert_eq!(
            WeierstrassPoint::from_affine(params(), &rat!(1), &rat!(1)).unwrap_err(),
            Error::NotOnCurve
        );
    }
}
