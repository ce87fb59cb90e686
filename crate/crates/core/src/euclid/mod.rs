//! Euclidean triangles with fixed inradius and semiperimeter.
//!
//! A triangle with contact lengths `a, b, c` (vertex to incircle touch
//! point) gives the point `(a, b)` on the cubic
//!
//! ```text
//! C_{r,s}:  s(xy − r²) = x²y + xy²
//! ```
//!
//! and conversely every rational first-quadrant point of `C_{r,s}` is a
//! rational triangle with the same `r` and `s`. The curve carries a
//! chord-tangent group law (identity `[1, −1, 0]`, negation swaps `x` and
//! `y`), and a Weierstrass model `E_{r,s}: Y² + sXY + sr²Y = X³`.

mod arith;
mod cubic;
mod weierstrass;

pub use arith::{
    pythagorean_params, rank_positive_certificate, torsion_order_cubic, torsion_order_weierstrass,
    two_torsion, CertificateReason, PythagoreanCurve, RankCertificate, TwoTorsion, TORSION_BOUND,
};
pub use cubic::{cubic_add, cubic_mul, cubic_neg, cubic_third_point, CubicPoint};
pub use weierstrass::{
    from_weierstrass, to_weierstrass, weierstrass_add, weierstrass_mul, weierstrass_multiple,
    weierstrass_neg, WeierstrassPoint,
};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Curve parameters: the squared inradius and the semiperimeter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EuclidParams {
    r2: Rat,
    s: Rat,
}

impl EuclidParams {
    pub fn new(r2: Rat, s: Rat) -> Result<Self> {
        if !r2.is_positive() || !s.is_positive() {
            return Err(Error::Domain("r² and s must be positive"));
        }
        Ok(EuclidParams { r2, s })
    }

    pub fn r2(&self) -> &Rat {
        &self.r2
    }

    pub fn s(&self) -> &Rat {
        &self.s
    }

    /// `s² > 27 r²`; equality is the equilateral (singular) case.
    pub fn is_nonsingular(&self) -> bool {
        self.s.square() > &self.r2 * 27
    }

    pub fn require_nonsingular(&self) -> Result<()> {
        if self.is_nonsingular() {
            Ok(())
        } else {
            Err(Error::SingularCurve)
        }
    }

    /// `s · r²`, the constant that appears throughout the Weierstrass model.
    pub fn sr2(&self) -> Rat {
        &self.s * &self.r2
    }

    /// Left side minus right side of the homogenized cubic at `[x, y, z]`.
    pub fn cubic_eval(&self, c: &[Rat; 3]) -> Rat {
        let [x, y, z] = c;
        let xy = x * y;
        &self.s * &(&xy * z - &self.r2 * &z.pow(3)) - &xy * &(x + y)
    }

    pub fn cubic_gradient(&self, c: &[Rat; 3]) -> [Rat; 3] {
        let [x, y, z] = c;
        let s = &self.s;
        [
            s * &(y * z) - &(x * y) * 2 - y.square(),
            s * &(x * z) - x.square() - &(x * y) * 2,
            s * &(x * y) - &(&self.sr2() * &z.square()) * 3,
        ]
    }
}

/// Side lengths of a nondegenerate triangle, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EuclidTriangle {
    sides: [Rat; 3],
}

impl EuclidTriangle {
    pub fn new(sides: [Rat; 3]) -> Result<Self> {
        if sides.iter().any(|l| !l.is_positive()) {
            return Err(Error::DegenerateTriangle("side lengths must be positive"));
        }
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            if sides[i] >= &sides[j] + &sides[k] {
                return Err(Error::DegenerateTriangle("triangle inequality fails"));
            }
        }
        Ok(EuclidTriangle { sides })
    }

    /// Sides given in the order `(ℓ3, ℓ1, ℓ2)`, so that the triangle point
    /// is `(s − last, s − first)`. Listing a right triangle as `(3, 4, 5)`
    /// gives the point `(1, 3)`.
    pub fn from_listing(listed: [Rat; 3]) -> Result<Self> {
        let [a, b, c] = listed;
        EuclidTriangle::new([b, c, a])
    }

    pub fn sides(&self) -> &[Rat; 3] {
        &self.sides
    }

    pub fn semiperimeter(&self) -> Rat {
        self.sides.iter().sum::<Rat>() / 2
    }

    /// Sides sorted ascending; equal iff the triangles are congruent.
    pub fn shape_key(&self) -> [Rat; 3] {
        let mut k = self.sides.clone();
        k.sort();
        k
    }

    pub fn is_equilateral(&self) -> bool {
        self.sides[0] == self.sides[1] && self.sides[1] == self.sides[2]
    }

    /// Contact lengths `(a, b, c) = (s − ℓ2, s − ℓ3, s − ℓ1)`, so that
    /// `a + b = ℓ1`, `b + c = ℓ2`, `c + a = ℓ3`.
    pub fn contacts(&self) -> [Rat; 3] {
        let s = self.semiperimeter();
        [&s - &self.sides[1], &s - &self.sides[2], &s - &self.sides[0]]
    }
}

/// `s = (ℓ1 + ℓ2 + ℓ3)/2`, `r² = (s − ℓ1)(s − ℓ2)(s − ℓ3)/s`.
pub fn params_from_sides(t: &EuclidTriangle) -> Result<EuclidParams> {
    let s = t.semiperimeter();
    let prod = t.sides.iter().fold(Rat::one(), |acc, l| acc * (&s - l));
    EuclidParams::new(prod / &s, s)
}

/// The triangle point `(s − ℓ2, s − ℓ3)`.
pub fn point_from_triangle(t: &EuclidTriangle) -> Result<CubicPoint> {
    let params = params_from_sides(t)?;
    let [a, b, _] = t.contacts();
    CubicPoint::from_affine(params, &a, &b)
}

/// `(x0, y0) ↦ (x0 + y0, s − x0, s − y0)` on first-quadrant points.
pub fn triangle_from_point(p: &CubicPoint) -> Result<EuclidTriangle> {
    if !is_triangle_point(p) {
        return Err(Error::NotATriangle);
    }
    let (x, y) = p.affine().expect("triangle points are affine");
    let s = p.params().s();
    EuclidTriangle::new([&x + &y, s - &x, s - &y])
}

pub fn is_triangle_point(p: &CubicPoint) -> bool {
    p.affine().is_some_and(|(x, y)| x.is_positive() && y.is_positive())
}

/// The up to six curve points of a triangle: `(a,b), (b,c), (c,a)` and
/// their transposes. Isosceles triangles produce repeats, which collapse.
pub fn six_point_fan(t: &EuclidTriangle) -> Result<Vec<CubicPoint>> {
    let params = params_from_sides(t)?;
    let [a, b, c] = t.contacts();
    let pairs = [(&a, &b), (&b, &c), (&c, &a), (&b, &a), (&c, &b), (&a, &c)];
    let mut out: Vec<CubicPoint> = Vec::with_capacity(6);
    for (x, y) in pairs {
        let p = CubicPoint::from_affine(params.clone(), x, y)?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn tri(a: i64, b: i64, c: i64) -> EuclidTriangle {
        EuclidTriangle::new([rat!(a), rat!(b), rat!(c)]).unwrap()
    }

    #[test]
    fn params_examples() {
        let p = params_from_sides(&tri(4, 5, 3)).unwrap();
        assert_eq!((p.s(), p.r2()), (&rat!(6), &rat!(1)));
        let p = params_from_sides(&tri(13, 14, 15)).unwrap();
        assert_eq!((p.s(), p.r2()), (&rat!(21), &rat!(16)));
        assert_eq!(
            EuclidTriangle::new([rat!(1), rat!(1), rat!(2)]).unwrap_err().code(),
            "DegenerateTriangle"
        );
        assert!(EuclidTriangle::new([rat!(1), rat!(-1), rat!(1)]).is_err());
    }

    #[test]
    fn points_from_triangles() {
        let p = point_from_triangle(&tri(4, 5, 3)).unwrap();
        assert_eq!(p.affine().unwrap(), (rat!(1), rat!(3)));
        let p = point_from_triangle(&tri(13, 14, 15)).unwrap();
        assert_eq!(p.affine().unwrap(), (rat!(7), rat!(6)));
        assert_eq!(rat!(21) * (rat!(42) - rat!(16)), rat!(42) * rat!(13));
        let p = point_from_triangle(&tri(5, 5, 6)).unwrap();
        assert_eq!(p.affine().unwrap(), (rat!(3), rat!(2)));
        assert_eq!((p.params().r2(), p.params().s()), (&rat!(9, 4), &rat!(8)));
    }

    #[test]
    fn listing_order() {
        let t = EuclidTriangle::from_listing([rat!(3), rat!(4), rat!(5)]).unwrap();
        assert_eq!(t, tri(4, 5, 3));
        assert_eq!(point_from_triangle(&t).unwrap().affine().unwrap(), (rat!(1), rat!(3)));
    }

    #[test]
    fn equilateral_is_singular() {
        let t = tri(2, 2, 2);
        let params = params_from_sides(&t).unwrap();
        assert!(!params.is_nonsingular());
        assert_eq!(point_from_triangle(&t).unwrap_err(), Error::SingularCurve);
    }

    #[test]
    fn triangles_from_points() {
        let params = EuclidParams::new(rat!(1), rat!(6)).unwrap();
        let p = CubicPoint::from_affine(params.clone(), &rat!(54, 35), &rat!(49, 15)).unwrap();
        assert_eq!(triangle_from_point(&p).unwrap().sides(), &[rat!(101, 21), rat!(156, 35), rat!(41, 15)]);
        let p = CubicPoint::from_affine(params.clone(), &rat!(1), &rat!(3)).unwrap();
        assert_eq!(triangle_from_point(&p).unwrap(), tri(4, 5, 3));
        let p = CubicPoint::from_affine(params.clone(), &rat!(3), &rat!(1)).unwrap();
        assert_eq!(triangle_from_point(&p).unwrap(), tri(4, 3, 5));
        let inf = CubicPoint::infinity_x(params);
        assert!(!is_triangle_point(&inf));
        assert_eq!(triangle_from_point(&inf).unwrap_err(), Error::NotATriangle);
    }

    #[test]
    fn fan_sizes() {
        assert_eq!(six_point_fan(&tri(3, 4, 5)).unwrap().len(), 6);
        assert_eq!(six_point_fan(&tri(5, 5, 6)).unwrap().len(), 3);
    }
}
