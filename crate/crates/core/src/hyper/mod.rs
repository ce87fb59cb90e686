//! Hyperbolic triangles with fixed inradius and semiperimeter.
//!
//! All lengths are carried as hyperbolic tangents. With `ρ = sinh r` and
//! `σ = tanh s`, the contact tanh values `(ã, b̃)` of a triangle lie on the
//! quartic
//!
//! ```text
//! Q_{ρ,σ}:  σ(x²y² + xy + ρ²(x² + xy + y² − 1)) = (1 + ρ²)(x²y + xy²)
//! ```
//!
//! and the substitution `(X, Y, Z) = (xy, x + y, x − y)` identifies it with
//! the intersection of two quadrics in projective 3-space (see [`space`]).

pub mod pythag;
pub mod space;

pub use pythag::{hyper_hypotenuse, pythagorean_scan, pythagorean_scan_shard, right_triangle};
pub use space::{
    base_point, compose, hyper_add, hyper_neg, lift_to_h, plane_for, project_to_q, Branch, SpacePoint,
};

use core::fmt;

use crate::error::{Error, Result};
use crate::rat::{rat_sqrt, Rat};
use crate::trig::{tanh_add2, third_contact};

/// `ρ²` (with `ρ = sinh r`) and `σ = tanh s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperParams {
    rho2: Rat,
    sigma: Rat,
}

impl HyperParams {
    pub fn new(rho2: Rat, sigma: Rat) -> Result<Self> {
        if !rho2.is_positive() {
            return Err(Error::Domain("ρ² must be positive"));
        }
        if !sigma.is_positive() || sigma >= 1 {
            return Err(Error::Domain("σ must lie in (0, 1)"));
        }
        Ok(HyperParams { rho2, sigma })
    }

    pub fn rho2(&self) -> &Rat {
        &self.rho2
    }

    pub fn sigma(&self) -> &Rat {
        &self.sigma
    }

    /// `σ²(1 + 9ρ²)² > 27ρ²(1 + ρ²)²`; equality is the equilateral case.
    pub fn is_nonsingular(&self) -> bool {
        let lhs = self.sigma.square() * (Rat::one() + &self.rho2 * 9).square();
        let rhs = &self.rho2 * 27 * (Rat::one() + &self.rho2).square();
        lhs > rhs
    }

    pub fn require_nonsingular(&self) -> Result<()> {
        if self.is_nonsingular() {
            Ok(())
        } else {
            Err(Error::SingularCurve)
        }
    }

    /// Left side minus right side of the quartic at `(x, y)`.
    pub fn quartic_eval(&self, x: &Rat, y: &Rat) -> Rat {
        let xy = x * y;
        let inner = xy.square() + &xy + &self.rho2 * &(x.square() + &xy + y.square() - 1);
        &self.sigma * &inner - (Rat::one() + &self.rho2) * (&xy * &(x + y))
    }
}

/// Hyperbolic tangents of the three side lengths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperTriangle {
    tsides: [Rat; 3],
}

impl HyperTriangle {
    pub fn new(tsides: [Rat; 3]) -> Result<Self> {
        if tsides.iter().any(|t| !t.is_positive() || *t >= 1) {
            return Err(Error::Domain("tanh of a side length must lie in (0, 1)"));
        }
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            if tsides[i] >= tanh_add2(&tsides[j], &tsides[k])? {
                return Err(Error::DegenerateTriangle("hyperbolic triangle inequality fails"));
            }
        }
        Ok(HyperTriangle { tsides })
    }

    pub fn tsides(&self) -> &[Rat; 3] {
        &self.tsides
    }

    pub fn shape_key(&self) -> [Rat; 3] {
        let mut k = self.tsides.clone();
        k.sort();
        k
    }

    /// Index of the hypotenuse when `1 − ℓᵢ² = (1 − ℓⱼ²)(1 − ℓₖ²)`.
    pub fn hypotenuse_index(&self) -> Option<usize> {
        let comp: [Rat; 3] = core::array::from_fn(|i| Rat::one() - self.tsides[i].square());
        (0..3).find(|&i| comp[i] == &comp[(i + 1) % 3] * &comp[(i + 2) % 3])
    }
}

impl fmt::Debug for HyperTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.tsides;
        write!(f, "tanh({a}, {b}, {c})")
    }
}

/// `tanh s` from the side tanh values.
///
/// With `D = 1 + Σℓᵢℓⱼ`, `N = Σℓᵢ + ℓ1ℓ2ℓ3` and `R = Π(1 − ℓᵢ²)` (so that
/// `D² − N² = R`), `σ` is the root `(D − √R)/N` of `2σ/(1 + σ²) = N/D`
/// lying in (0, 1). For right triangles `√R = 1 − ℓ_hyp²`.
pub fn sigma_from_sides(t: &HyperTriangle) -> Result<Rat> {
    let [a, b, c] = &t.tsides;
    let d = Rat::one() + a * b + b * c + c * a;
    let n = a + b + c + &(a * b) * c;
    let root = match t.hypotenuse_index() {
        Some(i) => Rat::one() - t.tsides[i].square(),
        None => {
            let radicand = (Rat::one() - a.square()) * (Rat::one() - b.square()) * (Rat::one() - c.square());
            rat_sqrt(&radicand)?.ok_or(Error::IrrationalSigma { radicand })?
        }
    };
    Ok((d - root) / n)
}

/// `ρ²` as the reciprocal of `Σ (1 − σℓⱼ)(1 − σℓₖ) / ((σ − ℓⱼ)(σ − ℓₖ))`.
pub fn rho2_from_sides(t: &HyperTriangle, sigma: &Rat) -> Result<Rat> {
    let l = &t.tsides;
    if l.iter().any(|x| x == sigma) {
        return Err(Error::Degenerate("σ equals a side tanh"));
    }
    let term = |j: usize, k: usize| {
        (Rat::one() - sigma * &l[j]) * (Rat::one() - sigma * &l[k]) / ((sigma - &l[j]) * (sigma - &l[k]))
    };
    (term(1, 2) + term(0, 2) + term(0, 1)).recip()
}

pub fn params_from_sides(t: &HyperTriangle) -> Result<HyperParams> {
    let sigma = sigma_from_sides(t)?;
    let rho2 = rho2_from_sides(t, &sigma)?;
    HyperParams::new(rho2, sigma)
}

/// An affine point of `Q_{ρ,σ}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuarticPoint {
    x: Rat,
    y: Rat,
    params: HyperParams,
}

impl QuarticPoint {
    pub fn new(params: HyperParams, x: Rat, y: Rat) -> Result<Self> {
        params.require_nonsingular()?;
        if !params.quartic_eval(&x, &y).is_zero() {
            return Err(Error::NotOnCurve);
        }
        Ok(QuarticPoint { x, y, params })
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn y(&self) -> &Rat {
        &self.y
    }

    pub fn params(&self) -> &HyperParams {
        &self.params
    }

    pub fn on_curve(&self) -> bool {
        self.params.quartic_eval(&self.x, &self.y).is_zero()
    }

    pub fn transpose(&self) -> QuarticPoint {
        QuarticPoint { x: self.y.clone(), y: self.x.clone(), params: self.params.clone() }
    }

    /// Inside the open unit square.
    pub fn is_triangle_point(&self) -> bool {
        let inside = |t: &Rat| t.is_positive() && *t < 1;
        inside(&self.x) && inside(&self.y)
    }

    /// Third contact tanh `c̃ = ρ²(x + y)/(xy − ρ²)`.
    pub fn third_contact(&self) -> Result<Rat> {
        third_contact(&self.x, &self.y, &self.params.rho2)
    }
}

impl fmt::Debug for QuarticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `((σ − ℓ̃2)/(1 − σℓ̃2), (σ − ℓ̃3)/(1 − σℓ̃3))`.
pub fn point_from_triangle(t: &HyperTriangle) -> Result<QuarticPoint> {
    let params = params_from_sides(t)?;
    params.require_nonsingular()?;
    let sigma = params.sigma().clone();
    let coord = |l: &Rat| (&sigma - l).checked_div(&(Rat::one() - &sigma * l));
    let x = coord(&t.tsides[1])?;
    let y = coord(&t.tsides[2])?;
    QuarticPoint::new(params, x, y)
}

/// Inverse of [`point_from_triangle`] on points of the open unit square.
pub fn triangle_from_point(p: &QuarticPoint) -> Result<HyperTriangle> {
    if !p.is_triangle_point() {
        return Err(Error::NotATriangle);
    }
    let sigma = p.params.sigma();
    let side = |t: &Rat| (sigma - t) / (Rat::one() - sigma * t);
    HyperTriangle::new([tanh_add2(&p.x, &p.y)?, side(&p.x), side(&p.y)])
}
