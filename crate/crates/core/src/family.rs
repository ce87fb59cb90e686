//! Families of non-congruent triangles sharing their curve parameters.
//!
//! Euclidean families are the odd multiples of a triangle point. Hyperbolic
//! families follow a composition chain starting at `P` and keep the steps
//! that land in the open unit square.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::euclid::{
    from_weierstrass, is_triangle_point, params_from_sides, point_from_triangle as euclid_point,
    to_weierstrass, triangle_from_point as euclid_triangle, weierstrass_add, EuclidParams, EuclidTriangle,
    WeierstrassPoint,
};
use crate::hyper::{
    compose, lift_to_h, params_from_sides as hyper_params, point_from_triangle as hyper_point, project_to_q,
    triangle_from_point as hyper_triangle, Branch, HyperParams, HyperTriangle,
};
use crate::rat::Rat;

/// Coordinates are capped at this many decimal digits unless told otherwise.
pub const DEFAULT_MAX_HEIGHT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Euclid,
    Hyper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Euclid(EuclidParams),
    Hyper(HyperParams),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangleRecord {
    Euclid(EuclidTriangle),
    Hyper(HyperTriangle),
}

impl TriangleRecord {
    /// Side lengths, or their hyperbolic tangents.
    pub fn values(&self) -> &[Rat; 3] {
        match self {
            TriangleRecord::Euclid(t) => t.sides(),
            TriangleRecord::Hyper(t) => t.tsides(),
        }
    }

    pub fn shape_key(&self) -> [Rat; 3] {
        match self {
            TriangleRecord::Euclid(t) => t.shape_key(),
            TriangleRecord::Hyper(t) => t.shape_key(),
        }
    }

    /// Largest digit count among the numerators and denominators.
    pub fn height(&self) -> usize {
        self.values().iter().map(Rat::digits).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyItem {
    /// Multiple `n` (Euclidean) or chain index `k` (hyperbolic).
    pub step: u64,
    /// The curve point `(x, y)` the triangle came from.
    pub point: (Rat, Rat),
    pub triangle: TriangleRecord,
}

/// Why iteration ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stop {
    Count,
    Height,
    /// The point has finite order, so the family is finite.
    Torsion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRecord {
    pub kind: FamilyKind,
    pub params: FamilyParams,
    pub items: Vec<FamilyItem>,
    /// Largest item height.
    pub height: usize,
    pub stop: Stop,
}

impl FamilyRecord {
    fn new(kind: FamilyKind, params: FamilyParams) -> Self {
        FamilyRecord { kind, params, items: Vec::new(), height: 0, stop: Stop::Count }
    }

    /// Adds the item unless a congruent triangle is already present.
    fn push(&mut self, item: FamilyItem) -> bool {
        let key = item.triangle.shape_key();
        if self.items.iter().any(|i| i.triangle.shape_key() == key) {
            return false;
        }
        self.height = self.height.max(item.triangle.height());
        self.items.push(item);
        true
    }
}

/// Triangles from `n·P` for `n = 1, 3, 5, …` with `P` the point of `t`,
/// the multiples taken on the Weierstrass model (so step 1 is `t` itself).
///
/// Each odd multiple must be a triangle point and each even multiple must
/// not; a violation is reported as [`Error::Inconsistency`].
pub fn euclid_family(t: &EuclidTriangle, count: usize, max_height: usize) -> Result<FamilyRecord> {
    let params = params_from_sides(t)?;
    let p = to_weierstrass(&euclid_point(t)?);
    let two_p = weierstrass_add(&p, &p)?;
    let mut rec = FamilyRecord::new(FamilyKind::Euclid, FamilyParams::Euclid(params));
    let mut seen: Vec<WeierstrassPoint> = Vec::new();
    let mut acc_w = p.clone();
    let mut n: u64 = 1;
    while rec.items.len() < count {
        if acc_w.is_identity() || seen.contains(&acc_w) {
            rec.stop = Stop::Torsion;
            return Ok(rec);
        }
        let acc = from_weierstrass(&acc_w);
        if !is_triangle_point(&acc) {
            return Err(Error::Inconsistency("odd multiple is not a triangle point"));
        }
        let even = from_weierstrass(&weierstrass_add(&acc_w, &p)?);
        if is_triangle_point(&even) {
            return Err(Error::Inconsistency("even multiple is a triangle point"));
        }
        let triangle = TriangleRecord::Euclid(euclid_triangle(&acc)?);
        if triangle.height() > max_height {
            rec.stop = Stop::Height;
            return Ok(rec);
        }
        let point = acc.affine().expect("triangle points are affine");
        rec.push(FamilyItem { step: n, point, triangle });
        seen.push(acc_w.clone());
        acc_w = weierstrass_add(&acc_w, &two_p)?;
        n += 2;
    }
    Ok(rec)
}

/// How the hyperbolic chain advances from `R_k` to `R_{k+1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HyperChain {
    /// `R_{k+1} = ι(compose(P, R_k))`, where `ι` negates `Z`. Steps are
    /// reported with `Z/T ≥ 0`. Moves by a fixed divisor class each step.
    #[default]
    Twisted,
    /// `R_{k+1} = compose(P, R_k)` with [`Branch::NonNegativeZ`]. Since
    /// `compose(P, compose(P, R)) = R`, this returns to `R_1` at step 3.
    Plain,
}

/// Triangles along a composition chain from `R₀ = P`, the lift of the point
/// of `t`. Both chains agree on steps 0 to 2.
pub fn hyper_family(t: &HyperTriangle, count: usize, max_height: usize) -> Result<FamilyRecord> {
    hyper_family_with(t, count, max_height, HyperChain::Twisted)
}

pub fn hyper_family_with(
    t: &HyperTriangle,
    count: usize,
    max_height: usize,
    chain: HyperChain,
) -> Result<FamilyRecord> {
    let params = hyper_params(t)?;
    let p = lift_to_h(&hyper_point(t)?);
    let mut rec = FamilyRecord::new(FamilyKind::Hyper, FamilyParams::Hyper(params));
    let mut seen = Vec::new();
    let mut r = p.clone();
    let mut k: u64 = 0;
    while rec.items.len() < count {
        if seen.contains(&r) {
            rec.stop = Stop::Torsion;
            return Ok(rec);
        }
        if r.coords().iter().map(Rat::digits).max().unwrap_or(0) > max_height {
            rec.stop = Stop::Height;
            return Ok(rec);
        }
        let shown = if k == 0 { p.clone() } else { r.clone().with_branch(Branch::NonNegativeZ) };
        if let Ok(q) = project_to_q(&shown) {
            if q.is_triangle_point() {
                let triangle = TriangleRecord::Hyper(hyper_triangle(&q)?);
                if triangle.height() > max_height {
                    rec.stop = Stop::Height;
                    return Ok(rec);
                }
                rec.push(FamilyItem { step: k, point: (q.x().clone(), q.y().clone()), triangle });
            }
        }
        seen.push(r.clone());
        r = match chain {
            HyperChain::Twisted => compose(&p, &r, Branch::Literal)?.involution(),
            HyperChain::Plain => compose(&p, &r, Branch::NonNegativeZ)?,
        };
        k += 1;
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn example_euclid_family() {
        let t = EuclidTriangle::from_listing([rat!(3), rat!(4), rat!(5)]).unwrap();
        let f = euclid_family(&t, 2, DEFAULT_MAX_HEIGHT).unwrap();
        assert_eq!(f.items.len(), 2);
        assert_eq!(f.items[0].triangle.values(), &[rat!(4), rat!(5), rat!(3)]);
        assert_eq!(f.items[1].step, 3);
        assert_eq!(f.items[1].triangle.values(), &[rat!(101, 21), rat!(156, 35), rat!(41, 15)]);
        assert_eq!(f.stop, Stop::Count);
    }

    #[test]
    fn height_cap_stops_early() {
        let t = EuclidTriangle::new([rat!(4), rat!(5), rat!(3)]).unwrap();
        let f = euclid_family(&t, 50, 10).unwrap();
        assert_eq!(f.stop, Stop::Height);
        assert!(f.height <= 10);
    }

    #[test]
    fn example_hyper_family() {
        let t = HyperTriangle::new([rat!(672, 697), rat!(104, 185), rat!(40, 41)]).unwrap();
        let f = hyper_family(&t, 2, DEFAULT_MAX_HEIGHT).unwrap();
        assert_eq!(f.items.len(), 2);
        assert_eq!(f.items[0].step, 0);
        assert_eq!(f.items[1].step, 2);
        let first: Rat = "4938503954557916283489312/5070357052721862942058853".parse().unwrap();
        assert_eq!(f.items[1].triangle.values()[0], first);
        assert_eq!(f.items[0].point.0, rat!(1456, 1541));
    }

    #[test]
    fn plain_chain_cycles() {
        let t = HyperTriangle::new([rat!(672, 697), rat!(104, 185), rat!(40, 41)]).unwrap();
        let plain = hyper_family_with(&t, 5, DEFAULT_MAX_HEIGHT, HyperChain::Plain).unwrap();
        assert_eq!(plain.stop, Stop::Torsion);
        let twisted = hyper_family(&t, 2, DEFAULT_MAX_HEIGHT).unwrap();
        assert_eq!(plain.items, twisted.items);
    }
}
