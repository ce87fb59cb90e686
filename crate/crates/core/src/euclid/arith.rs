//! Torsion, two-torsion and the rank certificate for Pythagorean curves.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::roots::{count_real_roots_cubic, count_real_roots_in, rational_roots_rat, UniPoly};

use super::{cubic_add, weierstrass_add, CubicPoint, EuclidParams, EuclidTriangle, WeierstrassPoint};

/// Rational torsion on an elliptic curve over ℚ has order at most 12.
pub const TORSION_BOUND: u32 = 12;

/// Smallest `n ≤ 12` with `n·P` the identity.
pub fn torsion_order_cubic(p: &CubicPoint) -> Result<Option<u32>> {
    p.params().require_nonsingular()?;
    let mut acc = p.clone();
    for n in 1..=TORSION_BOUND {
        if acc.is_identity() {
            return Ok(Some(n));
        }
        acc = cubic_add(&acc, p)?;
    }
    Ok(None)
}

pub fn torsion_order_weierstrass(p: &WeierstrassPoint) -> Result<Option<u32>> {
    p.params().require_nonsingular()?;
    let mut acc = p.clone();
    for n in 1..=TORSION_BOUND {
        if acc.is_identity() {
            return Ok(Some(n));
        }
        acc = weierstrass_add(&acc, p)?;
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTorsion {
    /// Rational points of order two, all of the form `(x, x)`.
    pub points: Vec<CubicPoint>,
    /// Real roots of `2x³ − sx² + sr²`.
    pub real_count: usize,
    /// Of those, how many are positive (abscissae of isosceles triangle points).
    pub positive_count: usize,
}

/// Points of order two: `(x, x)` with `s(x² − r²) = 2x³`.
pub fn two_torsion(params: &EuclidParams) -> Result<TwoTorsion> {
    params.require_nonsingular()?;
    let (s, sr2) = (params.s().clone(), params.sr2());
    let desc = [Rat::int(2), -&s, Rat::zero(), sr2.clone()];
    let points = rational_roots_rat(&desc)?
        .into_iter()
        .map(|x| CubicPoint::from_affine(params.clone(), &x, &x))
        .collect::<Result<Vec<_>>>()?;
    let real_count = count_real_roots_cubic(&desc[0], &desc[1], &desc[2], &desc[3])?.distinct;
    // every root is below the Cauchy bound 1 + max|c_i / 2|
    let largest = if s > sr2 { s.clone() } else { sr2.clone() };
    let bound = Rat::one() + largest / 2;
    let positive_count = count_real_roots_in(&UniPoly::from_descending(&desc), &Rat::zero(), &bound);
    Ok(TwoTorsion { points, real_count, positive_count })
}

/// The curve and triangle of the Pythagorean triple `(m² − n², 2mn, m² + n²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PythagoreanCurve {
    pub m: u64,
    pub n: u64,
    pub params: EuclidParams,
    pub triangle: EuclidTriangle,
    /// False when `m` and `n` have the same parity (the triple is not
    /// primitive); reported as a warning only.
    pub opposite_parity: bool,
}

/// `r = n(m − n)`, `s = m(m + n)`.
pub fn pythagorean_params(m: u64, n: u64) -> Result<PythagoreanCurve> {
    if n == 0 || m <= n {
        return Err(Error::InvalidArgument("need m > n > 0"));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::InvalidArgument("m and n must be coprime"));
    }
    let (mb, nb) = (BigInt::from(m), BigInt::from(n));
    let sides = [
        Rat::from_bigint(&mb * &mb - &nb * &nb),
        Rat::from_bigint(&mb * &nb * 2),
        Rat::from_bigint(&mb * &mb + &nb * &nb),
    ];
    let r = Rat::from_bigint(&nb * (&mb - &nb));
    let s = Rat::from_bigint(&mb * (&mb + &nb));
    Ok(PythagoreanCurve {
        m,
        n,
        params: EuclidParams::new(r.square(), s)?,
        triangle: EuclidTriangle::new(sides)?,
        opposite_parity: (m + n) % 2 == 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateReason {
    /// `m = root³` with `m` odd.
    OddCube { root: u64 },
    /// `m = 2·root³`.
    TwiceCube { root: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankCertificate {
    /// The curve has a rational point of infinite order. The witnesses are
    /// the integer cube roots showing `m` and `m/2` are not cubes.
    Applicable {
        curve: PythagoreanCurve,
        cube_root_floor: u64,
        half_cube_root_floor: Option<u64>,
    },
    NotApplicable {
        curve: PythagoreanCurve,
        reason: CertificateReason,
    },
}

impl RankCertificate {
    pub fn is_applicable(&self) -> bool {
        matches!(self, RankCertificate::Applicable { .. })
    }

    pub fn curve(&self) -> &PythagoreanCurve {
        match self {
            RankCertificate::Applicable { curve, .. } | RankCertificate::NotApplicable { curve, .. } => curve,
        }
    }
}

fn exact_cbrt(n: u64) -> (u64, bool) {
    let r = n.cbrt();
    (r, r.pow(3) == n)
}

/// Positive rank holds when `m` is neither an odd cube nor twice a cube:
/// points of odd order cannot be triangle points, and this condition rules
/// out rational 2-torsion.
pub fn rank_positive_certificate(m: u64, n: u64) -> Result<RankCertificate> {
    let curve = pythagorean_params(m, n)?;
    let (root, is_cube) = exact_cbrt(m);
    if is_cube && m % 2 == 1 {
        return Ok(RankCertificate::NotApplicable { curve, reason: CertificateReason::OddCube { root } });
    }
    let half = m.is_multiple_of(2).then(|| exact_cbrt(m / 2));
    if let Some((hroot, true)) = half {
        return Ok(RankCertificate::NotApplicable {
            curve,
            reason: CertificateReason::TwiceCube { root: hroot },
        });
    }
    Ok(RankCertificate::Applicable {
        curve,
        cube_root_floor: root,
        half_cube_root_floor: half.map(|(r, _)| r),
    })
}
