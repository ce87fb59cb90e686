//! Right hyperbolic triangles: `1 − ℓ̃3² = (1 − ℓ̃1²)(1 − ℓ̃2²)`.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::rat::{rat_sqrt, Rat};

use super::HyperTriangle;

/// Largest denominator bound handled by the integer fast path.
pub const MAX_SCAN_DENOMINATOR: u64 = 1 << 30;

/// `ℓ̃3 = √(ℓ̃1² + ℓ̃2² − ℓ̃1²ℓ̃2²)` when rational.
pub fn hyper_hypotenuse(l1: &Rat, l2: &Rat) -> Result<Option<Rat>> {
    for l in [l1, l2] {
        if l.is_negative() || *l >= 1 {
            return Err(Error::Domain("legs must lie in [0, 1)"));
        }
    }
    let (a, b) = (l1.square(), l2.square());
    rat_sqrt(&(&a + &b - &a * &b))
}

/// The right triangle with the given legs, when its hypotenuse is rational.
pub fn right_triangle(l1: &Rat, l2: &Rat) -> Result<Option<HyperTriangle>> {
    match hyper_hypotenuse(l1, l2)? {
        Some(h) => HyperTriangle::new([l1.clone(), l2.clone(), h]).map(Some),
        None => Ok(None),
    }
}

/// Reduced fractions `p/q` in (0, 1) with `q ≤ max_den`.
fn legs(max_den: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for q in 2..=max_den {
        for p in 1..q {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn check(a: (u64, u64), b: (u64, u64)) -> Option<(u128, u128)> {
    let (p1, q1) = (a.0 as u128, a.1 as u128);
    let (p2, q2) = (b.0 as u128, b.1 as u128);
    let (x, y) = (p1 * q2, p2 * q1);
    let pp = p1 * p2;
    let n = x * x + y * y - pp * pp;
    let root = n.sqrt();
    (root * root == n).then_some((root, q1 * q2))
}

/// Right triangles whose legs `a ≤ b` have denominators at most `max_den`
/// and whose smaller leg has denominator in `first`. Output is sorted by
/// `(a, b)`. Disjoint ranges give disjoint results.
pub fn pythagorean_scan_shard(max_den: u64, first: RangeInclusive<u64>) -> Result<Vec<HyperTriangle>> {
    if max_den > MAX_SCAN_DENOMINATOR {
        return Err(Error::InvalidArgument("denominator bound too large"));
    }
    let all = legs(max_den);
    let mut out = Vec::new();
    for &a in all.iter().filter(|a| first.contains(&a.1)) {
        for &b in &all {
            // a ≤ b as fractions
            if (a.0 as u128) * (b.1 as u128) > (b.0 as u128) * (a.1 as u128) {
                continue;
            }
            if let Some((num, den)) = check(a, b) {
                let la = Rat::frac(a.0 as i64, a.1 as i64);
                let lb = Rat::frac(b.0 as i64, b.1 as i64);
                let h = Rat::new(num, den)?;
                out.push(HyperTriangle::new([la, lb, h])?);
            }
        }
    }
    out.sort_by(|x, y| x.tsides[..2].cmp(&y.tsides[..2]));
    Ok(out)
}

/// All right triangles with both leg denominators at most `max_den`, legs
/// unordered (each pair listed once with the smaller leg first).
pub fn pythagorean_scan(max_den: u64) -> Result<Vec<HyperTriangle>> {
    pythagorean_scan_shard(max_den, 2..=max_den.max(2))
}
