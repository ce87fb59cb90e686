//! Exact root finding for small univariate polynomials: the rational root
//! test over the integers and Sturm-sequence real-root counting over ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{primitive_integers, Rat};

/// Dense univariate polynomial, coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds from coefficients listed from the leading term down.
    pub fn from_descending(coeffs: &[Rat]) -> Self {
        UniPoly::new(coeffs.iter().rev().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k as i64).collect())
    }

    /// Euclidean division; panics if `div` is zero.
    pub fn div_rem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = div.degree().expect("division by the zero polynomial");
        let lead = div.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UniPoly::new(vec![]), UniPoly::new(vec![]));
        };
        if nd < dd {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, dc) in div.coeffs.iter().enumerate() {
                    rem[k + j] -= &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    fn sign_at_pos_infinity(&self) -> i32 {
        self.leading().map_or(0, Rat::signum)
    }

    fn sign_at_neg_infinity(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_infinity();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

/// Sturm sequence p, p', -rem(p, p'), ...
pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let r = seq.last().unwrap().div_rem(&next).1;
        seq.push(next);
        next = UniPoly::new(r.coeffs.iter().map(|c| -c).collect());
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &UniPoly) -> usize {
    let seq = sturm_sequence(p);
    let at_neg = sign_changes(seq.iter().map(UniPoly::sign_at_neg_infinity));
    let at_pos = sign_changes(seq.iter().map(UniPoly::sign_at_pos_infinity));
    at_neg - at_pos
}

/// Number of distinct real roots in the half-open interval (lo, hi].
pub fn count_real_roots_in(p: &UniPoly, lo: &Rat, hi: &Rat) -> usize {
    let seq = sturm_sequence(p);
    let at = |x: &Rat| sign_changes(seq.iter().map(|q| q.eval(x).signum()));
    at(lo).saturating_sub(at(hi))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRootCount {
    /// Distinct real roots.
    pub distinct: usize,
    /// True when some root (real or complex) is repeated.
    pub repeated: bool,
    /// Largest multiplicity of any root.
    pub max_multiplicity: usize,
}

/// Real roots of `c3 x³ + c2 x² + c1 x + c0`, counted without multiplicity.
pub fn count_real_roots_cubic(c3: &Rat, c2: &Rat, c1: &Rat, c0: &Rat) -> Result<RealRootCount> {
    if c3.is_zero() {
        return Err(Error::InvalidArgument("leading coefficient of a cubic must be nonzero"));
    }
    let p = UniPoly::from_descending(&[c3.clone(), c2.clone(), c1.clone(), c0.clone()]);
    let g = p.gcd(&p.derivative());
    let gdeg = g.degree().unwrap_or(0);
    Ok(RealRootCount { distinct: count_real_roots(&p), repeated: gdeg > 0, max_multiplicity: gdeg + 1 })
}

/// Positive divisors of |n| (n ≠ 0), ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "divisors of zero");
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// All rational roots of an integer polynomial (descending coefficients,
/// nonzero leading coefficient), sorted and without repetition.
pub fn rational_roots(desc: &[BigInt]) -> Result<Vec<Rat>> {
    let lead = desc
        .first()
        .filter(|c| !c.is_zero())
        .ok_or(Error::InvalidArgument("leading coefficient must be nonzero"))?;
    let mut roots = Vec::new();
    // strip factors of x
    let mut end = desc.len();
    while end > 1 && desc[end - 1].is_zero() {
        end -= 1;
    }
    if end < desc.len() {
        roots.push(Rat::zero());
    }
    let poly = &desc[..end];
    if poly.len() > 1 {
        let p = UniPoly::from_descending(&poly.iter().cloned().map(Rat::from_bigint).collect::<Vec<_>>());
        let tail = poly.last().unwrap();
        let lead_divs = divisors(lead);
        for num in divisors(tail) {
            for den in &lead_divs {
                for sign in [1i32, -1] {
                    let cand = Rat::new(&num * sign, den.clone())?;
                    if p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Rational roots of `c3 x³ + c2 x² + c1 x + c0` with integer coefficients.
pub fn rational_roots_cubic(c3: &BigInt, c2: &BigInt, c1: &BigInt, c0: &BigInt) -> Result<Vec<Rat>> {
    rational_roots(&[c3.clone(), c2.clone(), c1.clone(), c0.clone()])
}

/// Rational roots of a polynomial with rational coefficients (descending),
/// after clearing denominators.
pub fn rational_roots_rat(desc: &[Rat]) -> Result<Vec<Rat>> {
    rational_roots(&primitive_integers(desc))
}

/// Small-integer convenience used by tests and callers with machine-size data.
pub fn rational_roots_i64(desc: &[i64]) -> Result<Vec<Rat>> {
    rational_roots(&desc.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
}

/// Exact cubic discriminant for c3 x³ + c2 x² + c1 x + c0.
pub fn cubic_discriminant(c3: &Rat, c2: &Rat, c1: &Rat, c0: &Rat) -> Rat {
    let (a, b, c, d) = (c3, c2, c1, c0);
    let bc = b * c;
    let ad = a * d;
    bc.square() - (a * &c.pow(3)) * 4 - (&b.pow(3) * d) * 4 - ad.square() * 27 + (&ad * &bc) * 18
}
