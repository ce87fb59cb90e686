//! Homogeneous polynomials in two variables.
//!
//! Restricting a plane curve (or a space curve's defining quadrics) to a
//! rationally parametrized line or conic yields a binary form whose roots
//! are the intersection parameters. Known intersections are removed with
//! [`BinaryForm::deflate`]; whatever linear factor is left is the new point.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// `coeffs[k]` is the coefficient of `u^k v^(degree - k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

/// A point `[t0 : t1]` of the parameter line, i.e. `u/v = t0/t1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub t0: Rat,
    pub t1: Rat,
}

impl Param {
    pub fn new(t0: Rat, t1: Rat) -> Self {
        Param { t0, t1 }
    }

    /// True when both describe the same projective parameter.
    pub fn same_as(&self, other: &Param) -> bool {
        &self.t0 * &other.t1 == &self.t1 * &other.t0
    }

    pub fn is_valid(&self) -> bool {
        !(self.t0.is_zero() && self.t1.is_zero())
    }
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs degree + 1 coefficients");
        BinaryForm { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// The linear form `a·u + b·v`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        BinaryForm { coeffs: vec![b, a] }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Rat::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn eval(&self, u: &Rat, v: &Rat) -> Rat {
        // Horner in u with explicit powers of v
        let n = self.degree();
        let mut vpow = vec![Rat::one(); n + 1];
        for k in 1..=n {
            vpow[k] = &vpow[k - 1] * v;
        }
        let mut acc = Rat::zero();
        for k in (0..=n).rev() {
            acc = acc * u + &self.coeffs[k] * &vpow[n - k];
        }
        acc
    }

    pub fn eval_at(&self, p: &Param) -> Rat {
        self.eval(&p.t0, &p.t1)
    }

    /// Divides by `(t1·u − t0·v)` exactly.
    pub fn divide_root(&self, root: &Param) -> Result<BinaryForm> {
        if !root.is_valid() {
            return Err(Error::InvalidArgument("parameter [0:0]"));
        }
        let n = self.degree();
        if n == 0 {
            return if self.is_zero() {
                Ok(self.clone())
            } else {
                Err(Error::Inconsistency("nonzero constant form has no roots"))
            };
        }
        let a = &self.coeffs;
        let (t0, t1) = (&root.t0, &root.t1);
        let mut b = vec![Rat::zero(); n];
        if t1.is_zero() {
            // divisor is -t0·v
            if !a[n].is_zero() {
                return Err(Error::Inconsistency("deflation left a nonzero remainder"));
            }
            let m = -t0;
            for k in 0..n {
                b[k] = &a[k] / &m;
            }
        } else {
            b[n - 1] = &a[n] / t1;
            for k in (1..n).rev() {
                b[k - 1] = (&a[k] + &(t0 * &b[k])) / t1;
            }
            if &(-t0) * &b[0] != a[0] {
                return Err(Error::Inconsistency("deflation left a nonzero remainder"));
            }
        }
        Ok(BinaryForm { coeffs: b })
    }

    /// Divides out each known root with its multiplicity.
    pub fn deflate(&self, known: &[(Param, usize)]) -> Result<BinaryForm> {
        let mut f = self.clone();
        for (root, mult) in known {
            for _ in 0..*mult {
                f = f.divide_root(root)?;
            }
        }
        Ok(f)
    }

    /// Root of a nonzero linear form.
    pub fn linear_root(&self) -> Result<Param> {
        if self.degree() != 1 || self.is_zero() {
            return Err(Error::Inconsistency("expected a nonzero linear form"));
        }
        // c0·v + c1·u = 0
        Ok(Param::new(self.coeffs[0].clone(), -&self.coeffs[1]))
    }

    /// True when `other` is a nonzero rational multiple of `self`.
    pub fn proportional(&self, other: &BinaryForm) -> bool {
        if self.degree() != other.degree() || self.is_zero() || other.is_zero() {
            return false;
        }
        let (i, pivot) = self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero()).unwrap();
        let ratio = &other.coeffs[i] / pivot;
        !ratio.is_zero() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| &(a * &ratio) == b)
    }
}

impl Add for &BinaryForm {
    type Output = BinaryForm;

    /// Panics if degrees differ.
    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), rhs.degree(), "adding forms of different degree");
        BinaryForm { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;

    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        BinaryForm { coeffs: out }
    }
}

/// Evaluates the quadratic form `xᵀ M x` on a vector of binary forms of a
/// common degree.
pub fn quadratic_on_forms<const N: usize>(m: &[[Rat; N]; N], x: &[BinaryForm; N]) -> BinaryForm {
    let deg = 2 * x[0].degree();
    let mut acc = BinaryForm::zero(deg);
    for i in 0..N {
        for j in i..N {
            let c = if i == j { m[i][j].clone() } else { &m[i][j] + &m[j][i] };
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&x[i] * &x[j]).scale(&c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn lin(root: i64) -> BinaryForm {
        // u - root·v
        BinaryForm::linear(rat!(1), rat!(-root))
    }

    #[test]
    fn deflate_three_of_four() {
        let f = &(&lin(1) * &lin(2)) * &(&lin(3) * &lin(4));
        let known: Vec<_> = [1, 2, 3].iter().map(|&r| (Param::new(rat!(r), rat!(1)), 1)).collect();
        let g = f.deflate(&known).unwrap();
        assert!(g.proportional(&lin(4)));
        assert_eq!(g.linear_root().unwrap().t0 / g.linear_root().unwrap().t1, rat!(4));
    }

    #[test]
    fn deflate_root_at_infinity_and_zero() {
        // u^2 v^2
        let f = BinaryForm::new(vec![rat!(0), rat!(0), rat!(1), rat!(0), rat!(0)]);
        let g = f.deflate(&[(Param::new(rat!(0), rat!(1)), 2)]).unwrap();
        // what remains is v^2 up to scale: coefficient only on u^0 v^2
        assert!(g.proportional(&BinaryForm::new(vec![rat!(1), rat!(0), rat!(0)])));
        let h = g.deflate(&[(Param::new(rat!(1), rat!(0)), 2)]).unwrap();
        assert_eq!(h.degree(), 0);
    }

    #[test]
    fn nonzero_remainder_is_an_error() {
        let f = &lin(1) * &lin(2);
        let err = f.deflate(&[(Param::new(rat!(3), rat!(1)), 1)]).unwrap_err();
        assert_eq!(err.code(), "Inconsistency");
        let err = f.deflate(&[(Param::new(rat!(1), rat!(0)), 1)]).unwrap_err();
        assert_eq!(err.code(), "Inconsistency");
        let err = f.deflate(&[(Param::new(rat!(1), rat!(1)), 2)]).unwrap_err();
        assert_eq!(err.code(), "Inconsistency");
    }

    #[test]
    fn eval_matches_expansion() {
        let f = &lin(2) * &BinaryForm::linear(rat!(3), rat!(5));
        // (u - 2v)(3u + 5v) = 3u^2 - u v - 10 v^2
        assert_eq!(f.coeffs(), &[rat!(-10), rat!(-1), rat!(3)]);
        assert_eq!(f.eval(&rat!(1), &rat!(1)), rat!(-8));
        assert!(f.eval_at(&Param::new(rat!(2), rat!(1))).is_zero());
    }
}
