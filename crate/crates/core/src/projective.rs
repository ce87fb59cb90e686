//! Projective points and planes with unique integer representatives.
//!
//! A representative is obtained by clearing denominators, dividing by the
//! gcd, and making the first nonzero coordinate positive. Two points are
//! equal iff their representatives are.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rat::{primitive_integers, Rat};

fn canonical<const N: usize>(coords: &[Rat; N]) -> Result<[Rat; N]> {
    if coords.iter().all(Rat::is_zero) {
        return Err(Error::InvalidArgument("projective coordinates are all zero"));
    }
    let ints = primitive_integers(coords);
    let negate = ints
        .iter()
        .find(|c| !num_traits::Zero::is_zero(*c))
        .is_some_and(|c| num_traits::Signed::is_negative(c));
    let mut out: [Rat; N] = core::array::from_fn(|_| Rat::zero());
    for (o, i) in out.iter_mut().zip(ints) {
        *o = Rat::from_bigint(if negate { -i } else { i });
    }
    Ok(out)
}

macro_rules! projective_type {
    ($(#[$meta:meta])* $name:ident, $n:expr) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            coords: [Rat; $n],
        }

        impl $name {
            pub fn new(coords: [Rat; $n]) -> Result<Self> {
                Ok($name { coords: canonical(&coords)? })
            }

            pub fn coords(&self) -> &[Rat; $n] {
                &self.coords
            }

            pub fn into_coords(self) -> [Rat; $n] {
                self.coords
            }

            pub fn coord(&self, i: usize) -> &Rat {
                &self.coords[i]
            }

            /// Dot product of the integer representatives.
            pub fn dot(&self, other: &[Rat; $n]) -> Rat {
                self.coords.iter().zip(other).map(|(a, b)| a * b).sum()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    };
}

projective_type!(
    /// A point `[x, y, z]` of the projective plane.
    PPoint2,
    3
);
projective_type!(
    /// A point `[X, Y, Z, T]` of projective 3-space.
    PPoint3,
    4
);
projective_type!(
    /// The plane `aX + bY + cZ + dT = 0`.
    Plane3,
    4
);

impl PPoint2 {
    pub fn from_affine(x: &Rat, y: &Rat) -> Self {
        PPoint2::new([x.clone(), y.clone(), Rat::one()]).expect("z = 1")
    }

    pub fn is_affine(&self) -> bool {
        !self.coords[2].is_zero()
    }

    /// `(x/z, y/z)` for affine points.
    pub fn affine(&self) -> Option<(Rat, Rat)> {
        let z = &self.coords[2];
        if z.is_zero() {
            return None;
        }
        Some((&self.coords[0] / z, &self.coords[1] / z))
    }
}

impl PPoint3 {
    pub fn from_affine(x: &Rat, y: &Rat, z: &Rat) -> Self {
        PPoint3::new([x.clone(), y.clone(), z.clone(), Rat::one()]).expect("t = 1")
    }

    pub fn is_affine(&self) -> bool {
        !self.coords[3].is_zero()
    }

    pub fn affine(&self) -> Option<[Rat; 3]> {
        let t = &self.coords[3];
        if t.is_zero() {
            return None;
        }
        Some(core::array::from_fn(|i| &self.coords[i] / t))
    }
}

impl Plane3 {
    pub fn contains(&self, p: &PPoint3) -> bool {
        self.dot(p.coords()).is_zero()
    }

    /// The normal vector `(a, b, c)` of the affine plane.
    pub fn normal(&self) -> [Rat; 3] {
        [self.coords[0].clone(), self.coords[1].clone(), self.coords[2].clone()]
    }
}

/// The line through two points of the plane, as a point of the dual plane.
pub fn cross3(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

/// True when two vectors are nonzero rational multiples of each other.
pub fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    if a.len() != b.len() || a.iter().all(Rat::is_zero) || b.iter().all(Rat::is_zero) {
        return false;
    }
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// Basis of the right null space `{x : M x = 0}` of a rational matrix.
pub fn nullspace<const N: usize>(rows: &[[Rat; N]]) -> Vec<[Rat; N]> {
    let mut m: Vec<[Rat; N]> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..N {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip().expect("nonzero pivot");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..N).filter(|c| !pivots.contains(c)) {
        let mut v: [Rat; N] = core::array::from_fn(|_| Rat::zero());
        v[free] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Plane through three points of projective 3-space; `None` if they are
/// collinear.
pub fn plane_through(a: &[Rat; 4], b: &[Rat; 4], c: &[Rat; 4]) -> Option<Plane3> {
    let ns = nullspace(&[a.clone(), b.clone(), c.clone()]);
    if ns.len() != 1 {
        return None;
    }
    Plane3::new(ns.into_iter().next().unwrap()).ok()
}
