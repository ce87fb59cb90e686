//! Exact rational arithmetic for triangles sharing an inradius and a
//! semiperimeter.
//!
//! Euclidean triangles with inradius `r` and semiperimeter `s` correspond to
//! first-quadrant rational points of the cubic `s(xy − r²) = x²y + xy²`
//! ([`euclid`]). Hyperbolic triangles correspond to points of a quartic
//! that is modelled as an intersection of two quadrics in `P³` ([`hyper`]).
//! The group laws on these curves produce infinite families of
//! non-congruent triangles ([`family`]).
//!
//! Everything is exact; the crate is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod euclid;
pub mod family;
pub mod form;
pub mod hyper;
pub mod projective;
pub mod rat;
pub mod roots;
pub mod trig;

pub use error::{Error, Result};
pub use rat::Rat;
