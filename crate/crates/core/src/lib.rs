//! Quiver mutation, ideal triangulations of marked surfaces, and the
//! Coxeter-quotient groups attached to loop-free triangulations.
//!
//! The crate is organised in four layers:
//!
//! * [`quiver`]: quivers and diagrams as skew-symmetric matrices, mutation,
//!   canonical forms, chordless cycles and mutation classes.
//! * [`surface`]: triangulations stored as triangles plus a side-gluing
//!   involution, flips, digons, polygon gluings and the flip graph.
//! * [`presentation`]: the group presentations generated from a quiver, and
//!   the generator substitution that accompanies a mutation.
//! * [`groupcheck`]: finite verification tools (coset enumeration, exact
//!   reflection representations, homomorphism counting, abelianization).
//!
//! ```
//! use coxeter_quotients::quiver::Quiver;
//! use coxeter_quotients::presentation::presentation_of_quiver;
//! use coxeter_quotients::groupcheck::todd_coxeter;
//!
//! // An oriented triangle is mutation equivalent to the A3 path, so its
//! // group is the symmetric group on four letters.
//! let triangle = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
//! let presentation = presentation_of_quiver(&triangle).unwrap();
//! let table = todd_coxeter(&presentation, &[], 10_000).unwrap();
//! assert_eq!(table.index(), 24);
//! ```

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod data;
pub mod groupcheck;
pub mod presentation;
pub mod quiver;
pub mod surface;

use std::fmt;

/// A search that ran out of budget, carrying whatever was built so far.
#[derive(Debug, Clone)]
pub struct Exhausted<T> {
    pub partial: T,
    pub budget: usize,
}

impl<T> fmt::Display for Exhausted<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search budget of {} exhausted", self.budget)
    }
}

impl<T: fmt::Debug> std::error::Error for Exhausted<T> {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/quivers.md")]
    mod quivers {}
    #[doc = include_str!("../../../book/src/triangulations.md")]
    mod triangulations {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/affine_example.md")]
    mod affine_example {}
    #[doc = include_str!("../../../book/src/three_points.md")]
    mod three_points {}
}
