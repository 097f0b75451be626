//! Exact computational dynamics of univariate polynomials.
//!
//! The crate works over three closed coefficient rings — arbitrary-precision
//! rationals, binomial algebraic extensions `r^e = A` of the rationals, and
//! polynomials in one parameter `t` with rational coefficients — and provides:
//!
//! - polynomial composition, iteration, normalization and the critically
//!   marked parameterization ([`poly`]);
//! - truncated Böttcher coordinates and their polynomial parts ([`bottcher`]);
//! - floating-point Green functions with explicit escape constants ([`green`]);
//! - divisors of dynamical pairs over the affine line ([`pairs`]);
//! - dynamical symmetry groups, Chebyshev polynomials, compositional roots,
//!   complete decompositions and Ritt-move verification ([`symmetry`]);
//! - critically marked dynamical graphs ([`graph`]);
//! - exact angle dynamics on the circle and critical portraits ([`angles`]);
//! - the unicritical family `z^d + t`: PCF parameter counts and membership
//!   tests ([`unicritical`]);
//! - the entanglement decision procedure for two dynamical pairs
//!   ([`entangle`]).
//!
//! Everything outside [`green`] (and the sampling half of [`unicritical`]) is
//! exact rational arithmetic. All values are immutable and all operations are
//! pure, so they can be freely shared across threads.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod angles;
pub mod bottcher;
pub mod entangle;
pub mod graph;
pub mod green;
pub mod pairs;
pub mod poly;
pub mod ring;
mod series;
pub mod symmetry;
pub mod textform;
pub mod unicritical;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::poly::Poly;
    use crate::ring::{rat_int, Rat, RatPoly};
    use alloc::vec::Vec;

    /// Rational polynomial in z from descending integer coefficients.
    pub fn zpoly(desc: &[i64]) -> Poly<Rat> {
        Poly::from_descending(desc.iter().map(|&n| rat_int(n)).collect())
    }

    /// The parameter `t` as a coefficient.
    pub fn tvar() -> RatPoly {
        Poly::monomial(rat_int(1), 1)
    }

    /// Constant coefficient in the parameter ring.
    pub fn tconst(n: i64) -> RatPoly {
        Poly::constant(rat_int(n))
    }

    /// Family polynomial in z from descending parameter coefficients.
    pub fn fam(desc: Vec<RatPoly>) -> Poly<RatPoly> {
        Poly::from_descending(desc)
    }
}

pub use num_complex::Complex64;
pub use poly::Poly;
pub use ring::{AlgElem, AlgExt, Coeff, Rat, RatPoly};

use alloc::string::String;
use core::fmt;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values live in different coefficient rings (e.g. distinct moduli).
    RingMismatch,
    /// Operation requires degree at least 2.
    DegreeTooSmall,
    /// Leading coefficient is zero or not invertible in the ring.
    LeadingNotInvertible,
    /// Input must be monic and centered.
    NotMonicCentered,
    /// A family must have a leading coefficient constant in the parameter.
    NonConstantLeading,
    /// No root of the required binomial exists in the coefficient ring.
    NoRootInRing,
    /// A series coefficient below the truncation order was requested.
    TruncationExceeded,
    /// Degree exceeds a documented desk-scale bound.
    DegreeBound,
    /// The polynomial has critical points outside the rationals.
    IrrationalCriticalPoints,
    /// Graph operation on an incomplete (cap-truncated) graph.
    IncompleteGraph,
    /// Two graphs were built at different depths.
    DepthMismatch,
    /// Angle sets passed to `unlinked` must be disjoint.
    NotDisjoint,
    /// A portrait request violated one of the CP conditions or the spacing
    /// inequality; the message carries the violated constraint.
    PortraitUnrealizable(String),
    /// Free-form precondition violation.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "coefficient ring mismatch"),
            Error::DegreeTooSmall => write!(f, "polynomial degree must be at least 2"),
            Error::LeadingNotInvertible => {
                write!(f, "leading coefficient is not invertible in the ring")
            }
            Error::NotMonicCentered => write!(f, "polynomial must be monic and centered"),
            Error::NonConstantLeading => write!(
                f,
                "family leading coefficient must be constant in the parameter; \
                 normalize the family first"
            ),
            Error::NoRootInRing => write!(f, "required root does not exist in the ring"),
            Error::TruncationExceeded => {
                write!(f, "requested coefficient lies beyond the truncation order")
            }
            Error::DegreeBound => write!(f, "degree exceeds the supported bound"),
            Error::IrrationalCriticalPoints => write!(
                f,
                "polynomial has irrational critical points; supply them explicitly"
            ),
            Error::IncompleteGraph => {
                write!(f, "graph is incomplete (orbit caps were exhausted)")
            }
            Error::DepthMismatch => write!(f, "graphs were built at different depths"),
            Error::NotDisjoint => write!(f, "angle sets must be disjoint"),
            Error::PortraitUnrealizable(msg) => write!(f, "portrait not realizable: {msg}"),
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
