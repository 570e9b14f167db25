//! Exact tropical rational signomials in low dimension.
//!
//! Piecewise-linear functions are represented as differences `g ⊘ h` of
//! max-plus signomials with rational coefficients and exponents. The crate
//! computes monomial and factorization lengths, builds tropical curves and
//! corner loci in the plane, counts regions of curve arrangements two
//! independent ways, checks the resulting lower bounds (including the
//! Minkowski-sum vertex bounds they imply), and constructs minimal
//! representations and balancings for one-variable functions and planar fans.
//!
//! Nothing in here uses floating point: every predicate is decided over
//! [`Rational`].

pub mod counting;
pub mod error;
pub mod exactgeom;
pub mod io;
pub mod minimize;
pub mod plancomplex;
pub mod rational;
pub mod signomial;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
