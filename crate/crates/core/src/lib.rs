//! Dot-analogues of Gaussian binomial coefficients.
//!
//! Over GF(q) with q odd, the subspaces of `(GF(q)^n, x₁² + … + xₙ²)` on which the
//! form restricts to a sum of squares play the role that all subspaces play for
//! the Gaussian binomials. This crate computes the resulting counts in closed
//! form ([`closed`], [`polyq`]) and checks them against brute-force enumeration
//! ([`oracle`]).

pub mod bigstr;
pub mod closed;
pub mod gf;
pub mod oracle;
pub mod polyq;
pub mod quadspace;
pub mod verify;

pub use gf::{FieldElement, FieldSpec, GfError, QClass, SquareClass};
pub use quadspace::{AmbientForm, FormKind, LineType, QuadError, Subspace, SubspaceClass};
