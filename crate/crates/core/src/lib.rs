//! Exact invariants of plane curve singularities.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers. Three independent routes to the jacobian Newton polygon are
//! provided and are expected to agree:
//!
//! - [`jacobian`]: the Newton diagram of the discriminant `disc_Y(f - T)`;
//! - [`kuolu`]: contact trees over Puiseux roots (or a supplied contact matrix);
//! - [`nondegenerate`]: a closed formula in the Newton diagram of a
//!   nondegenerate `f`.
//!
//! [`branch`] handles the one-branch case through semigroup generators and
//! [`multibranch`] the many-branch case through intersection data.

pub mod algebra;
pub mod branch;
pub mod diagram;
mod error;
mod extended;
pub mod jacobian;
pub mod kuolu;
pub mod multibranch;
pub mod nondegenerate;

pub use algebra::{BivariatePolynomial, Rational, UnivariatePolynomial};
pub use diagram::NewtonDiagram;
pub use error::{DistinguishedFailure, Error, Result};
pub use extended::Extended;
pub use jacobian::JacobianPolygon;
