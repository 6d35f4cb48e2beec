//! Exact algebra for 2x2 operator fields on the plane.
//!
//! Builds from exact rationals up through bivariate polynomials and rational
//! functions, truncated jets, the torsion of operator fields, reconstruction
//! of operators from a determinant or discriminant, and the classification of
//! discriminants near the origin. A small `f64` layer samples eigenvalues on
//! grids for plotting.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod discriminant;
pub mod jets;
pub mod numeric;
pub mod operator;
pub mod parser;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod univariate;

pub use classify::{classify, ClassificationResult, Verdict};
pub use operator::{AlgebraicType, CharacteristicData, OperatorField2, TorsionComponents};
pub use parser::{parse_operator, parse_poly, parse_rational, ParseError, Span};
pub use poly::{Monomial, Poly, PolyError, ZeroOrder};
pub use ratfunc::RationalFunction2;
pub use rational::ExactRational;
pub use univariate::UniPoly;
