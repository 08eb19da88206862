//! Threefolds fibred in `(1,2)`-surfaces over `P^1`, realised as divisors
//! `X(d;d0) ∈ |10(H - dF)|` in the toric `P(1,1,2,5)`-bundle `F(d;d0)`.
//!
//! All arithmetic is exact. The modules follow the flow of a computation:
//! the ambient toric model, the linear system of `X`, its singularities, its
//! invariants, and the degree-level theory of simple fibrations.

pub mod bundle_algebra;
pub mod error;
pub mod invariants;
pub mod linear_system;
pub mod rational;
pub mod record;
pub mod singularities;
pub mod toric_model;

pub use error::{Error, ParseError, Result};
pub use rational::Rational;
pub use toric_model::{BundleParams, Coordinate, DivisorClass, SpecialCurve, WeightMatrix};
