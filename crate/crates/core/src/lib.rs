//! Exact analysis of quadratic stochastic operators as baric algebras.
//!
//! An operator on `n` types is an [`InheritanceTensor`] of offspring
//! probabilities `p_{ik,j}` over exact rationals. On top of it the crate
//! decides the Bernstein property `(x^2)^2 = s(x)^2 x^2`, computes the
//! type `(m, delta)`, invariant linear forms and their cone, the lattice of
//! invariant faces, normality and ultranormality, and recognizes the
//! extended Mendel and extended quadrille families.
//!
//! Indices are 0-based throughout the library.
//!
//! With the default `parallel` feature, subset and grid enumerations run on
//! rayon; [`Execution::Sequential`] forces a single thread and produces the
//! same output.

pub mod algebra;
pub mod bernstein;
pub mod classify;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod forms;
pub mod lattice;
pub mod linalg;
pub mod normality;
pub mod par;
pub mod quartic;
pub mod rational;
pub mod sample;
pub mod sweep;

pub use algebra::{InheritanceTensor, SimplexPoint, TensorBuilder, Vector};
pub use bernstein::{AlgebraType, RegularityCriterion, RegularityVerdict};
pub use classify::Classification;
pub use error::{Error, Result};
pub use lattice::IndexSet;
pub use par::Execution;
pub use rational::Rational;
