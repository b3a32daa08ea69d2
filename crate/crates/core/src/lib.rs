//! Exact root-system machinery for twisted Coxeter elements of extended
//! affine Weyl groups and the bundle invariants they determine.
//!
//! All arithmetic is exact: roots are integer vectors in the simple-root
//! basis, coweights are rational vectors in the fundamental-coweight basis.

pub mod affine;
pub mod cartan;
pub mod coxeter;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod report;
pub mod roots;
pub mod weyl;

pub use num_rational::BigRational;

/// Scalar used throughout the engine.
pub type Rational = num_rational::Ratio<i64>;

pub use affine::{ExtAffineElement, AffineRoot};
pub use cartan::{AutoSpec, CartanData, DiagramAutomorphism, DynkinType, Family};
pub use coxeter::{analyze, CoxeterAnalysis};
pub use error::{Error, Result};
pub use linalg::{IntMatrix, Matrix, RatMatrix};
pub use roots::{CoweightVector, RootSet, RootVector};
pub use weyl::WeylElement;
