//! Simulation library for the 2D Gaussian free field and its multiplicative
//! chaos (Liouville quantum gravity) measures.
//!
//! The field is never evaluated pointwise. Everything is built from linear
//! functionals with exactly computable covariances: circle averages,
//! semicircle averages on a free boundary segment, and mollifier
//! convolutions, optionally precomposed with a conformal map. Ensembles of
//! such functionals are sampled exactly through a Cholesky factorization of
//! their covariance matrix, and the regularized measures
//! `exp(gamma h_eps + (gamma^2/2) log eps) dz` are integrated over cell
//! grids from those samples.

pub mod bessel;
pub mod boundary;
pub mod bump;
pub mod chol;
pub mod conformal;
pub mod constants;
pub mod decay;
pub mod domain;
pub mod ensemble;
pub mod error;
pub mod io;
pub mod kernel;
pub mod measure;
pub mod mobius;
pub mod quad;
pub mod rng;
pub mod spectral;
pub mod stats;

pub use domain::Domain;
pub use ensemble::{AverageEnsemble, CovarianceSpec, EntryKind, FactorizedCovariance};
pub use error::{GmcError, Result};
pub use measure::{GmcParams, MeasureField, MeasureVariant};
pub use mobius::MobiusMap;

pub type Complex = num_complex::Complex64;
