//! Exact Bernoulli (binomial) transform toolkit.
//!
//! For a sequence `a_n` the transform is
//! `S_n(q) = Σ_k a_k C(n,k) (1-q)^k q^(n-k)`. This crate evaluates it by
//! several independent routes over exact rationals and checks a registry of
//! identities about it by evaluation on certifying grids.

pub mod appell;
pub mod error;
pub mod exec;
pub mod grid;
pub mod poly;
pub mod probability;
pub mod rational;
pub mod registry;
pub mod sequences;
pub mod series;
pub mod special;
pub mod transform;

pub use appell::{AppellFamily, AppellSpec};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use grid::{check_identity_on_grid, CheckOutcome, GridConfig, GridSpec, VarReq};
pub use poly::{Poly, QPoly, YPoly};
pub use probability::FinitePmf;
pub use rational::Rational;
pub use sequences::SequenceSpec;
pub use series::Series;
pub use transform::Comparison;
