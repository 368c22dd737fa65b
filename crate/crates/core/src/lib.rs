//! Exact-arithmetic toolkit for volume products of symmetric polytopes.
//!
//! The crate computes `P(K) = |K| |K°|` for polytopes with rational vertices,
//! realizes the correspondence between standard Hanner polytopes and P4-free
//! graphs, and checks, with exact rationals, the inequalities that control
//! the stability of the minimal volume product among unconditional bodies.
//!
//! Module map:
//! - [`rational`], [`linalg`]: exact scalars, determinants and solves.
//! - [`polytope`]: double vertex/facet representation, polarity, volume,
//!   sections, sums and distances.
//! - [`graph`], [`hanner`]: graphs on `{0..n-1}`, maximal independent sets,
//!   dual 0-1 polytopes and Hanner trees.
//! - [`volume_product`]: volume-product reports and the section and
//!   bound-body inequalities.
//! - [`stability`]: reconstruction of a nearby Hanner polytope and seeded
//!   perturbation experiments.
//! - [`suites`]: the named verification suites run by the CLI.

pub mod error;
pub mod graph;
pub mod hanner;
pub mod linalg;
pub mod polytope;
pub mod rational;
pub mod stability;
pub mod suites;
pub mod volume_product;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hanner::HannerTree;
pub use polytope::Polytope;
pub use rational::{RVector, Rational};
