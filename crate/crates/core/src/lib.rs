//! Error-correcting-coded threshold neurons and binarized networks.
//!
//! A neuron `τ(x) = sign(x·wᵀ − θ)` on `{±1}ⁿ` is replaced by a coded neuron
//! `sign(E(x)·vᵀ − μ)` whose encoder adds redundant monomials of the input.
//! The crate builds the standard encoders, computes exact minimum distances,
//! checks robustness against erasures and errors by exhaustive enumeration
//! and by an ℓ1 criterion, and carries parity coding over whole layered
//! networks of ±1 neurons.

pub mod boolean_core;
pub mod cli;
pub mod error;
pub mod network;
pub mod neuron;
pub mod rational;
pub mod records;
pub mod robustness;
pub mod solutions;

pub use error::{Error, Result};
