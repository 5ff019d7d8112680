//! Verify-and-repair toolkit for feed-forward ReLU classifiers.
//!
//! Given a network and a reachability property (an input box plus an output
//! constraint over the output scores), the pipeline:
//!
//! 1. bounds the reachable outputs with interval arithmetic and a linear
//!    relaxation with full back-substitution ([`verifier`]),
//! 2. recursively bisects the input box until regions either verify or hit
//!    the partition depth budget ([`repair::overall`]),
//! 3. searches each stubborn region for a concrete counterexample ([`cex`]),
//! 4. repairs the region by pinning the activations of the neurons most
//!    responsible for the violation to gradient-stepped constants
//!    ([`repair`]), re-verifying after each pin, and
//! 5. assembles the per-region results into a piecewise model with
//!    first-match region dispatch ([`piecewise`]).
//!
//! [`eval`] measures repair quality: fidelity against the original model on a
//! synthesized test set, relative accuracy on labeled data, and local
//! accuracy inside a norm ball.

pub mod cex;
pub mod eval;
pub mod io;
pub mod model;
pub mod piecewise;
pub mod property;
pub mod repair;
pub mod verifier;

mod error;

pub use error::{Error, Result};
pub use model::{Activation, ActivationTrace, DenseLayer, Network, NeuronRef};
pub use piecewise::{Patch, PiecewiseModel};
pub use property::{InputBox, LinearAssertion, OutputConstraint, Property, Relation};
pub use repair::{RepairParams, RepairReport};
pub use verifier::{AbstractBounds, Verdict};
