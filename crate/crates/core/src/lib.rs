//! Solver library for quantitative games on finite multi-weighted game graphs.
//!
//! The library covers the reduction chain
//! energy-parity → extended energy → bounding → perfect-half-space →
//! lexicographic-energy → mean-payoff, together with positional strategy
//! extraction, half-space-oblivious strategies, and brute-force oracles for
//! desk-scale validation.

pub mod bounding;
pub mod cycles;
pub mod dot;
pub mod enparity;
pub mod error;
pub mod graph;
pub mod halfspace;
pub mod lexenergy;
pub mod mpg;
pub mod parity;
pub mod phs;
pub mod random;
pub mod verify;
pub mod walks;

pub use error::Error;
pub use graph::{Graph, Owner, Player};

/// Canonical game files used throughout the test suites and documentation.
pub mod test_assets {
    pub const FIG1: &str = include_str!("../assets/fig1.game");
    pub const FIG5: &str = include_str!("../assets/fig5.game");
}
