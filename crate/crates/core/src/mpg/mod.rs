//! One-dimensional mean-payoff game solving.
//!
//! Threshold winners (value >= 0 for Max, < 0 for Min), positional strategies
//! with sign-correct cycle certificates for both players, and exact rational
//! values. The default engine is strategy improvement over Min's positional
//! strategies, whose per-iteration cost does not depend on weight magnitudes;
//! the reference engine is a progress-measure value iteration with top
//! element |V|*||E||.

mod brute;
mod energy;
mod karp;
mod values;

pub use brute::brute_force_winners;
pub use karp::{min_cycle_mean, CycleMean};
pub use values::compute_values;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Graph, Owner, Player};

/// A 1-dimensional weighted game graph with arbitrary-precision weights.
/// Edge indices are stable: strategies refer to positions in `edges`.
#[derive(Debug, Clone)]
pub struct WGraph {
    pub owner: Vec<Owner>,
    pub edges: Vec<(u32, u32)>,
    pub weights: Vec<BigInt>,
    out_start: Vec<u32>,
    out_edge: Vec<u32>,
}

impl WGraph {
    pub fn new(owner: Vec<Owner>, edges: Vec<(u32, u32)>, weights: Vec<BigInt>) -> Result<Self> {
        assert_eq!(edges.len(), weights.len());
        let n = owner.len();
        let mut deg = vec![0u32; n];
        for &(s, _) in &edges {
            deg[s as usize] += 1;
        }
        if deg.iter().any(|&d| d == 0) {
            return Err(Error::Invariant {
                rule: "out-degree",
                msg: "every vertex needs an outgoing edge".into(),
            });
        }
        let mut out_start = vec![0u32; n + 1];
        for v in 0..n {
            out_start[v + 1] = out_start[v] + deg[v];
        }
        let mut pos = out_start.clone();
        let mut out_edge = vec![0u32; edges.len()];
        for (e, &(s, _)) in edges.iter().enumerate() {
            out_edge[pos[s as usize] as usize] = e as u32;
            pos[s as usize] += 1;
        }
        Ok(WGraph {
            owner,
            edges,
            weights,
            out_start,
            out_edge,
        })
    }

    /// Builds from a validated 1-dimensional, omega-free game graph.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        if g.dim != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: g.dim,
            });
        }
        let owner = g.vertices().iter().map(|v| v.owner).collect();
        let mut edges = Vec::with_capacity(g.edges().len());
        let mut weights = Vec::with_capacity(g.edges().len());
        for e in g.edges() {
            edges.push((e.src as u32, e.dst as u32));
            weights.push(BigInt::from(e.int_weight()?[0]));
        }
        WGraph::new(owner, edges, weights)
    }

    pub fn n(&self) -> usize {
        self.owner.len()
    }

    pub fn out(&self, v: usize) -> &[u32] {
        &self.out_edge[self.out_start[v] as usize..self.out_start[v + 1] as usize]
    }

    pub fn max_abs_weight(&self) -> BigInt {
        let mut m = BigInt::zero();
        for w in &self.weights {
            let a = w.magnitude();
            if *a > *m.magnitude() {
                m = BigInt::from(a.clone());
            }
        }
        m
    }
}

/// Which solver backs `solve_threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    StrategyImprovement,
    ValueIteration,
}

/// Threshold solve output. Max is Player 1 and wins exactly the vertices
/// with value >= 0; both strategies are positional and certified by the sign
/// of every cycle in their strategy subgraphs within their winning regions.
#[derive(Debug, Clone)]
pub struct ThresholdResult {
    pub winner: Vec<Player>,
    pub max_strategy: Vec<Option<usize>>,
    pub min_strategy: Vec<Option<usize>>,
}

impl ThresholdResult {
    pub fn max_wins(&self, v: usize) -> bool {
        self.winner[v] == Player::One
    }
}

/// Decides the value >= 0 threshold for every vertex and extracts positional
/// strategies for both players.
pub fn solve_threshold(g: &WGraph, engine: Engine) -> Result<ThresholdResult> {
    let res = energy::solve(g, engine)?;
    let min_strategy = match engine {
        Engine::StrategyImprovement => res.min_strategy,
        // The progress measure does not certify Min; solve the mirrored,
        // scaled-shifted game and read Min's strategy off its Max side.
        Engine::ValueIteration => {
            let mirrored = mirror_shift(g);
            let mres = energy::solve(&mirrored, engine)?;
            for v in 0..g.n() {
                let ours = res.winner[v] == Player::Two;
                let theirs = mres.winner[v] == Player::One;
                if ours != theirs {
                    return Err(Error::Internal(format!(
                        "mirrored solve disagrees on vertex {v}"
                    )));
                }
            }
            mres.max_strategy
        }
    };
    Ok(ThresholdResult {
        winner: res.winner,
        max_strategy: res.max_strategy,
        min_strategy,
    })
}

/// Owner-swapped copy with weights `-n*w - 1`: its Max side is the original
/// Min, and it wins exactly where the original value is < 0. Any cycle of
/// total >= 0 there has original total <= -|C|/n < 0, so certificates carry
/// over strictly.
fn mirror_shift(g: &WGraph) -> WGraph {
    let n = BigInt::from(g.n());
    let owner = g.owner.iter().map(|o| o.opponent()).collect();
    let weights = g.weights.iter().map(|w| -(&n * w) - 1).collect();
    WGraph::new(owner, g.edges.clone(), weights).expect("mirror preserves out-degrees")
}
