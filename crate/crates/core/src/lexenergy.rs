//! Lexicographic energy games, solved through a scalar mean-payoff encoding.
//!
//! The d-dimensional weights are folded into one arbitrary-precision weight
//! by shifting more significant components past the reach of the lower ones:
//! level d keeps its weights, and level i multiplies component i by
//! |V| * ||level i+1|| + 1 before adding the level below. Signs of simple
//! cycle totals are preserved exactly, so threshold winners and positional
//! strategies of the scalar game transfer edge-for-edge.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Owner, Player};
use crate::mpg::{solve_threshold, Engine, WGraph};
use crate::walks::{path_weight, Lasso};

/// Dense multi-dimensional game arena: the working representation for the
/// solver pipeline (flat weight storage, integer vertex ids, optional names).
#[derive(Debug, Clone)]
pub struct MultiGame {
    pub dim: usize,
    pub owner: Vec<Owner>,
    pub edges: Vec<(u32, u32)>,
    weights: Vec<i64>,
    pub names: Option<Vec<String>>,
}

impl MultiGame {
    pub fn new(
        dim: usize,
        owner: Vec<Owner>,
        edges: Vec<(u32, u32)>,
        weights: Vec<i64>,
        names: Option<Vec<String>>,
    ) -> Self {
        assert_eq!(weights.len(), edges.len() * dim);
        MultiGame {
            dim,
            owner,
            edges,
            weights,
            names,
        }
    }

    /// Conversion from a validated, omega-free game graph.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut weights = Vec::with_capacity(g.edges().len() * g.dim);
        let mut edges = Vec::with_capacity(g.edges().len());
        for e in g.edges() {
            weights.extend(e.int_weight()?);
            edges.push((e.src as u32, e.dst as u32));
        }
        Ok(MultiGame {
            dim: g.dim,
            owner: g.vertices().iter().map(|v| v.owner).collect(),
            edges,
            weights,
            names: Some(g.vertices().iter().map(|v| v.id.clone()).collect()),
        })
    }

    pub fn n(&self) -> usize {
        self.owner.len()
    }

    pub fn weight(&self, e: usize) -> &[i64] {
        &self.weights[e * self.dim..(e + 1) * self.dim]
    }

    pub fn norm(&self) -> u64 {
        self.weights.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(ns) => ns[v].clone(),
            None => format!("v{v}"),
        }
    }

    /// Re-export as a plain game graph (used by the reduction CLI).
    pub fn to_graph(&self, name: &str) -> Result<Graph> {
        use crate::graph::{Ext, RawGame, Vertex};
        let vertices: Vec<Vertex> = (0..self.n())
            .map(|v| Vertex {
                id: self.name(v),
                owner: self.owner[v],
                priority: None,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                (
                    vertices[s as usize].id.clone(),
                    vertices[t as usize].id.clone(),
                    self.weight(i).iter().map(|&w| Ext::Fin(w)).collect(),
                )
            })
            .collect();
        Graph::from_raw(RawGame {
            name: name.to_string(),
            dim: self.dim,
            extended: false,
            vertices,
            edges,
        })
    }
}

/// The scalar encoding of a multi-dimensional graph: same vertices and edges
/// (bijection by index), one arbitrary-precision weight per edge, plus the
/// intermediate level norms, starting from the deepest (level d) fold.
#[derive(Debug, Clone)]
pub struct Encoded {
    pub wgraph: WGraph,
    /// `level_norms[i]` is the norm after folding levels d..=d-i; entry 0 is
    /// the norm of level d alone, the last entry the norm of the full fold.
    pub level_norms: Vec<BigInt>,
    /// Multipliers applied at levels d-1 down to 1, in that order.
    pub multipliers: Vec<BigInt>,
}

/// Folds the d-dimensional weights into scalars, exactly.
pub fn encode_to_mpg(g: &MultiGame) -> Result<Encoded> {
    if g.dim == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    let n = BigInt::from(g.n());
    let m = g.edges.len();
    let mut r: Vec<BigInt> = (0..m)
        .map(|e| BigInt::from(g.weight(e)[g.dim - 1]))
        .collect();
    let mut norm = max_abs(&r);
    let mut level_norms = vec![norm.clone()];
    let mut multipliers = Vec::new();
    for i in (0..g.dim - 1).rev() {
        let mult = &n * &norm + 1;
        for (e, ri) in r.iter_mut().enumerate() {
            *ri += BigInt::from(g.weight(e)[i]) * &mult;
        }
        norm = max_abs(&r);
        level_norms.push(norm.clone());
        multipliers.push(mult);
    }
    let wgraph = WGraph::new(g.owner.clone(), g.edges.clone(), r)?;
    Ok(Encoded {
        wgraph,
        level_norms,
        multipliers,
    })
}

fn max_abs(xs: &[BigInt]) -> BigInt {
    xs.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

/// Winners and positional strategies of the lexicographic energy game.
#[derive(Debug, Clone)]
pub struct LexSolve {
    pub winner: Vec<Player>,
    pub p1_strategy: Vec<Option<usize>>,
    pub p2_strategy: Vec<Option<usize>>,
}

/// Solves the lexicographic energy game: Player 1 wins a vertex iff Max wins
/// the threshold game on the encoding; strategies pull back edge-for-edge.
pub fn solve(g: &MultiGame, engine: Engine) -> Result<LexSolve> {
    let enc = encode_to_mpg(g)?;
    let res = solve_threshold(&enc.wgraph, engine)?;
    Ok(LexSolve {
        winner: res.winner,
        p1_strategy: res.max_strategy,
        p2_strategy: res.min_strategy,
    })
}

pub fn solve_graph(g: &Graph, engine: Engine) -> Result<LexSolve> {
    solve(&MultiGame::from_graph(g)?, engine)
}

/// Winner of an ultimately periodic play: Player 2 wins iff the cycle's
/// total weight is lexicographically negative (the first nonzero component
/// serves as the diverging dimension, everything earlier stays constant).
pub fn lasso_winner(g: &Graph, l: &Lasso) -> Result<Player> {
    let total = path_weight(g, &l.cycle)?;
    Ok(match crate::halfspace::lex_sign(&total) {
        std::cmp::Ordering::Less => Player::Two,
        _ => Player::One,
    })
}
