//! Deterministic random game generation.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{validate, Ext, Graph, Owner, RawGame, Vertex};

#[derive(Debug, Clone, Copy, Default)]
pub struct RandomFlags {
    pub extended: bool,
    pub priorities: bool,
    pub max_priority: u32,
}

/// Generates a valid game satisfying all normalization assumptions,
/// deterministic for a fixed seed. Omega weights and priorities appear only
/// when flagged.
pub fn random_game(
    n: usize,
    dim: usize,
    max_weight: i64,
    seed: u64,
    flags: RandomFlags,
) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Infeasible(
            "need at least 2 vertices to alternate players".into(),
        ));
    }
    if dim == 0 {
        return Err(Error::Infeasible("dimension must be positive".into()));
    }
    if max_weight < 1 {
        return Err(Error::Infeasible("max_weight must be at least 1".into()));
    }
    if flags.priorities && flags.max_priority == 0 {
        return Err(Error::Infeasible("max_priority must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Owner split: random, but both sides nonempty.
    let mut owners: Vec<Owner> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Owner::Player1
            } else {
                Owner::Player2
            }
        })
        .collect();
    if !owners.contains(&Owner::Player1) {
        owners[0] = Owner::Player1;
    }
    if !owners.contains(&Owner::Player2) {
        owners[n - 1] = Owner::Player2;
    }

    let vertices: Vec<Vertex> = owners
        .iter()
        .enumerate()
        .map(|(i, &owner)| Vertex {
            id: format!("v{i}"),
            owner,
            priority: flags
                .priorities
                .then(|| rng.gen_range(1..=flags.max_priority)),
        })
        .collect();

    let side = |o: Owner| -> Vec<usize> {
        owners
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == o)
            .map(|(i, _)| i)
            .collect()
    };
    let p1 = side(Owner::Player1);
    let p2 = side(Owner::Player2);

    let rng_weight = |src_owner: Owner, rng: &mut ChaCha8Rng| -> Vec<Ext> {
        (0..dim)
            .map(|_| {
                if flags.extended && src_owner == Owner::Player1 && rng.gen_bool(0.25) {
                    Ext::Omega
                } else {
                    Ext::Fin(rng.gen_range(-max_weight..=max_weight))
                }
            })
            .collect()
    };

    let mut chosen: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut edges: Vec<(String, String, Vec<Ext>)> = Vec::new();
    let add_edge = |src: usize,
                        dst: usize,
                        chosen: &mut std::collections::HashSet<(usize, usize)>,
                        edges: &mut Vec<(String, String, Vec<Ext>)>,
                        rng: &mut ChaCha8Rng| {
        if chosen.insert((src, dst)) {
            let w = rng_weight(owners[src], rng);
            edges.push((vertices[src].id.clone(), vertices[dst].id.clone(), w));
        }
    };

    // Out-degree >= 1 for every vertex, then extra edges for density.
    for v in 0..n {
        let opposite = if owners[v] == Owner::Player1 { &p2 } else { &p1 };
        let t = opposite[rng.gen_range(0..opposite.len())];
        add_edge(v, t, &mut chosen, &mut edges, &mut rng);
    }
    let extra = n + rng.gen_range(0..=n);
    for _ in 0..extra {
        let v = rng.gen_range(0..n);
        let opposite = if owners[v] == Owner::Player1 { &p2 } else { &p1 };
        let t = opposite[rng.gen_range(0..opposite.len())];
        add_edge(v, t, &mut chosen, &mut edges, &mut rng);
    }

    // The norm assumption: force one nonzero finite entry if needed.
    let all_zero = edges
        .iter()
        .flat_map(|(_, _, w)| w.iter())
        .all(|x| matches!(x, Ext::Fin(0)));
    if all_zero {
        let e = rng.gen_range(0..edges.len());
        let k = rng.gen_range(0..dim);
        edges[e].2[k] = Ext::Fin(if rng.gen_bool(0.5) { max_weight } else { -max_weight });
    }

    let raw = RawGame {
        name: format!("random-{seed}"),
        dim,
        extended: flags.extended,
        vertices,
        edges,
    };
    debug_assert!(validate(&raw).is_empty(), "generator produced invalid game");
    Graph::from_raw(raw)
}
