//! Independent certificate checks for extracted strategies.
//!
//! The solvers promise sign-correct strategy subgraphs; these helpers verify
//! that promise by exhaustive simple-cycle enumeration, staying independent
//! of the solver internals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cycles::simple_cycles;
use crate::graph::{Owner, Player};
use crate::halfspace::lex_sign;
use crate::lexenergy::MultiGame;
use crate::mpg::{ThresholdResult, WGraph};

/// Checks both threshold certificates: every cycle of Max's strategy
/// subgraph inside her region has total >= 0, every cycle of Min's strategy
/// subgraph inside his region has total < 0.
pub fn threshold_certificates(g: &WGraph, res: &ThresholdResult) -> std::result::Result<(), String> {
    check_side(g, res, Player::One)?;
    check_side(g, res, Player::Two)
}

fn check_side(g: &WGraph, res: &ThresholdResult, side: Player) -> std::result::Result<(), String> {
    let n = g.n();
    let owner_side = match side {
        Player::One => Owner::Player1,
        Player::Two => Owner::Player2,
    };
    // strategy subgraph restricted to the side's winning region
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut wmap: std::collections::HashMap<(usize, usize), BigInt> = Default::default();
    for v in 0..n {
        if res.winner[v] != side {
            continue;
        }
        let edges: Vec<usize> = if g.owner[v] == owner_side {
            let choice = match side {
                Player::One => res.max_strategy[v],
                Player::Two => res.min_strategy[v],
            };
            match choice {
                Some(e) => vec![e],
                None => return Err(format!("missing strategy at vertex {v}")),
            }
        } else {
            g.out(v).iter().map(|&e| e as usize).collect()
        };
        for e in edges {
            let (_, t) = g.edges[e];
            let t = t as usize;
            if res.winner[t] != side {
                // the opponent may leave the region; the strategy must not
                if g.owner[v] == owner_side {
                    return Err(format!("strategy at {v} leaves the winning region"));
                }
                continue;
            }
            adj[v].push(t);
            let entry = wmap.entry((v, t)).or_insert_with(|| g.weights[e].clone());
            if *entry > g.weights[e] {
                *entry = g.weights[e].clone();
            }
        }
    }
    for cyc in simple_cycles(&adj) {
        let mut total = BigInt::zero();
        for pair in cyc.windows(2) {
            total += &wmap[&(pair[0], pair[1])];
        }
        let ok = match side {
            Player::One => total >= BigInt::zero(),
            Player::Two => total < BigInt::zero(),
        };
        if !ok {
            return Err(format!(
                "cycle {cyc:?} has total {total}, wrong sign for {side}"
            ));
        }
    }
    Ok(())
}

/// Checks a Player-2 strategy of a lexicographic energy game: every simple
/// cycle of the committed subgraph inside Player 2's region must have a
/// lexicographically negative total.
pub fn lex_p2_certificate(
    g: &MultiGame,
    winner: &[Player],
    p2: &[Option<usize>],
) -> std::result::Result<(), String> {
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut wmap: std::collections::HashMap<(usize, usize), Vec<i64>> = Default::default();
    for v in 0..n {
        if winner[v] != Player::Two {
            continue;
        }
        let edges: Vec<usize> = match g.owner[v] {
            Owner::Player2 => match p2[v] {
                Some(e) => vec![e],
                None => return Err(format!("missing strategy at vertex {v}")),
            },
            Owner::Player1 => (0..g.edges.len())
                .filter(|&e| g.edges[e].0 as usize == v)
                .collect(),
        };
        for e in edges {
            let t = g.edges[e].1 as usize;
            if winner[t] != Player::Two {
                if g.owner[v] == Owner::Player2 {
                    return Err(format!("strategy at {v} leaves the winning region"));
                }
                continue;
            }
            adj[v].push(t);
            wmap.entry((v, t)).or_insert_with(|| g.weight(e).to_vec());
        }
    }
    for cyc in simple_cycles(&adj) {
        let mut total = vec![0i64; g.dim];
        for pair in cyc.windows(2) {
            for (a, b) in total.iter_mut().zip(&wmap[&(pair[0], pair[1])]) {
                *a += b;
            }
        }
        if lex_sign(&total) != std::cmp::Ordering::Less {
            return Err(format!("cycle {cyc:?} has non-negative total {total:?}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_game;
    use crate::lexenergy;
    use crate::mpg::{solve_threshold, Engine};

    #[test]
    fn certificates_hold_on_small_games() {
        for seed in 0..40 {
            let g = crate::mpg::test_util::random_wgraph(6, 3, seed);
            for engine in [Engine::StrategyImprovement, Engine::ValueIteration] {
                let res = solve_threshold(&g, engine).unwrap();
                threshold_certificates(&g, &res)
                    .unwrap_or_else(|e| panic!("seed {seed} {engine:?}: {e}"));
            }
        }
    }

    #[test]
    fn lex_certificate_on_fig1_translation() {
        use crate::phs::{build_arena, solve_arena, translate, Limits};
        let g = parse_game(crate::test_assets::FIG1).unwrap();
        let arena = build_arena(&g, Some(1), Limits::default()).unwrap();
        let tg = translate(&arena).unwrap();
        let lex = lexenergy::solve(&tg, Engine::StrategyImprovement).unwrap();
        let res = solve_arena(&arena, Engine::StrategyImprovement).unwrap();
        let p2: Vec<Option<usize>> = res
            .p2_strategy
            .choice
            .iter()
            .map(|c| c.map(|e| e as usize))
            .collect();
        lex_p2_certificate(&tg, &lex.winner, &p2).unwrap();
    }
}
