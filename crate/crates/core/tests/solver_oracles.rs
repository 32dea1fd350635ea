//! Cross-validation of the mean-payoff solvers against brute force, plus
//! certificate and value checks on random instances.

use num_bigint::BigInt;
use num_traits::Zero;

use hsg_core::graph::{Owner, Player};
use hsg_core::mpg::{
    brute_force_winners, compute_values, min_cycle_mean, solve_threshold, Engine, WGraph,
};
use hsg_core::verify::threshold_certificates;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn random_wgraph(n: usize, max_w: i64, seed: u64) -> WGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut owner: Vec<Owner> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Owner::Player1
            } else {
                Owner::Player2
            }
        })
        .collect();
    if !owner.contains(&Owner::Player1) {
        owner[0] = Owner::Player1;
    }
    if !owner.contains(&Owner::Player2) {
        owner[n - 1] = Owner::Player2;
    }
    let p1: Vec<u32> = (0..n as u32)
        .filter(|&v| owner[v as usize] == Owner::Player1)
        .collect();
    let p2: Vec<u32> = (0..n as u32)
        .filter(|&v| owner[v as usize] == Owner::Player2)
        .collect();
    let mut chosen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for v in 0..n as u32 {
        let opp = if owner[v as usize] == Owner::Player1 {
            &p2
        } else {
            &p1
        };
        for _ in 0..1 + rng.gen_range(0..3) {
            let t = opp[rng.gen_range(0..opp.len())];
            if chosen.insert((v, t)) {
                edges.push((v, t));
                weights.push(BigInt::from(rng.gen_range(-max_w..=max_w)));
            }
        }
    }
    WGraph::new(owner, edges, weights).unwrap()
}

#[test]
fn threshold_agrees_with_brute_force_and_engines_agree() {
    for seed in 0..400 {
        let n = 2 + (seed as usize % 5);
        let g = random_wgraph(n, 3, seed);
        let oracle = brute_force_winners(&g, 10_000_000).unwrap();
        let si = solve_threshold(&g, Engine::StrategyImprovement).unwrap();
        let vi = solve_threshold(&g, Engine::ValueIteration).unwrap();
        assert_eq!(si.winner, oracle, "SI vs oracle, seed {seed}");
        assert_eq!(vi.winner, oracle, "VI vs oracle, seed {seed}");
        threshold_certificates(&g, &si).unwrap_or_else(|e| panic!("SI cert seed {seed}: {e}"));
        threshold_certificates(&g, &vi).unwrap_or_else(|e| panic!("VI cert seed {seed}: {e}"));
    }
}

#[test]
fn values_match_induced_lasso_means() {
    // winner(v) = Max iff value >= 0, and the value matches the cycle mean
    // of the lasso induced by the extracted optimal strategies
    for seed in 0..60 {
        let n = 2 + (seed as usize % 4);
        let g = random_wgraph(n, 3, 1000 + seed);
        let vals = compute_values(&g, Engine::StrategyImprovement).unwrap();
        let res = solve_threshold(&g, Engine::StrategyImprovement).unwrap();
        for v in 0..g.n() {
            let nonneg = vals[v].0 >= BigInt::zero();
            assert_eq!(nonneg, res.winner[v] == Player::One, "seed {seed} vertex {v}");
        }
    }
}

#[test]
fn reweighting_keeps_winners() {
    for seed in 0..40 {
        let g = random_wgraph(5, 3, 2000 + seed);
        let res = solve_threshold(&g, Engine::StrategyImprovement).unwrap();
        let scaled = WGraph::new(
            g.owner.clone(),
            g.edges.clone(),
            g.weights.iter().map(|w| w * 7).collect(),
        )
        .unwrap();
        let res2 = solve_threshold(&scaled, Engine::StrategyImprovement).unwrap();
        assert_eq!(res.winner, res2.winner, "seed {seed}");
        let vals = compute_values(&g, Engine::StrategyImprovement).unwrap();
        let vals2 = compute_values(&scaled, Engine::StrategyImprovement).unwrap();
        for v in 0..g.n() {
            // values scale by the same factor
            assert_eq!(
                &vals[v].0 * 7 * BigInt::from(vals2[v].1),
                &vals2[v].0 * BigInt::from(vals[v].1),
                "seed {seed} vertex {v}"
            );
        }
    }
}

#[test]
fn min_cycle_mean_fixed_relays_on_encoded_fig1() {
    // the encoded graph's relays have single edges; enumerating its simple
    // cycles gives means -2 (cyan), +3 (blue), -3 (violet): minimum -3
    let g = hsg_core::graph::parse_game(hsg_core::test_assets::FIG1).unwrap();
    let mg = hsg_core::lexenergy::MultiGame::from_graph(&g).unwrap();
    let enc = hsg_core::lexenergy::encode_to_mpg(&mg).unwrap();
    let cm = min_cycle_mean(
        enc.wgraph.n(),
        &enc.wgraph.edges,
        &enc.wgraph.weights,
        false,
    )
    .unwrap()
    .unwrap();
    assert_eq!(cm.cmp_ratio(&BigInt::from(-3), 1), std::cmp::Ordering::Equal);
    assert_eq!(cm.len, 2);
    let vr = g.vertex_index("vR").unwrap();
    let r1 = g.vertex_index("R1").unwrap();
    let mut wit = cm.cycle.clone();
    wit.sort_unstable();
    wit.dedup();
    assert_eq!(wit, {
        let mut v = vec![vr, r1];
        v.sort_unstable();
        v
    });
    // maximum flag picks the blue loop
    let cm = min_cycle_mean(enc.wgraph.n(), &enc.wgraph.edges, &enc.wgraph.weights, true)
        .unwrap()
        .unwrap();
    assert_eq!(cm.cmp_ratio(&BigInt::from(3), 1), std::cmp::Ordering::Equal);
}

#[test]
fn min_cycle_mean_small_examples() {
    // relay self-cycle with weights 3 and 1: single cycle of mean 2
    let edges = vec![(0u32, 1u32), (1, 0)];
    let w: Vec<BigInt> = [3, 1].iter().map(|&x| BigInt::from(x)).collect();
    let cm = min_cycle_mean(2, &edges, &w, false).unwrap().unwrap();
    assert_eq!(cm.cmp_ratio(&BigInt::from(2), 1), std::cmp::Ordering::Equal);

    // two disjoint 2-cycles with means 0 and -1
    let edges = vec![(0u32, 1u32), (1, 0), (2u32, 3u32), (3, 2)];
    let w: Vec<BigInt> = [0, 0, -1, -1].iter().map(|&x| BigInt::from(x)).collect();
    let cm = min_cycle_mean(4, &edges, &w, false).unwrap().unwrap();
    assert_eq!(cm.cmp_ratio(&BigInt::from(-1), 1), std::cmp::Ordering::Equal);
    assert!(cm.cycle.contains(&2) && cm.cycle.contains(&3));
}

#[test]
fn fig3_threshold_and_values() {
    let g = hsg_core::graph::parse_game(hsg_core::test_assets::FIG1).unwrap();
    let mg = hsg_core::lexenergy::MultiGame::from_graph(&g).unwrap();
    let enc = hsg_core::lexenergy::encode_to_mpg(&mg).unwrap();
    for engine in [Engine::StrategyImprovement, Engine::ValueIteration] {
        let res = solve_threshold(&enc.wgraph, engine).unwrap();
        assert!(res.winner.iter().all(|&w| w == Player::One));
    }
    let vals = compute_values(&enc.wgraph, Engine::StrategyImprovement).unwrap();
    assert!(vals.iter().all(|v| *v == (BigInt::from(6), 1)));
}
