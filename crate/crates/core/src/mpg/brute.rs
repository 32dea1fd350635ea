//! Brute-force mean-payoff winners by enumerating positional strategy pairs.
//!
//! Positional determinacy makes this an exact oracle: Max wins a vertex iff
//! some positional Max strategy beats every positional Min strategy on the
//! induced lasso.

use num_bigint::BigInt;
use num_traits::Zero;

use super::WGraph;
use crate::error::{Error, Result};
use crate::graph::{Owner, Player};

/// Exact winners by strategy enumeration. Errors when the positional
/// strategy space exceeds `cap` pairs.
pub fn brute_force_winners(g: &WGraph, cap: u64) -> Result<Vec<Player>> {
    let n = g.n();
    let mut space: u128 = 1;
    for v in 0..n {
        space = space.saturating_mul(g.out(v).len() as u128);
    }
    if space > cap as u128 {
        return Err(Error::CapExceeded {
            what: "positional strategy enumeration",
            needed: space,
            cap: cap as u128,
        });
    }

    let maxers: Vec<usize> = (0..n).filter(|&v| g.owner[v] == Owner::Player1).collect();
    let miners: Vec<usize> = (0..n).filter(|&v| g.owner[v] == Owner::Player2).collect();

    let mut max_wins = vec![false; n];
    let mut sigma_iter = StrategyIter::new(g, &maxers);
    while let Some(sigma) = sigma_iter.next() {
        let mut wins_all = vec![true; n];
        let mut tau_iter = StrategyIter::new(g, &miners);
        while let Some(tau) = tau_iter.next() {
            // functional graph: walk every start to its cycle
            let succ: Vec<usize> = (0..n)
                .map(|v| {
                    let e = match g.owner[v] {
                        Owner::Player1 => sigma[v],
                        Owner::Player2 => tau[v],
                    };
                    g.edges[e].1 as usize
                })
                .collect();
            let ew: Vec<&BigInt> = (0..n)
                .map(|v| {
                    let e = match g.owner[v] {
                        Owner::Player1 => sigma[v],
                        Owner::Player2 => tau[v],
                    };
                    &g.weights[e]
                })
                .collect();
            for start in 0..n {
                if !wins_all[start] {
                    continue;
                }
                // find the cycle reached from start
                let mut seen = vec![usize::MAX; n];
                let mut cur = start;
                let mut step = 0usize;
                while seen[cur] == usize::MAX {
                    seen[cur] = step;
                    step += 1;
                    cur = succ[cur];
                }
                let mut total = BigInt::zero();
                let mut x = cur;
                loop {
                    total += ew[x];
                    x = succ[x];
                    if x == cur {
                        break;
                    }
                }
                if total < BigInt::zero() {
                    wins_all[start] = false;
                }
            }
        }
        for v in 0..n {
            if wins_all[v] {
                max_wins[v] = true;
            }
        }
    }
    Ok(max_wins
        .into_iter()
        .map(|w| if w { Player::One } else { Player::Two })
        .collect())
}

/// Iterates all assignments of one edge per listed vertex.
struct StrategyIter<'a> {
    g: &'a WGraph,
    verts: &'a [usize],
    counters: Vec<usize>,
    current: Vec<usize>,
    done: bool,
    fresh: bool,
}

impl<'a> StrategyIter<'a> {
    fn new(g: &'a WGraph, verts: &'a [usize]) -> Self {
        let mut current = vec![0usize; g.n()];
        for &v in verts {
            current[v] = g.out(v)[0] as usize;
        }
        StrategyIter {
            g,
            verts,
            counters: vec![0; verts.len()],
            current,
            done: false,
            fresh: true,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.current);
        }
        for (i, &v) in self.verts.iter().enumerate() {
            self.counters[i] += 1;
            if self.counters[i] < self.g.out(v).len() {
                self.current[v] = self.g.out(v)[self.counters[i]] as usize;
                return Some(&self.current);
            }
            self.counters[i] = 0;
            self.current[v] = self.g.out(v)[0] as usize;
        }
        self.done = true;
        None
    }
}
