//! Least-credit computation for the threshold game.
//!
//! Max wins the mean-payoff threshold (value >= 0) from exactly the vertices
//! where the least progress measure of the associated energy game is finite.
//! The strategy-improvement engine ascends over Min's positional strategies:
//! a committed strategy leaves a one-player graph whose measure is computed
//! structurally (divergence detection plus dip relaxation), so one iteration
//! costs a handful of passes over the edges regardless of weight size. The
//! value-iteration engine is the plain progress-measure lifting with top
//! |V|*||E||, kept as a cross-check for small weights.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Engine, WGraph};
use crate::error::{Error, Result};
use crate::graph::{Owner, Player};

const PASS_BUDGET: usize = 2_000_000;
const SWITCH_BUDGET: usize = 200_000;

/// Finite credit or top (Min wins).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(super) enum Energy {
    Fin(BigInt),
    Top,
}

use Energy::{Fin, Top};

impl Energy {
    fn lift_through(&self, w: &BigInt) -> Energy {
        match self {
            Top => Top,
            Fin(x) => {
                let d = x - w;
                if d.is_negative_or_zero() {
                    Fin(BigInt::zero())
                } else {
                    Fin(d)
                }
            }
        }
    }
}

trait NegOrZero {
    fn is_negative_or_zero(&self) -> bool;
}

impl NegOrZero for BigInt {
    fn is_negative_or_zero(&self) -> bool {
        *self <= BigInt::zero()
    }
}

pub(super) struct EnergySolve {
    pub winner: Vec<Player>,
    pub max_strategy: Vec<Option<usize>>,
    pub min_strategy: Vec<Option<usize>>,
}

pub(super) fn solve(g: &WGraph, engine: Engine) -> Result<EnergySolve> {
    let f = match engine {
        Engine::StrategyImprovement => {
            let (f, tau) = min_strategy_iteration(g)?;
            return Ok(finish(g, &f, Some(tau)));
        }
        Engine::ValueIteration => value_iteration(g)?,
    };
    Ok(finish(g, &f, None))
}

fn finish(g: &WGraph, f: &[Energy], tau: Option<Vec<usize>>) -> EnergySolve {
    let n = g.n();
    let mut winner = Vec::with_capacity(n);
    let mut max_strategy = vec![None; n];
    let mut min_strategy = vec![None; n];
    for v in 0..n {
        winner.push(if f[v] == Top { Player::Two } else { Player::One });
    }
    for v in 0..n {
        match g.owner[v] {
            Owner::Player1 => {
                // lowest-index edge achieving the measure; any edge on Top.
                let mut best: Option<(Energy, usize)> = None;
                for &e in g.out(v) {
                    let cand = f[g.edges[e as usize].1 as usize].lift_through(&g.weights[e as usize]);
                    if best.as_ref().map_or(true, |(b, _)| cand < *b) {
                        best = Some((cand, e as usize));
                    }
                }
                max_strategy[v] = best.map(|(_, e)| e);
            }
            Owner::Player2 => {
                min_strategy[v] = match &tau {
                    Some(t) => Some(t[v]),
                    // highest lift; used only by the mirrored extraction path
                    None => {
                        let mut best: Option<(Energy, usize)> = None;
                        for &e in g.out(v) {
                            let cand =
                                f[g.edges[e as usize].1 as usize].lift_through(&g.weights[e as usize]);
                            if best.as_ref().map_or(true, |(b, _)| cand > *b) {
                                best = Some((cand, e as usize));
                            }
                        }
                        best.map(|(_, e)| e)
                    }
                };
            }
        }
    }
    EnergySolve {
        winner,
        max_strategy,
        min_strategy,
    }
}

// ---------------------------------------------------------------------------
// Strategy improvement over Min's positional strategies
// ---------------------------------------------------------------------------

fn min_strategy_iteration(g: &WGraph) -> Result<(Vec<Energy>, Vec<usize>)> {
    let n = g.n();
    let mut tau: Vec<usize> = (0..n).map(|v| g.out(v)[0] as usize).collect();
    let mut f = evaluate(g, &tau)?;
    for _round in 0..SWITCH_BUDGET {
        let mut changed = false;
        for v in 0..n {
            if g.owner[v] != Owner::Player2 {
                continue;
            }
            let mut best = f[g.edges[tau[v]].1 as usize].lift_through(&g.weights[tau[v]]);
            let mut best_e = tau[v];
            for &e in g.out(v) {
                let e = e as usize;
                if e == tau[v] {
                    continue;
                }
                let cand = f[g.edges[e].1 as usize].lift_through(&g.weights[e]);
                if cand > best {
                    best = cand;
                    best_e = e;
                }
            }
            if best_e != tau[v] && best > f[v] {
                tau[v] = best_e;
                changed = true;
            }
        }
        if !changed {
            return Ok((f, tau));
        }
        let nf = evaluate(g, &tau)?;
        debug_assert!(
            nf.iter().zip(&f).all(|(a, b)| a >= b),
            "measure must ascend across improvement steps"
        );
        f = nf;
    }
    Err(Error::Internal(
        "strategy improvement exceeded its switch budget".into(),
    ))
}

/// Edge lists of the game left after committing Min to `tau`: Max keeps all
/// her edges, every Min vertex keeps exactly the committed one.
struct Committed {
    start: Vec<u32>,
    edge: Vec<u32>,
}

impl Committed {
    fn new(g: &WGraph, tau: &[usize]) -> Self {
        let n = g.n();
        let mut start = Vec::with_capacity(n + 1);
        let mut edge = Vec::new();
        start.push(0);
        for v in 0..n {
            match g.owner[v] {
                Owner::Player1 => edge.extend_from_slice(g.out(v)),
                Owner::Player2 => edge.push(tau[v] as u32),
            }
            start.push(edge.len() as u32);
        }
        Committed { start, edge }
    }

    fn out(&self, v: usize) -> &[u32] {
        &self.edge[self.start[v] as usize..self.start[v + 1] as usize]
    }
}

/// Exact least progress measure of the one-player game left after committing
/// Min to `tau`: Max picks among her edges, Min vertices keep one edge.
fn evaluate(g: &WGraph, tau: &[usize]) -> Result<Vec<Energy>> {
    let n = g.n();
    let avail = Committed::new(g, tau);
    let surv = survivable(g, &avail);

    // Dip relaxation on the survivable part: ascending Gauss-Seidel over
    // b(v) = min over edges into survivable targets of (b(t) - w)^+.
    let mut b: Vec<BigInt> = vec![BigInt::zero(); n];
    let order: Vec<usize> = (0..n).filter(|&v| surv[v]).collect();
    let mut passes = 0usize;
    loop {
        passes += 1;
        if passes > PASS_BUDGET {
            return Err(Error::Internal(
                "dip relaxation exceeded its pass budget".into(),
            ));
        }
        let mut changed = false;
        for &v in &order {
            let mut best: Option<BigInt> = None;
            for &e in avail.out(v) {
                let (_, t) = g.edges[e as usize];
                if !surv[t as usize] {
                    continue;
                }
                let mut cand = &b[t as usize] - &g.weights[e as usize];
                if cand.is_negative_or_zero() {
                    cand = BigInt::zero();
                }
                if best.as_ref().map_or(true, |x| cand < *x) {
                    best = Some(cand);
                }
            }
            let nb = best.expect("survivable vertex has a survivable successor");
            if nb > b[v] {
                b[v] = nb;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    Ok((0..n)
        .map(|v| if surv[v] { Fin(b[v].clone()) } else { Top })
        .collect())
}

/// Marks the vertices from which a cycle of total >= 0 is reachable in the
/// committed game. Scaling w -> (n+1)w + 1 turns exactly those cycles into
/// strictly positive ones, whose presence keeps the longest-walk relaxation
/// improving past round n; the updates between rounds n+1 and 2n+1 catch a
/// vertex of every such cycle, and a reverse closure collects the rest.
fn survivable(g: &WGraph, avail: &Committed) -> Vec<bool> {
    let n = g.n();
    let scale = BigInt::from(n as u64 + 1);
    let scaled: Vec<BigInt> = g.weights.iter().map(|w| &scale * w + BigInt::one()).collect();
    let mut d: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut dirty = vec![false; n];
    let mut any_dirty = false;
    for round in 0..=2 * n + 1 {
        let mut changed = false;
        for v in 0..n {
            for &e in avail.out(v) {
                let t = g.edges[e as usize].1 as usize;
                let cand = &d[t] + &scaled[e as usize];
                if cand > d[v] {
                    d[v] = cand;
                    changed = true;
                    if round > n {
                        dirty[v] = true;
                        any_dirty = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    if !any_dirty {
        return vec![false; n];
    }
    // Close dirty under reverse reachability along available edges.
    let mut mark = dirty;
    loop {
        let mut changed = false;
        for v in 0..n {
            if mark[v] {
                continue;
            }
            if avail
                .out(v)
                .iter()
                .any(|&e| mark[g.edges[e as usize].1 as usize])
            {
                mark[v] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    mark
}

// ---------------------------------------------------------------------------
// Progress-measure value iteration (reference engine)
// ---------------------------------------------------------------------------

fn value_iteration(g: &WGraph) -> Result<Vec<Energy>> {
    let n = g.n();
    let top = BigInt::from(n as u64) * g.max_abs_weight();
    let mut f: Vec<Energy> = vec![Fin(BigInt::zero()); n];
    let mut passes = 0usize;
    loop {
        passes += 1;
        if passes > PASS_BUDGET {
            return Err(Error::Internal(
                "value iteration exceeded its pass budget".into(),
            ));
        }
        let mut changed = false;
        for v in 0..n {
            let mut acc: Option<Energy> = None;
            for &e in g.out(v) {
                let cand = f[g.edges[e as usize].1 as usize].lift_through(&g.weights[e as usize]);
                acc = Some(match (acc, g.owner[v]) {
                    (None, _) => cand,
                    (Some(a), Owner::Player1) => a.min(cand),
                    (Some(a), Owner::Player2) => a.max(cand),
                });
            }
            let mut nf = acc.expect("out-degree at least one");
            if let Fin(x) = &nf {
                if *x > top {
                    nf = Top;
                }
            }
            if nf > f[v] {
                f[v] = nf;
                changed = true;
            }
        }
        if !changed {
            return Ok(f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wg(owner: Vec<Owner>, edges: Vec<(u32, u32, i64)>) -> WGraph {
        let (e, w): (Vec<_>, Vec<_>) = edges
            .into_iter()
            .map(|(a, b, w)| ((a, b), BigInt::from(w)))
            .unzip();
        WGraph::new(owner, e, w).unwrap()
    }

    #[test]
    fn single_negative_relay_cycle_is_min_win() {
        // Player-1 vertex with a relay: the only cycle has weight -1.
        let g = wg(
            vec![Owner::Player1, Owner::Player2],
            vec![(0, 1, -1), (1, 0, 0)],
        );
        for engine in [Engine::StrategyImprovement, Engine::ValueIteration] {
            let f = solve(&g, engine).unwrap();
            assert_eq!(f.winner, vec![Player::Two, Player::Two]);
        }
    }

    #[test]
    fn zero_cycle_is_max_win() {
        let g = wg(
            vec![Owner::Player1, Owner::Player2],
            vec![(0, 1, 5), (1, 0, -5)],
        );
        for engine in [Engine::StrategyImprovement, Engine::ValueIteration] {
            let f = solve(&g, engine).unwrap();
            assert_eq!(f.winner, vec![Player::One, Player::One]);
        }
    }

    #[test]
    fn min_chooses_the_negative_branch() {
        // Min vertex 1 picks between returning with +1 or -1.
        let g = wg(
            vec![Owner::Player1, Owner::Player2],
            vec![(0, 1, 0), (1, 0, 1), (1, 0, -1)],
        );
        for engine in [Engine::StrategyImprovement, Engine::ValueIteration] {
            let f = solve(&g, engine).unwrap();
            assert_eq!(f.winner, vec![Player::Two, Player::Two]);
        }
    }

    #[test]
    fn max_escapes_through_her_choice() {
        // Max at 0 can pick the +1 relay instead of the -1 relay.
        let g = wg(
            vec![Owner::Player1, Owner::Player2, Owner::Player2],
            vec![(0, 1, -1), (1, 0, 0), (0, 2, 1), (2, 0, 0)],
        );
        for engine in [Engine::StrategyImprovement, Engine::ValueIteration] {
            let f = solve(&g, engine).unwrap();
            assert_eq!(f.winner, vec![Player::One; 3]);
            assert_eq!(f.max_strategy[0], Some(2));
        }
    }

    #[test]
    fn huge_weights_stay_cheap_for_strategy_improvement() {
        // weights around 1e30 would deadlock a naive lifting loop
        let big: BigInt = BigInt::from(10u8).pow(30);
        let owner = vec![Owner::Player1, Owner::Player2, Owner::Player1, Owner::Player2];
        let edges = vec![(0u32, 1u32), (1, 0), (0, 3), (3, 2), (2, 1), (1, 2), (2, 3)];
        let weights = vec![
            -&big - 1,
            big.clone(),
            BigInt::from(-2),
            BigInt::from(1),
            BigInt::from(1),
            -&big * 2,
            big.clone(),
        ];
        let g = WGraph::new(owner, edges, weights).unwrap();
        let f = solve(&g, Engine::StrategyImprovement).unwrap();
        assert_eq!(f.winner.len(), 4);
    }
}
