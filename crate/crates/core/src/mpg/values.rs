//! Exact mean-payoff values by threshold bisection.
//!
//! Values are rationals with denominator at most |V|, counted per round: one
//! move plus the reply forced by strict alternation. (The worked two-loop
//! example rates its +6/0 loop at 6, not 3, because the relay half of the
//! round is bookkeeping.) Each candidate threshold p/q is decided by a
//! threshold solve on the graph reweighted to q*w - p, and vertices are
//! split recursively until their candidate interval collapses.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{solve_threshold, Engine, WGraph};
use crate::error::Result;
use crate::graph::Player;

/// Exact per-vertex values as reduced fractions `(numerator, denominator)`.
pub fn compute_values(g: &WGraph, engine: Engine) -> Result<Vec<(BigInt, u64)>> {
    let n = g.n();
    let w = g.max_abs_weight();

    // Candidate values: all p/q with 1 <= q <= n and |p/q| <= ||E||,
    // deduplicated and sorted. Kept exact by cross-multiplied comparisons.
    let mut cands: Vec<(BigInt, u64)> = Vec::new();
    for q in 1..=n as u64 {
        let bound = &w * BigInt::from(q);
        let mut p = -bound.clone();
        while p <= bound {
            cands.push((p.clone(), q));
            p += 1;
        }
    }
    cands.sort_by(|a, b| cmp_frac(a, b));
    cands.dedup_by(|a, b| cmp_frac(a, b).is_eq());

    let mut values: Vec<Option<(BigInt, u64)>> = vec![None; n];
    let all: Vec<usize> = (0..n).collect();
    split(g, engine, &cands, &all, &mut values)?;
    Ok(values
        .into_iter()
        .map(|v| {
            let (p, q) = v.expect("every vertex ends with a value");
            reduce((p * 2, q))
        })
        .collect())
}

fn cmp_frac(a: &(BigInt, u64), b: &(BigInt, u64)) -> std::cmp::Ordering {
    (&a.0 * BigInt::from(b.1)).cmp(&(&b.0 * BigInt::from(a.1)))
}

fn reduce((p, q): (BigInt, u64)) -> (BigInt, u64) {
    use num_integer::Integer;
    if p.is_zero() {
        return (p, 1);
    }
    let g = p.abs().to_biguint().unwrap().gcd(&q.into());
    let g = BigInt::from(g);
    let qb = BigInt::from(q) / &g;
    (
        p / g,
        u64::try_from(&qb).expect("reduced denominator fits"),
    )
}

/// Recursively narrows the candidate range shared by a group of vertices.
/// The invariant: every vertex in `group` has value >= cands[lo-part] bound
/// established by earlier splits.
fn split(
    g: &WGraph,
    engine: Engine,
    cands: &[(BigInt, u64)],
    group: &[usize],
    values: &mut Vec<Option<(BigInt, u64)>>,
) -> Result<()> {
    if group.is_empty() {
        return Ok(());
    }
    if cands.len() == 1 {
        for &v in group {
            values[v] = Some(cands[0].clone());
        }
        return Ok(());
    }
    let mid = cands.len() / 2;
    let (p, q) = &cands[mid];
    // value(v) >= p/q  <=>  Max wins the threshold game on q*w - p
    let qb = BigInt::from(*q);
    let weights: Vec<BigInt> = g.weights.iter().map(|w| &qb * w - p).collect();
    let shifted = WGraph::new(g.owner.clone(), g.edges.clone(), weights)?;
    let res = solve_threshold(&shifted, engine)?;
    let (mut lows, mut highs) = (Vec::new(), Vec::new());
    for &v in group {
        if res.winner[v] == Player::One {
            highs.push(v);
        } else {
            lows.push(v);
        }
    }
    split(g, engine, &cands[..mid], &lows, values)?;
    split(g, engine, &cands[mid..], &highs, values)?;
    Ok(())
}
