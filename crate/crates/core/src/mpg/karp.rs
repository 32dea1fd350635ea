//! Minimum (or maximum) cycle mean with an explicit witness cycle.
//!
//! Karp's dynamic program per strongly connected component, with exact
//! arbitrary-precision arithmetic; the witness is recovered by reweighting
//! with the optimal mean and chasing tight edges. Intended for one-player
//! subgraphs at desk scale (the table costs |V|^2 entries per component).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An optimal cycle: total weight, length, and its vertex sequence
/// `v0, ..., v0`. The mean is `total / len`.
#[derive(Debug, Clone)]
pub struct CycleMean {
    pub total: BigInt,
    pub len: usize,
    pub cycle: Vec<usize>,
}

impl CycleMean {
    /// Compares this mean against `p/q` by cross-multiplication.
    pub fn cmp_ratio(&self, p: &BigInt, q: u64) -> std::cmp::Ordering {
        (&self.total * BigInt::from(q)).cmp(&(p * BigInt::from(self.len as u64)))
    }
}

fn cmp_means(a: (&BigInt, usize), b: (&BigInt, usize)) -> std::cmp::Ordering {
    (a.0 * BigInt::from(b.1 as u64)).cmp(&(b.0 * BigInt::from(a.1 as u64)))
}

/// Minimum mean cycle over a weighted digraph given as edge list; set
/// `maximize` for the maximum mean instead. Returns `None` on acyclic input.
pub fn min_cycle_mean(
    n: usize,
    edges: &[(u32, u32)],
    weights: &[BigInt],
    maximize: bool,
) -> Result<Option<CycleMean>> {
    assert_eq!(edges.len(), weights.len());
    let w: Vec<BigInt> = if maximize {
        weights.iter().map(|x| -x).collect()
    } else {
        weights.to_vec()
    };
    let mut best: Option<CycleMean> = None;
    for comp in sccs(n, edges) {
        if let Some(cm) = scc_min_mean(&comp, edges, &w)? {
            if best
                .as_ref()
                .map_or(true, |b| cmp_means((&cm.total, cm.len), (&b.total, b.len)).is_lt())
            {
                best = Some(cm);
            }
        }
    }
    if maximize {
        if let Some(b) = &mut best {
            b.total = -&b.total;
        }
    }
    Ok(best)
}

/// Karp's theorem on one strongly connected component (multi-source variant
/// with all distances zero at level 0).
fn scc_min_mean(comp: &[usize], edges: &[(u32, u32)], w: &[BigInt]) -> Result<Option<CycleMean>> {
    // internal edges only
    let mut index = std::collections::HashMap::new();
    for (i, &v) in comp.iter().enumerate() {
        index.insert(v, i);
    }
    let internal: Vec<(usize, usize, &BigInt)> = edges
        .iter()
        .zip(w)
        .filter_map(|(&(a, b), wt)| {
            let (a, b) = (a as usize, b as usize);
            match (index.get(&a), index.get(&b)) {
                (Some(&ia), Some(&ib)) => Some((ia, ib, wt)),
                _ => None,
            }
        })
        .collect();
    if internal.is_empty() {
        return Ok(None);
    }
    let k = comp.len();
    // F[t][v] = min weight over walks of exactly t edges ending at v.
    let mut f: Vec<Vec<Option<BigInt>>> = vec![vec![None; k]; k + 1];
    for v in 0..k {
        f[0][v] = Some(BigInt::zero());
    }
    for t in 1..=k {
        for &(a, b, wt) in &internal {
            if let Some(da) = &f[t - 1][a] {
                let cand = da + wt;
                if f[t][b].as_ref().map_or(true, |x| cand < *x) {
                    f[t][b] = Some(cand);
                }
            }
        }
    }
    // mu = min_v max_t (F[k][v] - F[t][v]) / (k - t)
    let mut mu: Option<(BigInt, usize)> = None;
    for v in 0..k {
        let Some(fk) = &f[k][v] else { continue };
        let mut worst: Option<(BigInt, usize)> = None;
        for t in 0..k {
            let Some(ft) = &f[t][v] else { continue };
            let cand = (fk - ft, k - t);
            if worst
                .as_ref()
                .map_or(true, |x| cmp_means((&cand.0, cand.1), (&x.0, x.1)).is_gt())
            {
                worst = Some(cand);
            }
        }
        let worst = worst.expect("level-0 entry always present");
        if mu
            .as_ref()
            .map_or(true, |x| cmp_means((&worst.0, worst.1), (&x.0, x.1)).is_lt())
        {
            mu = Some(worst);
        }
    }
    let (p, q) = mu.expect("component with an edge has a cycle");

    // Witness: reweight by q*w - p; all internal cycles become >= 0 and the
    // critical ones exactly 0. Shortest-walk potentials make critical edges
    // tight; any cycle among tight edges has mean exactly p/q.
    let qb = BigInt::from(q as u64);
    let rw: Vec<(usize, usize, BigInt)> = internal
        .iter()
        .map(|&(a, b, wt)| (a, b, &qb * wt - &p))
        .collect();
    let mut pot: Vec<BigInt> = vec![BigInt::zero(); k];
    for _ in 0..k {
        let mut changed = false;
        for (a, b, wt) in &rw {
            let cand = &pot[*a] + wt;
            if cand < pot[*b] {
                pot[*b] = cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut tight: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (a, b, wt) in &rw {
        if &pot[*a] + wt == pot[*b] {
            tight[*a].push(*b);
        }
    }
    let cycle_local = find_cycle(&tight)
        .ok_or_else(|| Error::Internal("no tight cycle under optimal reweighting".into()))?;
    let cycle: Vec<usize> = cycle_local.iter().map(|&i| comp[i]).collect();
    let mut total = BigInt::zero();
    for pair in cycle_local.windows(2) {
        let wt = internal
            .iter()
            .filter(|&&(a, b, _)| a == pair[0] && b == pair[1])
            .map(|&(_, _, w)| w)
            .min()
            .expect("tight edge exists in component");
        total += wt;
    }
    Ok(Some(CycleMean {
        total,
        len: cycle.len() - 1,
        cycle,
    }))
}

/// Any cycle in a digraph given by adjacency lists, as `v0..v0`.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let t = adj[v][*i];
                *i += 1;
                match state[t] {
                    0 => {
                        state[t] = 1;
                        parent_edge[t] = Some(v);
                        stack.push((t, 0));
                    }
                    1 => {
                        // back edge v -> t closes a cycle; walk tree parents
                        // from v up to t, then flip into forward order
                        let mut cyc = vec![t];
                        let mut cur = v;
                        while cur != t {
                            cyc.push(cur);
                            cur = parent_edge[cur].expect("path back to cycle head");
                        }
                        cyc.push(t);
                        cyc.reverse();
                        return Some(cyc);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Tarjan's strongly connected components.
pub fn sccs(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a as usize].push(b as usize);
    }
    let mut idx = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on = vec![false; n];
    let mut stack = Vec::new();
    let mut next = 0usize;
    let mut out = Vec::new();
    // iterative Tarjan
    for root in 0..n {
        if idx[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei == 0 {
                idx[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on[v] = true;
            }
            if *ei < adj[v].len() {
                let t = adj[v][*ei];
                *ei += 1;
                if idx[t] == usize::MAX {
                    call.push((t, 0));
                } else if on[t] {
                    low[v] = low[v].min(idx[t]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == idx[v] {
                    let mut comp = Vec::new();
                    while let Some(u) = stack.pop() {
                        on[u] = false;
                        comp.push(u);
                        if u == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
    }
    out
}
