//! Paths, lassos and stack-based cycle decompositions.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Componentwise sum of the edge weights along a path. The path must be
/// omega-free; extended paths have to be instantiated first.
pub fn path_weight(g: &Graph, path: &[usize]) -> Result<Vec<i64>> {
    let mut acc = vec![0i64; g.dim];
    for &e in path {
        let w = g.edges()[e].int_weight()?;
        for (a, b) in acc.iter_mut().zip(&w) {
            *a = a
                .checked_add(*b)
                .ok_or(Error::Overflow("summing path weights"))?;
        }
    }
    Ok(acc)
}

/// A finite prefix followed by a repeated cycle: the finite representation of
/// an ultimately periodic play.
#[derive(Debug, Clone)]
pub struct Lasso {
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl Lasso {
    /// Builds a lasso from edge sequences, checking connectivity and that the
    /// cycle closes where the prefix ends.
    pub fn new(g: &Graph, prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Infeasible("lasso cycle must be nonempty".into()));
        }
        let connected = |seq: &[usize]| -> bool {
            seq.windows(2)
                .all(|w| g.edges()[w[0]].dst == g.edges()[w[1]].src)
        };
        if !connected(&prefix) || !connected(&cycle) {
            return Err(Error::Infeasible("lasso edges are not connected".into()));
        }
        let cycle_start = g.edges()[cycle[0]].src;
        let cycle_end = g.edges()[*cycle.last().unwrap()].dst;
        if cycle_start != cycle_end {
            return Err(Error::Infeasible("lasso cycle does not close".into()));
        }
        if let Some(&last) = prefix.last() {
            if g.edges()[last].dst != cycle_start {
                return Err(Error::Infeasible(
                    "lasso prefix does not end at the cycle start".into(),
                ));
            }
        }
        Ok(Lasso { prefix, cycle })
    }

    /// Resolves a vertex-id lasso using weight determinacy: at most one edge
    /// exists per ordered vertex pair.
    pub fn from_vertex_ids(g: &Graph, prefix: &[&str], cycle: &[&str]) -> Result<Self> {
        let resolve = |ids: &[&str]| -> Result<Vec<usize>> {
            let mut edges = Vec::new();
            for w in ids.windows(2) {
                let a = g
                    .vertex_index(w[0])
                    .ok_or_else(|| Error::UnknownVertex(w[0].into()))?;
                let b = g
                    .vertex_index(w[1])
                    .ok_or_else(|| Error::UnknownVertex(w[1].into()))?;
                let e = g.edge_between(a, b).ok_or_else(|| {
                    Error::Infeasible(format!("no edge from {} to {}", w[0], w[1]))
                })?;
                edges.push(e);
            }
            Ok(edges)
        };
        // The prefix, if present, must end at the first cycle vertex.
        let mut pfx = prefix.to_vec();
        if !pfx.is_empty() {
            if let Some(first) = cycle.first() {
                if pfx.last() != Some(first) {
                    pfx.push(first);
                }
            }
        }
        Lasso::new(g, resolve(&pfx)?, resolve(cycle)?)
    }

    pub fn cycle_vertices(&self, g: &Graph) -> Vec<usize> {
        self.cycle.iter().map(|&e| g.edges()[e].src).collect()
    }
}

/// One popped simple cycle of a decomposition, with its start and end
/// positions in the decomposed play.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoppedCycle {
    pub vertices: Vec<usize>,
    pub start: usize,
    pub end: usize,
}

/// Result of the stack-based cycle decomposition of a play.
#[derive(Debug, Clone)]
pub struct CycleDecomposition {
    pub pops: Vec<PoppedCycle>,
    pub residual: Vec<usize>,
}

/// Stack simulation: pushes the play's vertices one by one; whenever the
/// pushed vertex is a pivot that already occurs on the stack, the formed
/// cycle is popped and the vertex pushed back. With pivots = all vertices
/// this is the plain decomposition; with pivots = Player-1 vertices it is the
/// V1 variant, whose residual stays below twice the pivot count.
pub fn cycle_decompose<F>(play: &[usize], is_pivot: F) -> CycleDecomposition
where
    F: Fn(usize) -> bool,
{
    // stack holds (vertex, position in play)
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut pops = Vec::new();
    for (pos, &v) in play.iter().enumerate() {
        if is_pivot(v) {
            if let Some(at) = stack.iter().rposition(|&(u, _)| u == v) {
                let tail: Vec<(usize, usize)> = stack.drain(at..).collect();
                let mut vertices: Vec<usize> = tail.iter().map(|&(u, _)| u).collect();
                vertices.push(v);
                pops.push(PoppedCycle {
                    vertices,
                    start: tail[0].1,
                    end: pos,
                });
            }
        }
        stack.push((v, pos));
    }
    CycleDecomposition {
        pops,
        residual: stack.into_iter().map(|(v, _)| v).collect(),
    }
}

/// Edge list of a decomposed cycle inside a graph, resolved by determinacy.
pub fn cycle_edges(g: &Graph, cycle_vertices: &[usize]) -> Vec<usize> {
    cycle_vertices
        .windows(2)
        .map(|w| g.edge_between(w[0], w[1]).expect("cycle edge must exist"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_game;
    use crate::test_assets;

    fn fig1() -> Graph {
        parse_game(test_assets::FIG1).unwrap()
    }

    fn verts(g: &Graph, ids: &[&str]) -> Vec<usize> {
        ids.iter().map(|id| g.vertex_index(id).unwrap()).collect()
    }

    #[test]
    fn path_weight_fig1_cycles() {
        let g = fig1();
        let cyan = cycle_edges(&g, &verts(&g, &["vL", "A", "vR", "B", "vL"]));
        assert_eq!(path_weight(&g, &cyan).unwrap(), vec![-1, -1]);
        let blue = cycle_edges(&g, &verts(&g, &["vL", "L1", "vL"]));
        assert_eq!(path_weight(&g, &blue).unwrap(), vec![1, -1]);
        assert_eq!(path_weight(&g, &[]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn path_weight_rejects_omega() {
        let g = parse_game(
            "game x\ndim 1\nextended\nvertex a owner=1\nvertex b owner=2\n\
             edge a b omega\nedge b a 1\n",
        )
        .unwrap();
        assert!(path_weight(&g, &[0]).is_err());
    }

    #[test]
    fn decompose_all_pivots_fig1() {
        let g = fig1();
        let play = verts(&g, &["vL", "A", "vR", "B", "vL", "L1", "vL"]);
        let dec = cycle_decompose(&play, |_| true);
        assert_eq!(dec.pops.len(), 2);
        assert_eq!(dec.pops[0].vertices, verts(&g, &["vL", "A", "vR", "B", "vL"]));
        assert_eq!(dec.pops[0].start, 0);
        assert_eq!(dec.pops[0].end, 4);
        assert_eq!(dec.pops[1].vertices, verts(&g, &["vL", "L1", "vL"]));
        assert_eq!(dec.residual, verts(&g, &["vL"]));
    }

    #[test]
    fn decompose_single_vertex() {
        let dec = cycle_decompose(&[3], |_| true);
        assert!(dec.pops.is_empty());
        assert_eq!(dec.residual, vec![3]);
    }

    #[test]
    fn decompose_v1_pivots() {
        let g = fig1();
        let play = verts(&g, &["vL", "A", "vR", "R1", "vR"]);
        let p1: Vec<usize> = g.player_vertices(crate::graph::Owner::Player1).collect();
        let dec = cycle_decompose(&play, |v| p1.contains(&v));
        assert_eq!(dec.pops.len(), 1);
        assert_eq!(dec.pops[0].vertices, verts(&g, &["vR", "R1", "vR"]));
        assert_eq!(dec.residual, verts(&g, &["vL", "A", "vR"]));
    }

    #[test]
    fn lasso_validation() {
        let g = fig1();
        let l = Lasso::from_vertex_ids(&g, &[], &["vL", "L1", "vL"]).unwrap();
        assert_eq!(l.cycle.len(), 2);
        assert!(Lasso::from_vertex_ids(&g, &[], &["vL", "A", "vR"]).is_err());
        let l = Lasso::from_vertex_ids(&g, &["vL", "A", "vR"], &["vR", "R1", "vR"]).unwrap();
        assert_eq!(l.prefix.len(), 2);
    }
}
