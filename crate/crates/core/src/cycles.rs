//! Enumeration of simple cycles in small graphs.
//!
//! Used by the brute-force oracles and by certificate checks; sizes stay at
//! desk scale, so a plain DFS with a least-root discipline suffices.

/// Enumerates all simple cycles of the directed graph given as adjacency
/// lists, as vertex sequences `v0, v1, ..., v0`. Each cycle is reported once,
/// rooted at its least vertex.
pub fn simple_cycles(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for root in 0..n {
        path.push(root);
        on_path[root] = true;
        dfs(root, root, adj, &mut path, &mut on_path, &mut out);
        on_path[root] = false;
        path.pop();
    }
    out
}

fn dfs(
    root: usize,
    v: usize,
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    for &w in &adj[v] {
        if w == root {
            let mut cycle = path.clone();
            cycle.push(root);
            out.push(cycle);
        } else if w > root && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            dfs(root, w, adj, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Adjacency lists of a [`crate::graph::Graph`].
pub fn graph_adjacency(g: &crate::graph::Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| g.out_edges(v).iter().map(|&e| g.edges()[e].dst).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_all_cycles_of_fig1() {
        let g = crate::graph::parse_game(crate::test_assets::FIG1).unwrap();
        let cycles = simple_cycles(&graph_adjacency(&g));
        // cyan 4-cycle, blue loop, violet loop
        assert_eq!(cycles.len(), 3);
        let lengths: Vec<usize> = {
            let mut l: Vec<usize> = cycles.iter().map(|c| c.len() - 1).collect();
            l.sort();
            l
        };
        assert_eq!(lengths, vec![2, 2, 4]);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // 0->1->2->0 and 0->3->4->0
        let adj = vec![vec![1, 3], vec![2], vec![0], vec![4], vec![0]];
        let cycles = simple_cycles(&adj);
        assert_eq!(cycles.len(), 2);
    }
}
