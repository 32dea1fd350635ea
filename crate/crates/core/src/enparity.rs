//! Multi-dimensional energy parity games.
//!
//! Priorities are eliminated first: every distinct even priority gets a
//! fresh dimension that is decremented on entering a vertex of that priority
//! and replenished by omega on entering a vertex with a smaller odd priority
//! (through a fresh Player-1/Player-2 pair when the edge leaves a Player-2
//! vertex). Omega weights and the energy objective are then compiled away
//! into a bounding game by discharge and replenishment self-loops. Arbitrary
//! initial credit solving runs this chain; given initial credit ships only
//! as a capped finite-game oracle, whose Player-1 answers are sound.

use std::collections::BTreeSet;
use std::collections::HashMap;

use crate::bounding::{self, BoundingSolve};
use crate::error::{Error, Result};
use crate::graph::{Ext, Graph, Owner, Player, RawGame, Vertex};
use crate::mpg::Engine;
use crate::parity::ParityArena;
use crate::phs::Limits;
use crate::walks::Lasso;

/// Size accounting and correspondence for one reduction step.
#[derive(Debug, Clone)]
pub struct ReductionCertificate {
    pub kind: &'static str,
    pub source_vertices: usize,
    pub source_edges: usize,
    pub source_norm: u64,
    pub source_dim: usize,
    pub target_vertices: usize,
    pub target_edges: usize,
    pub target_norm: u64,
    pub target_dim: usize,
    /// target vertex index -> source vertex index, for surviving originals
    pub vertex_map: Vec<Option<usize>>,
    /// target edge index -> source edge index it descends from
    pub edge_origin: Vec<Option<usize>>,
}

impl ReductionCertificate {
    fn capture(
        kind: &'static str,
        src: &Graph,
        dst: &Graph,
        vertex_map: Vec<Option<usize>>,
        edge_origin: Vec<Option<usize>>,
    ) -> Self {
        ReductionCertificate {
            kind,
            source_vertices: src.n(),
            source_edges: src.edges().len(),
            source_norm: src.norm(),
            source_dim: src.dim,
            target_vertices: dst.n(),
            target_edges: dst.edges().len(),
            target_norm: dst.norm(),
            target_dim: dst.dim,
            vertex_map,
            edge_origin,
        }
    }
}

fn fresh_id(base: String, used: &mut std::collections::HashSet<String>) -> String {
    let mut id = base;
    while !used.insert(id.clone()) {
        id.push('_');
    }
    id
}

/// Eliminates priorities: output is an extended energy game of dimension
/// d + p, p the number of distinct even priorities. Entering a vertex of
/// even priority q decrements q's dimension; entering a vertex of odd
/// priority r replenishes (by omega) the dimensions of all even q > r.
pub fn reduce_parity_to_extended(g: &Graph) -> Result<(Graph, ReductionCertificate)> {
    if g.extended {
        return Err(Error::OmegaNotAllowed);
    }
    for v in g.vertices() {
        if v.priority.is_none() {
            return Err(Error::MissingPriority(v.id.clone()));
        }
    }
    let evens: Vec<u32> = g
        .vertices()
        .iter()
        .filter_map(|v| v.priority.filter(|p| p % 2 == 0))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let p = evens.len();
    let dim = g.dim + p;
    let even_slot: HashMap<u32, usize> = evens
        .iter()
        .enumerate()
        .map(|(i, &q)| (q, g.dim + i))
        .collect();

    let mut used: std::collections::HashSet<String> =
        g.vertices().iter().map(|v| v.id.clone()).collect();
    let mut vertices: Vec<Vertex> = g
        .vertices()
        .iter()
        .map(|v| Vertex {
            id: v.id.clone(),
            owner: v.owner,
            priority: None,
        })
        .collect();
    let mut vertex_map: Vec<Option<usize>> = (0..g.n()).map(Some).collect();
    let mut edges: Vec<(String, String, Vec<Ext>)> = Vec::new();
    let mut edge_origin: Vec<Option<usize>> = Vec::new();

    // shared replenishment pair per odd-priority vertex entered from Player 2
    let mut pair_of: HashMap<usize, (String, String)> = HashMap::new();

    for (ei, e) in g.edges().iter().enumerate() {
        let target = g.vertex(e.dst);
        let tprio = target.priority.expect("checked above");
        let mut ext: Vec<Ext> = e.weight.clone();
        ext.resize(dim, Ext::Fin(0));
        let omega_slots: Vec<usize> = if tprio % 2 == 1 {
            evens
                .iter()
                .filter(|&&q| q > tprio)
                .map(|q| even_slot[q])
                .collect()
        } else {
            ext[even_slot[&tprio]] = Ext::Fin(-1);
            Vec::new()
        };
        let src_id = g.vertex(e.src).id.clone();
        let dst_id = target.id.clone();
        if omega_slots.is_empty() {
            edges.push((src_id, dst_id, ext));
            edge_origin.push(Some(ei));
        } else if g.vertex(e.src).owner == Owner::Player1 {
            for &s in &omega_slots {
                ext[s] = Ext::Omega;
            }
            edges.push((src_id, dst_id, ext));
            edge_origin.push(Some(ei));
        } else {
            // route through the target's replenishment pair, created on
            // first use together with its two wiring edges
            let grant = match pair_of.get(&e.dst) {
                Some((grant, _)) => grant.clone(),
                None => {
                    let grant = fresh_id(format!("{dst_id}__grant"), &mut used);
                    let relay = fresh_id(format!("{dst_id}__relay"), &mut used);
                    vertices.push(Vertex {
                        id: grant.clone(),
                        owner: Owner::Player1,
                        priority: None,
                    });
                    vertex_map.push(None);
                    vertices.push(Vertex {
                        id: relay.clone(),
                        owner: Owner::Player2,
                        priority: None,
                    });
                    vertex_map.push(None);
                    let mut gw = vec![Ext::Fin(0); dim];
                    for &s in &omega_slots {
                        gw[s] = Ext::Omega;
                    }
                    edges.push((grant.clone(), relay.clone(), gw));
                    edge_origin.push(None);
                    edges.push((relay.clone(), dst_id.clone(), vec![Ext::Fin(0); dim]));
                    edge_origin.push(None);
                    pair_of.insert(e.dst, (grant.clone(), relay));
                    grant
                }
            };
            edges.push((src_id, grant, ext));
            edge_origin.push(Some(ei));
        }
    }

    let raw = RawGame {
        name: format!("{}-extended", g.name),
        dim,
        extended: p > 0 || g.extended,
        vertices,
        edges,
    };
    let out = Graph::from_raw(raw)?;
    let cert = ReductionCertificate::capture("priority-elimination", g, &out, vertex_map, edge_origin);
    Ok((out, cert))
}

/// Compiles an extended energy game (arbitrary credit) into a bounding game
/// of the same dimension: every original Player-1 vertex gets a discharge
/// self-loop per coordinate, and every omega edge is rerouted through a
/// fresh Player-1 vertex with replenishment self-loops for the omega slots.
pub fn reduce_extended_to_bounding(g: &Graph) -> Result<(Graph, ReductionCertificate)> {
    let dim = g.dim;
    let mut used: std::collections::HashSet<String> =
        g.vertices().iter().map(|v| v.id.clone()).collect();
    let mut vertices: Vec<Vertex> = g
        .vertices()
        .iter()
        .map(|v| Vertex {
            id: v.id.clone(),
            owner: v.owner,
            priority: None,
        })
        .collect();
    let mut vertex_map: Vec<Option<usize>> = (0..g.n()).map(Some).collect();
    let mut edges: Vec<(String, String, Vec<Ext>)> = Vec::new();
    let mut edge_origin: Vec<Option<usize>> = Vec::new();

    let unit = |i: usize, sign: i64| -> Vec<Ext> {
        let mut w = vec![Ext::Fin(0); dim];
        w[i] = Ext::Fin(sign);
        w
    };

    // discharge loops at original Player-1 vertices
    for v in g.vertices() {
        if v.owner != Owner::Player1 {
            continue;
        }
        for i in 0..dim {
            let dump = fresh_id(format!("{}__dec{}", v.id, i + 1), &mut used);
            vertices.push(Vertex {
                id: dump.clone(),
                owner: Owner::Player2,
                priority: None,
            });
            vertex_map.push(None);
            edges.push((v.id.clone(), dump.clone(), unit(i, -1)));
            edge_origin.push(None);
            edges.push((dump, v.id.clone(), vec![Ext::Fin(0); dim]));
            edge_origin.push(None);
        }
    }

    for (ei, e) in g.edges().iter().enumerate() {
        let src_id = g.vertex(e.src).id.clone();
        let dst_id = g.vertex(e.dst).id.clone();
        if !e.has_omega() {
            edges.push((src_id, dst_id, e.weight.clone()));
            edge_origin.push(Some(ei));
            continue;
        }
        let zeroed: Vec<Ext> = e
            .weight
            .iter()
            .map(|w| match w {
                Ext::Omega => Ext::Fin(0),
                x => *x,
            })
            .collect();
        let tag = format!("{src_id}__to__{dst_id}");
        let gate = fresh_id(format!("{tag}__in"), &mut used);
        let pump = fresh_id(format!("{tag}__pump"), &mut used);
        vertices.push(Vertex {
            id: gate.clone(),
            owner: Owner::Player2,
            priority: None,
        });
        vertex_map.push(None);
        vertices.push(Vertex {
            id: pump.clone(),
            owner: Owner::Player1,
            priority: None,
        });
        vertex_map.push(None);
        edges.push((src_id, gate.clone(), zeroed));
        edge_origin.push(Some(ei));
        edges.push((gate, pump.clone(), vec![Ext::Fin(0); dim]));
        edge_origin.push(None);
        edges.push((pump.clone(), dst_id, vec![Ext::Fin(0); dim]));
        edge_origin.push(None);
        for (i, w) in e.weight.iter().enumerate() {
            if matches!(w, Ext::Omega) {
                let inc = fresh_id(format!("{tag}__inc{}", i + 1), &mut used);
                vertices.push(Vertex {
                    id: inc.clone(),
                    owner: Owner::Player2,
                    priority: None,
                });
                vertex_map.push(None);
                edges.push((pump.clone(), inc.clone(), unit(i, 1)));
                edge_origin.push(None);
                edges.push((inc, pump.clone(), vec![Ext::Fin(0); dim]));
                edge_origin.push(None);
            }
        }
    }

    let raw = RawGame {
        name: format!("{}-bounding", g.name),
        dim,
        extended: false,
        vertices,
        edges,
    };
    let out = Graph::from_raw(raw)?;
    let cert = ReductionCertificate::capture("omega-elimination", g, &out, vertex_map, edge_origin);
    Ok((out, cert))
}

/// Full arbitrary-initial-credit solve: winners per original vertex and the
/// projected positional Player-2 strategy on original edges.
#[derive(Debug, Clone)]
pub struct ArbCreditSolve {
    pub winners: Vec<Player>,
    pub p1_confirmed: bool,
    pub p2_strategy: Vec<Option<usize>>,
    pub certificates: Vec<ReductionCertificate>,
    pub extended: Option<Graph>,
    pub bounding_input: Graph,
    pub bounding: BoundingSolve,
}

/// Player 1 wins for some credit iff she wins the constructed bounding game.
/// Priorities are optional: absent priorities mean a pure energy game.
pub fn solve_arbitrary_credit(
    g: &Graph,
    hs_bound: Option<u64>,
    engine: Engine,
    limits: Limits,
) -> Result<ArbCreditSolve> {
    let any_prio = g.vertices().iter().any(|v| v.priority.is_some());
    let mut certificates = Vec::new();
    let (g1, extended) = if any_prio {
        let (g1, cert) = reduce_parity_to_extended(g)?;
        certificates.push(cert);
        (g1.clone(), Some(g1))
    } else {
        (g.clone(), None)
    };
    let (g2, cert2) = reduce_extended_to_bounding(&g1)?;
    certificates.push(cert2);
    let bnd = bounding::solve(&g2, hs_bound, engine, limits)?;

    // originals persist through both steps, matched by id
    let mut winners = Vec::with_capacity(g.n());
    let mut p2_strategy = vec![None; g.n()];
    for (v, vert) in g.vertices().iter().enumerate() {
        let tv = g2
            .vertex_index(&vert.id)
            .ok_or_else(|| Error::Internal(format!("vertex {} lost in reduction", vert.id)))?;
        winners.push(bnd.winners[tv]);
        if vert.owner == Owner::Player2 {
            if let Some(e2) = bnd.p2_strategy[tv] {
                // walk the edge back through both correspondence maps
                let e1 = certificates.last().unwrap().edge_origin[e2]
                    .ok_or_else(|| Error::Internal("strategy picked a gadget edge".into()))?;
                let e0 = if certificates.len() == 2 {
                    certificates[0].edge_origin[e1].ok_or_else(|| {
                        Error::Internal("strategy picked a gadget edge".into())
                    })?
                } else {
                    e1
                };
                p2_strategy[v] = Some(e0);
            }
        }
    }
    Ok(ArbCreditSolve {
        winners,
        p1_confirmed: bnd.p1_confirmed,
        p2_strategy,
        certificates,
        extended,
        bounding_input: g2,
        bounding: bnd,
    })
}

/// Answer of the capped oracle: Player-1 answers are sound for the real
/// game; Player-2 answers hold only at this cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CappedAnswer {
    Player1,
    Player2AtCap,
}

/// Finite-arena oracle for the given-initial-credit problem: energies clamp
/// upward at `cap` (clamping only hurts Player 1, so her wins are sound) and
/// any negative component loses immediately; the resulting finite parity
/// game is solved exactly. Monotone in credit and cap.
pub fn capped_oracle(
    g: &Graph,
    credit: &[u64],
    cap: u64,
    state_cap: u64,
) -> Result<Vec<CappedAnswer>> {
    if g.extended {
        return Err(Error::OmegaNotAllowed);
    }
    if credit.len() != g.dim {
        return Err(Error::DimensionMismatch {
            expected: g.dim,
            got: credit.len(),
        });
    }
    let n = g.n();
    let d = g.dim;
    let side = cap as u128 + 1;
    let mut states: u128 = n as u128;
    for _ in 0..d {
        states = states.saturating_mul(side);
        if states > state_cap as u128 {
            return Err(Error::CapExceeded {
                what: "capped oracle states",
                needed: states,
                cap: state_cap as u128,
            });
        }
    }
    let states = states as usize + 1; // plus the losing sink
    let sink = states - 1;
    let stride = side as usize;

    let encode = |v: usize, e: &[i64]| -> usize {
        let mut idx = v;
        for &x in e {
            idx = idx * stride + x as usize;
        }
        idx
    };

    let mut owner = vec![Owner::Player1; states];
    let mut priority = vec![0u32; states];
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); states];
    // sink: absorbing, even priority, Player-2 favored
    owner[sink] = Owner::Player2;
    priority[sink] = 0;
    adj[sink].push(sink as u32);

    let mut energy = vec![0i64; d];
    for s in 0..states - 1 {
        let mut rest = s;
        for i in (0..d).rev() {
            energy[i] = (rest % stride) as i64;
            rest /= stride;
        }
        let v = rest;
        owner[s] = g.vertex(v).owner;
        priority[s] = g.vertex(v).priority.unwrap_or(1);
        for &e in g.out_edges(v) {
            let w = g.edges()[e].int_weight()?;
            let mut next = vec![0i64; d];
            let mut dead = false;
            for i in 0..d {
                let x = energy[i] + w[i];
                if x < 0 {
                    dead = true;
                    break;
                }
                next[i] = x.min(cap as i64);
            }
            if dead {
                adj[s].push(sink as u32);
            } else {
                adj[s].push(encode(g.edges()[e].dst, &next) as u32);
            }
        }
    }

    let arena = ParityArena::new(owner, priority, adj);
    let winners = arena.solve();

    let start_energy: Vec<i64> = credit.iter().map(|&c| (c.min(cap)) as i64).collect();
    Ok((0..n)
        .map(|v| {
            if winners[encode(v, &start_energy)] == Player::One {
                CappedAnswer::Player1
            } else {
                CappedAnswer::Player2AtCap
            }
        })
        .collect())
}

/// Winner of an ultimately periodic play under a given credit: Player 1
/// needs (a) no energy dip below zero through the prefix and first cycle
/// pass, (b) a componentwise non-negative cycle total, and (c) an odd least
/// priority on the cycle. Missing priorities count as priority 1.
pub fn lasso_winner(g: &Graph, l: &Lasso, credit: &[u64]) -> Result<Player> {
    if credit.len() != g.dim {
        return Err(Error::DimensionMismatch {
            expected: g.dim,
            got: credit.len(),
        });
    }
    let mut energy: Vec<i64> = credit
        .iter()
        .map(|&c| i64::try_from(c).map_err(|_| Error::Overflow("credit")))
        .collect::<Result<_>>()?;
    let mut safe = true;
    for &e in l.prefix.iter().chain(&l.cycle) {
        let w = g.edges()[e].int_weight()?;
        for i in 0..g.dim {
            energy[i] = energy[i]
                .checked_add(w[i])
                .ok_or(Error::Overflow("energy accumulation"))?;
            if energy[i] < 0 {
                safe = false;
            }
        }
    }
    let cycle_total = crate::walks::path_weight(g, &l.cycle)?;
    let nonneg_cycle = cycle_total.iter().all(|&x| x >= 0);
    let least = l
        .cycle
        .iter()
        .map(|&e| g.vertex(g.edges()[e].src).priority.unwrap_or(1))
        .min()
        .expect("nonempty cycle");
    Ok(if safe && nonneg_cycle && least % 2 == 1 {
        Player::One
    } else {
        Player::Two
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_game;
    use crate::test_assets;

    fn fig5() -> Graph {
        parse_game(test_assets::FIG5).unwrap()
    }

    fn weight_of(g: &Graph, src: &str, dst: &str) -> Vec<Ext> {
        let s = g.vertex_index(src).unwrap();
        let t = g.vertex_index(dst).unwrap();
        let e = g.edge_between(s, t).unwrap_or_else(|| panic!("edge {src}->{dst}"));
        g.edges()[e].weight.clone()
    }

    fn fins(ws: &[i64]) -> Vec<Ext> {
        ws.iter().map(|&w| Ext::Fin(w)).collect()
    }

    #[test]
    fn priority_elimination_matches_worked_graph() {
        let (g, cert) = reduce_parity_to_extended(&fig5()).unwrap();
        // one fresh dimension per distinct even priority: {2, 4}
        assert_eq!(g.dim, 3);
        assert_eq!(cert.target_dim, 3);
        assert!(g.extended);
        // cyan cycle
        assert_eq!(weight_of(&g, "t3", "s2"), fins(&[0, -1, 0]));
        assert_eq!(weight_of(&g, "s2", "t2"), fins(&[0, -1, 0]));
        assert_eq!(weight_of(&g, "t2", "s4"), fins(&[0, 0, -1]));
        // s4 -> t3 routes through the replenishment pair of t3
        assert_eq!(weight_of(&g, "s4", "t3__grant"), fins(&[0, 0, 0]));
        assert_eq!(
            weight_of(&g, "t3__grant", "t3__relay"),
            vec![Ext::Fin(0), Ext::Fin(0), Ext::Omega]
        );
        assert_eq!(weight_of(&g, "t3__relay", "t3"), fins(&[0, 0, 0]));
        // violet loop: omega granted directly on the Player-1 edge
        assert_eq!(
            weight_of(&g, "t2", "s1"),
            vec![Ext::Fin(-1), Ext::Omega, Ext::Omega]
        );
        assert_eq!(weight_of(&g, "s1", "t2"), fins(&[0, -1, 0]));
        // sizes: 5 originals + one pair; 6 edges + two wiring edges
        assert_eq!(g.n(), 7);
        assert_eq!(g.edges().len(), 8);
        assert_eq!(g.norm(), 1);
        // certificate bounds
        assert!(cert.target_vertices <= 3 * cert.source_vertices);
        assert!(cert.target_edges <= cert.source_edges + 2 * cert.source_vertices);
        assert_eq!(cert.target_norm, cert.source_norm);
    }

    #[test]
    fn all_odd_priorities_change_nothing() {
        let g = parse_game(
            "game odd\ndim 1\nvertex a owner=1 prio=3\nvertex b owner=2 prio=1\n\
             edge a b 1\nedge b a -1\n",
        )
        .unwrap();
        let (out, _) = reduce_parity_to_extended(&g).unwrap();
        assert_eq!(out.dim, 1);
        assert_eq!(out.n(), 2);
        assert_eq!(out.edges().len(), 2);
        assert!(!out.extended);
        assert_eq!(weight_of(&out, "a", "b"), fins(&[1]));
    }

    #[test]
    fn missing_priority_is_an_error() {
        let g = parse_game(
            "game m\ndim 1\nvertex a owner=1 prio=2\nvertex b owner=2\nedge a b 1\nedge b a 0\n",
        )
        .unwrap();
        assert!(matches!(
            reduce_parity_to_extended(&g),
            Err(Error::MissingPriority(_))
        ));
    }

    #[test]
    fn omega_elimination_matches_worked_fragment() {
        let (ext, _) = reduce_parity_to_extended(&fig5()).unwrap();
        let (bnd, cert) = reduce_extended_to_bounding(&ext).unwrap();
        assert!(!bnd.extended);
        assert_eq!(bnd.dim, 3);
        // the violet omega edge: zeroed into a gate, then a pump with +e2
        // and +e3 replenishment loops
        assert_eq!(weight_of(&bnd, "t2", "t2__to__s1__in"), fins(&[-1, 0, 0]));
        assert_eq!(
            weight_of(&bnd, "t2__to__s1__in", "t2__to__s1__pump"),
            fins(&[0, 0, 0])
        );
        assert_eq!(weight_of(&bnd, "t2__to__s1__pump", "s1"), fins(&[0, 0, 0]));
        assert_eq!(
            weight_of(&bnd, "t2__to__s1__pump", "t2__to__s1__inc2"),
            fins(&[0, 1, 0])
        );
        assert_eq!(
            weight_of(&bnd, "t2__to__s1__pump", "t2__to__s1__inc3"),
            fins(&[0, 0, 1])
        );
        // discharge loops at the original Player-1 vertex t2
        assert_eq!(weight_of(&bnd, "t2", "t2__dec1"), fins(&[-1, 0, 0]));
        assert_eq!(weight_of(&bnd, "t2", "t2__dec2"), fins(&[0, -1, 0]));
        assert_eq!(weight_of(&bnd, "t2", "t2__dec3"), fins(&[0, 0, -1]));
        assert_eq!(weight_of(&bnd, "t2__dec1", "t2"), fins(&[0, 0, 0]));
        // non-omega edges survive untouched
        assert_eq!(weight_of(&bnd, "s1", "t2"), fins(&[0, -1, 0]));
        // certificate bounds
        let d = cert.source_dim;
        assert!(cert.target_vertices <= (d + 1) * cert.source_vertices + (d + 2) * cert.source_edges);
        assert!(cert.target_edges <= 2 * (d + 1) * cert.source_edges + 2 * d * cert.source_vertices);
        assert_eq!(cert.target_norm, cert.source_norm);
    }

    #[test]
    fn omega_free_graph_gets_only_discharge_loops() {
        let g = parse_game(
            "game e\ndim 2\nvertex a owner=1\nvertex b owner=2\nedge a b 1 0\nedge b a 0 -1\n",
        )
        .unwrap();
        let (bnd, _) = reduce_extended_to_bounding(&g).unwrap();
        // a keeps two discharge loops, no pumps appear
        assert_eq!(bnd.n(), 4);
        assert_eq!(bnd.edges().len(), 2 + 4);
        assert!(bnd.vertices().iter().all(|v| !v.id.contains("pump")));
    }

    #[test]
    fn capped_oracle_on_positive_loop() {
        let g = parse_game(
            "game p\ndim 1\nvertex a owner=1 prio=1\nvertex b owner=2 prio=1\n\
             edge a b 1\nedge b a 0\n",
        )
        .unwrap();
        let ans = capped_oracle(&g, &[0], 4, 1_000_000).unwrap();
        assert!(ans.iter().all(|&a| a == CappedAnswer::Player1));
    }

    #[test]
    fn capped_oracle_fig5_is_player2_at_cap() {
        let ans = capped_oracle(&fig5(), &[2], 8, 10_000_000).unwrap();
        assert!(ans.iter().all(|&a| a == CappedAnswer::Player2AtCap));
    }

    #[test]
    fn lasso_rules() {
        let g = fig5();
        // cyan cycle: total 0, least priority 2 even -> parity fails
        let cyc =
            Lasso::from_vertex_ids(&g, &[], &["t3", "s2", "t2", "s4", "t3"]).unwrap();
        assert_eq!(lasso_winner(&g, &cyc, &[5]).unwrap(), Player::Two);

        // positive cycle with odd least priority
        let g2 = parse_game(
            "game p\ndim 1\nvertex a owner=1 prio=1\nvertex b owner=2 prio=3\n\
             edge a b 1\nedge b a 0\n",
        )
        .unwrap();
        let cyc = Lasso::from_vertex_ids(&g2, &[], &["a", "b", "a"]).unwrap();
        assert_eq!(lasso_winner(&g2, &cyc, &[0]).unwrap(), Player::One);

        // any negative cycle component loses regardless of priorities
        let g3 = parse_game(
            "game n\ndim 2\nvertex a owner=1 prio=1\nvertex b owner=2 prio=1\n\
             edge a b 1 -1\nedge b a 0 0\n",
        )
        .unwrap();
        let cyc = Lasso::from_vertex_ids(&g3, &[], &["a", "b", "a"]).unwrap();
        assert_eq!(lasso_winner(&g3, &cyc, &[9, 9]).unwrap(), Player::Two);
    }
}
