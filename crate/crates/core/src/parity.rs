//! Attractor-based recursive parity game solving.
//!
//! Least-priority convention: Player 1 wins a play iff the least priority
//! occurring infinitely often is odd. Used by the capped energy-parity
//! oracle on its finite state arenas.

use crate::graph::{Owner, Player};

pub struct ParityArena {
    pub owner: Vec<Owner>,
    pub priority: Vec<u32>,
    pub adj: Vec<Vec<u32>>,
    rev: Vec<Vec<u32>>,
}

impl ParityArena {
    pub fn new(owner: Vec<Owner>, priority: Vec<u32>, adj: Vec<Vec<u32>>) -> Self {
        let n = owner.len();
        assert_eq!(priority.len(), n);
        assert_eq!(adj.len(), n);
        debug_assert!(adj.iter().all(|a| !a.is_empty()), "total arena required");
        let mut rev = vec![Vec::new(); n];
        for (v, outs) in adj.iter().enumerate() {
            for &t in outs {
                rev[t as usize].push(v as u32);
            }
        }
        ParityArena {
            owner,
            priority,
            adj,
            rev,
        }
    }

    fn player_of(&self, v: usize) -> Player {
        match self.owner[v] {
            Owner::Player1 => Player::One,
            Owner::Player2 => Player::Two,
        }
    }

    /// Attractor of `target` for `player` within `alive`.
    fn attract(&self, player: Player, target: &[u32], alive: &[bool]) -> Vec<bool> {
        let n = self.owner.len();
        let mut in_attr = vec![false; n];
        let mut degree = vec![0u32; n];
        for v in 0..n {
            if alive[v] {
                degree[v] = self.adj[v].iter().filter(|&&t| alive[t as usize]).count() as u32;
            }
        }
        let mut queue: Vec<u32> = Vec::new();
        for &t in target {
            if alive[t as usize] && !in_attr[t as usize] {
                in_attr[t as usize] = true;
                queue.push(t);
            }
        }
        while let Some(s) = queue.pop() {
            for &p in &self.rev[s as usize] {
                let p = p as usize;
                if !alive[p] || in_attr[p] {
                    continue;
                }
                let take = if self.player_of(p) == player {
                    true
                } else {
                    degree[p] -= 1;
                    degree[p] == 0
                };
                if take {
                    in_attr[p] = true;
                    queue.push(p as u32);
                }
            }
        }
        in_attr
    }

    /// Winners of the parity game (least infinitely recurring priority odd
    /// favors Player 1).
    pub fn solve(&self) -> Vec<Player> {
        let n = self.owner.len();
        let alive = vec![true; n];
        let (w1, _w2) = self.zielonka(&alive);
        (0..n)
            .map(|v| if w1[v] { Player::One } else { Player::Two })
            .collect()
    }

    fn zielonka(&self, alive: &[bool]) -> (Vec<bool>, Vec<bool>) {
        let n = self.owner.len();
        let mut least = None;
        for v in 0..n {
            if alive[v] {
                least = Some(match least {
                    None => self.priority[v],
                    Some(p) => self.priority[v].min(p),
                });
            }
        }
        let Some(least) = least else {
            return (vec![false; n], vec![false; n]);
        };
        let favored = if least % 2 == 1 { Player::One } else { Player::Two };
        let target: Vec<u32> = (0..n as u32)
            .filter(|&v| alive[v as usize] && self.priority[v as usize] == least)
            .collect();
        let a = self.attract(favored, &target, alive);
        let mut rest = alive.to_vec();
        for v in 0..n {
            if a[v] {
                rest[v] = false;
            }
        }
        let (w1, w2) = self.zielonka(&rest);
        let won_opp = match favored {
            Player::One => &w2,
            Player::Two => &w1,
        };
        if won_opp.iter().all(|&x| !x) {
            // favored player takes the whole subgame
            let fav_all = alive.to_vec();
            let opp_none = vec![false; n];
            return match favored {
                Player::One => (fav_all, opp_none),
                Player::Two => (opp_none, fav_all),
            };
        }
        let opp = favored.opponent();
        let opp_target: Vec<u32> = (0..n as u32)
            .filter(|&v| match opp {
                Player::One => w1[v as usize],
                Player::Two => w2[v as usize],
            })
            .collect();
        let b = self.attract(opp, &opp_target, alive);
        let mut rest2 = alive.to_vec();
        for v in 0..n {
            if b[v] {
                rest2[v] = false;
            }
        }
        let (mut r1, mut r2) = self.zielonka(&rest2);
        match opp {
            Player::One => {
                for v in 0..n {
                    if b[v] {
                        r1[v] = true;
                    }
                }
            }
            Player::Two => {
                for v in 0..n {
                    if b[v] {
                        r2[v] = true;
                    }
                }
            }
        }
        (r1, r2)
    }
}
