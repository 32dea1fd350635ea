//! Multi-weighted game graphs: data model, file format, validation.
//!
//! A graph is a finite set of vertices partitioned between Player 1 and
//! Player 2, with edges carrying d-dimensional integer weight vectors.
//! Extended graphs additionally allow the symbol `omega` on Player-1-sourced
//! edges. The normalization assumptions (strict alternation, weight
//! determinacy, out-degree at least one, nonzero norm) are checked, never
//! silently repaired; `normalize` performs the explicit repair.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Owner of a vertex. Player 1 is drawn as a triangle, Player 2 as a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Owner {
    Player1,
    Player2,
}

impl Owner {
    pub fn opponent(self) -> Owner {
        match self {
            Owner::Player1 => Owner::Player2,
            Owner::Player2 => Owner::Player1,
        }
    }
}

/// Winner of a vertex or play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::One => write!(f, "Player 1"),
            Player::Two => write!(f, "Player 2"),
        }
    }
}

/// An extended weight entry: a finite integer or omega.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ext {
    Fin(i64),
    Omega,
}

impl Ext {
    pub fn finite(self) -> Option<i64> {
        match self {
            Ext::Fin(v) => Some(v),
            Ext::Omega => None,
        }
    }

    /// Absolute value for norm purposes; omega counts as 1.
    pub fn norm(self) -> u64 {
        match self {
            Ext::Fin(v) => v.unsigned_abs(),
            Ext::Omega => 1,
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(v) => write!(f, "{v}"),
            Ext::Omega => write!(f, "omega"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub owner: Owner,
    pub priority: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: Vec<Ext>,
}

impl Edge {
    pub fn has_omega(&self) -> bool {
        self.weight.iter().any(|w| matches!(w, Ext::Omega))
    }

    /// The weight as plain integers; errors when omega is present.
    pub fn int_weight(&self) -> Result<Vec<i64>> {
        self.weight
            .iter()
            .map(|w| w.finite().ok_or(Error::OmegaNotAllowed))
            .collect()
    }
}

/// A raw, not yet validated game description. Produced by the parser and by
/// hand when building graphs programmatically; `finish` checks the
/// normalization assumptions and yields a [`Graph`].
#[derive(Debug, Clone, Default)]
pub struct RawGame {
    pub name: String,
    pub dim: usize,
    pub extended: bool,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(String, String, Vec<Ext>)>,
}

/// One violated normalization assumption, as reported by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub msg: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.msg)
    }
}

/// A validated multi-weighted game graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub name: String,
    pub dim: usize,
    pub extended: bool,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl Graph {
    /// Validates a raw game and builds the graph. All normalization
    /// assumptions must hold; use [`validate`] for a report instead of an
    /// error, or [`normalize`](crate::graph::normalize) for explicit repair.
    pub fn from_raw(raw: RawGame) -> Result<Self> {
        let violations = validate(&raw);
        if let Some(v) = violations.first() {
            return Err(Error::Invariant {
                rule: v.rule,
                msg: v.msg.clone(),
            });
        }
        Self::from_raw_unchecked(raw)
    }

    fn from_raw_unchecked(raw: RawGame) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in raw.vertices.iter().enumerate() {
            index.insert(v.id.clone(), i);
        }
        let mut edges = Vec::with_capacity(raw.edges.len());
        let mut out = vec![Vec::new(); raw.vertices.len()];
        for (src, dst, weight) in &raw.edges {
            let s = *index
                .get(src)
                .ok_or_else(|| Error::UnknownVertex(src.clone()))?;
            let t = *index
                .get(dst)
                .ok_or_else(|| Error::UnknownVertex(dst.clone()))?;
            out[s].push(edges.len());
            edges.push(Edge {
                src: s,
                dst: t,
                weight: weight.clone(),
            });
        }
        Ok(Graph {
            name: raw.name,
            dim: raw.dim,
            extended: raw.extended,
            vertices: raw.vertices,
            edges,
            out,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Finds the unique edge between an ordered vertex pair (weight
    /// determinacy guarantees uniqueness).
    pub fn edge_between(&self, src: usize, dst: usize) -> Option<usize> {
        self.out[src].iter().copied().find(|&e| self.edges[e].dst == dst)
    }

    /// Maximum infinity norm over all edge weights, omega counting as 1.
    pub fn norm(&self) -> u64 {
        self.edges
            .iter()
            .flat_map(|e| e.weight.iter().map(|w| w.norm()))
            .max()
            .unwrap_or(0)
    }

    pub fn has_priorities(&self) -> bool {
        self.vertices.iter().all(|v| v.priority.is_some())
    }

    pub fn player_vertices(&self, owner: Owner) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(move |(_, v)| v.owner == owner)
            .map(|(i, _)| i)
    }

    pub fn to_raw(&self) -> RawGame {
        RawGame {
            name: self.name.clone(),
            dim: self.dim,
            extended: self.extended,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    (
                        self.vertices[e.src].id.clone(),
                        self.vertices[e.dst].id.clone(),
                        e.weight.clone(),
                    )
                })
                .collect(),
        }
    }
}

/// Checks the normalization assumptions and structural rules of a raw game.
/// Returns an empty list when the game is well-formed.
pub fn validate(raw: &RawGame) -> Vec<Violation> {
    let mut out = Vec::new();
    if raw.dim == 0 {
        out.push(Violation {
            rule: "dimension",
            msg: "dimension must be positive".into(),
        });
    }
    let mut index = HashMap::new();
    for v in &raw.vertices {
        if index.insert(v.id.clone(), v.owner).is_some() {
            out.push(Violation {
                rule: "duplicate-vertex",
                msg: format!("vertex `{}` declared twice", v.id),
            });
        }
        if v.priority == Some(0) {
            out.push(Violation {
                rule: "priority",
                msg: format!("vertex `{}` has priority 0; priorities are positive", v.id),
            });
        }
    }
    let mut outdeg: HashMap<&str, usize> = HashMap::new();
    let mut seen_pairs: HashMap<(&str, &str), &Vec<Ext>> = HashMap::new();
    let mut max_norm = 0u64;
    for (src, dst, w) in &raw.edges {
        if w.len() != raw.dim {
            out.push(Violation {
                rule: "dimension",
                msg: format!(
                    "edge {src} -> {dst} carries {} weights, dimension is {}",
                    w.len(),
                    raw.dim
                ),
            });
        }
        let so = index.get(src.as_str()).copied();
        let to = index.get(dst.as_str()).copied();
        if so.is_none() {
            out.push(Violation {
                rule: "unknown-vertex",
                msg: format!("edge source `{src}` is not declared"),
            });
        }
        if to.is_none() {
            out.push(Violation {
                rule: "unknown-vertex",
                msg: format!("edge target `{dst}` is not declared"),
            });
        }
        if let (Some(a), Some(b)) = (so, to) {
            if a == b {
                out.push(Violation {
                    rule: "alternation",
                    msg: format!("edge {src} -> {dst} joins two {a:?} vertices"),
                });
            }
        }
        if w.iter().any(|x| matches!(x, Ext::Omega)) {
            if !raw.extended {
                out.push(Violation {
                    rule: "misplaced-omega",
                    msg: format!("edge {src} -> {dst} uses omega in a non-extended game"),
                });
            } else if so == Some(Owner::Player2) {
                out.push(Violation {
                    rule: "misplaced-omega",
                    msg: format!("edge {src} -> {dst} uses omega from a Player-2 vertex"),
                });
            }
        }
        if let Some(prev) = seen_pairs.insert((src.as_str(), dst.as_str()), w) {
            let rule = if prev == w { "duplicate-edge" } else { "determinacy" };
            out.push(Violation {
                rule,
                msg: format!("edge {src} -> {dst} declared twice"),
            });
        }
        *outdeg.entry(src.as_str()).or_default() += 1;
        max_norm = max_norm.max(w.iter().map(|x| x.norm()).max().unwrap_or(0));
    }
    for v in &raw.vertices {
        if outdeg.get(v.id.as_str()).copied().unwrap_or(0) == 0 {
            out.push(Violation {
                rule: "out-degree",
                msg: format!("vertex `{}` has no outgoing edge", v.id),
            });
        }
    }
    if max_norm == 0 && !raw.edges.is_empty() {
        out.push(Violation {
            rule: "zero-norm",
            msg: "all edge weights are zero".into(),
        });
    }
    if raw.edges.is_empty() {
        out.push(Violation {
            rule: "out-degree",
            msg: "game has no edges".into(),
        });
    }
    out
}

/// Explicit normalization: restores strict alternation by inserting fresh
/// opposite-owner relay vertices with zero-weight continuation edges, and
/// drops exact duplicate edges. Duplicate vertex pairs with distinct weights
/// are rejected as ambiguous input; so is a zero norm, which no relay can fix.
pub fn normalize(raw: &RawGame) -> Result<Graph> {
    let mut index = HashMap::new();
    for v in &raw.vertices {
        index.insert(v.id.clone(), v.owner);
    }
    let mut seen: HashMap<(String, String), Vec<Ext>> = HashMap::new();
    let mut fixed = RawGame {
        name: raw.name.clone(),
        dim: raw.dim,
        extended: raw.extended,
        vertices: raw.vertices.clone(),
        edges: Vec::new(),
    };
    let mut relay_count = 0usize;
    for (src, dst, w) in &raw.edges {
        match seen.insert((src.clone(), dst.clone()), w.clone()) {
            Some(prev) if prev != *w => {
                return Err(Error::Invariant {
                    rule: "determinacy",
                    msg: format!("edge {src} -> {dst} has two distinct weights"),
                })
            }
            Some(_) => continue,
            None => {}
        }
        let so = index
            .get(src)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(src.clone()))?;
        let to = index
            .get(dst)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(dst.clone()))?;
        if so == to {
            let mut relay = format!("{src}__relay{relay_count}");
            while index.contains_key(&relay) {
                relay.push('_');
            }
            relay_count += 1;
            index.insert(relay.clone(), so.opponent());
            fixed.vertices.push(Vertex {
                id: relay.clone(),
                owner: so.opponent(),
                priority: None,
            });
            fixed.edges.push((src.clone(), relay.clone(), w.clone()));
            fixed
                .edges
                .push((relay, dst.clone(), vec![Ext::Fin(0); raw.dim]));
        } else {
            fixed.edges.push((src.clone(), dst.clone(), w.clone()));
        }
    }
    Graph::from_raw(fixed)
}

/// Parses the line-oriented game file format.
pub fn parse_raw(text: &str) -> Result<RawGame> {
    let mut raw = RawGame::default();
    let mut saw_dim = false;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let head = tok.next().unwrap();
        let err = |msg: String| Error::Syntax {
            line: lineno + 1,
            msg,
        };
        match head {
            "game" => {
                raw.name = tok
                    .next()
                    .ok_or_else(|| err("missing game name".into()))?
                    .to_string();
            }
            "dim" => {
                let d = tok.next().ok_or_else(|| err("missing dimension".into()))?;
                raw.dim = d
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad dimension `{d}`")))?;
                saw_dim = true;
            }
            "extended" => raw.extended = true,
            "vertex" => {
                let id = tok
                    .next()
                    .ok_or_else(|| err("missing vertex id".into()))?
                    .to_string();
                let mut owner = None;
                let mut priority = None;
                for attr in tok {
                    if let Some(o) = attr.strip_prefix("owner=") {
                        owner = Some(match o {
                            "1" => Owner::Player1,
                            "2" => Owner::Player2,
                            _ => return Err(err(format!("bad owner `{o}`"))),
                        });
                    } else if let Some(p) = attr.strip_prefix("prio=") {
                        priority = Some(
                            p.parse::<u32>()
                                .map_err(|_| err(format!("bad priority `{p}`")))?,
                        );
                    } else {
                        return Err(err(format!("unknown vertex attribute `{attr}`")));
                    }
                }
                let owner = owner.ok_or_else(|| err("vertex is missing owner=".into()))?;
                raw.vertices.push(Vertex { id, owner, priority });
            }
            "edge" => {
                let src = tok
                    .next()
                    .ok_or_else(|| err("missing edge source".into()))?
                    .to_string();
                let dst = tok
                    .next()
                    .ok_or_else(|| err("missing edge target".into()))?
                    .to_string();
                let mut weight = Vec::new();
                for w in tok {
                    if w == "omega" {
                        weight.push(Ext::Omega);
                    } else {
                        weight.push(Ext::Fin(
                            w.parse::<i64>()
                                .map_err(|_| err(format!("bad weight `{w}`")))?,
                        ));
                    }
                }
                if saw_dim && weight.len() != raw.dim {
                    return Err(err(format!(
                        "edge carries {} weights, dimension is {}",
                        weight.len(),
                        raw.dim
                    )));
                }
                raw.edges.push((src, dst, weight));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    if !saw_dim {
        return Err(Error::Syntax {
            line: 0,
            msg: "missing `dim` directive".into(),
        });
    }
    Ok(raw)
}

/// Parses and fully validates a game file.
pub fn parse_game(text: &str) -> Result<Graph> {
    Graph::from_raw(parse_raw(text)?)
}

/// Serializes a graph back into the game file format. Round-trips exactly:
/// `parse_game(serialize_game(g))` equals `g`.
pub fn serialize_game(g: &Graph) -> String {
    let mut s = String::new();
    s.push_str(&format!("game {}\n", g.name));
    s.push_str(&format!("dim {}\n", g.dim));
    if g.extended {
        s.push_str("extended\n");
    }
    for v in g.vertices() {
        let owner = match v.owner {
            Owner::Player1 => 1,
            Owner::Player2 => 2,
        };
        match v.priority {
            Some(p) => s.push_str(&format!("vertex {} owner={} prio={}\n", v.id, owner, p)),
            None => s.push_str(&format!("vertex {} owner={}\n", v.id, owner)),
        }
    }
    for e in g.edges() {
        s.push_str(&format!(
            "edge {} {}",
            g.vertex(e.src).id,
            g.vertex(e.dst).id
        ));
        for w in &e.weight {
            s.push_str(&format!(" {w}"));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_assets;

    #[test]
    fn parses_fig1() {
        let g = parse_game(test_assets::FIG1).unwrap();
        assert_eq!(g.dim, 2);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edges().len(), 8);
        assert_eq!(g.norm(), 1);
        assert!(!g.extended);
        let vl = g.vertex_index("vL").unwrap();
        assert_eq!(g.vertex(vl).owner, Owner::Player1);
    }

    #[test]
    fn parses_fig5_priorities() {
        let g = parse_game(test_assets::FIG5).unwrap();
        assert_eq!(g.dim, 1);
        assert_eq!(g.n(), 5);
        assert!(g.has_priorities());
        let t3 = g.vertex_index("t3").unwrap();
        assert_eq!(g.vertex(t3).priority, Some(3));
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let text = "game x\ndim 2\nvertex a owner=1\nvertex b owner=2\nedge a b 1\nedge b a 0 0\n";
        let err = parse_game(text).unwrap_err();
        assert!(matches!(err, Error::Syntax { .. }), "{err}");
    }

    #[test]
    fn rejects_zero_norm() {
        let text = "game x\ndim 1\nvertex a owner=1\nvertex b owner=2\nedge a b 0\nedge b a 0\n";
        let err = parse_game(text).unwrap_err();
        match err {
            Error::Invariant { rule, .. } => assert_eq!(rule, "zero-norm"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn validate_reports_alternation_and_determinacy() {
        let mut raw = parse_raw(
            "game x\ndim 1\nvertex a owner=1\nvertex b owner=1\nvertex c owner=2\n\
             edge a b 1\nedge b c 0\nedge c a 0\n",
        )
        .unwrap();
        let report = validate(&raw);
        assert!(report.iter().any(|v| v.rule == "alternation"));
        raw.edges.push(("a".into(), "b".into(), vec![Ext::Fin(2)]));
        let report = validate(&raw);
        assert!(report.iter().any(|v| v.rule == "determinacy"));
    }

    #[test]
    fn validate_fig1_is_clean() {
        let raw = parse_raw(test_assets::FIG1).unwrap();
        assert!(validate(&raw).is_empty());
    }

    #[test]
    fn omega_only_in_extended_player1_edges() {
        let text =
            "game x\ndim 1\nvertex a owner=1\nvertex b owner=2\nedge a b omega\nedge b a 1\n";
        let err = parse_game(text).unwrap_err();
        match err {
            Error::Invariant { rule, .. } => assert_eq!(rule, "misplaced-omega"),
            other => panic!("unexpected error {other}"),
        }
        let text =
            "game x\ndim 1\nextended\nvertex a owner=1\nvertex b owner=2\nedge a b omega\nedge b a 1\n";
        assert!(parse_game(text).is_ok());
        // omega on a Player-2 edge stays forbidden even in extended games
        let text =
            "game x\ndim 1\nextended\nvertex a owner=1\nvertex b owner=2\nedge a b 1\nedge b a omega\n";
        assert!(parse_game(text).is_err());
    }

    #[test]
    fn round_trip_fig1_and_extended() {
        for asset in [test_assets::FIG1, test_assets::FIG5] {
            let g = parse_game(asset).unwrap();
            let g2 = parse_game(&serialize_game(&g)).unwrap();
            assert_eq!(g, g2);
        }
        let text = "game x\ndim 2\nextended\nvertex a owner=1 prio=3\nvertex b owner=2 prio=1\n\
                    edge a b omega 1\nedge b a 0 0\n";
        let g = parse_game(text).unwrap();
        let s = serialize_game(&g);
        assert!(s.contains("omega"));
        assert!(s.contains("prio=3"));
        assert_eq!(parse_game(&s).unwrap(), g);
    }

    #[test]
    fn normalize_inserts_relay_and_rejects_ambiguity() {
        let raw = parse_raw(
            "game x\ndim 1\nvertex a owner=1\nvertex b owner=1\nvertex c owner=2\n\
             edge a b 1\nedge b c 0\nedge c a 0\n",
        )
        .unwrap();
        let g = normalize(&raw).unwrap();
        assert_eq!(g.n(), 4);
        assert!(validate(&g.to_raw()).is_empty());

        let mut bad = raw.clone();
        bad.edges.push(("a".into(), "b".into(), vec![Ext::Fin(2)]));
        assert!(normalize(&bad).is_err());
    }
}
