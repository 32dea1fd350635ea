//! DOT export with owner shapes and optional winner coloring.

use std::collections::HashMap;

use crate::graph::{Ext, Graph, Owner, Player};

#[derive(Debug, Clone, Default)]
pub struct DotAnnotations {
    /// Winner per vertex index.
    pub winners: Option<Vec<Player>>,
    /// Chosen edge per vertex index (strategy arrows drawn bold).
    pub strategy: HashMap<usize, usize>,
}

fn weight_label(w: &[Ext]) -> String {
    let parts: Vec<String> = w
        .iter()
        .map(|x| match x {
            Ext::Fin(v) => v.to_string(),
            Ext::Omega => "ω".to_string(),
        })
        .collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

/// Renders the graph as DOT text. Player 1 vertices are triangles, Player 2
/// vertices squares, matching the usual drawing convention.
pub fn export_dot(g: &Graph, ann: &DotAnnotations) -> String {
    let mut s = String::new();
    s.push_str(&format!("digraph \"{}\" {{\n", g.name));
    s.push_str("  rankdir=LR;\n");
    for (i, v) in g.vertices().iter().enumerate() {
        let shape = match v.owner {
            Owner::Player1 => "triangle",
            Owner::Player2 => "square",
        };
        let mut attrs = vec![format!("shape={shape}")];
        if let Some(p) = v.priority {
            attrs.push(format!("xlabel=\"{p}\""));
        }
        if let Some(winners) = &ann.winners {
            let color = match winners[i] {
                Player::One => "lightblue",
                Player::Two => "lightsalmon",
            };
            attrs.push("style=filled".into());
            attrs.push(format!("fillcolor={color}"));
        }
        s.push_str(&format!("  \"{}\" [{}];\n", v.id, attrs.join(",")));
    }
    for (ei, e) in g.edges().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", weight_label(&e.weight))];
        if ann.strategy.get(&e.src) == Some(&ei) {
            attrs.push("penwidth=2.0".into());
        }
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [{}];\n",
            g.vertex(e.src).id,
            g.vertex(e.dst).id,
            attrs.join(",")
        ));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_game;

    #[test]
    fn fig1_echo() {
        let g = parse_game(crate::test_assets::FIG1).unwrap();
        let dot = export_dot(&g, &DotAnnotations::default());
        assert_eq!(dot.matches("shape=").count(), 6);
        assert_eq!(dot.matches(" -> ").count(), 8);
        assert!(dot.contains("triangle") && dot.contains("square"));
    }

    #[test]
    fn winner_coloring() {
        let g = parse_game(crate::test_assets::FIG1).unwrap();
        let ann = DotAnnotations {
            winners: Some(vec![Player::Two; 6]),
            ..Default::default()
        };
        let dot = export_dot(&g, &ann);
        assert_eq!(dot.matches("fillcolor=lightsalmon").count(), 6);
    }

    #[test]
    fn omega_renders_as_glyph() {
        let g = parse_game(
            "game x\ndim 1\nextended\nvertex a owner=1\nvertex b owner=2\n\
             edge a b omega\nedge b a 1\n",
        )
        .unwrap();
        let dot = export_dot(&g, &DotAnnotations::default());
        assert!(dot.contains('ω'));
    }
}
