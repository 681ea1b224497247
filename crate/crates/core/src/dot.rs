//! Graphviz output.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::oriented::CircularPartition;
use crate::periodic::VertexColouring;

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
    "#fabebe", "#008080", "#e6beff", "#9a6324",
];

fn colour(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Undirected drawing; branch vertices are double circles.
pub fn graph(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let shape = if g.degree(v) >= 3 {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  {v} [shape={shape}];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn vertex_colouring(g: &Graph, c: &VertexColouring) -> String {
    let mut out = format!("graph G {{\n  label=\"t = {}, k = {}\";\n", c.t, c.k);
    for (v, &class) in c.colours.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {v} [label=\"{v}:{class}\", style=filled, fillcolor=\"{}\"];",
            colour(class)
        );
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Each edge is drawn once per orientation, labelled with its class.
pub fn circular_partition(g: &Graph, p: &CircularPartition) -> String {
    let mut out = format!("digraph G {{\n  label=\"k = {}\";\n", p.k);
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for [v, w, class] in p.to_record(g).entries {
        let _ = writeln!(
            out,
            "  {v} -> {w} [label=\"{class}\", color=\"{}\"];",
            colour(class)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{families, oriented, periodic};

    #[test]
    fn dot_shapes() {
        let g = families::spider(&[1, 1, 1]).unwrap();
        let text = graph(&g);
        assert!(text.contains("0 [shape=doublecircle]"));
        assert_eq!(text.matches(" -- ").count(), 3);

        let p = oriented::is_circularly_k_partite(&g, 2).unwrap().unwrap();
        assert_eq!(circular_partition(&g, &p).matches(" -> ").count(), 6);

        let c = periodic::build_t_periodic_colouring(&g, 2).unwrap();
        assert!(vertex_colouring(&g, &c).starts_with("graph G {"));
    }
}
