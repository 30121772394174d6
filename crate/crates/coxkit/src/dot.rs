//! Graphviz DOT output.

use std::fmt::Write as _;

use coxkit_core::cellrep::LambdaGraph;
use coxkit_core::theta::{Theta, VertexOrigin};
use coxkit_core::{CoxeterDiagram, EdgeLabel, MultiGraph};

const PALETTE: [&str; 8] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

/// Quotes a DOT identifier.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// The Coxeter diagram, with labels on labeled edges.
pub fn diagram_dot(d: &CoxeterDiagram) -> String {
    let mut out = String::from("graph coxeter {\n");
    for g in d.generators() {
        let _ = writeln!(out, "  {};", quote(g.as_str()));
    }
    for e in d.edges() {
        let (u, v) = (quote(d.name(e.u)), quote(d.name(e.v)));
        let _ = match e.label {
            EdgeLabel::Finite(3) => writeln!(out, "  {u} -- {v};"),
            label => writeln!(out, "  {u} -- {v} [label={}];", quote(&label.to_string())),
        };
    }
    out.push_str("}\n");
    out
}

/// `Λ^(s)` with vertices coloured by their descent.
pub fn lambda_dot(d: &CoxeterDiagram, l: &LambdaGraph) -> String {
    let mut out = String::from("graph lambda {\n  node [style=filled, fontcolor=white];\n");
    let name = |i: usize| quote(&l.vertices()[i].display(d));
    for i in 0..l.vertex_count() {
        let t = l.descent(i);
        let _ = writeln!(
            out,
            "  {} [fillcolor={}, tooltip={}];",
            name(i),
            quote(PALETTE[t % PALETTE.len()]),
            quote(&format!("descent {}", d.name(t)))
        );
    }
    for e in l.edges() {
        let _ = writeln!(out, "  {} -- {};", name(e.upper), name(e.lower));
    }
    out.push_str("}\n");
    out
}

/// A multigraph `Ω`, parallel edges drawn separately.
pub fn graph_dot(g: &MultiGraph) -> String {
    let mut out = String::from("graph omega {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(v));
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.name(a)), quote(g.name(b)));
    }
    out.push_str("}\n");
    out
}

/// The doubled quiver `Ω̃`: one arrow each way per edge.
pub fn doubled_quiver_dot(g: &MultiGraph) -> String {
    let mut out = String::from("digraph doubled {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(v));
    }
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let (u, v) = (quote(g.name(a)), quote(g.name(b)));
        let _ = writeln!(out, "  {u} -> {v} [label={}];", quote(&format!("e{i}")));
        let _ = writeln!(out, "  {v} -> {u} [label={}];", quote(&format!("e{i}*")));
    }
    out.push_str("}\n");
    out
}

/// `Θ`: `Ω` solid, copies of `Λ^(s)` dashed, copies of `Λ^(t)` dotted.
pub fn theta_dot(theta: &Theta) -> String {
    let g = &theta.graph;
    let mut out = String::from("graph theta {\n");
    for (v, o) in theta.origin.iter().enumerate() {
        let style = match o {
            VertexOrigin::Omega => "solid",
            VertexOrigin::LambdaS { .. } => "dashed",
            VertexOrigin::LambdaT { .. } => "dotted",
        };
        let _ = writeln!(out, "  {} [style={style}];", quote(g.name(v)));
    }
    for &(a, b) in g.edges() {
        let glued = [a, b].into_iter().map(|v| theta.origin[v]).find(|o| *o != VertexOrigin::Omega);
        let style = match glued {
            None => "solid",
            Some(VertexOrigin::LambdaS { .. }) => "dashed",
            Some(_) => "dotted",
        };
        let _ = writeln!(out, "  {} -- {} [style={style}];", quote(g.name(a)), quote(g.name(b)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxkit_core::theta::{build_theta, BipartiteADE};

    #[test]
    fn quoting() {
        assert_eq!(quote(r#"a"b\c"#), r#""a\"b\\c""#);
    }

    #[test]
    fn theta_styles() {
        let d = CoxeterDiagram::from_edges(&[("r", "s", 3), ("b", "s", 3), ("s", "t", 4), ("a", "t", 3), ("c", "t", 3)])
            .unwrap();
        let omega = MultiGraph::from_parts(&[], &[("s", "ts"), ("ts", "sts")]).unwrap();
        let omega = BipartiteADE::from_names(omega, &["s", "sts"]).unwrap();
        let dot = theta_dot(&build_theta(&d, &omega).unwrap());
        assert_eq!(dot.matches("--").count(), 8);
        assert_eq!(dot.lines().filter(|l| l.contains("--") && l.contains("dashed")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.contains("--") && l.contains("dotted")).count(), 2);
        assert!(dot.contains(r#""rs@s" [style=dashed];"#));
    }

    #[test]
    fn doubled_quiver_has_two_arrows_per_edge() {
        let g = MultiGraph::from_parts(&[], &[("1", "2"), ("2", "3"), ("2", "3")]).unwrap();
        assert_eq!(doubled_quiver_dot(&g).matches("->").count(), 6);
    }
}
