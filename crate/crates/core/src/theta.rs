//! Rooted graphs, simply laced Dynkin data and the graph `Θ`.
//!
//! For a tree `Γ` with one labeled edge `{s, t}` of label `n` and a simply
//! laced Dynkin diagram `Ω` whose vertices are split into an `s`-class and a
//! `t`-class, `Θ` is obtained from `Ω` by attaching a copy of `Λ^(s)` (built
//! from `Γ^(s)`, rooted at `s`) at every `s`-class vertex and a copy of
//! `Λ^(t)` at every `t`-class vertex, via one point unions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::tree_form;
use crate::cellrep::lambda_graph;
use crate::diagram::{split_at_labeled_edge, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::zigzag::{build_zigzag, MultiGraph, ZigzagPresentation};

/// A graph with a distinguished vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    /// The graph.
    pub graph: MultiGraph,
    /// Index of the root.
    pub root: usize,
}

impl RootedGraph {
    /// Pairs a graph with a root, checking the root exists.
    pub fn new(graph: MultiGraph, root: usize) -> Result<Self> {
        if root >= graph.vertex_count() {
            return Err(Error::LetterOutOfRange(root));
        }
        Ok(RootedGraph { graph, root })
    }

    /// The one-vertex graph, the unit of [`one_point_union`].
    pub fn point(name: &str) -> Self {
        let mut graph = MultiGraph::new();
        graph.ensure_vertex(name);
        RootedGraph { graph, root: 0 }
    }

    /// Same graph, different root.
    pub fn with_root(mut self, root: usize) -> Result<Self> {
        if root >= self.graph.vertex_count() {
            return Err(Error::LetterOutOfRange(root));
        }
        self.root = root;
        Ok(self)
    }
}

// Union plus the position of each vertex of `y` in the result.
fn union_with_map(x: &RootedGraph, y: &RootedGraph) -> (RootedGraph, Vec<usize>) {
    let mut graph = x.graph.clone();
    let mut map = vec![x.root; y.graph.vertex_count()];
    for (v, name) in y.graph.vertices().iter().enumerate() {
        if v == y.root {
            continue;
        }
        let mut fresh = name.clone();
        while graph.index_of(&fresh).is_some() {
            fresh.push('\'');
        }
        map[v] = graph.add_vertex(&fresh).expect("name is fresh");
    }
    for &(a, b) in y.graph.edges() {
        graph.add_edge(map[a], map[b]).expect("loop-free input");
    }
    (RootedGraph { graph, root: x.root }, map)
}

/// `(Ξ, a) ∨ (Ξ', a')`: disjoint union with the two roots identified.
///
/// Vertices of `x` keep their names; a clashing name from `y` gets `'`
/// appended until it is unique. The root is the identified vertex.
pub fn one_point_union(x: &RootedGraph, y: &RootedGraph) -> RootedGraph {
    union_with_map(x, y).0
}

/// Type of a simply laced Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeType {
    /// `A_k`, `k >= 1`.
    A(u32),
    /// `D_k`, `k >= 4`.
    D(u32),
    /// `E_6`, `E_7`, `E_8`.
    E(u32),
}

impl AdeType {
    /// Number of vertices.
    pub fn rank(self) -> u32 {
        match self {
            AdeType::A(k) | AdeType::D(k) | AdeType::E(k) => k,
        }
    }

    /// The Coxeter number `h`.
    pub fn coxeter_number(self) -> u32 {
        match self {
            AdeType::A(k) => k + 1,
            AdeType::D(k) => 2 * k - 2,
            AdeType::E(6) => 12,
            AdeType::E(7) => 18,
            AdeType::E(8) => 30,
            AdeType::E(k) => unreachable!("no E{k}"),
        }
    }

    /// The standard diagram, vertices `1..=k` in Bourbaki numbering.
    pub fn diagram(self) -> MultiGraph {
        let k = self.rank() as usize;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match self {
            AdeType::A(_) => edges.extend((1..k).map(|i| (i, i + 1))),
            AdeType::D(_) => {
                edges.extend((1..k - 2).map(|i| (i, i + 1)));
                edges.push((k - 2, k - 1));
                edges.push((k - 2, k));
            }
            AdeType::E(_) => {
                edges.push((1, 3));
                edges.extend((3..k).map(|i| (i, i + 1)));
                edges.push((2, 4));
            }
        }
        let mut g = MultiGraph::new();
        for i in 1..=k {
            g.ensure_vertex(&i.to_string());
        }
        for (a, b) in edges {
            g.add_edge(a - 1, b - 1).expect("no loops");
        }
        g
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(k) => write!(f, "A{k}"),
            AdeType::D(k) => write!(f, "D{k}"),
            AdeType::E(k) => write!(f, "E{k}"),
        }
    }
}

/// Recognises a simply laced Dynkin diagram.
pub fn classify_ade(g: &MultiGraph) -> Option<AdeType> {
    if !g.is_tree() {
        return None;
    }
    let n = g.vertex_count() as u32;
    let branch: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Some(AdeType::A(n)),
        [c] if g.degree(*c) == 3 => {
            let mut arms: Vec<u32> = g
                .neighbors(*c)
                .map(|first| {
                    let (mut prev, mut cur, mut len) = (*c, first, 1);
                    while let Some(next) = g.neighbors(cur).find(|&w| w != prev) {
                        (prev, cur, len) = (cur, next, len + 1);
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(AdeType::D(n)),
                [1, 2, 2..=4] => Some(AdeType::E(n)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Order of the Coxeter element `s_1 s_2 ⋯ s_k` acting on the root lattice,
/// with `s_i(α_j) = α_j − a_ij α_i` for the Cartan matrix `a = 2I − A`.
/// Returns `None` if the order exceeds `limit`.
pub fn coxeter_element_order(g: &MultiGraph, limit: u64) -> Option<u64> {
    let n = g.vertex_count();
    let adjacency = g.adjacency();
    let cartan = |i: usize, j: usize| if i == j { 2 } else { -adjacency[(i, j)] };
    let mut c = IntMatrix::identity(n);
    for i in 0..n {
        let reflection = IntMatrix::from_fn(n, n, |r, j| (r == j) as i64 - (r == i) as i64 * cartan(i, j));
        c = &c * &reflection;
    }
    let id = IntMatrix::identity(n);
    let mut power = c.clone();
    for k in 1..=limit {
        if power == id {
            return Some(k);
        }
        power = &power * &c;
    }
    None
}

/// A simply laced Dynkin diagram with its vertices split into the
/// `s`-class and the `t`-class; every edge joins the two classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteADE {
    kind: AdeType,
    graph: MultiGraph,
    class_s: Vec<usize>,
    class_t: Vec<usize>,
}

impl BipartiteADE {
    /// Validates the diagram and the bipartition given by its `s`-class.
    pub fn new(graph: MultiGraph, class_s: &[usize]) -> Result<Self> {
        let kind = classify_ade(&graph).ok_or(Error::NotAde)?;
        let n = graph.vertex_count();
        let mut in_s = vec![false; n];
        for &v in class_s {
            if v >= n {
                return Err(Error::LetterOutOfRange(v));
            }
            in_s[v] = true;
        }
        if let Some(&(a, b)) = graph.edges().iter().find(|&&(a, b)| in_s[a] == in_s[b]) {
            return Err(Error::NotBipartite(format!(
                "edge {} -- {} stays inside one class",
                graph.name(a),
                graph.name(b)
            )));
        }
        Ok(BipartiteADE {
            kind,
            class_s: (0..n).filter(|&v| in_s[v]).collect(),
            class_t: (0..n).filter(|&v| !in_s[v]).collect(),
            graph,
        })
    }

    /// Same as [`BipartiteADE::new`] with the `s`-class given by name.
    pub fn from_names(graph: MultiGraph, class_s: &[&str]) -> Result<Self> {
        let idx = class_s
            .iter()
            .map(|n| graph.index_of(n).ok_or_else(|| Error::UnknownVertex(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, &idx)
    }

    /// Dynkin type.
    pub fn kind(&self) -> AdeType {
        self.kind
    }

    /// The Coxeter number of the diagram.
    pub fn coxeter_number(&self) -> u32 {
        self.kind.coxeter_number()
    }

    /// The diagram `Ω`.
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    /// Vertices `u` with `B_s L_u ≠ 0`.
    pub fn class_s(&self) -> &[usize] {
        &self.class_s
    }

    /// Vertices `u` with `B_t L_u ≠ 0`.
    pub fn class_t(&self) -> &[usize] {
        &self.class_t
    }

    /// The same diagram with the classes exchanged.
    pub fn swapped(&self) -> Self {
        BipartiteADE {
            kind: self.kind,
            graph: self.graph.clone(),
            class_s: self.class_t.clone(),
            class_t: self.class_s.clone(),
        }
    }

    fn canonical_form(&self) -> String {
        let colors: Vec<u32> = (0..self.graph.vertex_count())
            .map(|v| self.class_s.binary_search(&v).is_ok() as u32)
            .collect();
        tree_form(&self.graph, Some(&colors)).expect("Dynkin diagrams are trees")
    }
}

/// Simply laced Dynkin diagrams with Coxeter number `n`, each with both
/// class assignments, up to diagram automorphism.
///
/// `A_{n−1}` always occurs; `D_{(n+2)/2}` for even `n >= 6`; `E_6`, `E_7`,
/// `E_8` for `n = 12, 18, 30`.
pub fn ade_catalog(n: u32) -> Result<Vec<BipartiteADE>> {
    if n < 3 {
        return Err(Error::InvalidCoxeterNumber(n));
    }
    let mut kinds = vec![AdeType::A(n - 1)];
    if n % 2 == 0 && n >= 6 {
        kinds.push(AdeType::D((n + 2) / 2));
    }
    match n {
        12 => kinds.push(AdeType::E(6)),
        18 => kinds.push(AdeType::E(7)),
        30 => kinds.push(AdeType::E(8)),
        _ => {}
    }
    let mut out = Vec::new();
    for kind in kinds {
        let graph = kind.diagram();
        // 2-colour from vertex 1
        let mut color = vec![None; graph.vertex_count()];
        color[0] = Some(false);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in graph.neighbors(v) {
                if color[w].is_none() {
                    color[w] = Some(!color[v].expect("visited"));
                    stack.push(w);
                }
            }
        }
        let even: Vec<usize> = (0..graph.vertex_count()).filter(|&v| color[v] == Some(false)).collect();
        let first = BipartiteADE::new(graph, &even)?;
        let second = first.swapped();
        let mut seen = BTreeSet::new();
        for entry in [first, second] {
            if seen.insert(entry.canonical_form()) {
                out.push(entry);
            }
        }
    }
    Ok(out)
}

/// Where a vertex of `Θ` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrigin {
    /// A vertex of `Ω`.
    Omega,
    /// A non-root vertex of the copy of `Λ^(s)` glued at `anchor`.
    LambdaS {
        /// The `Ω` vertex the copy is glued to.
        anchor: usize,
    },
    /// A non-root vertex of the copy of `Λ^(t)` glued at `anchor`.
    LambdaT {
        /// The `Ω` vertex the copy is glued to.
        anchor: usize,
    },
}

/// The graph `Θ` with the origin of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta {
    /// The glued graph. Vertices of `Ω` come first and keep their names;
    /// glued vertices are named `<word>@<Ω vertex>`.
    pub graph: MultiGraph,
    /// Origin of each vertex of `graph`.
    pub origin: Vec<VertexOrigin>,
}

/// `Λ^(r)` of the unlabeled side `side`, as a rooted graph named by words.
fn side_lambda(side: &CoxeterDiagram, root_name: &str) -> Result<(RootedGraph, Vec<String>)> {
    let r = side.index_of(root_name)?;
    let lambda = lambda_graph(side, r, None)?;
    let words = lambda.vertices().iter().map(|w| w.display(side)).collect();
    Ok((RootedGraph { graph: lambda.to_multigraph(side), root: 0 }, words))
}

fn attach(
    theta: &mut RootedGraph,
    origin: &mut Vec<VertexOrigin>,
    lambda: &(RootedGraph, Vec<String>),
    anchor: usize,
    tag: fn(usize) -> VertexOrigin,
) {
    let anchor_name = theta.graph.name(anchor).to_string();
    let mut copy = MultiGraph::new();
    for (i, w) in lambda.1.iter().enumerate() {
        if i == lambda.0.root {
            copy.ensure_vertex(&anchor_name);
        } else {
            copy.ensure_vertex(&format!("{w}@{anchor_name}"));
        }
    }
    for &(a, b) in lambda.0.graph.edges() {
        copy.add_edge(a, b).expect("tree edges");
    }
    let rooted = theta.clone().with_root(anchor).expect("anchor is a vertex");
    let (merged, _) = union_with_map(&rooted, &RootedGraph { graph: copy, root: lambda.0.root });
    origin.resize(merged.graph.vertex_count(), tag(anchor));
    *theta = merged;
}

/// Builds `Θ` for a tree `d` with one finite labeled edge and a bipartite
/// Dynkin diagram `omega`.
pub fn build_theta(d: &CoxeterDiagram, omega: &BipartiteADE) -> Result<Theta> {
    let split = split_at_labeled_edge(d)?;
    let lambda_s = side_lambda(&split.gamma_s, d.name(split.s))?;
    let lambda_t = side_lambda(&split.gamma_t, d.name(split.t))?;

    let mut theta = RootedGraph { graph: omega.graph().clone(), root: 0 };
    let mut origin = vec![VertexOrigin::Omega; omega.graph().vertex_count()];
    for &u in omega.class_s() {
        attach(&mut theta, &mut origin, &lambda_s, u, |anchor| VertexOrigin::LambdaS { anchor });
    }
    for &w in omega.class_t() {
        attach(&mut theta, &mut origin, &lambda_t, w, |anchor| VertexOrigin::LambdaT { anchor });
    }
    Ok(Theta { graph: theta.graph, origin })
}

/// The zig-zag presentation `A^Θ`.
pub fn two_rep_category(d: &CoxeterDiagram, omega: &BipartiteADE) -> Result<ZigzagPresentation> {
    build_zigzag(&build_theta(d, omega)?.graph)
}
