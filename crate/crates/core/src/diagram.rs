//! Coxeter–Dynkin diagrams.
//!
//! A diagram has one vertex per simple reflection and an edge `{s, t}`
//! whenever `m(s, t) >= 3`. Commuting pairs (`m = 2`) are encoded by the
//! absence of an edge; an edge without explicit label has `m = 3`.
//!
//! Vertices are addressed by their index, which is their declaration order.
//! Every list this crate emits follows that order.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Name of a simple reflection: a nonempty token over `[A-Za-z0-9_]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(String);

impl Generator {
    /// Validates `name` and wraps it.
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_name(name) {
            Ok(Generator(name.to_string()))
        } else {
            Err(Error::InvalidName(name.to_string()))
        }
    }

    /// The name as a string slice.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Returns true if `name` is a legal generator token.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// The Coxeter label `m(s, t)` of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// `m(s, t) = m` with `m >= 3`.
    Finite(u32),
    /// `m(s, t) = ∞`.
    Infinite,
}

impl EdgeLabel {
    /// The default label of an edge, `m = 3`.
    pub const UNLABELED: EdgeLabel = EdgeLabel::Finite(3);

    /// Builds a finite label, rejecting `m < 3`.
    pub fn finite(m: u64) -> Result<Self> {
        match u32::try_from(m) {
            Ok(m) if m >= 3 => Ok(EdgeLabel::Finite(m)),
            _ => Err(Error::InvalidLabel(m)),
        }
    }

    /// An edge is labeled when `m != 3`.
    pub fn is_labeled(self) -> bool {
        self != Self::UNLABELED
    }

    /// `Some(m)` for finite labels.
    pub fn order(self) -> Option<u32> {
        match self {
            EdgeLabel::Finite(m) => Some(m),
            EdgeLabel::Infinite => None,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Finite(m) => write!(f, "{m}"),
            EdgeLabel::Infinite => f.write_str("inf"),
        }
    }
}

/// An edge of the diagram, endpoints in declaration order of the edge line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// First endpoint.
    pub u: usize,
    /// Second endpoint.
    pub v: usize,
    /// Coxeter label.
    pub label: EdgeLabel,
}

/// Incremental constructor for [`CoxeterDiagram`].
#[derive(Debug, Clone, Default)]
pub struct DiagramBuilder {
    names: Vec<Generator>,
    edges: Vec<Edge>,
}

impl DiagramBuilder {
    /// Declares a vertex. Declaring an existing name is an error.
    pub fn vertex(&mut self, name: &str) -> Result<usize> {
        if self.lookup(name).is_some() {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        self.names.push(Generator::new(name)?);
        Ok(self.names.len() - 1)
    }

    /// Adds an edge, declaring unknown endpoints on first use.
    pub fn edge(&mut self, a: &str, b: &str, label: EdgeLabel) -> Result<usize> {
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        if let EdgeLabel::Finite(m) = label {
            if m < 3 {
                return Err(Error::InvalidLabel(m.into()));
            }
        }
        let u = self.declare(a)?;
        let v = self.declare(b)?;
        if self
            .edges
            .iter()
            .any(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
        {
            return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
        }
        self.edges.push(Edge { u, v, label });
        Ok(self.edges.len() - 1)
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|g| g.as_str() == name)
    }

    fn declare(&mut self, name: &str) -> Result<usize> {
        match self.lookup(name) {
            Some(i) => Ok(i),
            None => self.vertex(name),
        }
    }

    /// Finishes construction.
    pub fn build(self) -> CoxeterDiagram {
        let n = self.names.len();
        let mut bonds = vec![None; n * n];
        for e in &self.edges {
            bonds[e.u * n + e.v] = Some(e.label);
            bonds[e.v * n + e.u] = Some(e.label);
        }
        CoxeterDiagram {
            names: self.names,
            edges: self.edges,
            bonds,
        }
    }
}

/// A Coxeter–Dynkin diagram `(Γ₀, Γ₁, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    names: Vec<Generator>,
    edges: Vec<Edge>,
    // n*n table of labels, `None` for commuting pairs and the diagonal
    bonds: Vec<Option<EdgeLabel>>,
}

impl CoxeterDiagram {
    /// Starts an empty diagram.
    pub fn builder() -> DiagramBuilder {
        DiagramBuilder::default()
    }

    /// Builds a diagram from vertex names followed by labeled edges.
    pub fn from_parts(vertices: &[&str], edges: &[(&str, &str, EdgeLabel)]) -> Result<Self> {
        let mut b = Self::builder();
        for v in vertices {
            b.vertex(v)?;
        }
        for (x, y, m) in edges {
            b.edge(x, y, *m)?;
        }
        Ok(b.build())
    }

    /// Builds a diagram from edges alone; vertices appear in order of first use.
    pub fn from_edges(edges: &[(&str, &str, u32)]) -> Result<Self> {
        let mut b = Self::builder();
        for &(x, y, m) in edges {
            b.edge(x, y, EdgeLabel::finite(m.into())?)?;
        }
        Ok(b.build())
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// True for the diagram with no vertices.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Generators in declaration order.
    pub fn generators(&self) -> &[Generator] {
        &self.names
    }

    /// Name of vertex `i`.
    pub fn name(&self, i: usize) -> &str {
        self.names[i].as_str()
    }

    /// Index of the generator called `name`.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|g| g.as_str() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Edges in declaration order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The label of `{a, b}`, or `None` when `a` and `b` commute or coincide.
    #[inline]
    pub fn bond(&self, a: usize, b: usize) -> Option<EdgeLabel> {
        self.bonds[a * self.names.len() + b]
    }

    /// `m(a, b)` as an integer, `None` meaning infinity.
    pub fn coxeter_order(&self, a: usize, b: usize) -> Option<u32> {
        if a == b {
            return Some(1);
        }
        match self.bond(a, b) {
            None => Some(2),
            Some(l) => l.order(),
        }
    }

    /// Neighbours of `v` in declaration order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&u| self.bond(v, u).is_some())
    }

    /// Edges whose label differs from 3.
    pub fn labeled_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.label.is_labeled())
    }

    /// Whether every vertex is reachable from vertex 0. The empty diagram is not connected.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        self.bfs_parents(0).iter().all(Option::is_some)
    }

    /// Connected with `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.len()
    }

    pub(crate) fn check_connected(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyDiagram)
        } else if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// BFS parent pointers from `root`; the root points at itself.
    fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.len()];
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if parent[w].is_none() {
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// The full subdiagram on `vertices`, kept in the given order.
    pub fn induced(&self, vertices: &[usize]) -> CoxeterDiagram {
        let mut b = Self::builder();
        for &v in vertices {
            b.names.push(self.names[v].clone());
        }
        for e in &self.edges {
            let u = vertices.iter().position(|&x| x == e.u);
            let v = vertices.iter().position(|&x| x == e.v);
            if let (Some(u), Some(v)) = (u, v) {
                b.edges.push(Edge { u, v, label: e.label });
            }
        }
        b.build()
    }
}

/// Why the small cell is, or is not, finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinitenessReason {
    /// Tree, at most one labeled edge, all labels finite.
    Finite,
    /// A simple cycle, listed without repeating its first vertex.
    CycleFound(Vec<usize>),
    /// An edge with label `∞`.
    InfiniteLabel(Edge),
    /// Two distinct labeled edges.
    TwoLabeledEdges(Edge, Edge),
}

/// Outcome of [`finiteness_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessVerdict {
    /// Whether the small cell is finite.
    pub finite: bool,
    /// Witness for the verdict.
    pub reason: FinitenessReason,
}

/// Decides whether the small cell of the (connected) diagram is finite.
///
/// `J` is finite iff the diagram is a tree with at most one labeled edge and
/// no infinite label. When several obstructions coexist the witness is, in
/// order of preference, a cycle, an infinite label, then two labeled edges.
pub fn finiteness_check(d: &CoxeterDiagram) -> Result<FinitenessVerdict> {
    d.check_connected()?;
    let reason = if let Some(cycle) = find_cycle(d) {
        FinitenessReason::CycleFound(cycle)
    } else if let Some(e) = d.edges().iter().find(|e| e.label == EdgeLabel::Infinite) {
        FinitenessReason::InfiniteLabel(*e)
    } else {
        let mut labeled = d.labeled_edges();
        match (labeled.next(), labeled.next()) {
            (Some(a), Some(b)) => FinitenessReason::TwoLabeledEdges(*a, *b),
            _ => FinitenessReason::Finite,
        }
    };
    Ok(FinitenessVerdict {
        finite: reason == FinitenessReason::Finite,
        reason,
    })
}

// A cycle in a connected simple graph, rotated to start at its smallest
// vertex and oriented towards the smaller of that vertex's two cycle neighbours.
fn find_cycle(d: &CoxeterDiagram) -> Option<Vec<usize>> {
    let parent = d.bfs_parents(0);
    let parent = |v: usize| parent[v].unwrap_or(v);
    let is_tree_edge = |e: &Edge| parent(e.u) == e.v || parent(e.v) == e.u;
    let chord = d.edges().iter().find(|e| !is_tree_edge(e))?;

    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while parent(v) != v {
            v = parent(v);
            path.push(v);
        }
        path
    };
    let up = ancestors(chord.u);
    let mut down = ancestors(chord.v);
    let lca = *up.iter().find(|x| down.contains(x))?;
    let mut cycle: Vec<usize> = up.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    down.truncate(down.iter().position(|&x| x == lca)?);
    cycle.extend(down.iter().rev());

    let start = (0..cycle.len()).min_by_key(|&i| cycle[i])?;
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    Some(cycle)
}

/// The decomposition of a one-labeled-edge tree at its labeled edge `{s, t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitData {
    /// First endpoint of the labeled edge.
    pub s: usize,
    /// Second endpoint of the labeled edge.
    pub t: usize,
    /// The label `n` of `{s, t}`.
    pub label: u32,
    /// Component of `Γ ∖ {t}` containing `s`.
    pub gamma_s: CoxeterDiagram,
    /// Component of `Γ ∖ {s}` containing `t`.
    pub gamma_t: CoxeterDiagram,
    /// Indices in the full diagram of the vertices of `gamma_s`, in order.
    pub s_side: Vec<usize>,
    /// Indices in the full diagram of the vertices of `gamma_t`, in order.
    pub t_side: Vec<usize>,
    /// `pi[v]` is `s` for vertices of `gamma_s` and `t` otherwise.
    pub pi: Vec<usize>,
}

impl SplitData {
    /// `π(v)`.
    pub fn pi(&self, v: usize) -> usize {
        self.pi[v]
    }
}

/// The unique labeled edge of a tree, with its finite label.
pub fn unique_labeled_edge(d: &CoxeterDiagram) -> Result<(Edge, u32)> {
    d.check_connected()?;
    if !d.is_tree() {
        return Err(Error::NotATree);
    }
    let mut labeled = d.labeled_edges();
    let e = *labeled.next().ok_or(Error::NoLabeledEdge)?;
    if labeled.next().is_some() {
        return Err(Error::MultipleLabeledEdges);
    }
    match e.label {
        EdgeLabel::Finite(m) => Ok((e, m)),
        EdgeLabel::Infinite => Err(Error::InfiniteLabel(
            d.name(e.u).to_string(),
            d.name(e.v).to_string(),
        )),
    }
}

/// Splits a tree with exactly one (finite) labeled edge at that edge.
pub fn split_at_labeled_edge(d: &CoxeterDiagram) -> Result<SplitData> {
    let (e, label) = unique_labeled_edge(d)?;
    let (s, t) = (e.u, e.v);
    // In a tree, v lies on the s-side iff the path from v to t passes through s.
    let pi: Vec<usize> = (0..d.len())
        .map(|v| {
            let path = tree_path(d, v, t).expect("diagram is a tree");
            if path.contains(&s) {
                s
            } else {
                t
            }
        })
        .collect();
    let s_side: Vec<usize> = (0..d.len()).filter(|&v| pi[v] == s).collect();
    let t_side: Vec<usize> = (0..d.len()).filter(|&v| pi[v] == t).collect();
    Ok(SplitData {
        s,
        t,
        label,
        gamma_s: d.induced(&s_side),
        gamma_t: d.induced(&t_side),
        s_side,
        t_side,
        pi,
    })
}

/// Vertex sequence of the unique simple path from `a` to `b`, both included.
pub fn tree_path(d: &CoxeterDiagram, a: usize, b: usize) -> Result<Vec<usize>> {
    for v in [a, b] {
        if v >= d.len() {
            return Err(Error::LetterOutOfRange(v));
        }
    }
    if !d.is_tree() {
        return Err(Error::NotATree);
    }
    let parent = d.bfs_parents(b);
    let mut path = vec![a];
    let mut v = a;
    while v != b {
        v = parent[v].expect("tree is connected");
        path.push(v);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> CoxeterDiagram {
        CoxeterDiagram::from_edges(&[("1", "4", 3), ("2", "4", 3), ("3", "4", 3), ("5", "4", 3)])
            .unwrap()
    }

    fn example2() -> CoxeterDiagram {
        CoxeterDiagram::from_edges(&[("1", "2", 3), ("2", "3", 4), ("3", "4", 3), ("3", "5", 3)])
            .unwrap()
    }

    fn names(d: &CoxeterDiagram, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| d.name(v).to_string()).collect()
    }

    #[test]
    fn builder_rejects_bad_input() {
        let mut b = CoxeterDiagram::builder();
        assert_eq!(b.edge("a", "a", EdgeLabel::UNLABELED), Err(Error::SelfLoop("a".into())));
        b.edge("a", "b", EdgeLabel::UNLABELED).unwrap();
        assert!(matches!(b.edge("b", "a", EdgeLabel::UNLABELED), Err(Error::DuplicateEdge(..))));
        assert!(matches!(b.vertex("a"), Err(Error::DuplicateVertex(_))));
        assert!(matches!(b.vertex("a-b"), Err(Error::InvalidName(_))));
        assert_eq!(EdgeLabel::finite(2), Err(Error::InvalidLabel(2)));
        assert_eq!(EdgeLabel::finite(1), Err(Error::InvalidLabel(1)));
    }

    #[test]
    fn finiteness_examples() {
        assert!(finiteness_check(&star()).unwrap().finite);
        assert!(finiteness_check(&example2()).unwrap().finite);

        let tri = CoxeterDiagram::from_edges(&[("a", "b", 3), ("b", "c", 3), ("c", "a", 3)]).unwrap();
        let v = finiteness_check(&tri).unwrap();
        assert_eq!(v.reason, FinitenessReason::CycleFound(vec![0, 1, 2]));

        let two = CoxeterDiagram::from_edges(&[("a", "b", 4), ("b", "c", 3), ("c", "d", 5)]).unwrap();
        assert!(matches!(
            finiteness_check(&two).unwrap().reason,
            FinitenessReason::TwoLabeledEdges(..)
        ));

        let inf = CoxeterDiagram::from_parts(&[], &[("a", "b", EdgeLabel::Infinite)]).unwrap();
        assert!(matches!(
            finiteness_check(&inf).unwrap().reason,
            FinitenessReason::InfiniteLabel(_)
        ));

        let single = CoxeterDiagram::from_parts(&["a"], &[]).unwrap();
        assert!(finiteness_check(&single).unwrap().finite);
    }

    #[test]
    fn disconnected_is_an_error() {
        let d = CoxeterDiagram::from_parts(&["a", "b"], &[]).unwrap();
        assert_eq!(finiteness_check(&d), Err(Error::Disconnected));
        assert_eq!(finiteness_check(&CoxeterDiagram::builder().build()), Err(Error::EmptyDiagram));
    }

    #[test]
    fn split_example2() {
        let d = example2();
        let sp = split_at_labeled_edge(&d).unwrap();
        assert_eq!((d.name(sp.s), d.name(sp.t), sp.label), ("2", "3", 4));
        assert_eq!(names(&d, &sp.s_side), ["1", "2"]);
        assert_eq!(names(&d, &sp.t_side), ["3", "4", "5"]);
        assert_eq!(d.name(sp.pi(d.index_of("1").unwrap())), "2");
        assert_eq!(d.name(sp.pi(d.index_of("4").unwrap())), "3");
        assert_eq!(sp.gamma_s.len(), 2);
        assert_eq!(sp.gamma_t.edges().len(), 2);
    }

    #[test]
    fn split_errors() {
        let edge = CoxeterDiagram::from_edges(&[("s", "t", 5)]).unwrap();
        let sp = split_at_labeled_edge(&edge).unwrap();
        assert_eq!((sp.gamma_s.len(), sp.gamma_t.len()), (1, 1));

        assert_eq!(split_at_labeled_edge(&star()), Err(Error::NoLabeledEdge));
        let two = CoxeterDiagram::from_edges(&[("a", "b", 4), ("b", "c", 5)]).unwrap();
        assert_eq!(split_at_labeled_edge(&two), Err(Error::MultipleLabeledEdges));
        let tri = CoxeterDiagram::from_edges(&[("a", "b", 4), ("b", "c", 3), ("c", "a", 3)]).unwrap();
        assert_eq!(split_at_labeled_edge(&tri), Err(Error::NotATree));
    }

    #[test]
    fn tree_paths() {
        let d = star();
        let i = |n| d.index_of(n).unwrap();
        assert_eq!(names(&d, &tree_path(&d, i("4"), i("5")).unwrap()), ["4", "5"]);
        assert_eq!(tree_path(&d, i("1"), i("1")).unwrap(), [i("1")]);
        let d = example2();
        let i = |n| d.index_of(n).unwrap();
        assert_eq!(names(&d, &tree_path(&d, i("1"), i("5")).unwrap()), ["1", "2", "3", "5"]);
        assert_eq!(tree_path(&d, 0, 9), Err(Error::LetterOutOfRange(9)));
    }
}
