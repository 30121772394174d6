//! Zig-zag categories of loop-free multigraphs.
//!
//! For an unoriented graph `Ω` without loops, `A^Ω` is the path category of
//! the doubled quiver `Ω̃` modulo: paths of length three vanish, paths of
//! length two between distinct vertices vanish, and all paths of length two
//! from a vertex back to itself coincide. A basis is given by the vertex
//! idempotents (degree 0), the arrows of `Ω̃` (degree 1) and one loop at each
//! vertex that has an edge (degree 2).
//!
//! Composition is written `x ∘ y` for "first `y`, then `x`".

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::matrix::{IntMatrix, LaurentMatrix};

/// An unoriented multigraph without loops. Parallel edges are allowed and
/// are told apart by their index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiGraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    /// The empty graph.
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph from vertex names and name pairs.
    pub fn from_parts(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (a, b) in edges {
            let (a, b) = (g.ensure_vertex(a), g.ensure_vertex(b));
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds a vertex; names must be unique.
    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.index_of(name).is_some() {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    /// Index of `name`, adding it if absent.
    pub fn ensure_vertex(&mut self, name: &str) -> usize {
        match self.index_of(name) {
            Some(i) => i,
            None => {
                self.vertices.push(name.to_string());
                self.vertices.len() - 1
            }
        }
    }

    /// Adds the edge `{a, b}` and returns its index.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<usize> {
        for v in [a, b] {
            if v >= self.vertices.len() {
                return Err(Error::LetterOutOfRange(v));
            }
        }
        if a == b {
            return Err(Error::LoopEdge(self.vertices[a].clone()));
        }
        self.edges.push((a, b));
        Ok(self.edges.len() - 1)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges, counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex names in insertion order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Name of vertex `v`.
    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// Edges as index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of the vertex called `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Number of edges between `a` and `b`.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
            .count()
    }

    /// Number of edge ends at `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(x, y)| (x == v) as usize + (y == v) as usize).sum()
    }

    /// Whether `v` has at least one edge.
    pub fn is_incident(&self, v: usize) -> bool {
        self.edges.iter().any(|&(x, y)| x == v || y == v)
    }

    /// Neighbours of `v` with multiplicity, in edge order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(x, y)| {
            if x == v {
                Some(y)
            } else if y == v {
                Some(x)
            } else {
                None
            }
        })
    }

    /// Whether the graph is connected (the empty graph is not).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected with `|E| = |V| - 1` (hence no parallel edges).
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// The adjacency matrix, counting parallel edges.
    pub fn adjacency(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut a = IntMatrix::zeros(n, n);
        for &(x, y) in &self.edges {
            a[(x, y)] += 1;
            a[(y, x)] += 1;
        }
        a
    }
}

/// A basis element of `A^Ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZigzagBasisElement {
    /// The identity at a vertex, degree 0.
    Idempotent(usize),
    /// The arrow of `Ω̃` along edge `edge` from `source` to `target`, degree 1.
    Arrow {
        /// Edge index in the underlying multigraph.
        edge: usize,
        /// Tail.
        source: usize,
        /// Head.
        target: usize,
    },
    /// The common class of all length-two loops at a vertex, degree 2.
    Loop(usize),
}

impl ZigzagBasisElement {
    /// Path length.
    pub fn degree(&self) -> u32 {
        match self {
            Self::Idempotent(_) => 0,
            Self::Arrow { .. } => 1,
            Self::Loop(_) => 2,
        }
    }

    /// Start vertex.
    pub fn source(&self) -> usize {
        match *self {
            Self::Idempotent(v) | Self::Loop(v) => v,
            Self::Arrow { source, .. } => source,
        }
    }

    /// End vertex.
    pub fn target(&self) -> usize {
        match *self {
            Self::Idempotent(v) | Self::Loop(v) => v,
            Self::Arrow { target, .. } => target,
        }
    }
}

/// The graded basis and multiplication of `A^Ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagPresentation {
    graph: MultiGraph,
    basis: Vec<ZigzagBasisElement>,
}

/// Builds the presentation: idempotents, then both arrows of each edge
/// (`u → v` before `v → u`), then the loops.
pub fn build_zigzag(g: &MultiGraph) -> Result<ZigzagPresentation> {
    if let Some(&(a, _)) = g.edges().iter().find(|(a, b)| a == b) {
        return Err(Error::LoopEdge(g.name(a).to_string()));
    }
    let n = g.vertex_count();
    let mut basis: Vec<ZigzagBasisElement> = (0..n).map(ZigzagBasisElement::Idempotent).collect();
    for (edge, &(u, v)) in g.edges().iter().enumerate() {
        basis.push(ZigzagBasisElement::Arrow { edge, source: u, target: v });
        basis.push(ZigzagBasisElement::Arrow { edge, source: v, target: u });
    }
    basis.extend((0..n).filter(|&v| g.is_incident(v)).map(ZigzagBasisElement::Loop));
    Ok(ZigzagPresentation { graph: g.clone(), basis })
}

impl ZigzagPresentation {
    /// The underlying graph `Ω`.
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    /// All basis elements.
    pub fn basis(&self) -> &[ZigzagBasisElement] {
        &self.basis
    }

    /// `dim A^Ω`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `x` is a basis element of this presentation.
    pub fn contains(&self, x: &ZigzagBasisElement) -> bool {
        match *x {
            ZigzagBasisElement::Idempotent(v) => v < self.graph.vertex_count(),
            ZigzagBasisElement::Loop(v) => v < self.graph.vertex_count() && self.graph.is_incident(v),
            ZigzagBasisElement::Arrow { edge, source, target } => {
                self.graph.edges().get(edge).is_some_and(|&(a, b)| {
                    (a, b) == (source, target) || (b, a) == (source, target)
                })
            }
        }
    }

    /// `x ∘ y` ("`y` then `x`"); `Ok(None)` is the zero morphism.
    pub fn compose(
        &self,
        x: ZigzagBasisElement,
        y: ZigzagBasisElement,
    ) -> Result<Option<ZigzagBasisElement>> {
        use ZigzagBasisElement::*;
        if !self.contains(&x) || !self.contains(&y) || x.source() != y.target() {
            return Err(Error::NotComposable);
        }
        Ok(match (x, y) {
            (Idempotent(_), y) => Some(y),
            (x, Idempotent(_)) => Some(x),
            (Arrow { target, .. }, Arrow { source, .. }) => (target == source).then_some(Loop(source)),
            _ => None,
        })
    }

    /// The multiplication table over the basis: entry `[i][j]` is
    /// `basis[i] ∘ basis[j]`, `None` when not composable and `Some(None)`
    /// when the composite is zero.
    pub fn composition_table(&self) -> Vec<Vec<Option<Option<usize>>>> {
        let position = |e: ZigzagBasisElement| self.basis.iter().position(|&b| b == e);
        self.basis
            .iter()
            .map(|&x| {
                self.basis
                    .iter()
                    .map(|&y| self.compose(x, y).ok().map(|r| r.and_then(position)))
                    .collect()
            })
            .collect()
    }

    /// `dim Hom(P_u, P_w)` counted as basis paths from `u` to `w`.
    pub fn hom_dimensions(&self) -> IntMatrix {
        let n = self.graph.vertex_count();
        let mut c = IntMatrix::zeros(n, n);
        for b in &self.basis {
            c[(b.source(), b.target())] += 1;
        }
        c
    }

    /// Graded Hom dimensions: each basis path contributes `v^degree`.
    pub fn graded_hom_dimensions(&self) -> LaurentMatrix {
        let n = self.graph.vertex_count();
        let mut c = LaurentMatrix::zeros(n, n);
        for b in &self.basis {
            c[(b.source(), b.target())] += Laurent::monomial(1, b.degree() as i32);
        }
        c
    }
}

/// Cartan matrix `C[v,v] = 2` for vertices with an edge, `1` for isolated
/// ones, and `C[u,w] = #edges{u,w}` off the diagonal.
pub fn cartan_matrix(g: &MultiGraph) -> IntMatrix {
    let mut c = g.adjacency();
    for v in 0..g.vertex_count() {
        c[(v, v)] = if g.is_incident(v) { 2 } else { 1 };
    }
    c
}

/// Graded Cartan matrix `(1+v²)` on incident diagonal entries, `1` on
/// isolated ones, and `v · #edges` off the diagonal.
pub fn graded_cartan_matrix(g: &MultiGraph) -> LaurentMatrix {
    let a = g.adjacency();
    LaurentMatrix::from_fn(g.vertex_count(), g.vertex_count(), |r, c| {
        if r == c {
            if g.is_incident(r) {
                Laurent::from_terms([(0, 1), (2, 1)])
            } else {
                Laurent::constant(1)
            }
        } else if a[(r, c)] == 0 {
            Laurent::zero()
        } else {
            Laurent::monomial(a[(r, c)], 1)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ZigzagBasisElement::*;

    fn path3() -> MultiGraph {
        MultiGraph::from_parts(&[], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn dimensions() {
        let single = MultiGraph::from_parts(&["x"], &[]).unwrap();
        let z = build_zigzag(&single).unwrap();
        assert_eq!(z.basis(), [Idempotent(0)]);

        let g = MultiGraph::from_parts(&[], &[("1", "2"), ("2", "3"), ("2", "3")]).unwrap();
        let z = build_zigzag(&g).unwrap();
        assert_eq!(z.dimension(), 12);
        assert_eq!(z.basis().iter().filter(|b| b.degree() == 1).count(), 6);

        let ab = MultiGraph::from_parts(&[], &[("a", "b")]).unwrap();
        assert_eq!(build_zigzag(&ab).unwrap().dimension(), 6);
    }

    #[test]
    fn loops_rejected() {
        let mut g = MultiGraph::new();
        let a = g.add_vertex("a").unwrap();
        assert_eq!(g.add_edge(a, a), Err(Error::LoopEdge("a".into())));
    }

    #[test]
    fn cartan_examples() {
        let c = cartan_matrix(&path3());
        assert_eq!(c, IntMatrix::from_fn(3, 3, |r, k| [[2, 1, 0], [1, 2, 1], [0, 1, 2]][r][k]));
        assert_eq!(cartan_matrix(&MultiGraph::from_parts(&["x"], &[]).unwrap()), IntMatrix::identity(1));
        let g = MultiGraph::from_parts(&[], &[("1", "2"), ("2", "3"), ("2", "3")]).unwrap();
        assert_eq!(cartan_matrix(&g)[(1, 2)], 2);
        assert_eq!(cartan_matrix(&g), build_zigzag(&g).unwrap().hom_dimensions());
    }

    #[test]
    fn graded_cartan_examples() {
        let ab = MultiGraph::from_parts(&[], &[("a", "b")]).unwrap();
        let c = graded_cartan_matrix(&ab);
        let d = Laurent::from_terms([(0, 1), (2, 1)]);
        assert_eq!(c, LaurentMatrix::from_fn(2, 2, |r, k| if r == k { d.clone() } else { Laurent::v() }));
        assert_eq!(graded_cartan_matrix(&path3()).eval_one(), cartan_matrix(&path3()));
        assert_eq!(c, build_zigzag(&ab).unwrap().graded_hom_dimensions());
    }

    #[test]
    fn composition_rules() {
        let ab = MultiGraph::from_parts(&[], &[("a", "b")]).unwrap();
        let z = build_zigzag(&ab).unwrap();
        let ab_arrow = Arrow { edge: 0, source: 0, target: 1 };
        let ba_arrow = Arrow { edge: 0, source: 1, target: 0 };
        assert_eq!(z.compose(ba_arrow, ab_arrow), Ok(Some(Loop(0))));
        assert_eq!(z.compose(ab_arrow, Idempotent(0)), Ok(Some(ab_arrow)));
        assert_eq!(z.compose(ab_arrow, Loop(0)), Ok(None));
        assert_eq!(z.compose(Loop(0), ab_arrow), Err(Error::NotComposable));
        assert_eq!(z.compose(Loop(1), ab_arrow), Ok(None));

        let abc = path3();
        let z = build_zigzag(&abc).unwrap();
        let ab_arrow = Arrow { edge: 0, source: 0, target: 1 };
        let bc_arrow = Arrow { edge: 1, source: 1, target: 2 };
        assert_eq!(z.compose(bc_arrow, ab_arrow), Ok(None));
    }

    #[test]
    fn parallel_edges_share_the_loop() {
        let g = MultiGraph::from_parts(&[], &[("a", "b"), ("a", "b")]).unwrap();
        let z = build_zigzag(&g).unwrap();
        let there = Arrow { edge: 0, source: 0, target: 1 };
        let back_e = Arrow { edge: 0, source: 1, target: 0 };
        let back_f = Arrow { edge: 1, source: 1, target: 0 };
        assert_eq!(z.compose(back_f, there), z.compose(back_e, there));
        assert_eq!(z.compose(back_f, there), Ok(Some(Loop(0))));
    }

    #[test]
    fn table_marks_zero_and_non_composable() {
        let z = build_zigzag(&MultiGraph::from_parts(&[], &[("a", "b")]).unwrap()).unwrap();
        let table = z.composition_table();
        // Idempotent(0) ∘ Idempotent(1) is not composable
        assert_eq!(table[0][1], None);
        assert_eq!(table[0][0], Some(Some(0)));
    }
}
