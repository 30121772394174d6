//! The tree `Λ^(s)` on a left cell and the combinatorial cell action.
//!
//! `Λ^(s)` has the elements of `L_s` as vertices and an edge `{u, v}`
//! whenever `u = t v > v`; in word terms `u` is `v` with one letter
//! prepended. Every vertex has exactly one left descent, its leftmost
//! letter.
//!
//! The action of `B_t` on indecomposable projectives is recorded by the
//! matrix `M_t = D_t · C`, where `C` is the Cartan matrix of the zig-zag
//! category of `Λ^(s)` and `D_t` selects the vertices with descent `t`.
//! Graded, `M_t(v) = v⁻¹ · D_t · C(v)`, so the two copies of `P_w` in
//! `B_t P_w` (for `tw < w`) carry shifts `v` and `v⁻¹` and everything else
//! is unshifted. [`verify_cell_action`] checks this against the case list
//! derived from the Kazhdan–Lusztig multiplication rule.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::diagram::CoxeterDiagram;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::matrix::{IntMatrix, LaurentMatrix};
use crate::words::{left_cell, left_multiply, LeftProduct, RigidWord};
use crate::zigzag::{build_zigzag, cartan_matrix, graded_cartan_matrix, MultiGraph};

/// An edge `u = t·v > v` of `Λ^(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaEdge {
    /// Vertex index of the longer element `u`.
    pub upper: usize,
    /// Vertex index of the shorter element `v`.
    pub lower: usize,
    /// The generator `t` with `u = t v`.
    pub label: usize,
}

/// The graph `Λ^(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaGraph {
    root: usize,
    vertices: Vec<RigidWord>,
    edges: Vec<LambdaEdge>,
    truncated: bool,
}

/// Builds `Λ^(s)`. A length cap is required when the small cell is infinite;
/// the result is then marked truncated if the cap cut anything off.
pub fn lambda_graph(d: &CoxeterDiagram, s: usize, max_len: Option<usize>) -> Result<LambdaGraph> {
    let cell = left_cell(d, s, max_len)?;
    let vertices = cell.words;
    let mut edges = Vec::new();
    for (upper, u) in vertices.iter().enumerate() {
        if u.len() < 2 {
            continue;
        }
        let LeftProduct::Shorter(Some(v)) = left_multiply(d, u.descent(), u)? else {
            unreachable!("a word of length >= 2 loses its first letter");
        };
        let lower = vertices.binary_search(&v).expect("left cells are suffix closed");
        edges.push(LambdaEdge { upper, lower, label: u.descent() });
    }
    Ok(LambdaGraph { root: s, vertices, edges, truncated: cell.truncated })
}

/// `P_x⟨shift⟩`: an indecomposable projective with a grading shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftedProjective {
    /// Vertex index of `x`.
    pub vertex: usize,
    /// Grading shift.
    pub shift: i32,
}

impl LambdaGraph {
    /// The generator `s`.
    pub fn root(&self) -> usize {
        self.root
    }

    /// Elements of `L_s`, shortest first; index 0 is `s`.
    pub fn vertices(&self) -> &[RigidWord] {
        &self.vertices
    }

    /// Edges ordered by their upper vertex.
    pub fn edges(&self) -> &[LambdaEdge] {
        &self.edges
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Whether a length cap removed vertices.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Left descent of vertex `i`.
    pub fn descent(&self, i: usize) -> usize {
        self.vertices[i].descent()
    }

    /// Vertex index of `w`, if it is in the graph.
    pub fn index_of(&self, w: &RigidWord) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    /// The underlying unlabeled graph, vertices named by their words.
    pub fn to_multigraph(&self, d: &CoxeterDiagram) -> MultiGraph {
        let mut g = MultiGraph::new();
        for w in &self.vertices {
            g.ensure_vertex(&w.display(d));
        }
        for e in &self.edges {
            g.add_edge(e.upper, e.lower).expect("distinct endpoints");
        }
        g
    }

    fn as_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new();
        for i in 0..self.vertex_count() {
            g.ensure_vertex(&alloc::format!("{i}"));
        }
        for e in &self.edges {
            g.add_edge(e.upper, e.lower).expect("distinct endpoints");
        }
        g
    }

    /// Cartan matrix of the zig-zag category `A^(s)`.
    pub fn cartan(&self) -> IntMatrix {
        cartan_matrix(&self.as_graph())
    }

    /// Graded Cartan matrix of `A^(s)`.
    pub fn graded_cartan(&self) -> LaurentMatrix {
        graded_cartan_matrix(&self.as_graph())
    }

    /// `B_t · L_x`: `P_x⟨1⟩` when `t` is the descent of `x`, zero otherwise.
    pub fn simple_action(&self, t: usize, x: usize) -> Option<ShiftedProjective> {
        (self.descent(x) == t).then_some(ShiftedProjective { vertex: x, shift: 1 })
    }

    /// Ungraded action matrix `M_t = D_t · C`; column `w` lists the
    /// multiplicities of each `P_x` in `B_t · P_w`.
    pub fn action_matrix(&self, t: usize) -> IntMatrix {
        let c = self.cartan();
        IntMatrix::from_fn(c.rows(), c.cols(), |x, w| if self.descent(x) == t { c[(x, w)] } else { 0 })
    }

    /// Graded action matrix `v⁻¹ · D_t · C(v)`.
    pub fn graded_action_matrix(&self, t: usize) -> LaurentMatrix {
        let c = self.graded_cartan();
        LaurentMatrix::from_fn(c.rows(), c.cols(), |x, w| {
            if self.descent(x) == t {
                c[(x, w)].shift(-1)
            } else {
                Laurent::zero()
            }
        })
    }
}

fn vertex_of(lambda: &LambdaGraph, x: &RigidWord) -> Result<usize> {
    lambda.index_of(x).ok_or(Error::NotInGraph(alloc::format!("{:?}", x.letters())))
}

/// `B_t · L_x` on the cell 2-representation of `L_s`.
pub fn simple_action(
    d: &CoxeterDiagram,
    s: usize,
    t: usize,
    x: &RigidWord,
) -> Result<Option<ShiftedProjective>> {
    if t >= d.len() {
        return Err(Error::LetterOutOfRange(t));
    }
    let lambda = lambda_graph(d, s, Some(x.len()))?;
    Ok(lambda.simple_action(t, vertex_of(&lambda, x)?))
}

/// Ungraded action matrix of `t` on `Λ^(s)` (finite cells only).
pub fn action_matrix(d: &CoxeterDiagram, s: usize, t: usize) -> Result<IntMatrix> {
    if t >= d.len() {
        return Err(Error::LetterOutOfRange(t));
    }
    Ok(lambda_graph(d, s, None)?.action_matrix(t))
}

/// Graded action matrix of `t` on `Λ^(s)` (finite cells only).
pub fn graded_action_matrix(d: &CoxeterDiagram, s: usize, t: usize) -> Result<LaurentMatrix> {
    if t >= d.len() {
        return Err(Error::LetterOutOfRange(t));
    }
    Ok(lambda_graph(d, s, None)?.graded_action_matrix(t))
}

/// Outcome of [`verify_cell_action`]. Every flag is `true` when the check
/// passed; all flags are `false` when the checks were skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CellActionReport {
    /// The graph was truncated and no identity was checked.
    pub skipped: bool,
    /// Every vertex has one descent, adjacent vertices have different
    /// descents, and each edge `{u, v}` labeled `t` has `t·u = v`.
    pub descents: bool,
    /// Each column agrees with the multiplicity case list
    /// (2 on a descent-`t` diagonal, 1 at `tw`, 1 at the lower neighbour
    /// with descent `t`, 0 elsewhere), graded and ungraded.
    pub case_list: bool,
    /// `Σ_t M_t` equals the Hom-dimension matrix of the zig-zag category.
    pub cartan_from_action: bool,
    /// `M_t² = 2 M_t`.
    pub hecke_ungraded: bool,
    /// `M_t(v)² = (v + v⁻¹) M_t(v)`, and `M_t(1) = M_t`.
    pub hecke_graded: bool,
    /// `M_tᵀ C = C M_t`.
    pub adjunction: bool,
    /// Entries lie in `{0, 1, 2}`, with 2 exactly on descent-`t` diagonal entries.
    pub entry_bounds: bool,
}

impl CellActionReport {
    /// True when checks ran and all passed.
    pub fn passed(&self) -> bool {
        !self.skipped
            && self.descents
            && self.case_list
            && self.cartan_from_action
            && self.hecke_ungraded
            && self.hecke_graded
            && self.adjunction
            && self.entry_bounds
    }
}

/// Checks the cell action on `Λ^(s)` against its defining identities.
pub fn verify_cell_action(d: &CoxeterDiagram, s: usize, max_len: Option<usize>) -> Result<CellActionReport> {
    let lambda = lambda_graph(d, s, max_len)?;
    if lambda.is_truncated() {
        return Ok(CellActionReport { skipped: true, ..Default::default() });
    }
    let n = lambda.vertex_count();
    let c = lambda.cartan();
    let q2 = Laurent::quantum_two();

    let mut descents = true;
    for e in lambda.edges() {
        descents &= lambda.descent(e.upper) != lambda.descent(e.lower);
        descents &= lambda.descent(e.upper) == e.label;
        descents &= left_multiply(d, e.label, &lambda.vertices()[e.upper])?
            == LeftProduct::Shorter(Some(lambda.vertices()[e.lower].clone()));
    }

    let mut report = CellActionReport {
        skipped: false,
        descents,
        case_list: true,
        cartan_from_action: true,
        hecke_ungraded: true,
        hecke_graded: true,
        adjunction: true,
        entry_bounds: true,
    };

    let mut total = IntMatrix::zeros(n, n);
    for t in 0..d.len() {
        let m = lambda.action_matrix(t);
        let mg = lambda.graded_action_matrix(t);
        total = &total + &m;

        for w in 0..n {
            let up = match left_multiply(d, t, &lambda.vertices()[w])? {
                LeftProduct::Longer(u) => lambda.index_of(&u),
                _ => None,
            };
            let below = lambda.edges().iter().find(|e| e.upper == w).map(|e| e.lower);
            let w_has_descent = lambda.descent(w) == t;
            for x in 0..n {
                let expected = if x == w && w_has_descent {
                    2
                } else if Some(x) == up
                    || (!w_has_descent && Some(x) == below && lambda.descent(x) == t)
                {
                    1
                } else {
                    0
                };
                let expected_graded = match expected {
                    2 => q2.clone(),
                    k => Laurent::constant(k),
                };
                report.case_list &= m[(x, w)] == expected && mg[(x, w)] == expected_graded;
                report.entry_bounds &= matches!(m[(x, w)], 0..=2)
                    && ((m[(x, w)] == 2) == (x == w && w_has_descent));
            }
        }

        report.hecke_ungraded &= &m * &m == m.scale(&2);
        report.hecke_graded &= &mg * &mg == mg.scale(&q2) && mg.eval_one() == m;
        report.adjunction &= &m.transpose() * &c == &c * &m;
    }
    let z = build_zigzag(&lambda.to_multigraph(d))?;
    report.cartan_from_action = total == z.hom_dimensions();
    Ok(report)
}
