//! JSON documents emitted by the command line tool.
//!
//! Every document type derives both `Serialize` and `Deserialize`, so the
//! output of `--json` reads back into the same value. Words are written the
//! way [`coxkit_core::Word::display`] prints them.

use std::collections::BTreeMap;

use coxkit_core::cellrep::LambdaGraph;
use coxkit_core::diagram::{Edge, FinitenessReason, FinitenessVerdict};
use coxkit_core::oracle::{OracleReport, OracleStatus};
use coxkit_core::theta::{BipartiteADE, Theta, VertexOrigin};
use coxkit_core::words::{CellEnumeration, CellTable};
use coxkit_core::zigzag::ZigzagBasisElement;
use coxkit_core::{CoxeterDiagram, EdgeLabel, Error, IntMatrix, Laurent, LaurentMatrix, MultiGraph, RigidWord, ZigzagPresentation};
use serde::{Deserialize, Serialize};

/// A Coxeter label: an integer or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelJson {
    /// Finite `m >= 3`.
    Finite(u32),
    /// Must be `"inf"`.
    Infinite(InfTag),
}

/// The literal string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfTag {
    /// `"inf"`
    #[serde(rename = "inf")]
    Inf,
}

impl From<EdgeLabel> for LabelJson {
    fn from(label: EdgeLabel) -> Self {
        match label {
            EdgeLabel::Finite(m) => LabelJson::Finite(m),
            EdgeLabel::Infinite => LabelJson::Infinite(InfTag::Inf),
        }
    }
}

/// One labeled or unlabeled edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    /// First endpoint.
    pub u: String,
    /// Second endpoint.
    pub v: String,
    /// Label.
    pub m: LabelJson,
}

impl EdgeJson {
    fn new(d: &CoxeterDiagram, e: &Edge) -> Self {
        EdgeJson { u: d.name(e.u).to_string(), v: d.name(e.v).to_string(), m: e.label.into() }
    }
}

/// `{"vertices":[...], "edges":[{"u","v","m"}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    /// Generators in declaration order.
    pub vertices: Vec<String>,
    /// Edges in declaration order.
    pub edges: Vec<EdgeJson>,
}

impl DiagramJson {
    /// Exports a diagram.
    pub fn new(d: &CoxeterDiagram) -> Self {
        DiagramJson {
            vertices: d.generators().iter().map(|g| g.to_string()).collect(),
            edges: d.edges().iter().map(|e| EdgeJson::new(d, e)).collect(),
        }
    }

    /// Rebuilds the diagram.
    pub fn to_diagram(&self) -> Result<CoxeterDiagram, Error> {
        let mut b = CoxeterDiagram::builder();
        for v in &self.vertices {
            b.vertex(v)?;
        }
        for e in &self.edges {
            let label = match e.m {
                LabelJson::Finite(m) => EdgeLabel::finite(m.into())?,
                LabelJson::Infinite(_) => EdgeLabel::Infinite,
            };
            b.edge(&e.u, &e.v, label)?;
        }
        Ok(b.build())
    }
}

/// Witness of a finiteness verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReasonJson {
    /// `"finite"`
    Finite,
    /// `{"cycle":[...]}`
    Cycle(Vec<String>),
    /// `{"infinite_label":{"u","v","m"}}`
    InfiniteLabel(EdgeJson),
    /// `{"two_labeled_edges":[e, f]}`
    TwoLabeledEdges([EdgeJson; 2]),
}

/// `{"finite":bool, "reason":...}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    /// Whether the small cell is finite.
    pub finite: bool,
    /// Witness.
    pub reason: ReasonJson,
}

impl VerdictJson {
    /// Exports a verdict.
    pub fn new(d: &CoxeterDiagram, v: &FinitenessVerdict) -> Self {
        let reason = match &v.reason {
            FinitenessReason::Finite => ReasonJson::Finite,
            FinitenessReason::CycleFound(c) => ReasonJson::Cycle(c.iter().map(|&i| d.name(i).to_string()).collect()),
            FinitenessReason::InfiniteLabel(e) => ReasonJson::InfiniteLabel(EdgeJson::new(d, e)),
            FinitenessReason::TwoLabeledEdges(a, b) => {
                ReasonJson::TwoLabeledEdges([EdgeJson::new(d, a), EdgeJson::new(d, b)])
            }
        };
        VerdictJson { finite: v.finite, reason }
    }
}

fn words(d: &CoxeterDiagram, ws: &[RigidWord]) -> Vec<String> {
    ws.iter().map(|w| w.display(d)).collect()
}

/// A list of small-cell elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsJson {
    /// Elements in length-then-lexicographic order.
    pub words: Vec<String>,
    /// Number of elements.
    pub count: usize,
    /// True if longer elements were cut off.
    pub truncated: bool,
}

impl WordsJson {
    /// Exports an enumeration.
    pub fn new(d: &CoxeterDiagram, e: &CellEnumeration) -> Self {
        WordsJson { words: words(d, &e.words), count: e.len(), truncated: e.truncated }
    }
}

/// One row of a cell table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    /// The right cell `R_t` of the row.
    pub t: String,
    /// `L_s ∩ R_t` for each `s` in declaration order.
    pub cells: Vec<Vec<String>>,
}

/// `{"rows":[{"t", "cells"}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    /// Rows in declaration order.
    pub rows: Vec<TableRowJson>,
}

impl TableJson {
    /// Exports a table.
    pub fn new(d: &CoxeterDiagram, table: &CellTable) -> Self {
        let rows = (0..table.size())
            .map(|t| TableRowJson {
                t: d.name(t).to_string(),
                cells: (0..table.size()).map(|s| words(d, table.cell(t, s))).collect(),
            })
            .collect();
        TableJson { rows }
    }
}

/// Result of the braid-orbit oracle on one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    /// The word examined.
    pub word: String,
    /// `"not_reduced"`, `"reduced_unique"` or `"reduced_multiple"`.
    pub status: String,
    /// Size of the braid orbit.
    pub orbit_size: usize,
    /// Verdict of the local rigidity test, for comparison.
    pub rigid: bool,
}

/// Stable name of an oracle status.
pub fn status_name(s: OracleStatus) -> &'static str {
    match s {
        OracleStatus::NotReduced => "not_reduced",
        OracleStatus::ReducedUnique => "reduced_unique",
        OracleStatus::ReducedMultiple => "reduced_multiple",
    }
}

impl OracleJson {
    /// Exports an oracle report.
    pub fn new(word: String, report: &OracleReport, rigid: bool) -> Self {
        OracleJson { word, status: status_name(report.status).to_string(), orbit_size: report.orbit_size, rigid }
    }
}

/// A vertex of `Λ^(s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaVertexJson {
    /// The element.
    pub word: String,
    /// Its unique left descent.
    pub descent: String,
}

/// An edge `upper = t · lower` of `Λ^(s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaEdgeJson {
    /// Longer endpoint.
    pub upper: String,
    /// Shorter endpoint.
    pub lower: String,
}

/// The graph `Λ^(s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaJson {
    /// Root `s`.
    pub root: String,
    /// Vertices in cell order.
    pub vertices: Vec<LambdaVertexJson>,
    /// Edges.
    pub edges: Vec<LambdaEdgeJson>,
    /// True if the graph was cut at a length cap.
    pub truncated: bool,
}

impl LambdaJson {
    /// Exports `Λ^(s)`.
    pub fn new(d: &CoxeterDiagram, l: &LambdaGraph) -> Self {
        let name = |i: usize| l.vertices()[i].display(d);
        LambdaJson {
            root: name(l.root()),
            vertices: (0..l.vertex_count())
                .map(|i| LambdaVertexJson { word: name(i), descent: d.name(l.descent(i)).to_string() })
                .collect(),
            edges: l.edges().iter().map(|e| LambdaEdgeJson { upper: name(e.upper), lower: name(e.lower) }).collect(),
            truncated: l.is_truncated(),
        }
    }
}

/// A Laurent polynomial as `{"exponent": coefficient}`.
pub type LaurentJson = BTreeMap<String, i64>;

/// Exports a Laurent polynomial.
pub fn laurent_json(p: &Laurent) -> LaurentJson {
    p.terms().map(|(e, c)| (e.to_string(), c)).collect()
}

/// Reads a Laurent polynomial back.
pub fn laurent_from_json(map: &LaurentJson) -> Result<Laurent, std::num::ParseIntError> {
    let terms = map.iter().map(|(e, &c)| Ok((e.parse::<i32>()?, c))).collect::<Result<Vec<_>, _>>()?;
    Ok(Laurent::from_terms(terms))
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.iter_rows().map(<[i64]>::to_vec).collect()
}

fn laurent_rows(m: &LaurentMatrix) -> Vec<Vec<LaurentJson>> {
    m.iter_rows().map(|r| r.iter().map(laurent_json).collect()).collect()
}

/// Action of `B_t` on a cell: `{"generator", "vertices", "ungraded", "graded"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActJson {
    /// The acting generator `t`.
    pub generator: String,
    /// Row and column labels.
    pub vertices: Vec<String>,
    /// `M_t`.
    pub ungraded: Vec<Vec<i64>>,
    /// `M_t(v)`.
    pub graded: Vec<Vec<LaurentJson>>,
}

impl ActJson {
    /// Exports the two action matrices.
    pub fn new(d: &CoxeterDiagram, l: &LambdaGraph, t: usize) -> Self {
        ActJson {
            generator: d.name(t).to_string(),
            vertices: l.vertices().iter().map(|w| w.display(d)).collect(),
            ungraded: int_rows(&l.action_matrix(t)),
            graded: laurent_rows(&l.graded_action_matrix(t)),
        }
    }
}

/// A basis element of a zig-zag category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisJson {
    /// `e_a`
    Idempotent {
        /// Vertex.
        vertex: String,
    },
    /// A degree one arrow.
    Arrow {
        /// Index of the underlying edge.
        edge: usize,
        /// Source vertex.
        source: String,
        /// Target vertex.
        target: String,
    },
    /// The degree two loop.
    Loop {
        /// Vertex.
        vertex: String,
    },
}

/// Zig-zag data of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagJson {
    /// Vertices.
    pub vertices: Vec<String>,
    /// Edges as name pairs.
    pub edges: Vec<[String; 2]>,
    /// Total dimension.
    pub dimension: usize,
    /// Basis.
    pub basis: Vec<BasisJson>,
    /// Hom-space dimensions.
    pub cartan: Vec<Vec<i64>>,
    /// Graded Hom-space dimensions.
    pub graded_cartan: Vec<Vec<LaurentJson>>,
}

fn edge_names(g: &MultiGraph) -> Vec<[String; 2]> {
    g.edges().iter().map(|&(a, b)| [g.name(a).to_string(), g.name(b).to_string()]).collect()
}

impl ZigzagJson {
    /// Exports a zig-zag presentation.
    pub fn new(z: &ZigzagPresentation) -> Self {
        let g = z.graph();
        let name = |v: usize| g.name(v).to_string();
        let basis = z
            .basis()
            .iter()
            .map(|b| match *b {
                ZigzagBasisElement::Idempotent(v) => BasisJson::Idempotent { vertex: name(v) },
                ZigzagBasisElement::Arrow { edge, source, target } => {
                    BasisJson::Arrow { edge, source: name(source), target: name(target) }
                }
                ZigzagBasisElement::Loop(v) => BasisJson::Loop { vertex: name(v) },
            })
            .collect();
        ZigzagJson {
            vertices: g.vertices().to_vec(),
            edges: edge_names(g),
            dimension: z.dimension(),
            basis,
            cartan: int_rows(&z.hom_dimensions()),
            graded_cartan: laurent_rows(&z.graded_hom_dimensions()),
        }
    }
}

/// Provenance of a vertex of `Θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OriginJson {
    /// A vertex of `Ω`.
    Omega,
    /// From a copy of `Λ^(s)`.
    LambdaS,
    /// From a copy of `Λ^(t)`.
    LambdaT,
}

/// A vertex of `Θ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaVertexJson {
    /// Name.
    pub name: String,
    /// Provenance.
    pub origin: OriginJson,
    /// The `Ω` vertex a glued copy hangs from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
}

/// The graph `Θ` and the dimension of its zig-zag category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaJson {
    /// Vertices with provenance.
    pub vertices: Vec<ThetaVertexJson>,
    /// Edges as name pairs.
    pub edges: Vec<[String; 2]>,
    /// Dimension of `A^Θ`.
    pub dimension: usize,
}

impl ThetaJson {
    /// Exports `Θ`.
    pub fn new(theta: &Theta, dimension: usize) -> Self {
        let g = &theta.graph;
        let vertices = theta
            .origin
            .iter()
            .enumerate()
            .map(|(v, o)| {
                let (origin, anchor) = match *o {
                    VertexOrigin::Omega => (OriginJson::Omega, None),
                    VertexOrigin::LambdaS { anchor } => (OriginJson::LambdaS, Some(anchor)),
                    VertexOrigin::LambdaT { anchor } => (OriginJson::LambdaT, Some(anchor)),
                };
                ThetaVertexJson { name: g.name(v).to_string(), origin, anchor: anchor.map(|a| g.name(a).to_string()) }
            })
            .collect();
        ThetaJson { vertices, edges: edge_names(g), dimension }
    }
}

/// One bipartite Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    /// Type, e.g. `"E6"`.
    #[serde(rename = "type")]
    pub kind: String,
    /// Vertices (Bourbaki numbering).
    pub vertices: Vec<String>,
    /// Edges.
    pub edges: Vec<[String; 2]>,
    /// The `s`-class.
    pub class_s: Vec<String>,
    /// The `t`-class.
    pub class_t: Vec<String>,
    /// Order of a Coxeter element, computed independently of the type.
    pub coxeter_element_order: Option<u64>,
}

/// `{"coxeter_number", "entries"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogJson {
    /// The requested Coxeter number.
    pub coxeter_number: u32,
    /// Entries.
    pub entries: Vec<CatalogEntryJson>,
}

impl CatalogEntryJson {
    /// Exports a catalog entry together with its oracle value.
    pub fn new(e: &BipartiteADE, order: Option<u64>) -> Self {
        let g = e.graph();
        let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v).to_string()).collect();
        CatalogEntryJson {
            kind: e.kind().to_string(),
            vertices: g.vertices().to_vec(),
            edges: edge_names(g),
            class_s: names(e.class_s()),
            class_t: names(e.class_t()),
            coxeter_element_order: order,
        }
    }
}
