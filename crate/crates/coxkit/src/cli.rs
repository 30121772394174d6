//! The `coxkit` command line.
//!
//! Exit status is 0 on success, 2 for usage errors, unreadable or malformed
//! files and unmet preconditions, and 1 for internal failures.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use coxkit_core::cellrep::lambda_graph;
use coxkit_core::diagram::{finiteness_check, split_at_labeled_edge, FinitenessReason};
use coxkit_core::oracle::oracle_unique_reduced;
use coxkit_core::theta::{ade_catalog, build_theta, coxeter_element_order, BipartiteADE, VertexOrigin};
use coxkit_core::words::{self, is_rigid, tabulate, CellEnumeration};
use coxkit_core::zigzag::{build_zigzag, ZigzagBasisElement};
use coxkit_core::{CoxeterDiagram, Error, MultiGraph, RigidWord};
use serde::Serialize;

use crate::{dot, format, json, parallel, render};

/// Command line arguments.
#[derive(Debug, Parser)]
#[command(name = "coxkit", version, about = "Small Kazhdan-Lusztig cells of Coxeter systems and their 2-representations")]
pub struct Cli {
    /// Print JSON instead of aligned text.
    #[arg(long, global = true, conflicts_with = "dot")]
    pub json: bool,
    /// Print Graphviz DOT (check, lambda, zigzag, theta).
    #[arg(long, global = true)]
    pub dot: bool,
    /// Worker threads for cell enumeration.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// What to compute.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the small cell is finite.
    Check {
        /// Diagram file (.cox).
        file: PathBuf,
    },
    /// List the small cell.
    Cell {
        /// Diagram file (.cox).
        file: PathBuf,
        /// Longest word to list; required when the cell is infinite.
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
    },
    /// List L_s ∩ R_t: words starting with t and ending with s.
    Intersect {
        /// Diagram file (.cox).
        file: PathBuf,
        /// The left cell L_s (last letter).
        #[arg(long, value_name = "s")]
        left: String,
        /// The right cell R_t (first letter).
        #[arg(long, value_name = "t")]
        right: String,
        /// Longest word to list; required when the cell is infinite.
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
    },
    /// Print the cell table of a finite small cell.
    Table {
        /// Diagram file (.cox).
        file: PathBuf,
    },
    /// Braid-orbit closure of a word.
    Oracle {
        /// Diagram file (.cox).
        file: PathBuf,
        /// The word, compact or space-separated.
        #[arg(long, value_name = "W", allow_hyphen_values = true)]
        word: String,
        /// Largest orbit to explore.
        #[arg(long, value_name = "N", default_value_t = coxkit_core::oracle::DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// The graph Λ^(s) on the left cell L_s.
    Lambda {
        /// Diagram file (.cox).
        file: PathBuf,
        /// The generator s.
        #[arg(long, value_name = "s")]
        cell: String,
        /// Longest word to include; required when the cell is infinite.
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
    },
    /// Zig-zag category of a multigraph.
    Zigzag {
        /// Multigraph file.
        file: PathBuf,
        /// Print the Cartan matrix.
        #[arg(long, conflicts_with = "graded_cartan")]
        cartan: bool,
        /// Print the graded Cartan matrix.
        #[arg(long)]
        graded_cartan: bool,
        /// With --dot, draw the graph itself instead of its doubled quiver.
        #[arg(long)]
        undirected: bool,
    },
    /// Matrix of B_t acting on the cell 2-representation of L_s.
    Act {
        /// Diagram file (.cox).
        file: PathBuf,
        /// The left cell L_s.
        #[arg(long, value_name = "s")]
        cell: String,
        /// The acting generator t.
        #[arg(long, value_name = "t")]
        by: String,
        /// Print the graded matrix M_t(v).
        #[arg(long)]
        graded: bool,
        /// Longest word to include; required when the cell is infinite.
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
    },
    /// The graph Θ of a tree with one labeled edge and a bipartite Dynkin diagram.
    Theta {
        /// Diagram file (.cox).
        file: PathBuf,
        /// Multigraph file holding the Dynkin diagram Ω.
        #[arg(long, value_name = "FILE")]
        omega: PathBuf,
        /// Vertices of Ω in the s-class; the rest form the t-class.
        #[arg(long, value_name = "v1,v2,...", value_delimiter = ',', required = true)]
        class_s: Vec<String>,
    },
    /// Bipartite simply laced Dynkin diagrams with a given Coxeter number.
    Catalog {
        /// The Coxeter number n >= 3.
        #[arg(long, value_name = "n")]
        coxeter_number: u32,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

struct Ctx<'a> {
    json: bool,
    dot: bool,
    parallel: bool,
    notes: &'a mut Vec<String>,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<CoxeterDiagram, Failure> {
    format::parse_cox(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<MultiGraph, Failure> {
    format::parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Outcome {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn no_dot(ctx: &Ctx<'_>, command: &str) -> Result<(), Failure> {
    if ctx.dot {
        return Err(Failure::Input(format!("--dot is not available for {command}")));
    }
    Ok(())
}

fn enumerate(
    ctx: &Ctx<'_>,
    d: &CoxeterDiagram,
    seeds: Vec<RigidWord>,
    max_len: Option<usize>,
) -> Result<CellEnumeration, Failure> {
    if max_len.is_none() && !finiteness_check(d)?.finite {
        return Err(Error::InfiniteCell.into());
    }
    Ok(if ctx.parallel {
        parallel::extend_breadth_first(d, seeds, max_len)
    } else {
        words::extend_breadth_first(d, seeds, max_len)
    })
}

fn word_list(d: &CoxeterDiagram, e: &CellEnumeration, max_len: Option<usize>) -> String {
    let mut out = String::new();
    for w in &e.words {
        let _ = writeln!(out, "{}", w.display(d));
    }
    let _ = match (e.truncated, max_len) {
        (true, Some(cap)) => writeln!(out, "({} elements, truncated at length {cap})", e.len()),
        _ => writeln!(out, "({} elements)", e.len()),
    };
    out
}

fn check(ctx: &Ctx<'_>, file: &Path) -> Outcome {
    let d = load_diagram(file)?;
    let verdict = finiteness_check(&d)?;
    if ctx.dot {
        return Ok(dot::diagram_dot(&d));
    }
    if ctx.json {
        return to_json(&json::VerdictJson::new(&d, &verdict));
    }
    let edge = |e: &coxkit_core::diagram::Edge| format!("{} -- {} ({})", d.name(e.u), d.name(e.v), e.label);
    Ok(match &verdict.reason {
        FinitenessReason::Finite => "finite\n".to_string(),
        FinitenessReason::CycleFound(c) => {
            let names: Vec<&str> = c.iter().map(|&v| d.name(v)).collect();
            format!("infinite: cycle {}\n", names.join(" "))
        }
        FinitenessReason::InfiniteLabel(e) => format!("infinite: label inf on {}\n", edge(e)),
        FinitenessReason::TwoLabeledEdges(a, b) => {
            format!("infinite: two labeled edges {} and {}\n", edge(a), edge(b))
        }
    })
}

fn cell(ctx: &Ctx<'_>, file: &Path, max_len: Option<usize>) -> Outcome {
    no_dot(ctx, "cell")?;
    let d = load_diagram(file)?;
    let seeds = (0..d.len()).map(RigidWord::generator).collect();
    let e = enumerate(ctx, &d, seeds, max_len)?;
    if ctx.json {
        return to_json(&json::WordsJson::new(&d, &e));
    }
    Ok(word_list(&d, &e, max_len))
}

fn intersect(ctx: &Ctx<'_>, file: &Path, left: &str, right: &str, max_len: Option<usize>) -> Outcome {
    no_dot(ctx, "intersect")?;
    let d = load_diagram(file)?;
    let (s, t) = (d.index_of(left)?, d.index_of(right)?);
    let mut e = enumerate(ctx, &d, vec![RigidWord::generator(s)], max_len)?;
    e.words.retain(|w| w.right_cell() == t);
    if ctx.json {
        return to_json(&json::WordsJson::new(&d, &e));
    }
    Ok(word_list(&d, &e, max_len))
}

fn table(ctx: &Ctx<'_>, file: &Path) -> Outcome {
    no_dot(ctx, "table")?;
    let d = load_diagram(file)?;
    let seeds = (0..d.len()).map(RigidWord::generator).collect();
    let table = tabulate(d.len(), enumerate(ctx, &d, seeds, None)?.words);
    if ctx.json {
        return to_json(&json::TableJson::new(&d, &table));
    }
    Ok(render::table_text(&d, &table))
}

fn oracle(ctx: &Ctx<'_>, file: &Path, word: &str, cap: usize) -> Outcome {
    no_dot(ctx, "oracle")?;
    let d = load_diagram(file)?;
    let w = format::parse_word(&d, word)?;
    let report = oracle_unique_reduced(&d, &w, cap)?;
    let rigid = !w.is_empty() && is_rigid(&d, &w)?;
    let j = json::OracleJson::new(w.display(&d), &report, rigid);
    if ctx.json {
        return to_json(&j);
    }
    let rows = [
        ["word".to_string(), j.word],
        ["status".into(), j.status],
        ["orbit size".into(), j.orbit_size.to_string()],
        ["rigid".into(), if rigid { "yes" } else { "no" }.into()],
    ];
    Ok(render::aligned(&rows.map(Vec::from)))
}

fn lambda(ctx: &Ctx<'_>, file: &Path, cell: &str, max_len: Option<usize>) -> Outcome {
    let d = load_diagram(file)?;
    let l = lambda_graph(&d, d.index_of(cell)?, max_len)?;
    if ctx.dot {
        return Ok(dot::lambda_dot(&d, &l));
    }
    let j = json::LambdaJson::new(&d, &l);
    if ctx.json {
        return to_json(&j);
    }
    let mut rows = vec![vec!["vertex".to_string(), "descent".to_string()]];
    rows.extend(j.vertices.iter().map(|v| vec![v.word.clone(), v.descent.clone()]));
    let mut out = render::aligned(&rows);
    out.push('\n');
    for e in &j.edges {
        let _ = writeln!(out, "{} -- {}", e.upper, e.lower);
    }
    if j.truncated {
        let _ = writeln!(out, "(truncated at length {})", max_len.unwrap_or_default());
    }
    Ok(out)
}

fn zigzag(ctx: &Ctx<'_>, file: &Path, cartan: bool, graded: bool, undirected: bool) -> Outcome {
    let g = load_graph(file)?;
    if ctx.dot {
        return Ok(if undirected { dot::graph_dot(&g) } else { dot::doubled_quiver_dot(&g) });
    }
    let z = build_zigzag(&g)?;
    if ctx.json {
        return to_json(&json::ZigzagJson::new(&z));
    }
    let labels = g.vertices().to_vec();
    if cartan {
        return Ok(render::int_matrix_text(&labels, &z.hom_dimensions()));
    }
    if graded {
        return Ok(render::laurent_matrix_text(&labels, &z.graded_hom_dimensions()));
    }
    let mut rows = vec![vec!["element".to_string(), "degree".into(), "from".into(), "to".into()]];
    for b in z.basis() {
        let name = match *b {
            ZigzagBasisElement::Idempotent(v) => format!("e_{}", g.name(v)),
            ZigzagBasisElement::Arrow { edge, source, target } => {
                format!("{}->{}#{edge}", g.name(source), g.name(target))
            }
            ZigzagBasisElement::Loop(v) => format!("loop_{}", g.name(v)),
        };
        rows.push(vec![name, b.degree().to_string(), g.name(b.source()).into(), g.name(b.target()).into()]);
    }
    Ok(format!("dimension {}\n\n{}", z.dimension(), render::aligned(&rows)))
}

fn act(ctx: &Ctx<'_>, file: &Path, cell: &str, by: &str, graded: bool, max_len: Option<usize>) -> Outcome {
    no_dot(ctx, "act")?;
    let d = load_diagram(file)?;
    let (s, t) = (d.index_of(cell)?, d.index_of(by)?);
    let l = lambda_graph(&d, s, max_len)?;
    if ctx.json {
        return to_json(&json::ActJson::new(&d, &l, t));
    }
    let labels: Vec<String> = l.vertices().iter().map(|w| w.display(&d)).collect();
    Ok(if graded {
        render::laurent_matrix_text(&labels, &l.graded_action_matrix(t))
    } else {
        render::int_matrix_text(&labels, &l.action_matrix(t))
    })
}

fn theta(ctx: &mut Ctx<'_>, file: &Path, omega: &Path, class_s: &[String]) -> Outcome {
    let d = load_diagram(file)?;
    let names: Vec<&str> = class_s.iter().map(String::as_str).collect();
    let omega = BipartiteADE::from_names(load_graph(omega)?, &names)?;
    let theta = build_theta(&d, &omega)?;
    let label = split_at_labeled_edge(&d)?.label;
    if omega.coxeter_number() != label {
        ctx.notes.push(format!(
            "note: {} has Coxeter number {}, the labeled edge has label {label}",
            omega.kind(),
            omega.coxeter_number()
        ));
    }
    if ctx.dot {
        return Ok(dot::theta_dot(&theta));
    }
    let dimension = build_zigzag(&theta.graph)?.dimension();
    let j = json::ThetaJson::new(&theta, dimension);
    if ctx.json {
        return to_json(&j);
    }
    let mut rows = vec![vec!["vertex".to_string(), "origin".into(), "anchor".into()]];
    for (v, o) in theta.origin.iter().enumerate() {
        let (origin, anchor) = match *o {
            VertexOrigin::Omega => ("omega", String::new()),
            VertexOrigin::LambdaS { anchor } => ("lambda_s", theta.graph.name(anchor).to_string()),
            VertexOrigin::LambdaT { anchor } => ("lambda_t", theta.graph.name(anchor).to_string()),
        };
        rows.push(vec![theta.graph.name(v).to_string(), origin.into(), anchor]);
    }
    let mut out = render::aligned(&rows);
    out.push('\n');
    for e in &j.edges {
        let _ = writeln!(out, "{} -- {}", e[0], e[1]);
    }
    let _ = writeln!(out, "\n{} vertices, {} edges, zig-zag dimension {dimension}", j.vertices.len(), j.edges.len());
    Ok(out)
}

fn catalog(ctx: &Ctx<'_>, n: u32) -> Outcome {
    no_dot(ctx, "catalog")?;
    let entries: Vec<json::CatalogEntryJson> = ade_catalog(n)?
        .iter()
        .map(|e| json::CatalogEntryJson::new(e, coxeter_element_order(e.graph(), u64::from(n) + 1)))
        .collect();
    if entries.iter().any(|e| e.coxeter_element_order != Some(u64::from(n))) {
        return Err(Failure::Internal(format!("catalog entry for {n} fails the Coxeter element check")));
    }
    if ctx.json {
        return to_json(&json::CatalogJson { coxeter_number: n, entries });
    }
    let mut rows = vec![vec!["type".to_string(), "class_s".into(), "class_t".into(), "h".into()]];
    for e in entries {
        rows.push(vec![
            e.kind,
            e.class_s.join(","),
            e.class_t.join(","),
            e.coxeter_element_order.map_or_else(|| "?".into(), |h| h.to_string()),
        ]);
    }
    Ok(render::aligned(&rows))
}

fn dispatch(ctx: &mut Ctx<'_>, command: &Command) -> Outcome {
    match command {
        Command::Check { file } => check(ctx, file),
        Command::Cell { file, max_len } => cell(ctx, file, *max_len),
        Command::Intersect { file, left, right, max_len } => intersect(ctx, file, left, right, *max_len),
        Command::Table { file } => table(ctx, file),
        Command::Oracle { file, word, cap } => oracle(ctx, file, word, *cap),
        Command::Lambda { file, cell, max_len } => lambda(ctx, file, cell, *max_len),
        Command::Zigzag { file, cartan, graded_cartan, undirected } => {
            zigzag(ctx, file, *cartan, *graded_cartan, *undirected)
        }
        Command::Act { file, cell, by, graded, max_len } => act(ctx, file, cell, by, *graded, *max_len),
        Command::Theta { file, omega, class_s } => theta(ctx, file, omega, class_s),
        Command::Catalog { coxeter_number } => catalog(ctx, *coxeter_number),
    }
}

/// Executes parsed arguments, returning the exit status.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut notes = Vec::new();
    let mut ctx = Ctx { json: cli.json, dot: cli.dot, parallel: cli.threads.is_some(), notes: &mut notes };
    let result = panic::catch_unwind(AssertUnwindSafe(|| match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.into()).build() {
            Ok(pool) => pool.install(|| dispatch(&mut ctx, &cli.command)),
            Err(e) => Err(Failure::Internal(e.to_string())),
        },
        None => dispatch(&mut ctx, &cli.command),
    }))
    .unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Failure::Internal(msg))
    });
    for note in &notes {
        let _ = writeln!(err, "{note}");
    }
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            1
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            code
        }
    }
}

/// Runs with the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
