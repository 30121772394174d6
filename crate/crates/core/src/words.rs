//! Rigid words and the small cell.
//!
//! Words are stored left to right as they are printed, so `t_k … t_1` has
//! `t_k` at index 0. Left multiplication by a generator prepends a letter,
//! and an element of `J` lies in the left cell `L_s` exactly when its
//! rightmost letter is `s` (and in the right cell `R_t` when its leftmost
//! letter is `t`).
//!
//! A word is *rigid* when no commutation or braid move applies to it:
//! consecutive letters are joined by an edge and no alternating factor
//! `abab…` reaches the length `m(a, b)`. Rigid words are exactly the unique
//! reduced expressions, so they enumerate `J ∖ {e}`; [`crate::oracle`]
//! checks that equivalence by brute force.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::diagram::{finiteness_check, split_at_labeled_edge, tree_path, CoxeterDiagram, EdgeLabel};
use crate::error::{Error, Result};

/// A finite sequence of generator indices. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    /// The identity.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Wraps a letter sequence.
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// Looks up each name in `d`.
    pub fn from_names(d: &CoxeterDiagram, names: &[&str]) -> Result<Self> {
        names.iter().map(|n| d.index_of(n)).collect::<Result<_>>().map(Word)
    }

    /// Letters, leftmost first.
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the identity.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Leftmost letter `t_k`.
    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Rightmost letter `t_1`.
    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// The word read backwards (the inverse element).
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `t · self`.
    pub fn prepend(&self, t: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(t);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    /// Renders the word with the diagram's names: concatenated when every
    /// name is a single character, space separated otherwise. The identity
    /// renders as `e`.
    pub fn display(&self, d: &CoxeterDiagram) -> String {
        if self.is_empty() {
            return String::from("e");
        }
        let compact = d.generators().iter().all(|g| g.as_str().chars().count() == 1);
        let mut out = String::new();
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                out.push(' ');
            }
            out.push_str(d.name(l));
        }
        out
    }

    fn check_letters(&self, d: &CoxeterDiagram) -> Result<()> {
        match self.0.iter().find(|&&l| l >= d.len()) {
            Some(&l) => Err(Error::LetterOutOfRange(l)),
            None => Ok(()),
        }
    }
}

/// Shorter words first, then lexicographic in declaration order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A nonempty rigid word: an element of the small cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RigidWord(Word);

impl RigidWord {
    /// Checks rigidity of `w` over `d`.
    pub fn new(d: &CoxeterDiagram, w: Word) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if is_rigid(d, &w)? {
            Ok(RigidWord(w))
        } else {
            Err(Error::NotRigid(w.display(d)))
        }
    }

    /// The one-letter word `s`.
    pub fn generator(s: usize) -> Self {
        RigidWord(Word(vec![s]))
    }

    /// The underlying word.
    pub fn word(&self) -> &Word {
        &self.0
    }

    /// Letters, leftmost first.
    pub fn letters(&self) -> &[usize] {
        self.0.letters()
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with [`Word`].
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The unique left descent (leftmost letter).
    pub fn descent(&self) -> usize {
        self.0 .0[0]
    }

    /// The rightmost letter: `w ∈ L_s` iff this is `s`.
    pub fn left_cell(&self) -> usize {
        *self.0 .0.last().expect("rigid words are nonempty")
    }

    /// The leftmost letter: `w ∈ R_t` iff this is `t`.
    pub fn right_cell(&self) -> usize {
        self.descent()
    }

    /// Shorthand for `self.word().display(d)`.
    pub fn display(&self, d: &CoxeterDiagram) -> String {
        self.0.display(d)
    }

    /// The inverse element, which is again rigid.
    pub fn reversed(&self) -> RigidWord {
        RigidWord(self.0.reversed())
    }
}

/// Which local pattern makes a word non-rigid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two equal adjacent letters.
    EqualLetters,
    /// Two adjacent letters that commute.
    Commuting,
    /// An alternating factor of length `m(a, b)`.
    BraidFactor {
        /// The Coxeter label reached.
        m: u32,
    },
}

/// First position where a word fails to be rigid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    /// Index of the first letter of the offending pair or factor.
    pub position: usize,
    /// What went wrong.
    pub kind: ViolationKind,
}

/// Locates the leftmost-ending rigidity violation in `w`, if any.
pub fn first_violation(d: &CoxeterDiagram, w: &Word) -> Result<Option<Violation>> {
    w.check_letters(d)?;
    let l = w.letters();
    // run = length of the alternating factor ending at i
    let mut run = 1usize;
    for i in 1..l.len() {
        let (a, b) = (l[i - 1], l[i]);
        if a == b {
            return Ok(Some(Violation { position: i - 1, kind: ViolationKind::EqualLetters }));
        }
        let Some(label) = d.bond(a, b) else {
            return Ok(Some(Violation { position: i - 1, kind: ViolationKind::Commuting }));
        };
        run = if i >= 2 && l[i - 2] == b { run + 1 } else { 2 };
        if let EdgeLabel::Finite(m) = label {
            if run >= m as usize {
                return Ok(Some(Violation {
                    position: i + 1 - run,
                    kind: ViolationKind::BraidFactor { m },
                }));
            }
        }
    }
    Ok(None)
}

/// True iff `w` admits no commutation or braid move (the empty word counts
/// as rigid).
pub fn is_rigid(d: &CoxeterDiagram, w: &Word) -> Result<bool> {
    Ok(first_violation(d, w)?.is_none())
}

// Rigidity of t·w given that w is rigid: only the new left end needs checking.
fn can_prepend(d: &CoxeterDiagram, t: usize, w: &[usize]) -> bool {
    let Some(&head) = w.first() else {
        return true;
    };
    match d.bond(t, head) {
        None => false,
        Some(EdgeLabel::Infinite) => true,
        Some(EdgeLabel::Finite(m)) => {
            let alternating = 1 + w
                .iter()
                .enumerate()
                .take_while(|&(i, &x)| x == if i % 2 == 0 { head } else { t })
                .count();
            alternating < m as usize
        }
    }
}

/// All rigid words `t · w` for `t` a generator, in generator order.
pub fn left_extensions<'a>(d: &'a CoxeterDiagram, w: &'a RigidWord) -> impl Iterator<Item = RigidWord> + 'a {
    (0..d.len())
        .filter(move |&t| can_prepend(d, t, w.letters()))
        .map(move |t| RigidWord(w.word().prepend(t)))
}

/// A set of small-cell elements in length-then-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellEnumeration {
    /// Sorted elements.
    pub words: Vec<RigidWord>,
    /// True when longer elements exist beyond the length cap.
    pub truncated: bool,
}

impl CellEnumeration {
    /// Number of elements found.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// True when nothing was found.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Breadth-first left extension from `seeds`, stopping at `max_len` letters.
/// Since rigidity is inherited by suffixes, starting from every generator
/// reaches all of `J`; starting from `s` alone reaches `L_s`.
pub fn extend_breadth_first(
    d: &CoxeterDiagram,
    seeds: Vec<RigidWord>,
    max_len: Option<usize>,
) -> CellEnumeration {
    let mut words = Vec::new();
    let mut frontier = seeds;
    let mut len = 1;
    let mut truncated = false;
    while !frontier.is_empty() {
        if max_len.is_some_and(|cap| len > cap) {
            truncated = true;
            break;
        }
        let next: Vec<RigidWord> = frontier.iter().flat_map(|w| left_extensions(d, w)).collect();
        words.append(&mut frontier);
        frontier = next;
        len += 1;
    }
    words.sort();
    CellEnumeration { words, truncated }
}

fn require_cap(d: &CoxeterDiagram, max_len: Option<usize>) -> Result<()> {
    if max_len.is_none() && !finiteness_check(d)?.finite {
        return Err(Error::InfiniteCell);
    }
    Ok(())
}

/// Enumerates `J ∖ {e}`, or its elements of length at most `max_len`.
///
/// A cap is mandatory when the cell is infinite.
pub fn enumerate_small_cell(d: &CoxeterDiagram, max_len: Option<usize>) -> Result<CellEnumeration> {
    require_cap(d, max_len)?;
    let seeds = (0..d.len()).map(RigidWord::generator).collect();
    Ok(extend_breadth_first(d, seeds, max_len))
}

/// Enumerates the left cell `L_s` (rigid words ending in `s`).
pub fn left_cell(d: &CoxeterDiagram, s: usize, max_len: Option<usize>) -> Result<CellEnumeration> {
    if s >= d.len() {
        return Err(Error::LetterOutOfRange(s));
    }
    require_cap(d, max_len)?;
    Ok(extend_breadth_first(d, vec![RigidWord::generator(s)], max_len))
}

/// Result of multiplying an element of `J` on the left by a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftProduct {
    /// `t w < w`; `None` stands for the identity.
    Shorter(Option<RigidWord>),
    /// `t w > w` and `t w ∈ J`.
    Longer(RigidWord),
    /// `t w > w` but `t w ∉ J`.
    LeavesCell,
}

/// Computes `t · w` inside `J ∪ {e}`.
pub fn left_multiply(d: &CoxeterDiagram, t: usize, w: &RigidWord) -> Result<LeftProduct> {
    if t >= d.len() {
        return Err(Error::LetterOutOfRange(t));
    }
    if w.descent() == t {
        let rest = &w.letters()[1..];
        return Ok(LeftProduct::Shorter(
            (!rest.is_empty()).then(|| RigidWord(Word(rest.to_vec()))),
        ));
    }
    Ok(if can_prepend(d, t, w.letters()) {
        LeftProduct::Longer(RigidWord(w.word().prepend(t)))
    } else {
        LeftProduct::LeavesCell
    })
}

/// The small cell arranged by right cell (rows) and left cell (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellTable {
    n: usize,
    cells: Vec<Vec<RigidWord>>,
}

impl CellTable {
    /// Number of rows (and columns).
    pub fn size(&self) -> usize {
        self.n
    }

    /// `L_s ∩ R_t`: words starting with `t` and ending with `s`, sorted.
    pub fn cell(&self, t: usize, s: usize) -> &[RigidWord] {
        &self.cells[t * self.n + s]
    }

    /// Total number of elements.
    pub fn total(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

/// Builds the full table of a finite small cell.
pub fn cell_table(d: &CoxeterDiagram) -> Result<CellTable> {
    if !finiteness_check(d)?.finite {
        return Err(Error::InfiniteCell);
    }
    Ok(tabulate(d.len(), enumerate_small_cell(d, None)?.words))
}

/// Sorts already enumerated elements into a table.
pub fn tabulate(n: usize, words: Vec<RigidWord>) -> CellTable {
    let mut cells = vec![Vec::new(); n * n];
    for w in words {
        cells[w.right_cell() * n + w.left_cell()].push(w);
    }
    for c in &mut cells {
        c.sort();
    }
    CellTable { n, cells }
}

/// `L_s ∩ R_t`, optionally capped for infinite cells.
pub fn intersection(
    d: &CoxeterDiagram,
    s: usize,
    t: usize,
    max_len: Option<usize>,
) -> Result<Vec<RigidWord>> {
    if t >= d.len() {
        return Err(Error::LetterOutOfRange(t));
    }
    let mut words = left_cell(d, s, max_len)?.words;
    words.retain(|w| w.right_cell() == t);
    Ok(words)
}

/// The bijection `L_{π(p)} ∩ R_{π(q)} → L_p ∩ R_q` for a tree with one
/// labeled edge.
///
/// The path from `q` to `π(q)` is glued onto the left end of `w` (sharing
/// the letter `π(q)`) and the path from `π(p)` to `p` onto its right end
/// (sharing `π(p)`). When `w` is a single letter and the glued word
/// backtracks, the image is the tree path from `q` to `p` instead.
pub fn induced_bijection(d: &CoxeterDiagram, p: usize, q: usize) -> Result<BTreeMap<RigidWord, RigidWord>> {
    let split = split_at_labeled_edge(d)?;
    for v in [p, q] {
        if v >= d.len() {
            return Err(Error::LetterOutOfRange(v));
        }
    }
    let (pp, pq) = (split.pi(p), split.pi(q));
    let prefix = tree_path(d, q, pq)?;
    let suffix = tree_path(d, pp, p)?;
    let source = intersection(d, pp, pq, None)?;

    let mut map = BTreeMap::new();
    for w in source {
        let mut letters = prefix[..prefix.len() - 1].to_vec();
        letters.extend_from_slice(w.letters());
        letters.extend_from_slice(&suffix[1..]);
        let mut image = Word(letters);
        if w.len() == 1 && !is_rigid(d, &image)? {
            image = Word(tree_path(d, q, p)?);
        }
        map.insert(w, RigidWord::new(d, image)?);
    }
    Ok(map)
}

/// Checks that `L_p ∩ R_q` for `p, q ∈ {s, t}` agrees with the same
/// intersection computed in the dihedral subsystem on the labeled edge.
pub fn parabolic_core_check(d: &CoxeterDiagram) -> Result<bool> {
    let split = split_at_labeled_edge(d)?;
    let (s, t) = (split.s, split.t);
    let dihedral = CoxeterDiagram::from_parts(
        &[d.name(s), d.name(t)],
        &[(d.name(s), d.name(t), EdgeLabel::Finite(split.label))],
    )?;
    let as_names = |g: &CoxeterDiagram, words: Vec<RigidWord>| -> BTreeSet<Vec<String>> {
        words
            .iter()
            .map(|w| w.letters().iter().map(|&l| String::from(g.name(l))).collect())
            .collect()
    };
    for (p, q) in [(s, s), (s, t), (t, s), (t, t)] {
        let big = as_names(d, intersection(d, p, q, None)?);
        let small = as_names(
            &dihedral,
            intersection(&dihedral, dihedral.index_of(d.name(p))?, dihedral.index_of(d.name(q))?, None)?,
        );
        if big != small {
            return Ok(false);
        }
    }
    Ok(true)
}
