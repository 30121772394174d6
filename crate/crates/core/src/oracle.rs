//! Brute-force word problem: closure of a word under braid moves.
//!
//! By the Matsumoto–Tits theorem two reduced expressions of the same element
//! are connected by braid moves, and a word is reduced iff no word in its
//! braid orbit has two equal adjacent letters. So a word is the unique
//! reduced expression of its element iff its orbit is a singleton without
//! a square. This module computes that directly and knows nothing about
//! the local rigidity test in [`crate::words`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::CoxeterDiagram;
use crate::error::{Error, Result};
use crate::words::Word;

/// Default bound on the number of words explored by [`braid_orbit`].
pub const DEFAULT_ORBIT_CAP: usize = 10_000;

/// Classification of a word by its braid orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleStatus {
    /// Some word in the orbit contains `ss`.
    NotReduced,
    /// Reduced, and the only reduced expression of its element.
    ReducedUnique,
    /// Reduced with at least two reduced expressions.
    ReducedMultiple,
}

/// Result of [`oracle_unique_reduced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleReport {
    /// Classification.
    pub status: OracleStatus,
    /// Number of distinct words in the braid orbit.
    pub orbit_size: usize,
}

// Calls `f` on every word obtained from `w` by one braid move
// (a commutation being the braid move for m = 2). `buf` is scratch space.
fn for_each_move_in(d: &CoxeterDiagram, w: &[usize], buf: &mut Vec<usize>, mut f: impl FnMut(&[usize])) {
    buf.clear();
    buf.extend_from_slice(w);
    for i in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[i], w[i + 1]);
        if a == b {
            continue;
        }
        let Some(m) = d.coxeter_order(a, b) else {
            continue;
        };
        let m = m as usize;
        if i + m > w.len() {
            continue;
        }
        let alternating = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
        if alternating {
            for k in 0..m {
                buf[i + k] = if k % 2 == 0 { b } else { a };
            }
            f(buf);
            buf[i..i + m].copy_from_slice(&w[i..i + m]);
        }
    }
}

fn for_each_move(d: &CoxeterDiagram, w: &[usize], f: impl FnMut(&[usize])) {
    for_each_move_in(d, w, &mut Vec::with_capacity(w.len()), f);
}

fn has_square(w: &[usize]) -> bool {
    w.windows(2).any(|p| p[0] == p[1])
}

/// All words reachable from `w` by commutation and braid moves.
pub fn braid_orbit(d: &CoxeterDiagram, w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    if let Some(&l) = w.letters().iter().find(|&&l| l >= d.len()) {
        return Err(Error::LetterOutOfRange(l));
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut stack = vec![w.clone()];
    while let Some(x) = stack.pop() {
        let mut overflow = false;
        for_each_move(d, x.letters(), |y| {
            let y = Word::new(y.to_vec());
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    overflow = true;
                    return;
                }
                seen.insert(y.clone());
                stack.push(y);
            }
        });
        if overflow {
            return Err(Error::OrbitCapExceeded(cap));
        }
    }
    Ok(seen)
}

fn classify<'a>(orbit_size: usize, mut members: impl Iterator<Item = &'a [usize]>) -> OracleStatus {
    if members.any(has_square) {
        OracleStatus::NotReduced
    } else if orbit_size == 1 {
        OracleStatus::ReducedUnique
    } else {
        OracleStatus::ReducedMultiple
    }
}

/// Decides whether `w` is the unique reduced expression of its element.
pub fn oracle_unique_reduced(d: &CoxeterDiagram, w: &Word, cap: usize) -> Result<OracleReport> {
    let orbit = braid_orbit(d, w, cap)?;
    let status = classify(orbit.len(), orbit.iter().map(Word::letters));
    Ok(OracleReport { status, orbit_size: orbit.len() })
}

/// Oracle statuses of every word of a fixed length, computed orbit by
/// orbit so that each word is visited once.
#[derive(Debug, Clone)]
pub struct OrbitCensus {
    rank: usize,
    len: usize,
    status: Vec<OracleStatus>,
}

/// Largest number of words [`OrbitCensus::new`] accepts.
pub const CENSUS_LIMIT: u64 = 1 << 24;

impl OrbitCensus {
    /// Classifies all `|S|^len` words of length `len`.
    pub fn new(d: &CoxeterDiagram, len: usize) -> Result<Self> {
        let rank = d.len();
        let total = (rank as u64).checked_pow(len as u32).unwrap_or(u64::MAX);
        if total > CENSUS_LIMIT {
            return Err(Error::CensusTooLarge(total));
        }
        let total = total as usize;
        let decode = |mut idx: usize, w: &mut [usize]| {
            for slot in w.iter_mut() {
                *slot = idx % rank;
                idx /= rank;
            }
        };
        let encode = |w: &[usize]| w.iter().rev().fold(0usize, |acc, &l| acc * rank + l);

        let mut status: Vec<Option<OracleStatus>> = vec![None; total];
        let mut component = Vec::new();
        let mut stack = Vec::new();
        let (mut word, mut buf) = (vec![0; len], Vec::with_capacity(len));
        for start in 0..total {
            if status[start].is_some() {
                continue;
            }
            // mark with a placeholder while the orbit is being collected
            status[start] = Some(OracleStatus::ReducedMultiple);
            component.clear();
            stack.push(start);
            let mut square = false;
            while let Some(idx) = stack.pop() {
                component.push(idx);
                decode(idx, &mut word);
                square |= has_square(&word);
                for_each_move_in(d, &word, &mut buf, |y| {
                    let j = encode(y);
                    if status[j].is_none() {
                        status[j] = Some(OracleStatus::ReducedMultiple);
                        stack.push(j);
                    }
                });
            }
            let verdict = if square {
                OracleStatus::NotReduced
            } else if component.len() == 1 {
                OracleStatus::ReducedUnique
            } else {
                OracleStatus::ReducedMultiple
            };
            for &i in &component {
                status[i] = Some(verdict);
            }
        }
        Ok(OrbitCensus {
            rank,
            len,
            status: status.into_iter().map(|s| s.expect("every word classified")).collect(),
        })
    }

    /// Length of the words covered.
    pub fn word_len(&self) -> usize {
        self.len
    }

    /// Status of `w`, which must have the census length.
    pub fn status(&self, w: &[usize]) -> OracleStatus {
        assert_eq!(w.len(), self.len, "word length differs from census length");
        self.status[w.iter().rev().fold(0usize, |acc, &l| acc * self.rank + l)]
    }

    /// Every word of the census length with its status, in index order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, OracleStatus)> + '_ {
        let (rank, len) = (self.rank, self.len);
        self.status.iter().enumerate().map(move |(mut idx, &s)| {
            let mut w = vec![0; len];
            for slot in w.iter_mut() {
                *slot = idx % rank;
                idx /= rank;
            }
            (w, s)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::EdgeLabel;
    use alloc::string::String;

    fn example2() -> CoxeterDiagram {
        CoxeterDiagram::from_edges(&[("1", "2", 3), ("2", "3", 4), ("3", "4", 3), ("3", "5", 3)])
            .unwrap()
    }

    fn w(d: &CoxeterDiagram, s: &str) -> Word {
        Word::new(s.chars().map(|c| d.index_of(&String::from(c)).unwrap()).collect())
    }

    fn shown(d: &CoxeterDiagram, set: &BTreeSet<Word>) -> Vec<String> {
        set.iter().map(|x| x.display(d)).collect()
    }

    #[test]
    fn orbit_examples() {
        let edge = CoxeterDiagram::from_edges(&[("1", "2", 3)]).unwrap();
        assert_eq!(shown(&edge, &braid_orbit(&edge, &w(&edge, "12"), 100).unwrap()), ["12"]);
        assert_eq!(
            shown(&edge, &braid_orbit(&edge, &w(&edge, "121"), 100).unwrap()),
            ["121", "212"]
        );

        let d = example2();
        let orbit = braid_orbit(&d, &w(&d, "212321"), DEFAULT_ORBIT_CAP).unwrap();
        assert!(orbit.len() > 1);
        assert!(orbit.contains(&w(&d, "121321")));
    }

    #[test]
    fn oracle_examples() {
        let d = example2();
        let r = oracle_unique_reduced(&d, &w(&d, "12321"), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r, OracleReport { status: OracleStatus::ReducedUnique, orbit_size: 1 });
        let r = oracle_unique_reduced(&d, &w(&d, "11"), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.status, OracleStatus::NotReduced);
        let r = oracle_unique_reduced(&d, &w(&d, "212321"), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.status, OracleStatus::ReducedMultiple);

        let star =
            CoxeterDiagram::from_edges(&[("1", "4", 3), ("2", "4", 3), ("3", "4", 3), ("5", "4", 3)])
                .unwrap();
        let r = oracle_unique_reduced(&star, &w(&star, "12"), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r, OracleReport { status: OracleStatus::ReducedMultiple, orbit_size: 2 });
        // 1424 -> 1242 -> 2142; reduced but not unique
        let r = oracle_unique_reduced(&star, &w(&star, "1424"), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r, OracleReport { status: OracleStatus::ReducedMultiple, orbit_size: 3 });
        // 4141 -> 1441 and 4114: a square appears only after a move
        let r = oracle_unique_reduced(&star, &w(&star, "4141"), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r, OracleReport { status: OracleStatus::NotReduced, orbit_size: 3 });
    }

    #[test]
    fn cap_is_enforced() {
        // all 5! orderings of five pairwise commuting letters
        let d = CoxeterDiagram::from_parts(&["a", "b", "c", "d", "e"], &[]).unwrap();
        let word = Word::new(vec![0, 1, 2, 3, 4]);
        assert_eq!(braid_orbit(&d, &word, 120).unwrap().len(), 120);
        assert_eq!(braid_orbit(&d, &word, 119), Err(Error::OrbitCapExceeded(119)));
    }

    #[test]
    fn census_matches_per_word_oracle() {
        let d = CoxeterDiagram::from_parts(
            &[],
            &[
                ("a", "b", EdgeLabel::Finite(4)),
                ("b", "c", EdgeLabel::Finite(3)),
                ("c", "d", EdgeLabel::Infinite),
            ],
        )
        .unwrap();
        for len in 0..=5 {
            let census = OrbitCensus::new(&d, len).unwrap();
            for (letters, status) in census.iter() {
                let report = oracle_unique_reduced(&d, &Word::new(letters), DEFAULT_ORBIT_CAP).unwrap();
                assert_eq!(report.status, status);
            }
        }
    }
}
