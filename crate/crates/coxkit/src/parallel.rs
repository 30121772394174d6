//! Breadth-first cell enumeration with each frontier expanded on a rayon pool.

use coxkit_core::words::{left_extensions, CellEnumeration};
use coxkit_core::{CoxeterDiagram, RigidWord};
use rayon::prelude::*;

/// Same output as [`coxkit_core::words::extend_breadth_first`].
pub fn extend_breadth_first(d: &CoxeterDiagram, seeds: Vec<RigidWord>, max_len: Option<usize>) -> CellEnumeration {
    let mut words = Vec::new();
    let mut frontier = seeds;
    let mut len = 1;
    let mut truncated = false;
    while !frontier.is_empty() {
        if max_len.is_some_and(|cap| len > cap) {
            truncated = true;
            break;
        }
        let next: Vec<RigidWord> = frontier.par_iter().flat_map_iter(|w| left_extensions(d, w)).collect();
        words.append(&mut frontier);
        frontier = next;
        len += 1;
    }
    words.par_sort();
    CellEnumeration { words, truncated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxkit_core::words;

    #[test]
    fn agrees_with_the_sequential_walk() {
        let d = CoxeterDiagram::from_edges(&[("1", "2", 3), ("2", "3", 5), ("3", "4", 3), ("3", "5", 3)]).unwrap();
        let seeds: Vec<RigidWord> = (0..d.len()).map(RigidWord::generator).collect();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
        let par = pool.install(|| extend_breadth_first(&d, seeds.clone(), None));
        assert_eq!(par, words::extend_breadth_first(&d, seeds.clone(), None));
        let capped = pool.install(|| extend_breadth_first(&d, seeds.clone(), Some(3)));
        assert_eq!(capped, words::extend_breadth_first(&d, seeds, Some(3)));
    }
}
