//! Canonical forms of (vertex-coloured) trees, AHU style.
//!
//! Two trees get equal forms iff they are isomorphic by a map that
//! preserves the colours (and the root, for rooted forms).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::zigzag::MultiGraph;

fn encode(adj: &[Vec<usize>], colors: Option<&[u32]>, root: usize) -> String {
    // iterative post-order so deep paths do not blow the stack
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<String> = vec![String::new(); n];
    let mut children: Vec<Vec<String>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut code = String::from("(");
        if let Some(c) = colors {
            let _ = write!(code, "{}", c[v]);
        }
        let mut kids = core::mem::take(&mut children[v]);
        kids.sort();
        for k in kids {
            code.push_str(&k);
        }
        code.push(')');
        if v == root {
            codes[v] = code;
        } else {
            children[parent[v]].push(code);
        }
    }
    core::mem::take(&mut codes[root])
}

fn adjacency(g: &MultiGraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect()
}

/// Canonical form of `g` rooted at `root`, or `None` if `g` is not a tree.
pub fn rooted_tree_form(g: &MultiGraph, root: usize, colors: Option<&[u32]>) -> Option<String> {
    (g.is_tree() && root < g.vertex_count()).then(|| encode(&adjacency(g), colors, root))
}

/// Canonical form of the unrooted tree `g`, or `None` if `g` is not a tree.
pub fn tree_form(g: &MultiGraph, colors: Option<&[u32]>) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let adj = adjacency(g);
    centers(&adj).into_iter().map(|c| encode(&adj, colors, c)).min()
}

// One or two centres, found by peeling leaves.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_trees_agree() {
        let a = MultiGraph::from_parts(&[], &[("1", "2"), ("2", "3"), ("2", "4"), ("4", "5")]).unwrap();
        let b = MultiGraph::from_parts(&[], &[("x", "y"), ("y", "z"), ("z", "u"), ("z", "w")]).unwrap();
        assert_eq!(tree_form(&a, None), tree_form(&b, None));
        let path = MultiGraph::from_parts(&[], &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5")]).unwrap();
        assert_ne!(tree_form(&a, None), tree_form(&path, None));
    }

    #[test]
    fn colours_and_roots_matter() {
        let p = MultiGraph::from_parts(&[], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(tree_form(&p, Some(&[0, 1, 0])), tree_form(&p, Some(&[0, 1, 0])));
        assert_ne!(tree_form(&p, Some(&[0, 1, 0])), tree_form(&p, Some(&[1, 0, 1])));
        // reversing a 2-path swaps the two colour classes
        let q = MultiGraph::from_parts(&[], &[("a", "b")]).unwrap();
        assert_eq!(tree_form(&q, Some(&[0, 1])), tree_form(&q, Some(&[1, 0])));
        assert_ne!(rooted_tree_form(&p, 0, None), rooted_tree_form(&p, 1, None));
        assert_eq!(rooted_tree_form(&p, 0, None), rooted_tree_form(&p, 2, None));
    }

    #[test]
    fn non_trees_have_no_form() {
        let c = MultiGraph::from_parts(&[], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(tree_form(&c, None), None);
        let dbl = MultiGraph::from_parts(&[], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(tree_form(&dbl, None), None);
    }
}
