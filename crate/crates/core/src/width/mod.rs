//! Pathwidth with certificates.
//!
//! Pathwidth equals the vertex separation number: the minimum over vertex
//! orderings of the largest number of already-placed vertices that still
//! have an unplaced neighbor. Both general algorithms search over orderings
//! and turn the best one into a path decomposition.

mod decision;
mod exact;
mod tree;

pub use decision::pathwidth_at_most;
pub use exact::pathwidth_exact;
pub use tree::tree_pathwidth;

use std::fmt::Write;

use crate::error::parse_err;
use crate::graph::io::{data_lines, parse_numbers};
use crate::{Graph, Result, VertexSet};

/// Sequence of bags; width is the largest bag size minus one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Bags for a vertex ordering: bag `i` holds the `i`-th vertex and every
    /// earlier vertex that still has a neighbor at position `i` or later.
    pub fn from_ordering(g: &Graph, order: &[usize]) -> PathDecomposition {
        let mut placed = g.empty_set();
        let mut bags = Vec::with_capacity(order.len());
        for &v in order {
            let mut bag: Vec<usize> = boundary(g, &placed).to_vec();
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
            placed.insert(v);
        }
        PathDecomposition { bags }
    }
}

/// Vertices of `s` with a neighbor outside `s`.
pub(crate) fn boundary(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = g.empty_set();
    for v in s {
        if !g.adj(v).is_subset(s) {
            out.insert(v);
        }
    }
    out
}

/// Checks the three bag conditions; returns the width or the first problem.
pub fn check_path_decomposition(g: &Graph, d: &PathDecomposition) -> std::result::Result<usize, String> {
    let n = g.n();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    let mut count = vec![0usize; n];
    for (i, bag) in d.bags.iter().enumerate() {
        let mut seen = g.empty_set();
        for &v in bag {
            if v >= n {
                return Err(format!("bag {i} names vertex {v} outside 0..{n}"));
            }
            if !seen.insert(v) {
                return Err(format!("bag {i} repeats vertex {v}"));
            }
            first[v] = first[v].min(i);
            last[v] = i;
            count[v] += 1;
        }
    }
    for v in 0..n {
        if count[v] == 0 {
            return Err(format!("vertex {v} is in no bag"));
        }
        if count[v] != last[v] - first[v] + 1 {
            return Err(format!("bags containing vertex {v} are not contiguous"));
        }
    }
    for (u, v) in g.edges() {
        if first[u].max(first[v]) > last[u].min(last[v]) {
            return Err(format!("edge {u} {v} lies in no bag"));
        }
    }
    Ok(d.width())
}

/// The width if `d` is a valid path decomposition of `g`.
pub fn verify_path_decomposition(g: &Graph, d: &PathDecomposition) -> Option<usize> {
    check_path_decomposition(g, d).ok()
}

/// One bag per line, vertices sorted and space separated.
pub fn serialize_decomposition(d: &PathDecomposition) -> String {
    let mut s = String::new();
    for bag in &d.bags {
        let mut b = bag.clone();
        b.sort_unstable();
        let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
        writeln!(s, "{}", items.join(" ")).unwrap();
    }
    s
}

pub fn parse_decomposition(text: &str) -> Result<PathDecomposition> {
    let mut bags = Vec::new();
    for (ln, l) in data_lines(text) {
        bags.push(parse_numbers(ln, l)?);
    }
    if bags.is_empty() && text.lines().any(|l| !l.trim().is_empty() && !l.trim().starts_with('#')) {
        return Err(parse_err(0, "no bags"));
    }
    Ok(PathDecomposition { bags })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_path};

    #[test]
    fn verifier_examples() {
        let p = make_path(5);
        let d = PathDecomposition { bags: (0..4).map(|i| vec![i, i + 1]).collect() };
        assert_eq!(verify_path_decomposition(&p, &d), Some(1));
        let k3 = make_complete(3);
        assert_eq!(verify_path_decomposition(&k3, &PathDecomposition { bags: vec![vec![0, 1, 2]] }), Some(2));
        let broken = PathDecomposition { bags: vec![vec![0, 1], vec![1, 2], vec![0, 3], vec![3, 4], vec![2, 3]] };
        assert_eq!(verify_path_decomposition(&p, &broken), None);
        let missing_edge = PathDecomposition { bags: vec![vec![0, 1], vec![2, 3, 4], vec![1, 2]] };
        assert_eq!(verify_path_decomposition(&p, &missing_edge), None);
    }

    #[test]
    fn text_round_trip() {
        let d = PathDecomposition { bags: vec![vec![0, 1], vec![1, 2]] };
        let s = serialize_decomposition(&d);
        assert_eq!(s, "0 1\n1 2\n");
        assert_eq!(parse_decomposition(&s).unwrap(), d);
    }
}
