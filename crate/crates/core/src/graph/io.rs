//! Text format: first line `n m`, then `m` lines `u v`. Lines starting with
//! `#` are comments. Serialization sorts edges (`u < v`) or arcs
//! lexicographically, so equal graphs serialize to identical bytes.

use std::fmt::Write;

use super::{Digraph, Graph};
use crate::error::parse_err;
use crate::Result;

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("bad integer {t:?}"))))
        .collect()
}

fn parse_pairs(text: &str, directed: bool) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = data_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let h = parse_numbers(ln, header)?;
    if h.len() != 2 {
        return Err(parse_err(ln, "header must be `n m`"));
    }
    let (n, m) = (h[0], h[1]);
    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (ln, l) in lines {
        let p = parse_numbers(ln, l)?;
        if p.len() != 2 {
            return Err(parse_err(ln, "expected two vertices"));
        }
        let (u, v) = (p[0], p[1]);
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(ln, "loop"));
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(parse_err(ln, "repeated edge"));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(parse_err(0, format!("header promises {m} edges, found {}", pairs.len())));
    }
    Ok((n, pairs))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, pairs) = parse_pairs(text, false)?;
    Graph::from_edges(n, pairs)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (n, pairs) = parse_pairs(text, true)?;
    Digraph::from_arcs(n, pairs)
}

fn serialize_pairs(n: usize, pairs: &[(usize, usize)]) -> String {
    let mut s = String::with_capacity(8 * pairs.len() + 16);
    writeln!(s, "{} {}", n, pairs.len()).unwrap();
    for (u, v) in pairs {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn serialize_graph(g: &Graph) -> String {
    serialize_pairs(g.n(), &g.edges())
}

pub fn serialize_digraph(d: &Digraph) -> String {
    serialize_pairs(d.n(), &d.arcs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_bytes() {
        let g = Graph::from_edges(3, [(2, 1), (0, 1)]).unwrap();
        assert_eq!(serialize_graph(&g), "3 2\n0 1\n1 2\n");
        let d = Digraph::from_arcs(3, [(2, 1), (1, 2)]).unwrap();
        assert_eq!(serialize_digraph(&d), "3 2\n1 2\n2 1\n");
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_graph("# a triangle\n3 3\n0 1\n# mid\n1 2\n0 2\n").unwrap();
        assert_eq!(g.m(), 3);
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
        assert!(parse_graph("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_graph("3 1\n1 1\n").is_err());
        assert!(parse_digraph("2 2\n0 1\n1 0\n").is_ok());
    }
}
