//! Induced subgraphs, induced minor models and path packings: verifiers
//! and budgeted searches.

mod minor;
mod paths;
mod subgraph;
mod trees;

pub use minor::find_induced_minor;
pub use paths::{anticomplete_path_packing, disjoint_xy_paths, pairwise_anticomplete};
pub use subgraph::find_induced_subgraph;
pub use trees::{obs_trees_a, obs_trees_a_line, obs_trees_b, TreeInWall};

use std::fmt::Write;

use crate::error::parse_err;
use crate::graph::io::{data_lines, parse_numbers};
use crate::{Graph, Result, VertexSet};

/// A (possibly induced) `pattern`-model in `host`: one branch set per
/// pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelAssignment {
    pub host: Graph,
    pub pattern: Graph,
    pub branch: Vec<VertexSet>,
    pub induced: bool,
}

impl ModelAssignment {
    /// First violated model condition, if any.
    pub fn check(&self) -> std::result::Result<(), String> {
        let (g, h) = (&self.host, &self.pattern);
        if self.branch.len() != h.n() {
            return Err(format!("{} branch sets for {} pattern vertices", self.branch.len(), h.n()));
        }
        for (v, b) in self.branch.iter().enumerate() {
            if b.universe() != g.n() {
                return Err(format!("branch set {v} is over the wrong universe"));
            }
            if b.is_empty() {
                return Err(format!("branch set {v} is empty"));
            }
            if !g.is_connected_set(b) {
                return Err(format!("branch set {v} is not connected"));
            }
        }
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                let (bu, bv) = (&self.branch[u], &self.branch[v]);
                if bu.intersects(bv) {
                    return Err(format!("branch sets {u} and {v} meet"));
                }
                let touching = !g.anticomplete(bu, bv);
                if h.has_edge(u, v) && !touching {
                    return Err(format!("branch sets {u} and {v} are anticomplete but {u}{v} is an edge"));
                }
                if self.induced && !h.has_edge(u, v) && touching {
                    return Err(format!("branch sets {u} and {v} touch but {u}{v} is not an edge"));
                }
            }
        }
        Ok(())
    }

    pub fn covered(&self) -> VertexSet {
        let mut all = self.host.empty_set();
        for b in &self.branch {
            all.union_with(b);
        }
        all
    }
}

pub fn verify_model(m: &ModelAssignment) -> bool {
    m.check().is_ok()
}

/// Injective map `pattern → host`; `map[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

/// Checks that `e` maps `pattern` onto an induced subgraph of `host`.
pub fn check_embedding(host: &Graph, pattern: &Graph, e: &Embedding) -> std::result::Result<(), String> {
    if e.map.len() != pattern.n() {
        return Err(format!("map has {} entries for {} pattern vertices", e.map.len(), pattern.n()));
    }
    let mut seen = host.empty_set();
    for (v, &x) in e.map.iter().enumerate() {
        if x >= host.n() {
            return Err(format!("image of {v} is not a host vertex"));
        }
        if !seen.insert(x) {
            return Err(format!("image {x} used twice"));
        }
    }
    for u in 0..pattern.n() {
        for v in u + 1..pattern.n() {
            if pattern.has_edge(u, v) != host.has_edge(e.map[u], e.map[v]) {
                return Err(format!("adjacency of {u} and {v} not preserved"));
            }
        }
    }
    Ok(())
}

pub fn verify_embedding(host: &Graph, pattern: &Graph, e: &Embedding) -> bool {
    check_embedding(host, pattern, e).is_ok()
}

impl Embedding {
    /// The same embedding as a model with singleton branch sets.
    pub fn to_model(&self, host: &Graph, pattern: &Graph) -> ModelAssignment {
        ModelAssignment {
            host: host.clone(),
            pattern: pattern.clone(),
            branch: self.map.iter().map(|&x| VertexSet::singleton(host.n(), x)).collect(),
            induced: true,
        }
    }
}

/// One line per pattern vertex: `v: u1 u2 ...`.
pub fn serialize_branch_sets(branch: &[VertexSet]) -> String {
    let mut s = String::new();
    for (v, b) in branch.iter().enumerate() {
        write!(s, "{v}:").unwrap();
        for u in b {
            write!(s, " {u}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// Reads the witness format back for a host on `n` vertices. Lines must
/// list the pattern vertices `0, 1, ...` in order.
pub fn parse_branch_sets(n: usize, text: &str) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for (ln, l) in data_lines(text) {
        let (head, rest) = l.split_once(':').ok_or_else(|| parse_err(ln, "expected `v: u1 u2 ...`"))?;
        let v: usize = head.trim().parse().map_err(|_| parse_err(ln, "bad pattern vertex"))?;
        if v != out.len() {
            return Err(parse_err(ln, format!("expected pattern vertex {}, got {v}", out.len())));
        }
        let us = parse_numbers(ln, rest)?;
        if let Some(&u) = us.iter().find(|&&u| u >= n) {
            return Err(crate::Error::VertexOutOfRange { vertex: u, n });
        }
        out.push(VertexSet::from_iter_in(n, us));
    }
    Ok(out)
}

pub fn serialize_embedding(e: &Embedding) -> String {
    e.map.iter().enumerate().map(|(v, u)| format!("{v}: {u}\n")).collect()
}

/// The branch-set format with exactly one host vertex per line.
pub fn parse_embedding(n: usize, text: &str) -> Result<Embedding> {
    let sets = parse_branch_sets(n, text)?;
    let mut map = Vec::with_capacity(sets.len());
    for (v, b) in sets.iter().enumerate() {
        if b.len() != 1 {
            return Err(parse_err(0, format!("pattern vertex {v} needs exactly one image")));
        }
        map.push(b.first().expect("one element"));
    }
    Ok(Embedding { map })
}
