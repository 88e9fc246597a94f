use std::fmt::Write;

use crate::error::parse_err;
use crate::graph::io::{data_lines, parse_numbers};
use crate::graph::is_xy_path;
use crate::{Error, Graph, PathInGraph, Result, VertexSet};

/// A triple `(A, 𝓛, Y)`: an induced path `A`, a set `Y` avoiding `A`, and
/// pairwise disjoint `(N(A), Y)`-paths avoiding `A`. Each path is stored
/// from its `N(A)`-end `x_L` to its `Y`-end `y_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seedling {
    a: PathInGraph,
    paths: Vec<PathInGraph>,
    y: VertexSet,
}

impl Seedling {
    /// Validates against `g`. Paths given `Y`-end first are turned around.
    pub fn new(g: &Graph, a: PathInGraph, paths: Vec<PathInGraph>, y: VertexSet) -> Result<Seedling> {
        let na = g.neighborhood(&a.set(g.n()));
        let paths = paths
            .into_iter()
            .map(|p| if !na.contains(p.first()) && na.contains(p.last()) { p.reversed() } else { p })
            .collect();
        let sd = Seedling { a, paths, y };
        sd.validate(g)?;
        Ok(sd)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSeedling(m));
        let n = g.n();
        if self.y.universe() != n {
            return bad(format!("Y lives on {} vertices, host has {n}", self.y.universe()));
        }
        if self.a.vertices().iter().any(|&v| v >= n) {
            return bad("A leaves the host".into());
        }
        if PathInGraph::new(g, self.a.vertices().to_vec()).is_err() {
            return bad("A is not an induced path".into());
        }
        let a = self.a.set(n);
        if self.y.intersects(&a) {
            return bad("Y meets A".into());
        }
        if self.paths.is_empty() {
            return bad("no paths".into());
        }
        let na = g.neighborhood(&a);
        let mut used = g.empty_set();
        for (i, p) in self.paths.iter().enumerate() {
            if p.vertices().iter().any(|&v| v >= n) {
                return bad(format!("path {i} leaves the host"));
            }
            let ps = p.set(n);
            if ps.intersects(&a) {
                return bad(format!("path {i} meets A"));
            }
            if !is_xy_path(g, p.vertices(), &na, &self.y) || !na.contains(p.first()) {
                return bad(format!("path {i} is not an (N(A),Y)-path from its N(A)-end"));
            }
            if ps.intersects(&used) {
                return bad(format!("path {i} meets an earlier path"));
            }
            used.union_with(&ps);
        }
        Ok(())
    }

    pub fn a(&self) -> &PathInGraph {
        &self.a
    }

    pub fn paths(&self) -> &[PathInGraph] {
        &self.paths
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn lambda(&self) -> usize {
        self.paths.len()
    }

    pub fn a_set(&self, n: usize) -> VertexSet {
        self.a.set(n)
    }

    /// `V(𝓛)`.
    pub fn path_vertices(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for p in &self.paths {
            for &v in p.vertices() {
                s.insert(v);
            }
        }
        s
    }

    /// `N(A)`-end of path `i`.
    pub fn x_end(&self, i: usize) -> usize {
        self.paths[i].first()
    }

    /// `Y`-end of path `i`.
    pub fn y_end(&self, i: usize) -> usize {
        self.paths[i].last()
    }
}

/// Text form: a line `A v..`, then `Y v..`, then one `L v..` line per path
/// (`N(A)`-end first). A file may hold several seedlings, each starting
/// with its `A` line.
pub fn serialize_seedling(sd: &Seedling) -> String {
    let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    writeln!(s, "A {}", join(sd.a.vertices())).unwrap();
    writeln!(s, "Y {}", join(&sd.y.to_vec())).unwrap();
    for p in &sd.paths {
        writeln!(s, "L {}", join(p.vertices())).unwrap();
    }
    s
}

pub fn parse_seedlings(g: &Graph, text: &str) -> Result<Vec<Seedling>> {
    struct Raw {
        line: usize,
        a: Vec<usize>,
        y: Option<Vec<usize>>,
        paths: Vec<Vec<usize>>,
    }
    let mut raws: Vec<Raw> = Vec::new();
    for (ln, l) in data_lines(text) {
        let (tag, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let nums = parse_numbers(ln, rest)?;
        match tag {
            "A" => raws.push(Raw { line: ln, a: nums, y: None, paths: Vec::new() }),
            "Y" | "L" => {
                let cur = raws.last_mut().ok_or_else(|| parse_err(ln, "expected an A line first"))?;
                if tag == "Y" {
                    if cur.y.is_some() {
                        return Err(parse_err(ln, "second Y line"));
                    }
                    cur.y = Some(nums);
                } else {
                    cur.paths.push(nums);
                }
            }
            _ => return Err(parse_err(ln, format!("unknown tag {tag:?}"))),
        }
    }
    let mut out = Vec::new();
    for raw in raws {
        let check = |vs: &[usize]| -> Result<()> {
            match vs.iter().find(|&&v| v >= g.n()) {
                Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n: g.n() }),
                None => Ok(()),
            }
        };
        let y = raw.y.ok_or_else(|| parse_err(raw.line, "seedling has no Y line"))?;
        check(&y)?;
        check(&raw.a)?;
        let a = PathInGraph::new(g, raw.a)?;
        let paths = raw
            .paths
            .into_iter()
            .map(|p| {
                check(&p)?;
                PathInGraph::new(g, p)
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(Seedling::new(g, a, paths, g.set(y))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn broom() -> (Graph, Seedling) {
        // 0 - {1, 3}; paths 1-2 and 3-4; Y = {2, 4}.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 4)]).unwrap();
        let a = PathInGraph::new(&g, vec![0]).unwrap();
        let ps = vec![PathInGraph::new(&g, vec![2, 1]).unwrap(), PathInGraph::new(&g, vec![3, 4]).unwrap()];
        let sd = Seedling::new(&g, a, ps, g.set([2, 4])).unwrap();
        (g, sd)
    }

    #[test]
    fn orientation_is_normalised() {
        let (_, sd) = broom();
        assert_eq!(sd.x_end(0), 1);
        assert_eq!(sd.y_end(0), 2);
        assert_eq!(sd.lambda(), 2);
    }

    #[test]
    fn text_round_trip() {
        let (g, sd) = broom();
        let text = serialize_seedling(&sd);
        assert_eq!(text, "A 0\nY 2 4\nL 1 2\nL 3 4\n");
        assert_eq!(parse_seedlings(&g, &text).unwrap(), vec![sd]);
    }

    #[test]
    fn invalid_seedlings() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let a = PathInGraph::new(&g, vec![0]).unwrap();
        // Y-end must not be preceded by another Y vertex.
        let p = PathInGraph::new(&g, vec![1, 2, 3]).unwrap();
        assert!(Seedling::new(&g, a.clone(), vec![p], g.set([2, 3])).is_err());
        // Y may not meet A.
        let p = PathInGraph::new(&g, vec![1, 2]).unwrap();
        assert!(Seedling::new(&g, a.clone(), vec![p.clone()], g.set([0, 2])).is_err());
        // Overlapping paths.
        assert!(Seedling::new(&g, a, vec![p.clone(), p], g.set([2])).is_err());
    }
}
