//! Strong blocks, and trading their path families for families with
//! pairwise anticomplete interiors.

use std::collections::BTreeMap;

use super::ramsey::{ramsey_within, Ramsey};
use super::rigid::{is_rigid, Rigidity};
use super::Seedling;
use crate::{Budget, Error, Graph, Outcome, PathInGraph, Result, VertexSet};

/// `B` with, for each pair `x < y` of `B`, a family of paths from `x` to
/// `y` (each listed from `x`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongBlock {
    /// Sorted.
    pub b: Vec<usize>,
    pub paths: BTreeMap<(usize, usize), Vec<Vec<usize>>>,
}

fn is_walk_path(g: &Graph, p: &[usize], x: usize, y: usize) -> bool {
    let mut seen = VertexSet::new(g.n());
    p.first() == Some(&x)
        && p.last() == Some(&y)
        && p.iter().all(|&v| v < g.n() && seen.insert(v))
        && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn interior(p: &[usize]) -> &[usize] {
    if p.len() < 2 {
        &[]
    } else {
        &p[1..p.len() - 1]
    }
}

impl StrongBlock {
    /// First violation of the strong `(|B|, l)`-block conditions.
    pub fn check(&self, g: &Graph, l: usize) -> std::result::Result<(), String> {
        let n = g.n();
        if self.b.windows(2).any(|w| w[0] >= w[1]) || self.b.iter().any(|&v| v >= n) {
            return Err("B must be sorted, distinct and inside the host".into());
        }
        let pairs: Vec<(usize, usize)> =
            self.b.iter().enumerate().flat_map(|(i, &x)| self.b[i + 1..].iter().map(move |&y| (x, y))).collect();
        if self.paths.keys().copied().ne(pairs.iter().copied()) {
            return Err("path families must be given for exactly the pairs of B".into());
        }
        let mut owner: Vec<Option<(usize, usize)>> = vec![None; n];
        for &(x, y) in &pairs {
            let fam = &self.paths[&(x, y)];
            if fam.len() < l {
                return Err(format!("pair ({x}, {y}) has {} paths, fewer than {l}", fam.len()));
            }
            let mut inner = VertexSet::new(n);
            for p in fam {
                if !is_walk_path(g, p, x, y) {
                    return Err(format!("{p:?} is not a path from {x} to {y}"));
                }
                for &v in interior(p) {
                    if !inner.insert(v) {
                        return Err(format!("paths of ({x}, {y}) share the interior vertex {v}"));
                    }
                    match owner[v] {
                        Some(o) if o != (x, y) => {
                            return Err(format!("vertex {v} lies on paths of ({x}, {y}) and {o:?}"));
                        }
                        _ => owner[v] = Some((x, y)),
                    }
                }
            }
        }
        // A vertex of B inside another pair's path is shared with that pair
        // only where it is an end.
        for (&(x, y), fam) in &self.paths {
            for p in fam {
                if let Some(&v) = interior(p).iter().find(|v| self.b.binary_search(v).is_ok()) {
                    return Err(format!("a path of ({x}, {y}) passes through {v} in B"));
                }
            }
        }
        Ok(())
    }
}

/// A stable `S ⊆ B` and, per pair of `S`, `g` paths inside the old family
/// whose interiors are pairwise anticomplete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticompletePaths {
    pub s: Vec<usize>,
    pub q: BTreeMap<(usize, usize), Vec<Vec<usize>>>,
}

/// Checks `out` against the block it came from.
pub fn verify_anticomplete_paths(
    g: &Graph,
    blk: &StrongBlock,
    s: usize,
    gk: usize,
    out: &AnticompletePaths,
) -> std::result::Result<(), String> {
    let n = g.n();
    if out.s.len() != s || out.s.iter().any(|v| blk.b.binary_search(v).is_err()) || !g.is_stable(&g.set(out.s.iter().copied())) {
        return Err(format!("S is not a stable {s}-subset of B"));
    }
    for (i, &x) in out.s.iter().enumerate() {
        for &y in &out.s[i + 1..] {
            let Some(fam) = out.q.get(&(x, y)) else {
                return Err(format!("no family for ({x}, {y})"));
            };
            let Some(old_fam) = blk.paths.get(&(x, y)) else {
                return Err(format!("({x}, {y}) is not a pair of B in increasing order"));
            };
            let old: VertexSet = {
                let mut u = VertexSet::new(n);
                for p in old_fam {
                    for &v in p {
                        u.insert(v);
                    }
                }
                u
            };
            if fam.len() != gk {
                return Err(format!("({x}, {y}) has {} paths, not {gk}", fam.len()));
            }
            let mut inners = Vec::with_capacity(gk);
            for p in fam {
                if !is_walk_path(g, p, x, y) || p.len() < 3 || p.iter().any(|&v| !old.contains(v)) {
                    return Err(format!("{p:?} is not a path from {x} to {y} inside the old family"));
                }
                inners.push(g.set(interior(p).iter().copied()));
            }
            for a in 0..gk {
                for b in a + 1..gk {
                    if !g.anticomplete(&inners[a], &inners[b]) {
                        return Err(format!("interiors {a} and {b} of ({x}, {y}) touch"));
                    }
                }
            }
        }
    }
    if out.q.len() != s * (s - 1) / 2 {
        return Err("families given for pairs outside S".into());
    }
    Ok(())
}

/// Stable `s`-subset of `B` by Ramsey extraction, then for each pair a
/// non-rigidity witness at `gk` of the seedling `({x}, interiors, N(y))`.
/// `Absent` when Ramsey yields no stable set or some pair's seedling is
/// `gk`-rigid. Errors on a malformed block.
pub fn block_to_anticomplete_paths(
    g: &Graph,
    blk: &StrongBlock,
    s: usize,
    t: usize,
    gk: usize,
    budget: &mut Budget,
) -> Result<Outcome<AnticompletePaths>> {
    blk.check(g, 1).map_err(Error::InvalidBlock)?;
    if s < 2 || gk == 0 {
        return Err(Error::InvalidArgument("need s at least 2 and g positive".into()));
    }
    let Ramsey::Stable(stable) = ramsey_within(g, &blk.b, s, t) else {
        return Ok(Outcome::Absent);
    };
    let mut q = BTreeMap::new();
    for (i, &x) in stable.iter().enumerate() {
        for &y in &stable[i + 1..] {
            let nx = g.neighborhood(&g.set([x]));
            let ny = g.neighborhood(&g.set([y]));
            let ls: Vec<PathInGraph> = blk.paths[&(x, y)]
                .iter()
                .map(|p| {
                    let inner = g.set(interior(p).iter().copied());
                    g.find_xy_path_within(&nx, &ny, &inner).expect("a path's interior links N(x) to N(y)")
                })
                .collect();
            let sd = Seedling::new(g, PathInGraph::new(g, vec![x])?, ls, ny.clone())?;
            let witness = match is_rigid(g, &sd, gk, budget)? {
                Rigidity::NotRigid(ks) => ks,
                Rigidity::Rigid => return Ok(Outcome::Absent),
                Rigidity::Exhausted => return Ok(Outcome::Exhausted),
            };
            let fam = witness
                .into_iter()
                .map(|k| {
                    let k = if nx.contains(k.first()) { k } else { k.reversed() };
                    let mut p = vec![x];
                    p.extend_from_slice(k.vertices());
                    p.push(y);
                    p
                })
                .collect();
            q.insert((x, y), fam);
        }
    }
    let out = AnticompletePaths { s: stable, q };
    if let Err(e) = verify_anticomplete_paths(g, blk, s, gk, &out) {
        panic!("anticomplete path families do not verify: {e}");
    }
    Ok(Outcome::Found(out))
}
