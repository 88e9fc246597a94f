use std::collections::HashMap;

use super::PathDecomposition;
use crate::{Error, Graph, Result, VertexSet};

/// Exact pathwidth of a tree with a certificate.
///
/// Uses the recursive characterization: a tree has pathwidth at least
/// `j + 1` iff some vertex leaves three components of pathwidth at least
/// `j`, with caterpillars being exactly the trees of pathwidth at most 1.
/// The certificate places a spine path whose hanging subtrees all have
/// smaller pathwidth and decomposes those recursively.
pub fn tree_pathwidth(g: &Graph) -> Result<(usize, PathDecomposition)> {
    if g.n() == 0 || !g.is_tree() {
        return Err(Error::NotATree("tree_pathwidth needs a nonempty tree".into()));
    }
    let mut t = TreePw { g, memo: HashMap::new() };
    let all = g.full_set();
    let k = t.pathwidth(&all);
    let mut bags = Vec::new();
    t.decompose(&all, k, &mut bags);
    let cert = PathDecomposition { bags };
    assert_eq!(super::verify_path_decomposition(g, &cert), Some(k), "tree certificate is valid");
    Ok((k, cert))
}

struct TreePw<'a> {
    g: &'a Graph,
    memo: HashMap<(VertexSet, usize), bool>,
}

impl TreePw<'_> {
    /// `sub` induces a subtree.
    fn pathwidth(&mut self, sub: &VertexSet) -> usize {
        let mut j = 0;
        while self.at_least(sub, j + 1) {
            j += 1;
        }
        j
    }

    fn at_least(&mut self, sub: &VertexSet, j: usize) -> bool {
        match j {
            0 => return !sub.is_empty(),
            1 => return sub.len() >= 2,
            2 => return !self.is_caterpillar(sub),
            _ => {}
        }
        let key = (sub.clone(), j);
        if let Some(&b) = self.memo.get(&key) {
            return b;
        }
        let mut ans = false;
        for v in sub {
            if self.g.adj(v).intersection_len(sub) < 3 {
                continue;
            }
            let mut rest = sub.clone();
            rest.remove(v);
            let mut heavy = 0;
            for c in self.g.components_within(&rest) {
                if self.at_least(&c, j - 1) {
                    heavy += 1;
                    if heavy == 3 {
                        break;
                    }
                }
            }
            if heavy >= 3 {
                ans = true;
                break;
            }
        }
        self.memo.insert(key, ans);
        ans
    }

    /// Removing the leaves leaves a path (or nothing).
    fn is_caterpillar(&self, sub: &VertexSet) -> bool {
        let core: VertexSet = {
            let mut c = sub.clone();
            for v in sub {
                if self.g.adj(v).intersection_len(sub) <= 1 {
                    c.remove(v);
                }
            }
            c
        };
        core.iter().all(|v| self.g.adj(v).intersection_len(&core) <= 2)
    }

    /// Tree path between `a` and `b` inside `sub`.
    fn tree_path(&self, sub: &VertexSet, a: usize, b: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.g.n()];
        parent[a] = a;
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            if v == b {
                break;
            }
            for &w in self.g.neighbors(v) {
                if sub.contains(w) && parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    /// Appends bags of width at most `k` covering the subtree `sub`, whose
    /// pathwidth is at most `k`.
    fn decompose(&mut self, sub: &VertexSet, k: usize, bags: &mut Vec<Vec<usize>>) {
        if sub.len() == 1 {
            bags.push(sub.to_vec());
            return;
        }
        let verts = sub.to_vec();
        for (ia, &a) in verts.iter().enumerate() {
            for &b in &verts[ia..] {
                let spine = self.tree_path(sub, a, b);
                let mut rest = sub.clone();
                for &p in &spine {
                    rest.remove(p);
                }
                let comps = self.g.components_within(&rest);
                if comps.iter().all(|c| !self.at_least(c, k)) {
                    self.emit_spine(&spine, comps, k, bags);
                    return;
                }
            }
        }
        unreachable!("every tree has a spine whose hanging subtrees have smaller pathwidth");
    }

    fn emit_spine(&mut self, spine: &[usize], comps: Vec<VertexSet>, k: usize, bags: &mut Vec<Vec<usize>>) {
        for (i, &p) in spine.iter().enumerate() {
            for c in comps.iter().filter(|c| self.g.adj(p).intersects(c)) {
                let start = bags.len();
                self.decompose(c, k - 1, bags);
                for bag in &mut bags[start..] {
                    bag.push(p);
                    bag.sort_unstable();
                }
            }
            if let Some(&q) = spine.get(i + 1) {
                bags.push(vec![p.min(q), p.max(q)]);
            } else if spine.len() == 1 {
                bags.push(vec![p]);
            }
        }
    }
}
