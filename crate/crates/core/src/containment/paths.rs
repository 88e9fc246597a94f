//! Packings of `(X, Y)`-paths: vertex-disjoint via unit-capacity flow, and
//! pairwise anticomplete via exhaustive search.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::graph::is_xy_path;
use crate::{Budget, Graph, Outcome, PathInGraph, VertexSet};

/// True iff the paths are pairwise anticomplete: disjoint with no edge
/// between any two.
pub fn pairwise_anticomplete(g: &Graph, paths: &[PathInGraph]) -> bool {
    let sets: Vec<VertexSet> = paths.iter().map(|p| p.set(g.n())).collect();
    (0..sets.len()).all(|i| (i + 1..sets.len()).all(|j| g.anticomplete(&sets[i], &sets[j])))
}

struct FlowNet {
    to: Vec<usize>,
    cap: Vec<u8>,
    forward: Vec<bool>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet { to: Vec::new(), cap: Vec::new(), forward: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, a: usize, b: usize) {
        self.out[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.forward.push(true);
        self.out[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
        self.forward.push(false);
    }

    /// One shortest augmenting path; false if none.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &e in &self.out[v] {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    q.push_back(w);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let e = via[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        true
    }

    fn flows(&self, e: usize) -> bool {
        self.forward[e] && self.cap[e] == 0
    }
}

/// `k` pairwise disjoint `(X, Y)`-paths, or `None` if there are fewer than
/// `k` disjoint paths from `X` to `Y`.
pub fn disjoint_xy_paths(g: &Graph, x: &VertexSet, y: &VertexSet, k: usize) -> Option<Vec<PathInGraph>> {
    let n = g.n();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v);
        net.arc(2 * v + 1, 2 * u);
    }
    for v in x.iter() {
        net.arc(s, 2 * v);
    }
    for v in y.iter() {
        net.arc(2 * v + 1, t);
    }
    let mut value = 0;
    while value < k && net.augment(s, t) {
        value += 1;
    }
    if value < k {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    for &e in &net.out[s] {
        if !net.flows(e) {
            continue;
        }
        let mut walk = Vec::new();
        let mut node = net.to[e];
        loop {
            let v = node / 2;
            walk.push(v);
            let next = net.out[2 * v + 1]
                .iter()
                .copied()
                .find(|&f| net.flows(f))
                .map(|f| net.to[f])
                .expect("flow is conserved");
            if next == t {
                break;
            }
            node = next;
        }
        out.push(trim(g, x, y, &walk));
    }
    debug_assert_eq!(out.len(), k);
    Some(out)
}

/// Cuts a walk from `X` to `Y` down to an `(X, Y)`-path: from the last `X`
/// vertex before the first `Y` vertex, then shortcut to an induced path.
fn trim(g: &Graph, x: &VertexSet, y: &VertexSet, walk: &[usize]) -> PathInGraph {
    let b = walk.iter().position(|&v| y.contains(v)).expect("walk ends in Y");
    let a = walk[..=b].iter().rposition(|&v| x.contains(v)).expect("walk starts in X");
    let seg = &walk[a..=b];
    let mut path = vec![seg[0]];
    let mut i = 0;
    while i + 1 < seg.len() {
        i = (i + 1..seg.len()).rev().find(|&j| g.has_edge(seg[i], seg[j])).expect("walk is connected");
        path.push(seg[i]);
    }
    assert!(is_xy_path(g, &path, x, y), "trimmed path is not an (X,Y)-path");
    PathInGraph::new(g, path).expect("trimmed path is induced")
}

enum Stop {
    Found,
    OutOfBudget,
}

/// `k` pairwise anticomplete `(X, Y)`-paths with all vertices in
/// `universe`, each listed from its `X`-end.
pub fn anticomplete_path_packing(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    k: usize,
    universe: &VertexSet,
    budget: &mut Budget,
) -> Outcome<Vec<PathInGraph>> {
    let mut st = Packer { g, x, y, budget, chosen: Vec::new() };
    match st.pack(k, universe.clone(), 0) {
        ControlFlow::Break(Stop::Found) => {
            let out: Vec<PathInGraph> = st.chosen.into_iter().map(PathInGraph::new_unchecked).collect();
            assert!(out.iter().all(|p| is_xy_path(g, p.vertices(), x, y) && p.set(g.n()).is_subset(universe)));
            assert!(pairwise_anticomplete(g, &out));
            Outcome::Found(out)
        }
        ControlFlow::Break(Stop::OutOfBudget) => Outcome::Exhausted,
        ControlFlow::Continue(()) => Outcome::Absent,
    }
}

struct Packer<'a> {
    g: &'a Graph,
    x: &'a VertexSet,
    y: &'a VertexSet,
    budget: &'a mut Budget,
    chosen: Vec<Vec<usize>>,
}

impl Packer<'_> {
    fn tick(&mut self) -> ControlFlow<Stop> {
        match self.budget.tick() {
            Ok(()) => ControlFlow::Continue(()),
            Err(_) => ControlFlow::Break(Stop::OutOfBudget),
        }
    }

    /// Chooses `k` more paths inside `universe` with `X`-ends at least
    /// `min_x`, in increasing order of `X`-end.
    fn pack(&mut self, k: usize, universe: VertexSet, min_x: usize) -> ControlFlow<Stop> {
        self.tick()?;
        if k == 0 {
            return ControlFlow::Break(Stop::Found);
        }
        let starts: Vec<usize> = self.x.intersection(&universe).iter().filter(|&v| v >= min_x).collect();
        if starts.len() < k {
            return ControlFlow::Continue(());
        }
        // Cheap test that at least one more path exists.
        let mut reach = universe.clone();
        for v in self.x.intersection(&universe).iter().filter(|&v| v < min_x) {
            reach.remove(v);
        }
        if self.g.find_xy_path_within(self.x, self.y, &reach).is_none() {
            return ControlFlow::Continue(());
        }
        for s in starts {
            // Paths from s may not use any other X vertex.
            let mut local = universe.difference(self.x);
            local.insert(s);
            let mut path = vec![s];
            let mut blocked = self.g.empty_set();
            self.paths_from(&local, &mut path, &mut blocked, &mut |p, st| {
                let mut rest = universe.clone();
                for &v in p {
                    rest.difference_with(st.g.adj(v));
                    rest.remove(v);
                }
                st.chosen.push(p.to_vec());
                let f = st.pack(k - 1, rest, s + 1);
                if f.is_continue() {
                    st.chosen.pop();
                }
                f
            })?;
        }
        ControlFlow::Continue(())
    }

    /// Every induced path extending `path` inside `local` that stops at its
    /// first `Y` vertex. `blocked` holds the closed neighbourhoods of all
    /// path vertices but the last.
    fn paths_from(
        &mut self,
        local: &VertexSet,
        path: &mut Vec<usize>,
        blocked: &mut VertexSet,
        visit: &mut dyn FnMut(&[usize], &mut Self) -> ControlFlow<Stop>,
    ) -> ControlFlow<Stop> {
        self.tick()?;
        let last = *path.last().unwrap();
        if self.y.contains(last) {
            return visit(path, self);
        }
        let next: Vec<usize> = self
            .g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| local.contains(w) && !blocked.contains(w) && !path.contains(&w))
            .collect();
        let mut added = Vec::new();
        if blocked.insert(last) {
            added.push(last);
        }
        for &w in self.g.neighbors(last) {
            if blocked.insert(w) {
                added.push(w);
            }
        }
        let mut f = ControlFlow::Continue(());
        for w in next {
            path.push(w);
            f = self.paths_from(local, path, blocked, visit);
            path.pop();
            if f.is_break() {
                break;
            }
        }
        for v in added {
            blocked.remove(v);
        }
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete_bipartite, make_path};

    #[test]
    fn whole_path() {
        let g = make_path(3);
        let ps = disjoint_xy_paths(&g, &g.set([0]), &g.set([2]), 1).unwrap();
        assert_eq!(ps[0].vertices(), &[0, 1, 2]);
        assert!(disjoint_xy_paths(&g, &g.set([0]), &g.set([2]), 2).is_none());
    }

    #[test]
    fn matching_in_k33() {
        let g = make_complete_bipartite(3, 3);
        let ps = disjoint_xy_paths(&g, &g.set([0, 1, 2]), &g.set([3, 4, 5]), 3).unwrap();
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|p| p.length() == 1));
    }

    #[test]
    fn trimming_to_minimal_paths() {
        // 0-1-2-3-4 with chord 1-3.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let walk = [0, 1, 2, 3, 4];
        assert_eq!(trim(&g, &g.set([0]), &g.set([4]), &walk).vertices(), &[0, 1, 3, 4]);
        assert_eq!(trim(&g, &g.set([0, 1]), &g.set([4]), &walk).vertices(), &[1, 3, 4]);
        assert_eq!(trim(&g, &g.set([0]), &g.set([2, 4]), &walk).vertices(), &[0, 1, 2]);
        let shared = disjoint_xy_paths(&g, &g.set([2]), &g.set([2]), 1).unwrap();
        assert_eq!(shared[0].vertices(), &[2]);
    }

    #[test]
    fn anticomplete_packing() {
        // Two parallel paths 0-1-2 and 3-4-5.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let (x, y) = (g.set([0, 3]), g.set([2, 5]));
        let all = g.full_set();
        let r = anticomplete_path_packing(&g, &x, &y, 2, &all, &mut Budget::unlimited());
        assert_eq!(r.found().unwrap().len(), 2);
        let joined = g.with_edges([(1, 4)]).unwrap();
        let r = anticomplete_path_packing(&joined, &x, &y, 2, &all, &mut Budget::unlimited());
        assert!(r.is_absent());
        let r = anticomplete_path_packing(&joined, &x, &y, 0, &all, &mut Budget::unlimited());
        assert_eq!(r, Outcome::Found(vec![]));
        let r = anticomplete_path_packing(&g, &x, &y, 2, &g.set([0, 1, 2, 3, 4]), &mut Budget::unlimited());
        assert!(r.is_absent());
        let r = anticomplete_path_packing(&g, &x, &y, 2, &all, &mut Budget::new(1));
        assert!(r.is_exhausted());
    }
}
