//! Backtracking search for induced subgraph embeddings.

use super::{check_embedding, Embedding};
use crate::{Budget, Graph, Outcome, VertexSet};

pub fn find_induced_subgraph(g: &Graph, h: &Graph, budget: &mut Budget) -> Outcome<Embedding> {
    if h.n() > g.n() {
        return Outcome::Absent;
    }
    let order = bfs_order(h);
    let mut map = vec![usize::MAX; h.n()];
    let mut used = g.empty_set();
    match extend(g, h, &order, 0, &mut map, &mut used, budget) {
        Some(true) => {
            let e = Embedding { map };
            assert!(check_embedding(g, h, &e).is_ok(), "search produced an invalid embedding");
            Outcome::Found(e)
        }
        Some(false) => Outcome::Absent,
        None => Outcome::Exhausted,
    }
}

/// Components in turn, each in breadth-first order from its highest-degree
/// vertex, so every vertex after the first of its component has a placed
/// neighbour.
fn bfs_order(h: &Graph) -> Vec<usize> {
    let mut seen = vec![false; h.n()];
    let mut order = Vec::with_capacity(h.n());
    let mut starts: Vec<usize> = (0..h.n()).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            for &w in h.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// `Some(true)` when a full embedding is in `map`, `Some(false)` when none
/// extends the current one, `None` when the budget ran out.
fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
    budget: &mut Budget,
) -> Option<bool> {
    budget.tick().ok()?;
    if depth == order.len() {
        return Some(true);
    }
    let q = order[depth];
    let mut cand = used.complement();
    for &p in &order[..depth] {
        if h.has_edge(p, q) {
            cand.intersect_with(g.adj(map[p]));
        } else {
            cand.difference_with(g.adj(map[p]));
        }
    }
    for v in cand.iter() {
        if g.degree(v) < h.degree(q) {
            continue;
        }
        map[q] = v;
        used.insert(v);
        let r = extend(g, h, order, depth + 1, map, used, budget);
        used.remove(v);
        match r {
            Some(false) => {}
            other => return other,
        }
    }
    map[q] = usize::MAX;
    Some(false)
}
