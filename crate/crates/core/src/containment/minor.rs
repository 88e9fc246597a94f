//! Backtracking search for induced minor models.
//!
//! Pattern vertices are placed one at a time. Each gets a connected branch
//! set, tried in order of increasing size, inside the vertices not yet used
//! and not adjacent to any placed non-neighbour.

use std::ops::ControlFlow;

use super::ModelAssignment;
use crate::{Budget, Graph, Outcome, VertexSet};

type Flow = ControlFlow<Stop>;

enum Stop {
    Found,
    OutOfBudget,
}

pub fn find_induced_minor(g: &Graph, h: &Graph, budget: &mut Budget) -> Outcome<ModelAssignment> {
    let order = placement_order(h);
    let mut st = State {
        h,
        order,
        branch: vec![None; h.n()],
        used: g.empty_set(),
        budget,
    };
    match search(g, &mut st, 0) {
        ControlFlow::Break(Stop::Found) => {
            let m = ModelAssignment {
                host: g.clone(),
                pattern: h.clone(),
                branch: st.branch.into_iter().map(|b| b.expect("all placed")).collect(),
                induced: true,
            };
            assert!(m.check().is_ok(), "search produced an invalid model: {:?}", m.check());
            Outcome::Found(m)
        }
        ControlFlow::Break(Stop::OutOfBudget) => Outcome::Exhausted,
        ControlFlow::Continue(()) => Outcome::Absent,
    }
}

/// Highest degree first, then repeatedly the vertex with the most placed
/// neighbours (ties by degree, then index).
fn placement_order(h: &Graph) -> Vec<usize> {
    let mut placed = vec![false; h.n()];
    let mut order = Vec::with_capacity(h.n());
    let mut weight = vec![0usize; h.n()];
    for _ in 0..h.n() {
        let v = (0..h.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in h.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

struct State<'a> {
    h: &'a Graph,
    order: Vec<usize>,
    branch: Vec<Option<VertexSet>>,
    used: VertexSet,
    budget: &'a mut Budget,
}

impl State<'_> {
    fn tick(&mut self) -> Flow {
        match self.budget.tick() {
            Ok(()) => ControlFlow::Continue(()),
            Err(_) => ControlFlow::Break(Stop::OutOfBudget),
        }
    }

    /// Vertices a branch set for `q` may use: unused, and outside the
    /// closed neighbourhoods of placed non-neighbours.
    fn region(&self, g: &Graph, q: usize) -> VertexSet {
        let mut r = self.used.complement();
        for (p, b) in self.branch.iter().enumerate() {
            if let Some(b) = b {
                if p != q && !self.h.has_edge(p, q) {
                    r.difference_with(&g.closed_neighborhood(b));
                }
            }
        }
        r
    }

    /// Neighbourhoods of the branch sets of placed neighbours of `q`.
    fn attach_sets(&self, g: &Graph, q: usize) -> Vec<VertexSet> {
        self.h
            .neighbors(q)
            .iter()
            .filter_map(|&p| self.branch[p].as_ref().map(|b| g.neighborhood(b)))
            .collect()
    }

    /// Every unplaced vertex still has room: some component of its region
    /// touches all of its placed neighbours, and every placed vertex has
    /// enough free neighbours left for its unplaced neighbours.
    fn feasible(&self, g: &Graph, depth: usize) -> bool {
        let rest = &self.order[depth..];
        if rest.len() > g.n() - self.used.len() {
            return false;
        }
        let free = self.used.complement();
        for &p in &self.order[..depth] {
            let need = self.h.neighbors(p).iter().filter(|&&u| self.branch[u].is_none()).count();
            if need > 0 {
                let b = self.branch[p].as_ref().unwrap();
                if g.neighborhood(b).intersection_len(&free) < need {
                    return false;
                }
            }
        }
        for &u in rest {
            let region = self.region(g, u);
            let attach = self.attach_sets(g, u);
            if attach.is_empty() {
                if region.is_empty() {
                    return false;
                }
                continue;
            }
            let ok = g
                .components_within(&region)
                .iter()
                .any(|c| attach.iter().all(|a| a.intersects(c)));
            if !ok {
                return false;
            }
        }
        true
    }
}

fn search(g: &Graph, st: &mut State, depth: usize) -> Flow {
    st.tick()?;
    if depth == st.order.len() {
        return ControlFlow::Break(Stop::Found);
    }
    let q = st.order[depth];
    let region = st.region(g, q);
    let attach = st.attach_sets(g, q);
    // Seeds: where the branch set must start. With a placed neighbour, the
    // set has to meet that neighbour's neighbourhood.
    let seeds: Vec<usize> = match attach.first() {
        Some(a) => a.intersection(&region).to_vec(),
        None => region.to_vec(),
    };
    let unplaced_after = st.order.len() - depth - 1;
    let max_size = (g.n() - st.used.len()).saturating_sub(unplaced_after);
    let need_nbrs = st.h.neighbors(q).iter().filter(|&&u| st.branch[u].is_none()).count();
    for size in 1..=max_size.min(region.len()) {
        let mut excluded = g.empty_set();
        for &s in &seeds {
            let mut set = g.set([s]);
            let mut frontier: Vec<usize> =
                g.neighbors(s).iter().copied().filter(|&w| region.contains(w) && !excluded.contains(w)).collect();
            let mut visit = |c: &VertexSet, st: &mut State| -> Flow {
                if !attach.iter().all(|a| a.intersects(c)) {
                    return ControlFlow::Continue(());
                }
                if need_nbrs > 0 {
                    let mut free = st.used.complement();
                    free.difference_with(c);
                    if g.neighborhood(c).intersection_len(&free) < need_nbrs {
                        return ControlFlow::Continue(());
                    }
                }
                st.used.union_with(c);
                st.branch[q] = Some(c.clone());
                let f = if st.feasible(g, depth + 1) { search(g, st, depth + 1) } else { ControlFlow::Continue(()) };
                if f.is_continue() {
                    st.branch[q] = None;
                    st.used.difference_with(c);
                }
                f
            };
            grow(g, st, &region, &mut set, &mut frontier, &mut excluded.clone(), size, &mut visit)?;
            excluded.insert(s);
        }
    }
    ControlFlow::Continue(())
}

/// Enumerates each connected set of exactly `size` vertices that contains
/// `set`, lies in `region` and avoids `excluded`, exactly once.
#[allow(clippy::too_many_arguments)]
fn grow(
    g: &Graph,
    st: &mut State,
    region: &VertexSet,
    set: &mut VertexSet,
    frontier: &mut Vec<usize>,
    excluded: &mut VertexSet,
    size: usize,
    visit: &mut dyn FnMut(&VertexSet, &mut State) -> Flow,
) -> Flow {
    st.tick()?;
    if set.len() == size {
        return visit(set, st);
    }
    let Some(w) = frontier.pop() else {
        return ControlFlow::Continue(());
    };
    // Include w.
    let before = frontier.len();
    set.insert(w);
    for &x in g.neighbors(w) {
        if region.contains(x) && !set.contains(x) && !excluded.contains(x) && !frontier.contains(&x) {
            frontier.push(x);
        }
    }
    let f = grow(g, st, region, set, frontier, excluded, size, visit);
    frontier.truncate(before);
    set.remove(w);
    f?;
    // Exclude w.
    excluded.insert(w);
    let f = grow(g, st, region, set, frontier, excluded, size, visit);
    excluded.remove(w);
    frontier.push(w);
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_cycle, make_path, make_tree};

    fn run(g: &Graph, h: &Graph) -> Outcome<ModelAssignment> {
        find_induced_minor(g, h, &mut Budget::new(10_000_000))
    }

    #[test]
    fn k1_in_anything() {
        assert!(run(&make_cycle(5), &Graph::empty(1)).is_found());
        assert!(run(&Graph::empty(1), &Graph::empty(1)).is_found());
        assert!(run(&Graph::empty(0), &Graph::empty(0)).is_found());
    }

    #[test]
    fn small_cases() {
        // Contracting one edge of C_4 gives a triangle.
        assert!(run(&make_cycle(4), &make_complete(3)).is_found());
        // A path has no cycle minor.
        assert!(run(&make_path(6), &make_complete(3)).is_absent());
        // Two isolated vertices need non-adjacent branch sets.
        assert!(run(&make_complete(4), &Graph::empty(2)).is_absent());
        assert!(run(&make_path(3), &Graph::empty(2)).is_found());
        // C_6 contains P_4 induced.
        assert!(run(&make_cycle(6), &make_path(4)).is_found());
        // C_5 gives K_3 by contracting two disjoint edges.
        assert!(run(&make_cycle(5), &make_complete(3)).is_found());
    }

    #[test]
    fn four_ary_tree_in_binary_tree() {
        let g = make_tree(2, 4).graph;
        let h = make_tree(4, 2).graph;
        assert!(run(&g, &h).is_found());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = make_tree(2, 4).graph;
        let h = make_tree(4, 2).graph;
        assert!(find_induced_minor(&g, &h, &mut Budget::new(5)).is_exhausted());
    }
}
