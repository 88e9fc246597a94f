use std::collections::HashSet;

use super::{boundary, PathDecomposition};
use crate::{Budget, Graph, Outcome, VertexSet};

/// Decides `pw(g) <= k` by searching for an ordering whose every prefix has
/// at most `k` boundary vertices.
///
/// Prefixes that failed are memoised. If adding some vertex does not grow
/// the boundary, that move is taken without branching: the boundary size is
/// submodular, so moving such a vertex earlier never hurts. Each visited
/// prefix costs one budget node.
pub fn pathwidth_at_most(g: &Graph, k: usize, budget: &mut Budget) -> Outcome<PathDecomposition> {
    let mut search = Search { g, k, failed: HashSet::new(), budget, order: Vec::new() };
    let start = g.empty_set();
    match search.extend(&start) {
        Step::Done => {
            let cert = PathDecomposition::from_ordering(g, &search.order);
            debug_assert!(super::verify_path_decomposition(g, &cert).is_some_and(|w| w <= k));
            Outcome::Found(cert)
        }
        Step::Fail => Outcome::Absent,
        Step::OutOfBudget => Outcome::Exhausted,
    }
}

enum Step {
    Done,
    Fail,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    failed: HashSet<VertexSet>,
    budget: &'a mut Budget,
    order: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, placed: &VertexSet) -> Step {
        if placed.len() == self.g.n() {
            return Step::Done;
        }
        if self.failed.contains(placed) {
            return Step::Fail;
        }
        if self.budget.tick().is_err() {
            return Step::OutOfBudget;
        }
        let here = boundary(self.g, placed).len();
        let mut moves: Vec<(usize, usize)> = Vec::new();
        for v in placed.complement().iter() {
            let mut next = placed.clone();
            next.insert(v);
            let b = boundary(self.g, &next).len();
            if b <= here {
                moves = vec![(b, v)];
                break;
            }
            if b <= self.k {
                moves.push((b, v));
            }
        }
        moves.sort_unstable();
        for (_, v) in moves {
            let mut next = placed.clone();
            next.insert(v);
            self.order.push(v);
            match self.extend(&next) {
                Step::Fail => {
                    self.order.pop();
                }
                other => return other,
            }
        }
        self.failed.insert(placed.clone());
        Step::Fail
    }
}
