//! Induced `T_{d,r}`-models rooted at the `A` of a seedling.

use std::collections::VecDeque;

use super::bigramsey::{bigramsey_extract, Bigramsey};
use super::grow::{grow_seedling, GrowParams};
use super::magic::anticomplete_subset;
use super::ramsey::{ramsey_within, Ramsey};
use super::Seedling;
use crate::containment::ModelAssignment;
use crate::generators::make_tree;
use crate::{Budget, Error, Graph, Outcome, Result, VertexSet};

/// `d`, `r`, `t`, `κ` as in the target; `branching` (at least `d`) is the
/// root degree asked of the child trees, `child_lambda` the number of paths
/// per grown child and `child_kappa` their rigidity. The last three are
/// reused at every level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeParams {
    pub d: usize,
    pub r: usize,
    pub t: usize,
    pub kappa: usize,
    pub branching: usize,
    pub child_lambda: usize,
    pub child_kappa: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedlingTree {
    /// Induced `T_{d,r}`-model, numbered as by `make_tree`, root branch `A`.
    Tree(ModelAssignment),
    /// An induced `K_{t,t}`-model met on the way.
    Ktt(ModelAssignment),
}

/// Root branch equal to `A`, everything inside `A ∪ V(𝓛)`, and a valid
/// induced `T_{d,r}`-model.
pub fn verify_seedling_tree(g: &Graph, sd: &Seedling, d: usize, r: usize, m: &ModelAssignment) -> std::result::Result<(), String> {
    let n = g.n();
    if m.host != *g || m.pattern != make_tree(d, r).graph || !m.induced {
        return Err(format!("not an induced T_{{{d},{r}}}-model in this host"));
    }
    m.check()?;
    let a = sd.a_set(n);
    if m.branch[0] != a {
        return Err("root branch set is not A".into());
    }
    if !m.covered().is_subset(&a.union(&sd.path_vertices(n))) {
        return Err("model leaves A ∪ V(𝓛)".into());
    }
    Ok(())
}

pub fn seedling_to_tree(g: &Graph, sd: &Seedling, p: TreeParams, budget: &mut Budget) -> Result<Outcome<SeedlingTree>> {
    sd.validate(g)?;
    if p.d == 0 || p.r == 0 || p.t == 0 || p.branching < p.d {
        return Err(Error::InvalidArgument("need d, r, t positive and branching at least d".into()));
    }
    let out = if p.r == 1 { base(g, sd, p, budget) } else { step(g, sd, p, budget)? };
    if let Outcome::Found(SeedlingTree::Tree(m)) = &out {
        if let Err(e) = verify_seedling_tree(g, sd, p.d, p.r, m) {
            panic!("seedling tree does not verify: {e}");
        }
    }
    Ok(out)
}

/// `A` with `d` pairwise non-adjacent `N(A)`-ends as leaves.
fn base(g: &Graph, sd: &Seedling, p: TreeParams, budget: &mut Budget) -> Outcome<SeedlingTree> {
    let n = g.n();
    let ends: Vec<usize> = (0..sd.lambda()).map(|i| sd.x_end(i)).collect();
    let leaves = match ramsey_within(g, &ends, p.d, p.t) {
        Ramsey::Stable(vs) => vs,
        _ => {
            let singles: Vec<VertexSet> = ends.iter().map(|&v| g.set([v])).collect();
            match anticomplete_subset(g, &singles, p.d, budget) {
                Outcome::Found(ix) => ix.into_iter().map(|i| ends[i]).collect(),
                Outcome::Absent => return Outcome::Absent,
                Outcome::Exhausted => return Outcome::Exhausted,
            }
        }
    };
    let mut branch = vec![sd.a_set(n)];
    branch.extend(leaves.iter().map(|&v| g.set([v])));
    Outcome::Found(SeedlingTree::Tree(ModelAssignment {
        host: g.clone(),
        pattern: make_tree(p.d, 1).graph,
        branch,
        induced: true,
    }))
}

fn step(g: &Graph, sd: &Seedling, p: TreeParams, budget: &mut Budget) -> Result<Outcome<SeedlingTree>> {
    let TreeParams { d, r, t, kappa, branching, child_lambda, child_kappa } = p;
    let gp = GrowParams { t, delta: 2 * d * t, lambda: child_lambda, kappa, child_kappa };
    let kids = match grow_seedling(g, sd, gp, budget)?.outcome {
        Outcome::Found(k) => k,
        Outcome::Absent => return Ok(Outcome::Absent),
        Outcome::Exhausted => return Ok(Outcome::Exhausted),
    };
    let cp = TreeParams { d: branching, r: r - 1, kappa: child_kappa, ..p };
    let mut models = Vec::with_capacity(kids.len());
    for c in &kids {
        match seedling_to_tree(g, c, cp, budget)? {
            Outcome::Found(SeedlingTree::Tree(m)) => models.push(m),
            other => return Ok(other),
        }
    }

    // B_i^j: the first-children copy of T_{d,r-2} below the j-th child of
    // the root in the i-th model.
    let big = make_tree(branching, r - 1);
    let copies: Vec<Vec<usize>> = big.children[big.root]
        .iter()
        .map(|&u| big.first_children_copy(u, d, r - 2).expect("branching is at least d"))
        .collect();
    let a_sets: Vec<VertexSet> = models.iter().map(|m| m.branch[big.root].clone()).collect();
    let families: Vec<Vec<VertexSet>> = models
        .iter()
        .map(|m| {
            copies
                .iter()
                .map(|cp| {
                    let mut u = g.empty_set();
                    for &v in cp {
                        u.union_with(&m.branch[v]);
                    }
                    u
                })
                .collect()
        })
        .collect();
    let grp = match bigramsey_extract(g, &a_sets, &families, d, d, t, budget)? {
        Outcome::Found(Bigramsey::Groups(grp)) => grp,
        Outcome::Found(Bigramsey::Ktt(m)) => return Ok(Outcome::Found(SeedlingTree::Ktt(m))),
        Outcome::Absent => return Ok(Outcome::Absent),
        Outcome::Exhausted => return Ok(Outcome::Exhausted),
    };

    // Map T_{d,r} into the chosen models: the root's k-th child goes to the
    // root of model chosen[k], whose children are the selected u_j, and
    // below them first children throughout.
    let small = make_tree(d, r);
    let mut image: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); small.n()];
    let mut q = VecDeque::new();
    for (k, &c) in small.children[small.root].iter().enumerate() {
        image[c] = (k, big.root);
        q.push_back(c);
    }
    while let Some(s) = q.pop_front() {
        let (k, b) = image[s];
        let mut sub = grp.sub[k].clone();
        sub.sort_unstable();
        for (m, &c) in small.children[s].iter().enumerate() {
            let pick = if b == big.root { sub[m] } else { m };
            image[c] = (k, big.children[b][pick]);
            q.push_back(c);
        }
    }
    let mut branch = vec![sd.a_set(g.n())];
    branch.extend(image[1..].iter().map(|&(k, b)| models[grp.chosen[k]].branch[b].clone()));
    Ok(Outcome::Found(SeedlingTree::Tree(ModelAssignment {
        host: g.clone(),
        pattern: small.graph,
        branch,
        induced: true,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{planted_two_level, random_seedling, RandomSeedlingParams};
    use crate::PathInGraph;

    fn base_params() -> TreeParams {
        TreeParams { d: 2, r: 1, t: 2, kappa: 2, branching: 2, child_lambda: 2, child_kappa: 2 }
    }

    #[test]
    fn base_case_on_random_seedlings() {
        let params =
            RandomSeedlingParams { lambda: 4, max_path_len: 3, cross_p: 0.4, triangle_free_ends: true, extra_y: 1 };
        for seed in 0..20 {
            let (g, sd) = random_seedling(&params, seed);
            let out = seedling_to_tree(&g, &sd, base_params(), &mut Budget::unlimited()).unwrap();
            let Outcome::Found(SeedlingTree::Tree(m)) = out else { panic!("seed {seed}: {out:?}") };
            assert_eq!(m.branch[0], sd.a_set(g.n()));
        }
    }

    #[test]
    fn adjacent_ends_give_absent() {
        // Three one-vertex paths on a triangle of ends: no two are
        // non-adjacent.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)]).unwrap();
        let ps = (1..4).map(|v| PathInGraph::new(&g, vec![v]).unwrap()).collect();
        let sd = Seedling::new(&g, PathInGraph::new(&g, vec![0]).unwrap(), ps, g.set([1, 2, 3])).unwrap();
        let out = seedling_to_tree(&g, &sd, base_params(), &mut Budget::unlimited()).unwrap();
        assert!(out.is_absent());
    }

    #[test]
    fn two_levels() {
        let f = planted_two_level();
        let p = TreeParams { r: 2, ..base_params() };
        let out = seedling_to_tree(&f.graph, &f.seedling, p, &mut Budget::unlimited()).unwrap();
        let Outcome::Found(SeedlingTree::Tree(m)) = out else { panic!("{out:?}") };
        assert_eq!(verify_seedling_tree(&f.graph, &f.seedling, 2, 2, &m), Ok(()));
    }
}
