//! Growing `δ` child seedlings out of one seedling.

use super::magic::{magic_extract, Magic};
use super::ramsey::{ramsey_within, Ramsey};
use super::rigid::{is_rigid, verify_not_rigid, Rigidity};
use super::Seedling;
use crate::{Budget, Error, Graph, Outcome, PathInGraph, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowParams {
    pub t: usize,
    pub delta: usize,
    /// Paths per child.
    pub lambda: usize,
    /// Rigidity assumed of the input.
    pub kappa: usize,
    /// Rigidity required of each child.
    pub child_kappa: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowReport {
    pub outcome: Outcome<Vec<Seedling>>,
    /// `κ` pairwise anticomplete members of `𝓛`, when the input turned out
    /// not to be `κ`-rigid.
    pub not_rigid: Option<Vec<PathInGraph>>,
}

fn pow(b: usize, e: usize) -> usize {
    b.saturating_pow(e as u32)
}

/// Greedy clique in `g[cands]`: repeatedly keep the candidate with most
/// neighbours among those still compatible.
fn greedy_clique(g: &Graph, cands: &[usize]) -> Vec<usize> {
    let mut alive: Vec<usize> = cands.to_vec();
    let mut out = Vec::new();
    while !alive.is_empty() {
        let score = |v: usize| alive.iter().filter(|&&w| g.has_edge(v, w)).count();
        let &v = alive.iter().max_by_key(|&&v| (score(v), std::cmp::Reverse(v))).unwrap();
        out.push(v);
        alive.retain(|&w| g.has_edge(v, w));
    }
    out.sort_unstable();
    out
}

/// The child seedling of the `i`-th chosen path: `x .. z`, the tails
/// `w .. y` of its family, and their `y`-ends.
fn child(g: &Graph, paths: &[PathInGraph], m: &Magic, i: usize) -> Seedling {
    let a = PathInGraph::new(g, m.segment(paths, i).to_vec()).expect("segment of an induced path");
    let tails: Vec<PathInGraph> = m.families[i]
        .iter()
        .zip(&m.w[i])
        .map(|(&l, &w)| {
            let p = &paths[l];
            p.subpath(p.position(w).expect("marker on its path"), p.num_vertices() - 1)
        })
        .collect();
    let y = g.set(tails.iter().map(PathInGraph::last));
    Seedling::new(g, a, tails, y).expect("magic output yields a seedling")
}

/// `δ` children of `sd`, each `child_kappa`-rigid. `Absent` with a
/// `not_rigid` witness if `𝓛` holds `κ` pairwise anticomplete members.
/// Each result passes [`verify_children`].
pub fn grow_seedling(g: &Graph, sd: &Seedling, p: GrowParams, budget: &mut Budget) -> Result<GrowReport> {
    sd.validate(g)?;
    let GrowParams { t, delta, lambda, kappa, child_kappa } = p;
    if t == 0 || delta == 0 || lambda == 0 || kappa == 0 || child_kappa == 0 {
        return Err(Error::InvalidArgument("all growth parameters must be positive".into()));
    }
    let n = g.n();
    let paths = sd.paths();
    let sets: Vec<VertexSet> = paths.iter().map(|q| q.set(n)).collect();
    let k = paths.len();
    let touch = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    let gamma = Graph::from_edges(k, touch.filter(|&(i, j)| !g.anticomplete(&sets[i], &sets[j])).collect::<Vec<_>>())
        .expect("edges between path indices");

    let top = delta + 3 * t * kappa;
    let cap = pow(10usize.saturating_mul(pow(top, t + 3)).saturating_mul(pow(lambda, 3)), t).min(k).max(1);
    let all: Vec<usize> = (0..k).collect();
    let l0 = match ramsey_within(&gamma, &all, kappa, cap - 1) {
        Ramsey::Stable(ix) => {
            let witness: Vec<PathInGraph> = ix.iter().map(|&i| paths[i].clone()).collect();
            assert!(verify_not_rigid(g, sd, kappa, &witness), "anticomplete members do not verify");
            return Ok(GrowReport { outcome: Outcome::Absent, not_rigid: Some(witness) });
        }
        Ramsey::Clique(ix) => ix,
        Ramsey::Fail => greedy_clique(&gamma, &all),
    };
    if l0.len() < 2 {
        return Ok(GrowReport { outcome: Outcome::Absent, not_rigid: None });
    }
    let l0_paths: Vec<PathInGraph> = l0.iter().map(|&i| paths[i].clone()).collect();

    let mut exhausted = false;
    for d in (delta..=top).rev() {
        let m = match magic_extract(g, &l0_paths, t, d, lambda, budget)? {
            Outcome::Found(m) => m,
            Outcome::Absent => continue,
            Outcome::Exhausted => {
                exhausted = true;
                break;
            }
        };
        let mut kept = Vec::new();
        for i in 0..d {
            let c = child(g, &l0_paths, &m, i);
            match is_rigid(g, &c, child_kappa, budget)? {
                Rigidity::Rigid => kept.push(c),
                Rigidity::NotRigid(_) => {}
                Rigidity::Exhausted => exhausted = true,
            }
            if kept.len() == delta {
                break;
            }
        }
        if kept.len() == delta {
            if let Err(e) = verify_children(g, sd, lambda, &kept) {
                panic!("grown children do not verify: {e}");
            }
            return Ok(GrowReport { outcome: Outcome::Found(kept), not_rigid: None });
        }
        if exhausted {
            break;
        }
    }
    let outcome = if exhausted { Outcome::Exhausted } else { Outcome::Absent };
    Ok(GrowReport { outcome, not_rigid: None })
}

/// The child conditions, each checked on its own: every child is a valid
/// `λ`-seedling avoiding `A`; the children are pairwise disjoint; their
/// `A_i` are pairwise anticomplete; `A` touches every `A_i`; `A` is
/// anticomplete to every `V(𝓛_i)`.
pub fn verify_children(g: &Graph, sd: &Seedling, lambda: usize, children: &[Seedling]) -> std::result::Result<(), String> {
    let n = g.n();
    let a = sd.a_set(n);
    let mut used = VertexSet::new(n);
    let mut heads = Vec::with_capacity(children.len());
    for (i, c) in children.iter().enumerate() {
        c.validate(g).map_err(|e| format!("child {i}: {e}"))?;
        if c.lambda() != lambda {
            return Err(format!("child {i} has {} paths, not {lambda}", c.lambda()));
        }
        let ai = c.a_set(n);
        let li = c.path_vertices(n);
        let mut whole = ai.union(&li);
        whole.union_with(c.y());
        if whole.intersects(&a) {
            return Err(format!("child {i} meets A"));
        }
        if whole.intersects(&used) {
            return Err(format!("child {i} meets an earlier child"));
        }
        used.union_with(&whole);
        if g.anticomplete(&a, &ai) {
            return Err(format!("A is anticomplete to A_{i}"));
        }
        if !g.anticomplete(&a, &li) {
            return Err(format!("A touches the paths of child {i}"));
        }
        heads.push(ai);
    }
    for i in 0..heads.len() {
        for j in i + 1..heads.len() {
            if !g.anticomplete(&heads[i], &heads[j]) {
                return Err(format!("A_{i} and A_{j} are not anticomplete"));
            }
        }
    }
    Ok(())
}
