//! Clique, induced `K_{t,t}`-model or induced `H`-model for a forest `H`,
//! by direct search at desk scale.

use super::tree::{seedling_to_tree, SeedlingTree, TreeParams};
use super::Seedling;
use crate::containment::{check_embedding, find_induced_minor, find_induced_subgraph, Embedding, ModelAssignment};
use crate::generators::{make_complete, make_complete_bipartite, make_tree, make_wall, RootedTree};
use crate::{Budget, Error, Graph, Outcome, Result};

/// `H⁺`: `H` plus an apex (the last vertex) with one neighbour in each
/// component, the smallest vertex of the component.
pub fn apex_tree(h: &Graph) -> Result<Graph> {
    if !h.is_forest() {
        return Err(Error::NotATree("H must be a forest".into()));
    }
    let apex = h.n();
    let spokes: Vec<(usize, usize)> =
        h.components().iter().map(|c| (apex, c.first().expect("components are non-empty"))).collect();
    Graph::from_edges(h.n() + 1, h.edges().into_iter().chain(spokes))
}

/// `H⁺` rooted at its apex, embedded in the smallest `T_{d,r}` that holds it
/// by sending the `i`-th child to the `i`-th child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexEmbedding {
    pub h_plus: Graph,
    pub d: usize,
    pub r: usize,
    /// `H⁺ → T_{d,r}`; `H` is the restriction to its first `|H|` vertices.
    pub map: Embedding,
}

pub fn embed_apex_tree(h: &Graph) -> Result<ApexEmbedding> {
    let h_plus = apex_tree(h)?;
    let rooted = RootedTree::from_graph(h_plus.clone(), h.n())?;
    let d = rooted.children.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let r = rooted.height().max(1);
    let tree = make_tree(d, r);
    let mut map = vec![usize::MAX; h_plus.n()];
    map[rooted.root] = tree.root;
    let mut stack = vec![rooted.root];
    while let Some(v) = stack.pop() {
        for (i, &c) in rooted.children[v].iter().enumerate() {
            map[c] = tree.children[map[v]][i];
            stack.push(c);
        }
    }
    let map = Embedding { map };
    if let Err(e) = check_embedding(&tree.graph, &h_plus, &map) {
        panic!("apex tree embedding does not verify: {e}");
    }
    Ok(ApexEmbedding { h_plus, d, r, map })
}

/// Composes an induced `T_{d,r}`-model with the embedding of `H`.
pub fn h_model_from_tree(h: &Graph, emb: &ApexEmbedding, tree_model: &ModelAssignment) -> ModelAssignment {
    let branch = (0..h.n()).map(|v| tree_model.branch[emb.map.map[v]].clone()).collect();
    ModelAssignment { host: tree_model.host.clone(), pattern: h.clone(), branch, induced: true }
}

/// Node budgets per stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DriverBudgets {
    pub clique: u64,
    pub seedling: u64,
    pub minor: u64,
    pub ktt: u64,
}

impl DriverBudgets {
    pub fn uniform(nodes: u64) -> DriverBudgets {
        DriverBudgets { clique: nodes, seedling: nodes, minor: nodes, ktt: nodes }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DriverCertificate {
    Clique(Embedding),
    Ktt(ModelAssignment),
    H(ModelAssignment),
    /// Every search completed without a certificate.
    Absent,
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DriverReport {
    pub certificate: DriverCertificate,
    pub apex: ApexEmbedding,
}

/// A `K_{t+1}` subgraph, then an induced `H`-model (through the seedling
/// route if one is given, then by direct search), then an induced
/// `K_{t,t}`-model. Every certificate is checked before it is returned.
pub fn main_driver(
    g: &Graph,
    t: usize,
    h: &Graph,
    budgets: DriverBudgets,
    seedling: Option<(&Seedling, TreeParams)>,
) -> Result<DriverReport> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let apex = embed_apex_tree(h)?;
    let report = |certificate| Ok(DriverReport { certificate, apex: apex.clone() });
    let mut exhausted = false;

    let kt1 = make_complete(t + 1);
    match find_induced_subgraph(g, &kt1, &mut Budget::new(budgets.clique)) {
        Outcome::Found(e) => {
            assert!(check_embedding(g, &kt1, &e).is_ok());
            return report(DriverCertificate::Clique(e));
        }
        Outcome::Exhausted => exhausted = true,
        Outcome::Absent => {}
    }

    if let Some((sd, p)) = seedling {
        if p.d < apex.d || p.r != apex.r {
            return Err(Error::InvalidArgument(format!("the seedling route must target T_{{d,{}}} with d >= {}", apex.r, apex.d)));
        }
        let wide = widen(&apex, p.d);
        match seedling_to_tree(g, sd, p, &mut Budget::new(budgets.seedling))? {
            Outcome::Found(SeedlingTree::Tree(m)) => {
                let hm = h_model_from_tree(h, &wide, &m);
                assert_eq!(hm.check(), Ok(()), "composed H-model does not verify");
                return report(DriverCertificate::H(hm));
            }
            Outcome::Found(SeedlingTree::Ktt(m)) => return report(DriverCertificate::Ktt(m)),
            Outcome::Exhausted => exhausted = true,
            Outcome::Absent => {}
        }
    }

    match find_induced_minor(g, h, &mut Budget::new(budgets.minor)) {
        Outcome::Found(m) => return report(DriverCertificate::H(m)),
        Outcome::Exhausted => exhausted = true,
        Outcome::Absent => {}
    }
    match find_induced_minor(g, &make_complete_bipartite(t, t), &mut Budget::new(budgets.ktt)) {
        Outcome::Found(m) => return report(DriverCertificate::Ktt(m)),
        Outcome::Exhausted => exhausted = true,
        Outcome::Absent => {}
    }
    report(if exhausted { DriverCertificate::Exhausted } else { DriverCertificate::Absent })
}

/// The embedding of `H⁺` into `T_{d',r}` for `d' >= d`, again by child
/// index.
fn widen(apex: &ApexEmbedding, d2: usize) -> ApexEmbedding {
    let big = make_tree(d2, apex.r);
    let copy = big.first_children_copy(big.root, apex.d, apex.r).expect("d' is at least d");
    let map = Embedding { map: apex.map.map.iter().map(|&v| copy[v]).collect() };
    if let Err(e) = check_embedding(&big.graph, &apex.h_plus, &map) {
        panic!("widened embedding does not verify: {e}");
    }
    ApexEmbedding { h_plus: apex.h_plus.clone(), d: d2, r: apex.r, map }
}

/// `K_{t+1}` and induced `K_{t,t}`-minor searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TidyReport {
    pub t: usize,
    pub clique: Outcome<Embedding>,
    pub ktt: Outcome<ModelAssignment>,
}

impl TidyReport {
    /// Both searches completed empty.
    pub fn is_tidy(&self) -> bool {
        self.clique.is_absent() && self.ktt.is_absent()
    }
}

pub fn tidy_report(g: &Graph, t: usize, budget: &mut Budget) -> TidyReport {
    let clique = find_induced_subgraph(g, &make_complete(t + 1), budget);
    let ktt = find_induced_minor(g, &make_complete_bipartite(t, t), budget);
    TidyReport { t, clique, ktt }
}

/// Adds searches for induced subdivisions of `W_{t×t}` and induced line
/// graphs of such subdivisions. Subdivisions are tried by total number of
/// new vertices, up to what fits in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanReport {
    pub tidy: TidyReport,
    /// Edge lengths of the subdivision and its embedding.
    pub wall: Outcome<(Vec<usize>, Embedding)>,
    pub line: Outcome<(Vec<usize>, Embedding)>,
}

impl CleanReport {
    pub fn is_clean(&self) -> bool {
        self.tidy.is_tidy() && self.wall.is_absent() && self.line.is_absent()
    }
}

pub fn clean_report(g: &Graph, t: usize, budget: &mut Budget) -> Result<CleanReport> {
    if t < 2 {
        return Err(Error::InvalidArgument("walls need t at least 2".into()));
    }
    let tidy = tidy_report(g, t, budget);
    let wall = make_wall(t).graph;
    let wall_hit = subdivision_search(g, &wall, budget, |s| s.clone());
    let line_hit = subdivision_search(g, &wall, budget, |s| s.line_graph().0);
    Ok(CleanReport { tidy, wall: wall_hit, line: line_hit })
}

/// Tries every subdivision of `base` whose image (after `shape`) fits in
/// `g`, fewest new vertices first.
fn subdivision_search(
    g: &Graph,
    base: &Graph,
    budget: &mut Budget,
    shape: impl Fn(&Graph) -> Graph,
) -> Outcome<(Vec<usize>, Embedding)> {
    let m = base.m();
    let mut exhausted = false;
    for extra in 0.. {
        let mut any_fits = false;
        let mut lengths = vec![1usize; m];
        let mut found = None;
        compositions(m, extra, &mut lengths, 0, &mut |ls| {
            let sub = base.subdivide(ls).expect("lengths are positive").graph;
            let pat = shape(&sub);
            if pat.n() > g.n() {
                return true;
            }
            any_fits = true;
            match find_induced_subgraph(g, &pat, budget) {
                Outcome::Found(e) => {
                    found = Some((ls.to_vec(), e));
                    false
                }
                Outcome::Exhausted => {
                    exhausted = true;
                    false
                }
                Outcome::Absent => true,
            }
        });
        if let Some(hit) = found {
            return Outcome::Found(hit);
        }
        if exhausted {
            return Outcome::Exhausted;
        }
        if !any_fits {
            return Outcome::Absent;
        }
    }
    unreachable!()
}

/// Calls `f` on every length vector with `extra` added edges in total;
/// stops when `f` returns false.
fn compositions(m: usize, extra: usize, ls: &mut [usize], from: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if extra == 0 {
        return f(ls);
    }
    for i in from..m {
        ls[i] += 1;
        let go = compositions(m, extra - 1, ls, i, f);
        ls[i] -= 1;
        if !go {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_cycle, make_path, planted_two_level};

    #[test]
    fn apex_tree_of_a_forest() {
        let h = Graph::from_edges(4, [(0, 1)]).unwrap();
        let a = embed_apex_tree(&h).unwrap();
        assert_eq!(a.h_plus.n(), 5);
        assert!(a.h_plus.is_tree());
        assert_eq!((a.d, a.r), (3, 2));
        assert!(embed_apex_tree(&make_cycle(3)).is_err());
    }

    #[test]
    fn complete_graph_gives_a_clique() {
        let rep = main_driver(&make_complete(5), 4, &make_path(2), DriverBudgets::uniform(10_000), None).unwrap();
        let DriverCertificate::Clique(e) = rep.certificate else { panic!() };
        assert_eq!(check_embedding(&make_complete(5), &make_complete(5), &e), Ok(()));
    }

    #[test]
    fn hexagon_gives_p4() {
        let g = make_cycle(6);
        let rep = main_driver(&g, 2, &make_path(4), DriverBudgets::uniform(100_000), None).unwrap();
        let DriverCertificate::H(m) = rep.certificate else { panic!("{:?}", rep.certificate) };
        assert_eq!(m.check(), Ok(()));
    }

    #[test]
    fn seedling_route() {
        // Two disjoint edges: H⁺ sits in T_{2,2}.
        let f = planted_two_level();
        let h = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let p = TreeParams { d: 2, r: 2, t: 2, kappa: 2, branching: 2, child_lambda: 2, child_kappa: 2 };
        let rep = main_driver(&f.graph, 2, &h, DriverBudgets::uniform(1_000_000), Some((&f.seedling, p))).unwrap();
        let DriverCertificate::H(m) = rep.certificate else { panic!("{:?}", rep.certificate) };
        assert_eq!(m.check(), Ok(()));
    }

    #[test]
    fn tidy_and_clean() {
        let mut b = Budget::unlimited();
        let rep = tidy_report(&make_cycle(6), 2, &mut b);
        assert!(rep.clique.is_absent());
        assert!(rep.ktt.is_found());
        let w = make_wall(2).graph;
        let rep = clean_report(&w, 2, &mut b).unwrap();
        assert!(rep.wall.is_found());
        let rep = clean_report(&make_path(5), 2, &mut b).unwrap();
        assert!(rep.is_clean());
    }
}
