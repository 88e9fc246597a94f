//! Searches against brute-force oracles written independently here. Shared
//! by the `oracles` and `acceptance` test targets.

use std::collections::{BTreeSet, HashSet};

use pwtree_core::constellations::{enumerate_routes, Route};
use pwtree_core::containment::{
    anticomplete_path_packing, disjoint_xy_paths, find_induced_minor, find_induced_subgraph,
};
use pwtree_core::extraction::{is_rigid, Rigidity};
use pwtree_core::generators::{
    build_constellation, random_constellation_spec, random_graph, random_seedling, RandomSeedlingParams,
};
use pwtree_core::width::pathwidth_exact;
use pwtree_core::{Budget, Graph, Outcome, PathInGraph, VertexSet};

/// Small graphs as adjacency bitmasks, one `u8` row per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Small {
    n: usize,
    rows: [u8; 8],
}

impl Small {
    fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn to_graph(self) -> Graph {
        let edges = (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v)));
        Graph::from_edges(self.n, edges.filter(|&(u, v)| self.has(u, v)).collect::<Vec<_>>()).unwrap()
    }

    fn permuted(&self, p: &[usize]) -> Small {
        let mut rows = [0u8; 8];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has(u, v) {
                    rows[p[u]] |= 1 << p[v];
                }
            }
        }
        Small { n: self.n, rows }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

fn canonical(g: &Small, perms: &[Vec<usize>]) -> Small {
    perms.iter().map(|p| g.permuted(p)).min().unwrap()
}

/// One graph per isomorphism class on `n` vertices, for `n <= max`, by
/// adding a vertex in every way to the classes on `n - 1` vertices.
fn graph_classes(max: usize) -> Vec<Vec<Small>> {
    let mut by_n = vec![vec![Small { n: 0, rows: [0; 8] }]];
    for n in 1..=max {
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for g in &by_n[n - 1] {
            for nb in 0u32..1 << (n - 1) {
                let mut h = Small { n, rows: g.rows };
                for u in 0..n - 1 {
                    if nb >> u & 1 == 1 {
                        h.rows[u] |= 1 << (n - 1);
                        h.rows[n - 1] |= 1 << u;
                    }
                }
                seen.insert(canonical(&h, &perms));
            }
        }
        by_n.push(seen.into_iter().collect());
    }
    by_n
}

fn connected(g: &Small, part: u8) -> bool {
    if part == 0 {
        return false;
    }
    let mut reach = part & part.wrapping_neg();
    loop {
        let mut next = reach;
        for v in 0..g.n {
            if reach >> v & 1 == 1 {
                next |= g.rows[v] & part;
            }
        }
        if next == reach {
            return reach == part;
        }
        reach = next;
    }
}

/// Canonical forms of every induced minor of `g` on at most `k` vertices:
/// every assignment of vertices to "deleted" or one of at most `k`
/// connected parts, with parts numbered by first appearance.
fn induced_minors(g: &Small, k: usize, perms: &[Vec<Vec<usize>>]) -> HashSet<Small> {
    let mut out = HashSet::new();
    let mut label = vec![0usize; g.n];
    fn go(
        g: &Small,
        k: usize,
        v: usize,
        used: usize,
        label: &mut Vec<usize>,
        perms: &[Vec<Vec<usize>>],
        out: &mut HashSet<Small>,
    ) {
        if v == g.n {
            let mut parts = vec![0u8; used];
            for (u, &l) in label.iter().enumerate() {
                if l > 0 {
                    parts[l - 1] |= 1 << u;
                }
            }
            if !parts.iter().all(|&p| connected(g, p)) {
                return;
            }
            let mut q = Small { n: used, rows: [0; 8] };
            for a in 0..used {
                for b in 0..used {
                    if a != b && (0..g.n).any(|u| parts[a] >> u & 1 == 1 && g.rows[u] & parts[b] != 0) {
                        q.rows[a] |= 1 << b;
                    }
                }
            }
            out.insert(canonical(&q, &perms[used]));
            return;
        }
        for l in 0..=(used + 1).min(k) {
            label[v] = l;
            go(g, k, v + 1, used.max(l), label, perms, out);
        }
    }
    go(g, k, 0, 0, &mut label, perms, &mut out);
    out
}

pub fn induced_minor_search_matches_partition_enumeration() {
    let classes = graph_classes(7);
    let perms: Vec<Vec<Vec<usize>>> = (0..=4).map(permutations).collect();
    let patterns: Vec<Small> = (1..=4).flat_map(|n| classes[n].iter().copied()).collect();
    let mut checked = 0;
    for n in 1..=7 {
        for g in &classes[n] {
            let oracle = induced_minors(g, 4, &perms);
            let host = g.to_graph();
            for h in &patterns {
                let expect = oracle.contains(h);
                let got = find_induced_minor(&host, &h.to_graph(), &mut Budget::unlimited());
                assert!(!got.is_exhausted());
                assert_eq!(got.is_found(), expect, "host {g:?} pattern {h:?}");
                checked += 1;
            }
        }
    }
    assert_eq!(classes[7].len(), 1044);
    assert_eq!(checked, 1252 * 18);
}

pub fn induced_subgraph_search_matches_permutations() {
    for seed in 0..60 {
        let n = 3 + (seed as usize % 5);
        let g = random_graph(n, 0.5, seed);
        let h = random_graph(3 + seed as usize % 2, 0.5, seed + 1000);
        let expect = (0..1u32 << n).filter(|m| m.count_ones() as usize == h.n()).any(|m| {
            let vs: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
            permutations(h.n()).iter().any(|p| {
                (0..h.n()).all(|a| (0..h.n()).all(|b| a == b || h.has_edge(a, b) == g.has_edge(vs[p[a]], vs[p[b]])))
            })
        });
        let got = find_induced_subgraph(&g, &h, &mut Budget::unlimited());
        assert_eq!(got.is_found(), expect, "seed {seed}");
    }
}

fn brute_routes(c: &pwtree_core::constellations::Constellation) -> BTreeSet<Route> {
    let g = c.host();
    let s = c.s_vertices();
    let mut out = BTreeSet::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            for (pi, p) in c.paths().iter().enumerate() {
                let vs = p.vertices();
                for lo in 0..vs.len() {
                    for hi in lo..vs.len() {
                        for forward in [true, false] {
                            let mut seg = vs[lo..=hi].to_vec();
                            if !forward {
                                seg.reverse();
                            }
                            let mut all = vec![a];
                            all.extend(&seg);
                            all.push(b);
                            if is_induced_path(g, &all) {
                                out.insert(Route { a, b, path: pi, segment: seg });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn is_induced_path(g: &Graph, vs: &[usize]) -> bool {
    let distinct: HashSet<_> = vs.iter().collect();
    distinct.len() == vs.len()
        && (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| g.has_edge(vs[i], vs[j]) == (j == i + 1)))
}

pub fn routes_match_induced_path_filter() {
    for seed in 0..100 {
        let spec = random_constellation_spec(16, seed);
        let c = build_constellation(&spec).unwrap();
        assert!(c.host().n() <= 16);
        let got: BTreeSet<Route> = enumerate_routes(&c).into_iter().collect();
        assert_eq!(got, brute_routes(&c), "seed {seed}");
    }
}

/// Every `(X, Y)`-path inside `universe`, by extending simple paths from
/// each vertex of `X`.
fn all_xy_paths(g: &Graph, x: &VertexSet, y: &VertexSet, universe: &VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn ok(g: &Graph, p: &[usize], x: &VertexSet, y: &VertexSet) -> bool {
        if !is_induced_path(g, p) {
            return false;
        }
        if p.len() == 1 {
            return x.contains(p[0]) && y.contains(p[0]);
        }
        let (a, b) = (p[0], p[p.len() - 1]);
        let inner_ok = p[1..p.len() - 1].iter().all(|&v| !x.contains(v) && !y.contains(v));
        inner_ok && x.contains(a) && !y.contains(a) && y.contains(b) && !x.contains(b)
    }
    fn go(g: &Graph, p: &mut Vec<usize>, x: &VertexSet, y: &VertexSet, u: &VertexSet, out: &mut Vec<Vec<usize>>) {
        if ok(g, p, x, y) {
            out.push(p.clone());
        }
        let last = *p.last().unwrap();
        for &w in g.neighbors(last) {
            if u.contains(w) && !p.contains(&w) {
                p.push(w);
                go(g, p, x, y, u, out);
                p.pop();
            }
        }
    }
    for v in x.iter().filter(|&v| universe.contains(v)) {
        go(g, &mut vec![v], x, y, universe, &mut out);
    }
    out
}

fn exists_family(g: &Graph, paths: &[Vec<usize>], k: usize, disjoint_only: bool) -> bool {
    let sets: Vec<VertexSet> = paths.iter().map(|p| g.set(p.iter().copied())).collect();
    let compatible = |i: usize, j: usize| {
        if disjoint_only {
            !sets[i].intersects(&sets[j])
        } else {
            !sets[i].intersects(&sets[j]) && g.anticomplete(&sets[i], &sets[j])
        }
    };
    fn go(k: usize, from: usize, cur: &mut Vec<usize>, n: usize, c: &dyn Fn(usize, usize) -> bool) -> bool {
        if cur.len() == k {
            return true;
        }
        for i in from..n {
            if cur.iter().all(|&j| c(i, j)) {
                cur.push(i);
                if go(k, i + 1, cur, n, c) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    go(k, 0, &mut Vec::new(), paths.len(), &compatible)
}

pub fn rigidity_matches_exhaustive_packing() {
    let params = RandomSeedlingParams { lambda: 3, max_path_len: 3, cross_p: 0.25, triangle_free_ends: false, extra_y: 1 };
    let mut rigid_seen = 0;
    for seed in 0..100 {
        let (g, sd) = random_seedling(&params, seed);
        let n = g.n();
        let x = g.neighborhood(&sd.a_set(n));
        let universe = sd.path_vertices(n);
        let paths = all_xy_paths(&g, &x, sd.y(), &universe);
        for kappa in 1..=3 {
            let expect_rigid = !exists_family(&g, &paths, kappa, false);
            let got = is_rigid(&g, &sd, kappa, &mut Budget::unlimited()).unwrap();
            match got {
                Rigidity::Rigid => rigid_seen += 1,
                Rigidity::NotRigid(_) => {}
                Rigidity::Exhausted => panic!("unlimited budget"),
            }
            assert_eq!(matches!(got, Rigidity::Rigid), expect_rigid, "seed {seed} kappa {kappa}");
        }
    }
    assert!(rigid_seen > 0);
}

pub fn packing_and_disjoint_paths_match_brute_force() {
    for seed in 0..80 {
        let n = 6 + seed as usize % 4;
        let g = random_graph(n, 0.3, seed);
        let x = g.set([0, 1]);
        let y = g.set([n - 1, n - 2]);
        let paths = all_xy_paths(&g, &x, &y, &g.full_set());
        for k in 1..=2 {
            let packed = anticomplete_path_packing(&g, &x, &y, k, &g.full_set(), &mut Budget::unlimited());
            assert_eq!(packed.is_found(), exists_family(&g, &paths, k, false), "packing seed {seed} k {k}");
            let disjoint = disjoint_xy_paths(&g, &x, &y, k);
            assert_eq!(disjoint.is_some(), exists_family(&g, &paths, k, true), "disjoint seed {seed} k {k}");
            if let Some(ps) = disjoint {
                let sets: Vec<VertexSet> = ps.iter().map(|p: &PathInGraph| p.set(n)).collect();
                assert!((0..k).all(|i| (i + 1..k).all(|j| !sets[i].intersects(&sets[j]))));
            }
        }
    }
}

/// Vertex separation number over all orderings.
fn brute_pathwidth(g: &Graph) -> usize {
    permutations(g.n())
        .iter()
        .map(|order| {
            (0..g.n())
                .map(|i| {
                    let placed: HashSet<usize> = order[..=i].iter().copied().collect();
                    order[..=i]
                        .iter()
                        .filter(|&&v| g.neighbors(v).iter().any(|w| !placed.contains(w)))
                        .count()
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}

pub fn exact_pathwidth_matches_orderings() {
    for seed in 0..40 {
        let n = 2 + seed as usize % 6;
        let g = random_graph(n, 0.45, seed);
        let Outcome::Found((w, _)) = pathwidth_exact(&g, &mut Budget::unlimited()).unwrap() else {
            panic!("unlimited budget")
        };
        assert_eq!(w, brute_pathwidth(&g), "seed {seed}");
    }
}
