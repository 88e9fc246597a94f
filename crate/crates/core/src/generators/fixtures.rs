//! Seeded fixtures built to satisfy the hypotheses of the extraction
//! procedures and the constellation checkers.

use super::ConstellationSpec;
use std::collections::BTreeMap;

use crate::extraction::{Seedling, SetFamilies, StrongBlock};
use crate::rng::Rng;
use crate::{Graph, PathInGraph};

/// `n` disjoint induced paths in a triangle-free host, pairwise joined by
/// exactly one edge.
#[derive(Clone, Debug)]
pub struct CrossingPaths {
    pub graph: Graph,
    /// Path `i` runs from its end `x_i` (first) to `y_i` (last).
    pub paths: Vec<PathInGraph>,
}

/// Path `i` is `x_i`, then one slot per other path, then `y_i`; slot `j` of
/// path `i` is joined to slot `i` of path `j`. Path `i` occupies vertices
/// `i(n+1) ..= i(n+1) + n`. With seed 0 the slots of each path follow the
/// partner index; any other seed shuffles each path's slot order.
pub fn crossing_paths_family(n: usize, seed: u64) -> CrossingPaths {
    assert!(n >= 2, "need at least two paths");
    let mut rng = Rng::new(seed);
    let block = n + 1;
    // slot_pos[i][j]: position on path i of the slot for partner j.
    let mut slot_pos = vec![vec![0usize; n]; n];
    for (i, row) in slot_pos.iter_mut().enumerate() {
        let mut partners: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        if seed != 0 {
            rng.shuffle(&mut partners);
        }
        for (k, &j) in partners.iter().enumerate() {
            row[j] = k + 1;
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for p in 0..n {
            edges.push((i * block + p, i * block + p + 1));
        }
        for j in i + 1..n {
            edges.push((i * block + slot_pos[i][j], j * block + slot_pos[j][i]));
        }
    }
    let graph = Graph::from_edges(n * block, edges).unwrap();
    let paths = (0..n)
        .map(|i| PathInGraph::new(&graph, (i * block..(i + 1) * block).collect()).unwrap())
        .collect();
    CrossingPaths { graph, paths }
}

/// Four S-vertices on one path of length 20, nested so that `0, 1, 2, 3`
/// is an interrupted ordering: 0 at 0, 1 at 20, 2 at 10, 3 at 5 and 15.
/// No two share a neighbor, so the constellation is also ample.
pub fn interrupted_fixture() -> ConstellationSpec {
    ConstellationSpec {
        s: 4,
        path_lengths: vec![20],
        attach: vec![vec![vec![0]], vec![vec![20]], vec![vec![10]], vec![vec![5, 15]]],
    }
}

/// Three S-vertices on a path of length 10 at `{0,6}`, `{2,8}`, `{4,10}`:
/// every pair has a route missing the third vertex, so no ordering is
/// interrupted.
pub fn non_interrupted_fixture() -> ConstellationSpec {
    ConstellationSpec {
        s: 3,
        path_lengths: vec![10],
        attach: vec![vec![vec![0, 6]], vec![vec![2, 8]], vec![vec![4, 10]]],
    }
}

/// Four S-vertices alternating along one path (0 at 0, 2 at 2, 1 at 4,
/// 3 at 6) together with the ordering `0, 2, 1, 3` under which it is
/// 1-zigzagged.
pub fn zigzag_fixture() -> (ConstellationSpec, Vec<usize>) {
    let spec = ConstellationSpec {
        s: 4,
        path_lengths: vec![6],
        attach: vec![vec![vec![0]], vec![vec![4]], vec![vec![2]], vec![vec![6]]],
    };
    (spec, vec![0, 2, 1, 3])
}

/// Random spec whose host has at most `max_vertices` vertices.
pub fn random_constellation_spec(max_vertices: usize, seed: u64) -> ConstellationSpec {
    let mut rng = Rng::new(seed);
    loop {
        let s = rng.range(1, 4);
        let l = rng.range(1, 2);
        let path_lengths: Vec<usize> = (0..l).map(|_| rng.range(0, 5)).collect();
        let total = s + path_lengths.iter().map(|x| x + 1).sum::<usize>();
        if total > max_vertices {
            continue;
        }
        let attach = (0..s)
            .map(|_| {
                path_lengths
                    .iter()
                    .map(|&len| {
                        let k = rng.range(1, (len + 1).min(3));
                        rng.sample(len + 1, k)
                    })
                    .collect()
            })
            .collect();
        return ConstellationSpec { s, path_lengths, attach };
    }
}

/// Parameters for [`random_seedling`].
#[derive(Clone, Debug)]
pub struct RandomSeedlingParams {
    pub lambda: usize,
    /// Paths get `range(0, max_path_len)` edges.
    pub max_path_len: usize,
    /// Probability of each extra edge between vertices of different paths.
    pub cross_p: f64,
    /// Skip extra edges that would close a triangle on the `N(A)`-ends.
    pub triangle_free_ends: bool,
    /// Extra vertices of `Y` hanging off path vertices.
    pub extra_y: usize,
}

/// A random valid seedling. Layout: `A` first, then the paths (each from its
/// `N(A)`-end), then the extra `Y` vertices.
pub fn random_seedling(params: &RandomSeedlingParams, seed: u64) -> (Graph, Seedling) {
    let mut rng = Rng::new(seed);
    let a_len = rng.range(1, 3);
    let mut edges: Vec<(usize, usize)> = (1..a_len).map(|i| (i - 1, i)).collect();
    let mut next = a_len;
    let mut paths = Vec::new();
    for _ in 0..params.lambda {
        let len = rng.range(0, params.max_path_len);
        let p: Vec<usize> = (next..=next + len).collect();
        next += len + 1;
        for w in p.windows(2) {
            edges.push((w[0], w[1]));
        }
        let k = rng.range(1, a_len);
        for a in rng.sample(a_len, k) {
            edges.push((a, p[0]));
        }
        paths.push(p);
    }
    let path_of: Vec<Option<usize>> = (0..next)
        .map(|v| paths.iter().position(|p| p.contains(&v)))
        .collect();
    let ends: Vec<usize> = paths.iter().map(|p| p[0]).collect();
    let mut end_adj = vec![vec![false; next]; next];
    for u in a_len..next {
        for v in u + 1..next {
            if path_of[u] == path_of[v] || !rng.chance(params.cross_p) {
                continue;
            }
            if params.triangle_free_ends && ends.contains(&u) && ends.contains(&v) {
                let closes = ends.iter().any(|&w| end_adj[u][w] && end_adj[v][w]);
                if closes {
                    continue;
                }
                end_adj[u][v] = true;
                end_adj[v][u] = true;
            }
            edges.push((u, v));
        }
    }
    let mut y: Vec<usize> = paths.iter().map(|p| *p.last().unwrap()).collect();
    for _ in 0..params.extra_y {
        if next == a_len {
            break;
        }
        let host = rng.range(a_len, next - 1);
        edges.push((next, host));
        y.push(next);
        next += 1;
    }
    let g = Graph::from_edges(next, edges).unwrap();
    let a = PathInGraph::new(&g, (0..a_len).collect()).unwrap();
    let ls = paths.into_iter().map(|p| PathInGraph::new(&g, p)).collect::<Result<Vec<_>, _>>();
    let sd = Seedling::new(&g, a, ls.expect("paths are induced"), g.set(y))
        .expect("random seedling is valid");
    (g, sd)
}

/// A single root vertex `0` adjacent to the `x`-end of every path of a
/// crossing family (shifted by one), as a seedling `({0}, paths, {y_L})`.
#[derive(Clone, Debug)]
pub struct PlantedBroom {
    pub graph: Graph,
    pub seedling: Seedling,
}

pub fn planted_broom(n_paths: usize, seed: u64) -> PlantedBroom {
    let fam = crossing_paths_family(n_paths, seed);
    let shifted: Vec<(usize, usize)> =
        fam.graph.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
    let spokes = fam.paths.iter().map(|p| (0, p.first() + 1));
    let graph = Graph::from_edges(fam.graph.n() + 1, shifted.into_iter().chain(spokes)).unwrap();
    let paths: Vec<PathInGraph> = fam
        .paths
        .iter()
        .map(|p| PathInGraph::new(&graph, p.vertices().iter().map(|v| v + 1).collect()).unwrap())
        .collect();
    let y = graph.set(paths.iter().map(|p| p.last()));
    let a = PathInGraph::new(&graph, vec![0]).unwrap();
    let seedling = Seedling::new(&graph, a, paths, y).expect("broom is a valid seedling");
    PlantedBroom { graph, seedling }
}

/// A seedling `({a}, 𝓛, Y)` laid out so that growth with `δ = 8`, `λ = 2`,
/// `t = 2`, `κ = 2` and child rigidity 2 succeeds, and each child holds an
/// induced `T_{2,1}`-model.
///
/// Eight parent paths `x, 7 slots, y` and sixteen child paths
/// `x, 14 slots, 7 attachments, w, u, y`. Slots pair up the parents among
/// themselves and the children among themselves, except that the children
/// `2i` and `2i + 1` (owned by parent `i`) are joined at their `u` instead.
/// `x` of parent `i` is adjacent to its attachment on every child; on an
/// owned child that attachment is `w`. `a` is vertex 0 and sees every `x`.
pub fn planted_two_level() -> PlantedBroom {
    const PARENTS: usize = 8;
    const CHILDREN: usize = 2 * PARENTS;
    let mut next = 1;
    let mut alloc = |k: usize| {
        let v: Vec<usize> = (next..next + k).collect();
        next += k;
        v
    };
    let parents: Vec<Vec<usize>> = (0..PARENTS).map(|_| alloc(PARENTS + 1)).collect();
    let children: Vec<Vec<usize>> = (0..CHILDREN).map(|_| alloc(1 + (CHILDREN - 2) + PARENTS + 2)).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for p in parents.iter().chain(&children) {
        edges.extend(p.windows(2).map(|w| (w[0], w[1])));
        edges.push((0, p[0]));
    }
    // Slot of `i` for partner `j` among `k` paths: slots skip `i` itself.
    let slot = |i: usize, j: usize| 1 + if j < i { j } else { j - 1 };
    for i in 0..PARENTS {
        for j in i + 1..PARENTS {
            edges.push((parents[i][slot(i, j)], parents[j][slot(j, i)]));
        }
    }
    // Children skip their sibling as well, so they have 14 slots.
    let cslot = |k: usize, j: usize| {
        let sib = k ^ 1;
        1 + (0..j).filter(|&o| o != k && o != sib).count()
    };
    for k in 0..CHILDREN {
        for j in k + 1..CHILDREN {
            if j == k ^ 1 {
                let u = children[k].len() - 2;
                edges.push((children[k][u], children[j][u]));
            } else {
                edges.push((children[k][cslot(k, j)], children[j][cslot(j, k)]));
            }
        }
    }
    for (k, c) in children.iter().enumerate() {
        let owner = k / 2;
        let base = 1 + (CHILDREN - 2);
        for i in 0..PARENTS {
            // Non-owners in order, then the owner at `w`.
            let pos = match i.cmp(&owner) {
                std::cmp::Ordering::Less => base + i,
                std::cmp::Ordering::Greater => base + i - 1,
                std::cmp::Ordering::Equal => base + PARENTS - 1,
            };
            edges.push((parents[i][0], c[pos]));
        }
    }
    let graph = Graph::from_edges(next, edges).unwrap();
    let paths: Vec<PathInGraph> = parents
        .into_iter()
        .chain(children)
        .map(|p| PathInGraph::new(&graph, p).expect("fixture paths are induced"))
        .collect();
    let y = graph.set(paths.iter().map(|p| p.last()));
    let a = PathInGraph::new(&graph, vec![0]).unwrap();
    let seedling = Seedling::new(&graph, a, paths, y).expect("two-level fixture is a valid seedling");
    PlantedBroom { graph, seedling }
}

/// A strong `(k, l)`-block on an otherwise empty host: `B = 0..k`, and for
/// each pair `l` private paths with `len` interior vertices. With `joined`,
/// the middle interior vertices of consecutive paths of a pair are adjacent.
pub fn planted_block(k: usize, l: usize, len: usize, joined: bool) -> (Graph, StrongBlock) {
    assert!(len >= 1, "paths need an interior");
    let mut next = k;
    let mut edges = Vec::new();
    let mut paths = BTreeMap::new();
    for x in 0..k {
        for y in x + 1..k {
            let mut fam: Vec<Vec<usize>> = Vec::with_capacity(l);
            for _ in 0..l {
                let mut p = vec![x];
                p.extend(next..next + len);
                p.push(y);
                next += len;
                edges.extend(p.windows(2).map(|w| (w[0], w[1])));
                if joined {
                    if let Some(prev) = fam.last() {
                        edges.push((prev[1 + len / 2], p[1 + len / 2]));
                    }
                }
                fam.push(p);
            }
            paths.insert((x, y), fam);
        }
    }
    let g = Graph::from_edges(next, edges).unwrap();
    (g, StrongBlock { b: (0..k).collect(), paths })
}

/// `2rt` pairwise anticomplete edges `A_i`, each with a family of
/// `max(s, t) + 1` single vertices. For `t >= 2` some families have their
/// member `0` joined to another family's member `0` or to another `A_j`;
/// such edges can be avoided by every grid that skips member `0`.
pub fn planted_bigramsey(r: usize, s: usize, t: usize, seed: u64) -> (Graph, SetFamilies) {
    assert!(r >= 1 && s >= 1 && t >= 1, "parameters must be positive");
    let mut rng = Rng::new(seed);
    let n = 2 * r * t;
    let f = s.max(t) + 1;
    let member = |i: usize, b: usize| 2 * n + i * f + b;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
    if t >= 2 {
        for i in 0..n {
            if rng.chance(0.5) {
                let j = (i + rng.range(1, n - 1)) % n;
                edges.push(if rng.chance(0.5) { (member(i, 0), member(j, 0)) } else { (member(i, 0), 2 * j + rng.below(2)) });
            }
        }
    }
    let g = Graph::from_edges(2 * n + n * f, edges).unwrap();
    let a_sets = (0..n).map(|i| g.set([2 * i, 2 * i + 1])).collect();
    let families = (0..n).map(|i| (0..f).map(|b| g.set([member(i, b)])).collect()).collect();
    (g, SetFamilies { a_sets, families })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_triangle(g: &Graph) -> bool {
        g.edges().iter().any(|&(u, v)| g.adj(u).intersects(g.adj(v)))
    }

    #[test]
    fn crossing_family_properties() {
        for (n, seed) in [(2, 0), (10, 0), (10, 3), (30, 7)] {
            let f = crossing_paths_family(n, seed);
            assert!(!has_triangle(&f.graph));
            assert_eq!(f.graph.n(), n * (n + 1));
            let sets: Vec<_> = f.paths.iter().map(|p| p.set(f.graph.n())).collect();
            for i in 0..n {
                for j in i + 1..n {
                    assert!(!sets[i].intersects(&sets[j]));
                    assert!(!f.graph.anticomplete(&sets[i], &sets[j]));
                }
            }
        }
        let f = crossing_paths_family(2, 0);
        assert_eq!(f.graph.m(), 2 * 2 + 1);
    }

    #[test]
    fn random_seedlings_are_valid() {
        let params = RandomSeedlingParams {
            lambda: 3,
            max_path_len: 3,
            cross_p: 0.3,
            triangle_free_ends: true,
            extra_y: 2,
        };
        for seed in 0..50 {
            let (g, sd) = random_seedling(&params, seed);
            sd.validate(&g).unwrap();
            assert_eq!(sd.lambda(), 3);
        }
    }

    #[test]
    fn two_level_shape() {
        let f = planted_two_level();
        assert_eq!(f.graph.n(), 473);
        assert_eq!(f.seedling.lambda(), 24);
        assert!(!has_triangle(&f.graph));
    }

    #[test]
    fn broom_is_valid() {
        let b = planted_broom(6, 0);
        b.seedling.validate(&b.graph).unwrap();
        assert_eq!(b.graph.degree(0), 6);
    }
}
