//! Explicit binary-tree witnesses: a proper subdivision of `T_{2,r}` as an
//! induced subgraph of a wall (and the line-graph version), and an induced
//! `T_{2^d,r}`-model in `T_{2,dr}`.

use std::collections::{BTreeSet, HashMap};

use super::{check_embedding, Embedding, ModelAssignment};
use crate::generators::{make_tree, make_wall, wall_adjacent, Wall};
use crate::{Error, Graph, Result, VertexSet};

/// A subdivided binary tree sitting in a wall (or in its line graph).
#[derive(Clone, Debug)]
pub struct TreeInWall {
    pub host: Graph,
    /// The subdivided `T_{2,r}` (or its line graph).
    pub pattern: Graph,
    pub witness: Embedding,
    /// Wall coordinates used by the tree.
    pub cells: Vec<(usize, usize)>,
    /// Number of edges each tree edge was replaced by, in `edges()` order of
    /// `make_tree(2, r)`.
    pub lengths: Vec<usize>,
}

type Cell = (usize, usize);

/// Cells of the tree in the wall of side `2^r`, its root, and a free cell
/// above the root through which the next level connects.
fn cells(r: usize) -> (BTreeSet<Cell>, Cell, Cell) {
    if r == 2 {
        let s = [
            (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
            (2, 2), (2, 5), (2, 6), (2, 7), (3, 5), (3, 7),
        ];
        return (s.into_iter().collect(), (1, 5), (0, 5));
    }
    let (s, _, up) = cells(r - 1);
    let half = 1 << (r - 1);
    // Two copies side by side in the bottom half, joined through the top.
    let mut used: BTreeSet<Cell> = s.iter().map(|&(i, j)| (i + half, j)).collect();
    used.extend(s.iter().map(|&(i, j)| (i + half, j + 2 * half)));
    let top = half - 2;
    let mut climbs = Vec::new();
    for (offset, dir) in [(0isize, 1isize), (2 * half as isize, -1)] {
        let (mut i, mut j) = (up.0 + half, (up.1 as isize + offset) as usize);
        let mut climb = vec![(i, j)];
        while i > top {
            if (i - 1 + j) % 2 == 1 {
                i -= 1;
            } else {
                let free = |c: usize| {
                    !used.contains(&(i, c)) && used.iter().all(|&x| !wall_adjacent((i, c), x))
                };
                j = [(j as isize + dir) as usize, (j as isize - dir) as usize]
                    .into_iter()
                    .find(|&c| free(c))
                    .expect("a free column next to the climb");
            }
            climb.push((i, j));
        }
        climbs.push(climb);
    }
    let (ja, jb) = (climbs[0].last().unwrap().1, climbs[1].last().unwrap().1);
    let mut all = used;
    for c in climbs.concat() {
        all.insert(c);
    }
    for j in ja..=jb {
        all.insert((top, j));
    }
    let mid = (ja + jb) / 2;
    let root = (ja + 1..jb)
        .filter(|&j| (top - 1 + j) % 2 == 1)
        .min_by_key(|&j| j.abs_diff(mid))
        .expect("a column with an edge upward");
    (all, (top, root), (top - 1, root))
}

fn layout(r: usize) -> Result<(Wall, BTreeSet<Cell>, Cell)> {
    if !(1..=4).contains(&r) {
        return Err(Error::InvalidArgument(format!("tree depth {r} not in 1..=4")));
    }
    if r == 1 {
        // The wall of side 2 is a hexagon; five of its six vertices.
        let wall = make_wall(2);
        let s: BTreeSet<Cell> = [(1, 1), (0, 1), (0, 2), (0, 3), (1, 3)].into_iter().collect();
        return Ok((wall, s, (0, 2)));
    }
    let (s, root, _) = cells(r);
    Ok((make_wall(1 << r), s, root))
}

/// Walks the tree `W[S]` from its root, matching it against `T_{2,r}`.
/// Returns the subdivision lengths and, for each tree edge, its route in
/// wall vertices from the parent end.
fn trace(wall: &Wall, s: &BTreeSet<Cell>, root: Cell, r: usize) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let g = &wall.graph;
    let vs = VertexSet::from_iter_in(g.n(), s.iter().map(|&(i, j)| wall.vertex(i, j).expect("cell in wall")));
    let deg = |v: usize| g.adj(v).intersection_len(&vs);
    let tree = make_tree(2, r);
    let mut at = vec![usize::MAX; tree.n()];
    at[tree.root] = wall.vertex(root.0, root.1).expect("root in wall");
    let mut routes: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut queue = vec![tree.root];
    let mut came_from = vec![usize::MAX; tree.n()];
    while let Some(t) = queue.pop() {
        let v = at[t];
        let exits: Vec<usize> = g.adj(v).intersection(&vs).iter().filter(|&w| w != came_from[t]).collect();
        if exits.len() != tree.children[t].len() {
            return Err(Error::Hypothesis(format!("wall vertex {v} has {} exits", exits.len())));
        }
        for (&c, &first) in tree.children[t].iter().zip(&exits) {
            let mut route = vec![v, first];
            while deg(*route.last().unwrap()) == 2 {
                let (prev, cur) = (route[route.len() - 2], route[route.len() - 1]);
                let next = g.adj(cur).intersection(&vs).iter().find(|&w| w != prev).unwrap();
                route.push(next);
            }
            let end = *route.last().unwrap();
            at[c] = end;
            came_from[c] = route[route.len() - 2];
            routes.insert((t, c), route);
            queue.push(c);
        }
    }
    let mut lengths = Vec::new();
    let mut ordered = Vec::new();
    for (u, v) in tree.graph.edges() {
        let route = routes.remove(&(u, v)).expect("every tree edge traced");
        lengths.push(route.len() - 1);
        ordered.push(route);
    }
    Ok((lengths, ordered))
}

/// A proper subdivision of `T_{2,r}` as an induced subgraph of the wall of
/// side `2^r`, for `1 <= r <= 4`.
pub fn obs_trees_a(r: usize) -> Result<TreeInWall> {
    let (wall, s, root) = layout(r)?;
    let (lengths, routes) = trace(&wall, &s, root, r)?;
    let sub = make_tree(2, r).graph.subdivide(&lengths)?;
    let mut map = vec![usize::MAX; sub.graph.n()];
    for (path, route) in sub.edge_paths.iter().zip(&routes) {
        for (&p, &w) in path.iter().zip(route) {
            map[p] = w;
        }
    }
    let witness = Embedding { map };
    check_embedding(&wall.graph, &sub.graph, &witness).map_err(Error::Hypothesis)?;
    Ok(TreeInWall { host: wall.graph, pattern: sub.graph, witness, cells: s.into_iter().collect(), lengths })
}

/// The line graph of the subdivided tree from [`obs_trees_a`] as an induced
/// subgraph of the line graph of the wall.
pub fn obs_trees_a_line(r: usize) -> Result<TreeInWall> {
    let t = obs_trees_a(r)?;
    let (host, host_edges) = t.host.line_graph();
    let (pattern, pattern_edges) = t.pattern.line_graph();
    let index: HashMap<(usize, usize), usize> = host_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let map = pattern_edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (t.witness.map[a], t.witness.map[b]);
            index[&(x.min(y), x.max(y))]
        })
        .collect();
    let witness = Embedding { map };
    check_embedding(&host, &pattern, &witness).map_err(Error::Hypothesis)?;
    Ok(TreeInWall { host, pattern, witness, cells: t.cells, lengths: t.lengths })
}

/// An induced `T_{2^d,r}`-model in `T_{2,dr}` (both numbered as by
/// [`make_tree`]). Each internal branch set is a vertex with everything
/// less than `d` levels below it; leaves are single vertices.
pub fn obs_trees_b(d: usize, r: usize) -> Result<ModelAssignment> {
    if d == 0 || r == 0 || d * r > 8 {
        return Err(Error::InvalidArgument(format!("need d, r >= 1 and d*r <= 8, got d={d}, r={r}")));
    }
    let host = make_tree(2, d * r);
    let pattern = make_tree(1 << d, r);
    let n = host.n();
    let mut at = vec![usize::MAX; pattern.n()];
    at[pattern.root] = host.root;
    let mut branch = vec![VertexSet::new(n); pattern.n()];
    for p in 0..pattern.n() {
        let h = at[p];
        // Host vertices below h at relative depth < d, and exactly d.
        let mut layer = vec![h];
        let mut set = VertexSet::singleton(n, h);
        for _ in 0..d {
            layer = layer.iter().flat_map(|&v| host.children[v].iter().copied()).collect();
            if pattern.children[p].is_empty() {
                break;
            }
            set.union_with(&VertexSet::from_iter_in(n, layer.iter().copied()));
        }
        if !pattern.children[p].is_empty() {
            for &v in &layer {
                set.remove(v);
            }
            for (&c, &v) in pattern.children[p].iter().zip(&layer) {
                at[c] = v;
            }
        }
        branch[p] = set;
    }
    let m = ModelAssignment { host: host.graph, pattern: pattern.graph, branch, induced: true };
    m.check().map_err(Error::Hypothesis)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::verify_embedding;
    use crate::containment::verify_model;

    #[test]
    fn wall_witnesses() {
        for r in 1..=4 {
            let t = obs_trees_a(r).unwrap();
            assert!(verify_embedding(&t.host, &t.pattern, &t.witness), "r={r}");
            assert!(t.lengths.iter().all(|&l| l >= 2), "subdivision is proper at r={r}");
            assert_eq!(t.lengths.len(), (1 << (r + 1)) - 2);
        }
        assert_eq!(obs_trees_a(2).unwrap().host.n(), 2 * 16 - 2);
        assert!(obs_trees_a(5).is_err());
    }

    #[test]
    fn line_graph_witnesses() {
        for r in 1..=3 {
            let t = obs_trees_a_line(r).unwrap();
            assert!(verify_embedding(&t.host, &t.pattern, &t.witness), "r={r}");
        }
    }

    #[test]
    fn four_ary_models() {
        let m = obs_trees_b(2, 2).unwrap();
        assert!(verify_model(&m));
        assert_eq!(m.pattern.n(), 21);
        assert_eq!(m.branch[0].to_vec(), vec![0, 1, 2]);
        let m = obs_trees_b(1, 2).unwrap();
        assert!(m.branch.iter().all(|b| b.len() == 1));
        assert!(verify_model(&obs_trees_b(2, 3).unwrap()));
        assert!(verify_model(&obs_trees_b(3, 2).unwrap()));
        assert!(obs_trees_b(3, 3).is_err());
    }
}
