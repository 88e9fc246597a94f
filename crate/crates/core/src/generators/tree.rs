use std::collections::VecDeque;

use crate::{Error, Graph, Result};

/// A tree with a distinguished root, children lists and depths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub graph: Graph,
    pub root: usize,
    pub depth: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    /// Children in increasing vertex order.
    pub children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn from_graph(graph: Graph, root: usize) -> Result<RootedTree> {
        if !graph.is_tree() {
            return Err(Error::NotATree("graph is not connected and acyclic".into()));
        }
        if root >= graph.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: graph.n() });
        }
        let n = graph.n();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        depth[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &w in graph.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(v);
                    children[v].push(w);
                    q.push_back(w);
                }
            }
        }
        Ok(RootedTree { graph, root, depth, parent, children })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.children[v].is_empty()).collect()
    }

    /// Vertices of the subtree below `v`, including `v`.
    pub fn descendants(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.children[out[i]].iter().copied());
            i += 1;
        }
        out
    }

    /// Embeds `T_{d,r}` (numbered as by [`make_tree`]) into this tree below
    /// `at`, always using the first `d` children. Returns `map[small] = big`,
    /// or `None` if some vertex on the way has fewer than `d` children.
    pub fn first_children_copy(&self, at: usize, d: usize, r: usize) -> Option<Vec<usize>> {
        let small = make_tree(d, r);
        let mut map = vec![usize::MAX; small.n()];
        map[small.root] = at;
        let mut q = VecDeque::from([small.root]);
        while let Some(s) = q.pop_front() {
            let b = map[s];
            if small.children[s].len() > self.children[b].len() {
                return None;
            }
            for (i, &c) in small.children[s].iter().enumerate() {
                map[c] = self.children[b][i];
                q.push_back(c);
            }
        }
        Some(map)
    }
}

/// `T_{d,r}`: root 0, vertices numbered level by level; the children of a
/// vertex are consecutive.
pub fn make_tree(d: usize, r: usize) -> RootedTree {
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next = 1;
    for _ in 0..r {
        let mut new_level = Vec::with_capacity(level.len() * d);
        for &v in &level {
            for _ in 0..d {
                edges.push((v, next));
                new_level.push(next);
                next += 1;
            }
        }
        level = new_level;
    }
    let g = Graph::from_edges(next, edges).expect("tree edges are valid");
    RootedTree::from_graph(g, 0).expect("T_{d,r} is a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees() {
        assert_eq!(make_tree(2, 0).n(), 1);
        assert_eq!(make_tree(3, 2).n(), 13);
        assert_eq!(make_tree(2, 3).n(), 15);
        let t = make_tree(1, 4);
        assert_eq!(t.graph.m(), 4);
    }

    #[test]
    fn degree_and_leaf_laws() {
        for d in 1..=5 {
            for r in 0..=5 {
                let t = make_tree(d, r);
                assert!(t.n() <= r * d.pow(r as u32) + 1);
                assert_eq!(t.height(), r);
                if r >= 1 {
                    assert_eq!(t.leaves().len(), d.pow(r as u32));
                    assert_eq!(t.graph.degree(t.root), d);
                    for v in 1..t.n() {
                        if !t.children[v].is_empty() {
                            assert_eq!(t.graph.degree(v), d + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn copy_of_smaller_tree() {
        let big = make_tree(3, 3);
        let map = big.first_children_copy(1, 2, 2).unwrap();
        assert_eq!(map.len(), 7);
        assert_eq!(map[0], 1);
        let sub = big.graph.induced_subgraph(&big.graph.set(map.iter().copied()));
        assert!(sub.graph.is_tree());
        assert!(big.first_children_copy(0, 4, 1).is_none());
    }
}
