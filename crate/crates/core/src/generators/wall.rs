//! The `r × r` wall.
//!
//! Coordinates `(i, j)` with rows `i < r` and columns `j < 2r`. Each row is
//! a horizontal path; `(i, j)` and `(i + 1, j)` are joined when `i + j` is
//! odd, which stacks rows of hexagonal bricks offset by one column per row.
//! The two corners left with degree one, `(0, 0)` and one of the bottom
//! corners, are dropped. `W_{r×r}` has `2r² − 2` vertices.

use crate::Graph;

#[derive(Clone, Debug)]
pub struct Wall {
    pub r: usize,
    pub graph: Graph,
    /// Coordinates of each vertex.
    pub coords: Vec<(usize, usize)>,
    index: Vec<Vec<Option<usize>>>,
}

/// True iff `(i, j)` and `(k, l)` are adjacent in a wall containing both.
pub fn wall_adjacent(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (a, b);
    if i == k {
        return j.abs_diff(l) == 1;
    }
    j == l && i.abs_diff(k) == 1 && (i.min(k) + j) % 2 == 1
}

impl Wall {
    pub fn vertex(&self, i: usize, j: usize) -> Option<usize> {
        self.index.get(i).and_then(|row| row.get(j)).copied().flatten()
    }

    /// Row `i` as a path, left to right.
    pub fn row(&self, i: usize) -> Vec<usize> {
        (0..2 * self.r).filter_map(|j| self.vertex(i, j)).collect()
    }
}

pub fn make_wall(r: usize) -> Wall {
    assert!(r >= 2, "walls need r >= 2");
    let cols = 2 * r;
    let dropped_bottom = if r % 2 == 0 { (r - 1, 0) } else { (r - 1, cols - 1) };
    let keep = |i: usize, j: usize| (i, j) != (0, 0) && (i, j) != dropped_bottom;
    let mut index = vec![vec![None; cols]; r];
    let mut coords = Vec::new();
    for (i, row) in index.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if keep(i, j) {
                *slot = Some(coords.len());
                coords.push((i, j));
            }
        }
    }
    let mut edges = Vec::new();
    for (v, &(i, j)) in coords.iter().enumerate() {
        if j + 1 < cols {
            if let Some(w) = index[i][j + 1] {
                edges.push((v, w));
            }
        }
        if i + 1 < r && (i + j) % 2 == 1 {
            if let Some(w) = index[i + 1][j] {
                edges.push((v, w));
            }
        }
    }
    let graph = Graph::from_edges(coords.len(), edges).expect("wall edges are valid");
    Wall { r, graph, coords, index }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_walls() {
        let w2 = make_wall(2);
        assert_eq!((w2.graph.n(), w2.graph.m()), (6, 6));
        assert!(w2.graph.is_connected());
        assert!((0..6).all(|v| w2.graph.degree(v) == 2));
        let w3 = make_wall(3);
        assert_eq!((w3.graph.n(), w3.graph.m()), (16, 19));
        let w4 = make_wall(4);
        assert_eq!((w4.graph.n(), w4.graph.m()), (30, 38));
    }

    #[test]
    fn adjacency_predicate_matches_graph() {
        let w = make_wall(5);
        for a in 0..w.graph.n() {
            for b in 0..w.graph.n() {
                if a != b {
                    assert_eq!(w.graph.has_edge(a, b), wall_adjacent(w.coords[a], w.coords[b]));
                }
            }
        }
    }

    #[test]
    fn rows_are_disjoint_paths() {
        let w = make_wall(6);
        let mut seen = w.graph.empty_set();
        for i in 0..6 {
            let row = w.row(i);
            crate::PathInGraph::new(&w.graph, row.clone()).unwrap();
            let s = w.graph.set(row);
            assert!(!s.intersects(&seen));
            seen.union_with(&s);
        }
    }
}
