use super::Constellation;
use crate::VertexSet;

/// A route: an induced path `a – segment – b` between two S-vertices whose
/// interior is a contiguous piece of one constellation path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Route {
    /// Smaller S-vertex.
    pub a: usize,
    /// Larger S-vertex.
    pub b: usize,
    pub path: usize,
    /// Interior, listed from the `a` side to the `b` side.
    pub segment: Vec<usize>,
}

impl Route {
    /// Edge count of the full route.
    pub fn length(&self) -> usize {
        self.segment.len() + 1
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.segment.len() + 2);
        v.push(self.a);
        v.extend_from_slice(&self.segment);
        v.push(self.b);
        v
    }
}

/// All routes, one per unordered pair of S-vertices, path and segment.
///
/// On a path, `a` attaches at position `p` and `b` at `q` form a route iff
/// no other attachment of `a` or `b` lies between `p` and `q` inclusive, or
/// `p = q` is a common neighbor.
pub fn enumerate_routes(c: &Constellation) -> Vec<Route> {
    let g = c.host();
    let s = c.s_vertices();
    let mut out = Vec::new();
    for (ii, &a) in s.iter().enumerate() {
        for &b in &s[ii + 1..] {
            for (pi, path) in c.paths().iter().enumerate() {
                let verts = path.vertices();
                let at_a: Vec<bool> = verts.iter().map(|&v| g.has_edge(a, v)).collect();
                let at_b: Vec<bool> = verts.iter().map(|&v| g.has_edge(b, v)).collect();
                for p in 0..verts.len() {
                    if !at_a[p] {
                        continue;
                    }
                    if at_b[p] {
                        out.push(Route { a, b, path: pi, segment: vec![verts[p]] });
                        continue;
                    }
                    // Nearest attachment of either vertex to the right, then left.
                    if let Some(q) = (p + 1..verts.len()).find(|&q| at_a[q] || at_b[q]) {
                        if at_b[q] && !at_a[q] {
                            out.push(Route { a, b, path: pi, segment: verts[p..=q].to_vec() });
                        }
                    }
                    if let Some(q) = (0..p).rev().find(|&q| at_a[q] || at_b[q]) {
                        if at_b[q] && !at_a[q] {
                            let mut seg = verts[q..=p].to_vec();
                            seg.reverse();
                            out.push(Route { a, b, path: pi, segment: seg });
                        }
                    }
                }
            }
        }
    }
    for r in &out {
        assert!(r.length() >= 2, "S is stable, so routes have length at least 2");
    }
    out.sort();
    out
}

/// True iff every route has length greater than `d + 1`.
pub fn is_d_ample(c: &Constellation, d: usize) -> bool {
    let by_routes = enumerate_routes(c).iter().all(|r| r.length() > d + 1);
    if d == 1 {
        assert_eq!(
            by_routes,
            is_ample_by_common_neighbors(c),
            "the two characterizations of 1-ampleness disagree"
        );
    }
    by_routes
}

/// No vertex of `V(𝓛)` is adjacent to two S-vertices.
pub fn is_ample_by_common_neighbors(c: &Constellation) -> bool {
    let g = c.host();
    c.path_vertices().iter().all(|v| g.adj(v).intersection_len(c.s()) <= 1)
}

/// S-vertices with a neighbor on the route's segment.
pub(crate) fn hitters(c: &Constellation, r: &Route) -> VertexSet {
    let g = c.host();
    let seg = g.set(r.segment.iter().copied());
    g.neighborhood(&seg).intersection(c.s())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_constellation, ConstellationSpec};

    fn spec(s: usize, lens: Vec<usize>, attach: Vec<Vec<Vec<usize>>>) -> Constellation {
        build_constellation(&ConstellationSpec { s, path_lengths: lens, attach }).unwrap()
    }

    #[test]
    fn common_neighbor_route() {
        let c = spec(2, vec![2], vec![vec![vec![1]], vec![vec![1]]]);
        let r = enumerate_routes(&c);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].length(), 2);
        assert!(!is_d_ample(&c, 1));
    }

    #[test]
    fn opposite_ends_of_p5() {
        let c = spec(2, vec![4], vec![vec![vec![0]], vec![vec![4]]]);
        let r = enumerate_routes(&c);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].length(), 6);
        assert_eq!(r[0].vertices(), vec![0, 2, 3, 4, 5, 6, 1]);
        for d in 1..=4 {
            assert!(is_d_ample(&c, d));
        }
        assert!(!is_d_ample(&c, 5));
    }

    #[test]
    fn reversed_orientation() {
        let c = spec(2, vec![4], vec![vec![vec![4]], vec![vec![0]]]);
        let r = enumerate_routes(&c);
        assert_eq!(r[0].vertices(), vec![0, 6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn single_s_vertex_is_vacuously_ample() {
        let c = spec(1, vec![3], vec![vec![vec![0, 2]]]);
        assert!(enumerate_routes(&c).is_empty());
        assert!((0..10).all(|d| is_d_ample(&c, d)));
    }
}
