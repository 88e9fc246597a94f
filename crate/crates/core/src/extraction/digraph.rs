//! Stable sets and out-neighbour fans in digraphs.

use crate::{Digraph, VertexSet};

/// Greedy stable set among the vertices of out-degree at most `r`: take a
/// vertex of minimum underlying degree (smallest on ties), drop its closed
/// neighbourhood, repeat. The low part is `2r`-degenerate, so this yields
/// at least `|low| / (2r + 1)` vertices. Sorted.
pub fn digraph_stable_greedy(d: &Digraph, r: usize) -> Vec<usize> {
    greedy_within(d, r, &VertexSet::full(d.n()))
}

fn greedy_within(d: &Digraph, r: usize, allowed: &VertexSet) -> Vec<usize> {
    let n = d.n();
    let mut alive = VertexSet::from_iter_in(n, allowed.iter().filter(|&v| d.out_degree(v) <= r));
    let nbrs: Vec<VertexSet> =
        (0..n).map(|v| d.out_neighbors(v).union(d.in_neighbors(v))).collect();
    let mut out = Vec::new();
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (nbrs[v].intersection_len(&alive), v))
            .expect("alive is non-empty");
        out.push(v);
        alive.remove(v);
        alive.difference_with(&nbrs[v]);
    }
    out.sort_unstable();
    assert!(d.is_stable(&VertexSet::from_iter_in(n, out.iter().copied())));
    out
}

/// A stable set of size `s` among the vertices of out-degree at most `r`.
/// Always found when at least `(2r + 1)s` vertices qualify.
pub fn digraph_stable_set(d: &Digraph, r: usize, s: usize) -> Option<VertexSet> {
    let mut all = digraph_stable_greedy(d, r);
    if all.len() < s {
        return None;
    }
    all.truncate(s);
    Some(VertexSet::from_iter_in(d.n(), all))
}

/// A set `S` of high out-degree vertices with, for each, a reserved list of
/// exactly `qr` out-neighbours outside `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub q: usize,
    pub r: usize,
    /// Sorted.
    pub s: Vec<usize>,
    /// `reserved[i]` belongs to `s[i]`, sorted.
    pub reserved: Vec<Vec<usize>>,
}

impl Fan {
    /// Pairwise disjoint `r`-sets of out-neighbours for the given `q`
    /// members of `S`, in the given order. Panics on non-members.
    pub fn select(&self, members: &[usize]) -> Vec<Vec<usize>> {
        let mut taken: Vec<usize> = Vec::new();
        let mut out = Vec::with_capacity(members.len());
        for &v in members {
            let i = self.s.binary_search(&v).expect("not a member of the fan");
            let pick: Vec<usize> =
                self.reserved[i].iter().copied().filter(|u| !taken.contains(u)).take(self.r).collect();
            taken.extend(&pick);
            out.push(pick);
        }
        out
    }
}

/// Checks a selection against the fan property: `sets[i]` is an `r`-set of
/// out-neighbours of `members[i]` avoiding `s`, and the sets are pairwise
/// disjoint.
pub fn verify_fan_selection(d: &Digraph, s: &[usize], members: &[usize], sets: &[Vec<usize>], r: usize) -> bool {
    if members.len() != sets.len() || members.iter().any(|m| !s.contains(m)) {
        return false;
    }
    let mut seen = VertexSet::new(d.n());
    for (&v, set) in members.iter().zip(sets) {
        if set.len() != r {
            return false;
        }
        for &u in set {
            if u >= d.n() || !d.has_arc(v, u) || s.contains(&u) || !seen.insert(u) {
                return false;
            }
        }
    }
    true
}

/// Largest fan the greedy stable set gives: reserve the `qr` smallest
/// out-neighbours of each vertex of out-degree at least `qr`, and take a
/// stable set in the digraph of reserved arcs.
pub fn fan_greedy(d: &Digraph, q: usize, r: usize) -> Fan {
    let n = d.n();
    let need = q * r;
    let high: Vec<usize> = (0..n).filter(|&v| d.out_degree(v) >= need).collect();
    let reserve = |v: usize| d.out_neighbors(v).iter().take(need).collect::<Vec<usize>>();
    let high_set = VertexSet::from_iter_in(n, high.iter().copied());
    let arcs = high.iter().flat_map(|&v| reserve(v).into_iter().map(move |u| (v, u)));
    let thin = Digraph::from_arcs(n, arcs).expect("reserved arcs are arcs of d").restrict(&high_set);
    // Inside the high part every vertex has out-degree at most qr.
    let s = greedy_within(&thin, need, &high_set);
    let reserved = s.iter().map(|&v| reserve(v)).collect();
    Fan { q, r, s, reserved }
}

/// Fan with `|S| = s`. Always found when at least `(2qr + 1)s` vertices
/// have out-degree at least `qr`.
pub fn digraph_fan_extraction(d: &Digraph, q: usize, r: usize, s: usize) -> Option<Fan> {
    let mut fan = fan_greedy(d, q, r);
    if fan.s.len() < s {
        return None;
    }
    fan.s.truncate(s);
    fan.reserved.truncate(s);
    Some(fan)
}
