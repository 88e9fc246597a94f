//! Stable set or clique by the recursive neighbourhood-majority argument.

use crate::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ramsey {
    /// `s` pairwise non-adjacent vertices.
    Stable(Vec<usize>),
    /// `t + 1` pairwise adjacent vertices.
    Clique(Vec<usize>),
    /// Neither was found; only possible with fewer than `s^t` candidates.
    Fail,
}

/// Stable set of size `s` or clique of size `t + 1` in `g`.
pub fn ramsey_stable_or_clique(g: &Graph, s: usize, t: usize) -> Ramsey {
    let all: Vec<usize> = (0..g.n()).collect();
    ramsey_within(g, &all, s, t)
}

/// As [`ramsey_stable_or_clique`], inside `g[candidates]`. Outputs are
/// sorted and re-checked.
pub fn ramsey_within(g: &Graph, candidates: &[usize], s: usize, t: usize) -> Ramsey {
    let out = descend(g, candidates, s, t);
    match &out {
        Ramsey::Stable(v) => {
            assert_eq!(v.len(), s);
            assert!(g.is_stable(&g.set(v.iter().copied())), "ramsey output is not stable");
        }
        Ramsey::Clique(v) => {
            assert_eq!(v.len(), t + 1);
            assert!(g.is_clique(&g.set(v.iter().copied())), "ramsey output is not a clique");
        }
        Ramsey::Fail => {}
    }
    out
}

fn pow(s: usize, t: usize) -> usize {
    s.saturating_pow(t as u32)
}

fn descend(g: &Graph, xs: &[usize], s: usize, t: usize) -> Ramsey {
    if s == 0 {
        return Ramsey::Stable(Vec::new());
    }
    let Some(&v) = xs.first() else {
        return Ramsey::Fail;
    };
    if s == 1 {
        return Ramsey::Stable(vec![v]);
    }
    if t == 0 {
        return Ramsey::Clique(vec![v]);
    }
    let adj: &VertexSet = g.adj(v);
    let (nbrs, rest): (Vec<usize>, Vec<usize>) = xs[1..].iter().partition(|&&w| adj.contains(w));
    let via_nbrs = |nbrs: &[usize]| match descend(g, nbrs, s, t - 1) {
        Ramsey::Clique(mut c) => {
            c.push(v);
            c.sort_unstable();
            Ramsey::Clique(c)
        }
        other => other,
    };
    let via_rest = |rest: &[usize]| match descend(g, rest, s - 1, t) {
        Ramsey::Stable(mut st) => {
            st.push(v);
            st.sort_unstable();
            Ramsey::Stable(st)
        }
        other => other,
    };
    // The side that meets its size bound goes first; the other is a
    // fallback for inputs below the guarantee.
    let nbrs_first = nbrs.len() >= pow(s, t - 1);
    let first = if nbrs_first { via_nbrs(&nbrs) } else { via_rest(&rest) };
    if first != Ramsey::Fail {
        return first;
    }
    if nbrs_first {
        via_rest(&rest)
    } else {
        via_nbrs(&nbrs)
    }
}
