//! Choosing `r` of `2rt` pairwise anticomplete sets, each with `s` members
//! of its own family, so that the unions are pairwise anticomplete.

use super::digraph::digraph_stable_set;
use super::product::{product_ramsey_search, Grid, ProductColoring};
use crate::containment::ModelAssignment;
use crate::generators::make_complete_bipartite;
use crate::{Budget, Digraph, Error, Graph, Outcome, Result, VertexSet};

/// `chosen[k]` indexes the `A`-list; `sub[k]` indexes its family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigramseyGroups {
    pub chosen: Vec<usize>,
    pub sub: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bigramsey {
    Groups(BigramseyGroups),
    /// The colouring exposed an induced `K_{t,t}`-model instead.
    Ktt(ModelAssignment),
}

/// `E_z` and `E'_z` over a grid of family members, from precomputed
/// touching tables.
struct Touching {
    n: usize,
    /// `bu[i][b][j]`: member `b` of family `i` touches `A_j`.
    bu: Vec<Vec<Vec<bool>>>,
    /// Flat index of member `b` of family `i`.
    offset: Vec<usize>,
    bb: Vec<Vec<bool>>,
}

type Color = (Vec<bool>, Vec<bool>);

impl Touching {
    fn new(g: &Graph, a_sets: &[VertexSet], families: &[Vec<VertexSet>]) -> Touching {
        let n = a_sets.len();
        let bu = families
            .iter()
            .map(|fam| fam.iter().map(|b| a_sets.iter().map(|a| !g.anticomplete(b, a)).collect()).collect())
            .collect();
        let mut offset = Vec::with_capacity(n);
        let mut flat: Vec<&VertexSet> = Vec::new();
        for fam in families {
            offset.push(flat.len());
            flat.extend(fam.iter());
        }
        let bb = flat.iter().map(|x| flat.iter().map(|y| !g.anticomplete(x, y)).collect()).collect();
        Touching { n, bu, offset, bb }
    }

    fn pair(&self, i: usize, b: usize, j: usize, c: usize) -> bool {
        self.bb[self.offset[i] + b][self.offset[j] + c]
    }
}

impl ProductColoring for Touching {
    type Color = Color;

    fn color(&self, z: &[usize]) -> Color {
        let n = self.n;
        let mut e = vec![false; n * n];
        let mut e2 = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in 0..n {
                e[i * n + j] = i != j && self.bu[i][z[i]][j];
            }
            for j in i + 1..n {
                e2.push(self.pair(i, z[i], j, z[j]));
            }
        }
        (e, e2)
    }

    fn prefix_ok(&self, chosen: &[Vec<usize>]) -> bool {
        for (i, zi) in chosen.iter().enumerate() {
            let row = &self.bu[i][zi[0]];
            if zi.iter().any(|&b| (0..self.n).any(|j| j != i && self.bu[i][b][j] != row[j])) {
                return false;
            }
            for (j, zj) in chosen.iter().enumerate().skip(i + 1) {
                let first = self.pair(i, zi[0], j, zj[0]);
                if zi.iter().any(|&b| zj.iter().any(|&c| self.pair(i, b, j, c) != first)) {
                    return false;
                }
            }
        }
        true
    }
}

fn check_hypotheses(
    g: &Graph,
    a_sets: &[VertexSet],
    families: &[Vec<VertexSet>],
    r: usize,
    t: usize,
) -> Result<()> {
    let bad = |m: String| Err(Error::Hypothesis(m));
    if r == 0 || t == 0 {
        return Err(Error::InvalidArgument("r and t must be positive".into()));
    }
    if a_sets.len() != 2 * r * t || families.len() != a_sets.len() {
        return bad(format!("need {} sets, each with a family", 2 * r * t));
    }
    let mut used = g.empty_set();
    for x in a_sets.iter().chain(families.iter().flatten()) {
        g.check_set(x)?;
        if x.is_empty() || !g.is_connected_set(x) {
            return bad("every set must be non-empty and connected".into());
        }
        if x.intersects(&used) {
            return bad("the sets must be pairwise disjoint".into());
        }
        used.union_with(x);
    }
    let pairwise = |xs: &[VertexSet]| {
        (0..xs.len()).all(|i| (i + 1..xs.len()).all(|j| g.anticomplete(&xs[i], &xs[j])))
    };
    if !pairwise(a_sets) {
        return bad("the A-sets are not pairwise anticomplete".into());
    }
    if let Some(i) = families.iter().position(|f| !pairwise(f)) {
        return bad(format!("family {i} is not pairwise anticomplete"));
    }
    Ok(())
}

/// Pairwise anticompleteness of the groups `A_i ∪ V(B_i)`, plus sizes and
/// distinctness.
pub fn verify_bigramsey(
    g: &Graph,
    a_sets: &[VertexSet],
    families: &[Vec<VertexSet>],
    r: usize,
    s: usize,
    out: &BigramseyGroups,
) -> std::result::Result<(), String> {
    if out.chosen.len() != r || out.sub.len() != r {
        return Err(format!("expected {r} groups"));
    }
    let mut unions = Vec::with_capacity(r);
    for (k, (&i, sub)) in out.chosen.iter().zip(&out.sub).enumerate() {
        if i >= a_sets.len() || out.chosen[..k].contains(&i) {
            return Err(format!("group {k} has a bad A-index"));
        }
        let mut sorted = sub.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != s || sorted.iter().any(|&b| b >= families[i].len()) {
            return Err(format!("group {k} does not have {s} distinct members"));
        }
        let mut u = a_sets[i].clone();
        for &b in sub {
            u.union_with(&families[i][b]);
        }
        unions.push(u);
    }
    for i in 0..r {
        for j in i + 1..r {
            if !g.anticomplete(&unions[i], &unions[j]) {
                return Err(format!("groups {i} and {j} are not anticomplete"));
            }
        }
    }
    Ok(())
}

/// `A_1..A_r` from `a_sets` with `s`-subfamilies, pairwise anticomplete as
/// unions. Errors if the two anticompleteness hypotheses fail.
pub fn bigramsey_extract(
    g: &Graph,
    a_sets: &[VertexSet],
    families: &[Vec<VertexSet>],
    r: usize,
    s: usize,
    t: usize,
    budget: &mut Budget,
) -> Result<Outcome<Bigramsey>> {
    check_hypotheses(g, a_sets, families, r, t)?;
    let n = a_sets.len();
    let q = s.max(t);
    let phi = Touching::new(g, a_sets, families);
    let sizes: Vec<usize> = families.iter().map(Vec::len).collect();
    let Grid { color: (e, e2), z } = match product_ramsey_search(&sizes, q, &phi, budget) {
        Outcome::Found(grid) => grid,
        Outcome::Absent => return Ok(Outcome::Absent),
        Outcome::Exhausted => return Ok(Outcome::Exhausted),
    };
    let ktt = |xs: Vec<VertexSet>, ys: Vec<VertexSet>| {
        let m = ModelAssignment {
            host: g.clone(),
            pattern: make_complete_bipartite(t, t),
            branch: xs.into_iter().chain(ys).collect(),
            induced: true,
        };
        assert_eq!(m.check(), Ok(()), "K_{{t,t}} witness does not verify");
        Ok(Outcome::Found(Bigramsey::Ktt(m)))
    };
    let arcs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| e[i * n + j]).collect();
    let d = Digraph::from_arcs(n, arcs).expect("arcs between distinct indices");
    if let Some(i) = (0..n).find(|&i| d.out_degree(i) >= t) {
        let xs = z[i][..t].iter().map(|&b| families[i][b].clone()).collect();
        let ys = d.out_neighbors(i).iter().take(t).map(|j| a_sets[j].clone()).collect();
        return ktt(xs, ys);
    }
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    if let Some((i, j)) = pairs.zip(e2.iter()).find(|(_, &x)| x).map(|(p, _)| p) {
        let xs = z[i][..t].iter().map(|&b| families[i][b].clone()).collect();
        let ys = z[j][..t].iter().map(|&c| families[j][c].clone()).collect();
        return ktt(xs, ys);
    }
    let Some(stable) = digraph_stable_set(&d, t - 1, r) else {
        return Ok(Outcome::Absent);
    };
    let chosen = stable.to_vec();
    let sub = chosen.iter().map(|&i| z[i][..s].to_vec()).collect();
    let out = BigramseyGroups { chosen, sub };
    if let Err(m) = verify_bigramsey(g, a_sets, families, r, s, &out) {
        panic!("bigramsey output does not verify: {m}");
    }
    Ok(Outcome::Found(Bigramsey::Groups(out)))
}
