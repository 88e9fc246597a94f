//! From many pairwise touching paths, `δ` paths with pairwise anticomplete
//! initial segments, each seen by `λ` private other paths.

use super::digraph::{digraph_stable_greedy, fan_greedy, Fan};
use super::ramsey::{ramsey_within, Ramsey};
use crate::{Budget, Digraph, Error, Graph, Outcome, PathInGraph, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MagicBranch {
    /// Enough ends see many paths; every cut vertex is the end itself.
    HighOutDegree,
    /// Segments cut where they start to see many paths.
    Split,
}

/// Indices refer to the input path list; each path runs `x_L .. y_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magic {
    pub branch: MagicBranch,
    pub chosen: Vec<usize>,
    /// Cut vertex `z` on each chosen path.
    pub z: Vec<usize>,
    /// `λ` paths per chosen path.
    pub families: Vec<Vec<usize>>,
    /// `w[i][k]`: the marker on `families[i][k]`.
    pub w: Vec<Vec<usize>>,
}

impl Magic {
    /// `x .. z` on the `i`-th chosen path.
    pub fn segment<'p>(&self, paths: &'p [PathInGraph], i: usize) -> &'p [usize] {
        segment_to(&paths[self.chosen[i]], self.z[i])
    }
}

fn segment_to(p: &PathInGraph, z: usize) -> &[usize] {
    let k = p.position(z).expect("cut vertex on path");
    &p.vertices()[..=k]
}

fn pow(b: usize, e: usize) -> usize {
    b.saturating_pow(e as u32)
}

fn check_hypotheses(g: &Graph, paths: &[PathInGraph]) -> Result<Vec<VertexSet>> {
    let sets: Vec<VertexSet> = paths.iter().map(|p| p.set(g.n())).collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].intersects(&sets[j]) {
                return Err(Error::Hypothesis(format!("paths {i} and {j} meet")));
            }
            if g.anticomplete(&sets[i], &sets[j]) {
                return Err(Error::Hypothesis(format!("paths {i} and {j} are anticomplete")));
            }
        }
    }
    Ok(sets)
}

/// The vertex of `path` nearest `y` with a neighbour in `seg`.
fn marker(g: &Graph, path: &PathInGraph, seg: &VertexSet) -> Option<usize> {
    path.vertices().iter().rev().copied().find(|&v| g.adj(v).intersects(seg))
}

/// First returned branch that completes; each result passes
/// [`verify_magic`]. Errors if two paths meet or are anticomplete.
pub fn magic_extract(
    g: &Graph,
    paths: &[PathInGraph],
    t: usize,
    delta: usize,
    lambda: usize,
    budget: &mut Budget,
) -> Result<Outcome<Magic>> {
    if t == 0 || delta == 0 || lambda == 0 {
        return Err(Error::InvalidArgument("t, delta and lambda must be positive".into()));
    }
    let sets = check_hypotheses(g, paths)?;
    let n = g.n();
    let finish = |m: Magic| {
        if let Err(e) = verify_magic(g, paths, delta, lambda, &m) {
            panic!("magic output does not verify: {e}");
        }
        Ok(Outcome::Found(m))
    };

    // Stable ends, as many as the bound asks for and the input allows.
    let ends: Vec<usize> = paths.iter().map(PathInGraph::first).collect();
    let want = 10usize.saturating_mul(pow(delta, t + 3)).saturating_mul(pow(lambda, 3)).min(paths.len());
    let k1: Vec<usize> = (1..=want)
        .rev()
        .find_map(|s| match ramsey_within(g, &ends, s, t) {
            Ramsey::Stable(vs) => Some(vs),
            _ => None,
        })
        .map(|vs| {
            let mut ix: Vec<usize> = vs.iter().map(|v| ends.iter().position(|e| e == v).unwrap()).collect();
            ix.sort_unstable();
            ix
        })
        .unwrap_or_default();

    // D_1: L -> L' iff x_L has a neighbour in L'.
    let d1 = digraph_on(&k1, |a, b| g.adj(ends[a]).intersects(&sets[b]));

    if let Some(fan) = take_fan(fan_greedy(&d1, delta, lambda), delta) {
        let chosen_local = fan.s[..delta].to_vec();
        let fams_local = fan.select(&chosen_local);
        let chosen: Vec<usize> = chosen_local.iter().map(|&a| k1[a]).collect();
        let z: Vec<usize> = chosen.iter().map(|&c| ends[c]).collect();
        let families: Vec<Vec<usize>> =
            fams_local.iter().map(|f| f.iter().map(|&a| k1[a]).collect()).collect();
        let w = markers(g, paths, &chosen, &z, &families);
        return finish(Magic { branch: MagicBranch::HighOutDegree, chosen, z, families, w });
    }

    // K_2: stable in D_1 among vertices of out-degree at most δλ.
    let dl = delta * lambda;
    let mut k2: Vec<usize> = digraph_stable_greedy(&d1, dl).into_iter().map(|a| k1[a]).collect();
    k2.truncate(pow(delta, t + 2).saturating_mul(4).saturating_mul(pow(lambda, 2)));
    // Cut each path where its segment starts to touch δλ others; paths
    // without such a point are dropped and the rest recomputed.
    let cuts = loop {
        let cuts: Vec<Option<usize>> = k2.iter().map(|&l| cut_position(g, paths, &sets, l, &k2, dl)).collect();
        if cuts.iter().all(Option::is_some) {
            break cuts.into_iter().map(Option::unwrap).collect::<Vec<usize>>();
        }
        let keep: Vec<usize> = k2.iter().zip(&cuts).filter(|(_, c)| c.is_some()).map(|(&l, _)| l).collect();
        k2 = keep;
    };
    if k2.len() <= delta {
        return Ok(Outcome::Absent);
    }
    let seg = |a: usize, upto: usize| VertexSet::from_iter_in(n, paths[k2[a]].vertices()[..=upto].iter().copied());
    let local2: Vec<usize> = (0..k2.len()).collect();
    let d2 = digraph_on(&local2, |a, b| !g.anticomplete(&seg(a, cuts[a]), &sets[k2[b]]));
    let Some(mut fan) = take_fan(fan_greedy(&d2, delta, lambda), delta) else {
        return Ok(Outcome::Absent);
    };
    let cap3 = pow(delta, t + 1).saturating_mul(2).saturating_mul(lambda);
    fan.s.truncate(cap3.max(delta));
    fan.reserved.truncate(fan.s.len());
    let k3 = fan.s.clone();

    // D_3 on K_3: segment up to the predecessor of the cut.
    let d3 = digraph_on(&k3, |a, b| !g.anticomplete(&seg(a, cuts[a] - 1), &sets[k2[b]]));
    let mut k4: Vec<usize> = digraph_stable_greedy(&d3, dl).into_iter().map(|i| k3[i]).collect();
    k4.truncate(pow(delta, t).max(delta));
    let zs: Vec<usize> = k4.iter().map(|&a| paths[k2[a]].vertices()[cuts[a]]).collect();
    let picked = match ramsey_within(g, &zs, delta, t) {
        Ramsey::Stable(vs) => vs.iter().map(|v| k4[zs.iter().position(|z| z == v).unwrap()]).collect(),
        _ => {
            // Search all δ-subsets of K_3 for pairwise anticomplete segments.
            let segs: Vec<VertexSet> = k3.iter().map(|&a| seg(a, cuts[a])).collect();
            match anticomplete_subset(g, &segs, delta, budget) {
                Outcome::Found(ix) => ix.into_iter().map(|i| k3[i]).collect::<Vec<usize>>(),
                Outcome::Absent => return Ok(Outcome::Absent),
                Outcome::Exhausted => return Ok(Outcome::Exhausted),
            }
        }
    };
    let mut picked: Vec<usize> = picked;
    picked.sort_unstable();
    let fams_local = fan.select(&picked);
    let chosen: Vec<usize> = picked.iter().map(|&a| k2[a]).collect();
    let z: Vec<usize> = picked.iter().map(|&a| paths[k2[a]].vertices()[cuts[a]]).collect();
    let families: Vec<Vec<usize>> = fams_local.iter().map(|f| f.iter().map(|&a| k2[a]).collect()).collect();
    let w = markers(g, paths, &chosen, &z, &families);
    finish(Magic { branch: MagicBranch::Split, chosen, z, families, w })
}

fn take_fan(fan: Fan, delta: usize) -> Option<Fan> {
    (fan.s.len() >= delta).then_some(fan)
}

/// Digraph on `0..ids.len()` with an arc `a -> b` iff `arc(ids[a], ids[b])`.
fn digraph_on(ids: &[usize], arc: impl Fn(usize, usize) -> bool) -> Digraph {
    let k = ids.len();
    let arcs = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| a != b && arc(ids[a], ids[b]));
    Digraph::from_arcs(k, arcs.collect::<Vec<_>>()).expect("arcs within range")
}

/// Position of the first vertex `v` of path `l` such that `x_l .. v`
/// touches at least `need` other paths of `pool`.
fn cut_position(
    g: &Graph,
    paths: &[PathInGraph],
    sets: &[VertexSet],
    l: usize,
    pool: &[usize],
    need: usize,
) -> Option<usize> {
    let mut touched = vec![false; pool.len()];
    let mut count = 0;
    for (pos, &v) in paths[l].vertices().iter().enumerate() {
        for (k, &other) in pool.iter().enumerate() {
            if other != l && !touched[k] && g.adj(v).intersects(&sets[other]) {
                touched[k] = true;
                count += 1;
            }
        }
        if count >= need {
            return Some(pos);
        }
    }
    None
}

fn markers(g: &Graph, paths: &[PathInGraph], chosen: &[usize], z: &[usize], families: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.n();
    chosen
        .iter()
        .zip(z)
        .zip(families)
        .map(|((&c, &zc), fam)| {
            let seg = VertexSet::from_iter_in(n, segment_to(&paths[c], zc).iter().copied());
            fam.iter().map(|&l| marker(g, &paths[l], &seg).expect("family path touches the segment")).collect()
        })
        .collect()
}

/// Lexicographically first `k` indices whose sets are pairwise
/// anticomplete.
pub(crate) fn anticomplete_subset(g: &Graph, sets: &[VertexSet], k: usize, budget: &mut Budget) -> Outcome<Vec<usize>> {
    fn go(
        g: &Graph,
        sets: &[VertexSet],
        k: usize,
        from: usize,
        cur: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Option<bool> {
        budget.tick().ok()?;
        if cur.len() == k {
            return Some(true);
        }
        for i in from..sets.len() {
            if cur.iter().all(|&j| g.anticomplete(&sets[i], &sets[j])) {
                cur.push(i);
                if go(g, sets, k, i + 1, cur, budget)? {
                    return Some(true);
                }
                cur.pop();
            }
        }
        Some(false)
    }
    let mut cur = Vec::new();
    match go(g, sets, k, 0, &mut cur, budget) {
        Some(true) => Outcome::Found(cur),
        Some(false) => Outcome::Absent,
        None => Outcome::Exhausted,
    }
}

/// Checks the output conditions: `δ` chosen paths with cut vertices whose
/// segments are pairwise anticomplete; `δ` pairwise disjoint `λ`-families
/// avoiding the chosen paths; on every family path, `w ≠ x` and `w` is the
/// only vertex of `w .. y` with a neighbour in the segment.
pub fn verify_magic(
    g: &Graph,
    paths: &[PathInGraph],
    delta: usize,
    lambda: usize,
    m: &Magic,
) -> std::result::Result<(), String> {
    let n = g.n();
    if m.chosen.len() != delta || m.z.len() != delta || m.families.len() != delta || m.w.len() != delta {
        return Err(format!("expected {delta} chosen paths with cuts, families and markers"));
    }
    let mut used = vec![false; paths.len()];
    for &c in m.chosen.iter().chain(m.families.iter().flatten()) {
        if c >= paths.len() || used[c] {
            return Err(format!("path index {c} is out of range or used twice"));
        }
        used[c] = true;
    }
    let mut segs = Vec::with_capacity(delta);
    for i in 0..delta {
        if !paths[m.chosen[i]].contains(m.z[i]) {
            return Err(format!("cut vertex {} is not on chosen path {i}", m.z[i]));
        }
        segs.push(VertexSet::from_iter_in(n, m.segment(paths, i).iter().copied()));
    }
    for i in 0..delta {
        for j in i + 1..delta {
            if !g.anticomplete(&segs[i], &segs[j]) {
                return Err(format!("segments {i} and {j} are not anticomplete"));
            }
        }
    }
    for i in 0..delta {
        if m.families[i].len() != lambda || m.w[i].len() != lambda {
            return Err(format!("family {i} does not have {lambda} paths"));
        }
        for (&l, &w) in m.families[i].iter().zip(&m.w[i]) {
            let p = &paths[l];
            let Some(pos) = p.position(w) else {
                return Err(format!("marker {w} is not on path {l}"));
            };
            if pos == 0 {
                return Err(format!("marker of path {l} is its end x"));
            }
            let tail = &p.vertices()[pos..];
            if !g.adj(w).intersects(&segs[i]) || tail[1..].iter().any(|&v| g.adj(v).intersects(&segs[i])) {
                return Err(format!("marker {w} is not the only vertex of its tail seeing segment {i}"));
            }
        }
    }
    Ok(())
}
