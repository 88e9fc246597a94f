//! Acceptance run: one PASS/FAIL line per criterion, with its time limit.
//! Library results are re-checked by code written here; the last criterion
//! drives the binary.

#[path = "../../core/tests/suites/oracles.rs"]
#[allow(dead_code)]
mod oracles;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use pwtree_core::constants::{digit_count, eval, named_formula, Bindings, ConstExpr, EvalLimits, Variant};
use pwtree_core::containment::{check_embedding, obs_trees_a, obs_trees_a_line, obs_trees_b, verify_model};
use pwtree_core::extraction::{
    bigramsey_extract, digraph_fan_extraction, digraph_stable_set, magic_extract, ramsey_stable_or_clique,
    seedling_to_tree, verify_bigramsey, verify_fan_selection, verify_magic, verify_seedling_tree, Bigramsey, Magic,
    Ramsey, SeedlingTree, TreeParams,
};
use pwtree_core::generators::{
    crossing_paths_family, make_tree, make_wall, planted_bigramsey, planted_two_level, random_graph,
    random_seedling, random_subdivision, RandomSeedlingParams,
};
use pwtree_core::rng::Rng;
use pwtree_core::width::{check_path_decomposition, pathwidth_at_most, tree_pathwidth};
use pwtree_core::{Budget, Digraph, Graph, Outcome, PathInGraph};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pathwidth_lower_bound() -> Check {
    let mut widths = Vec::new();
    for r in 1..=3 {
        let t = make_tree(2, 2 * r).graph;
        for seed in 0..5 {
            let g = random_subdivision(&t, 3, seed);
            let (w, d) = tree_pathwidth(&g).map_err(|e| e.to_string())?;
            let checked = check_path_decomposition(&g, &d)?;
            ensure(checked == w, || format!("r={r} seed={seed}: bags have width {checked}, reported {w}"))?;
            ensure(w >= r, || format!("r={r} seed={seed}: width {w}"))?;
            if r <= 2 {
                let below = pathwidth_at_most(&g, r - 1, &mut Budget::unlimited());
                ensure(below.is_absent(), || format!("r={r} seed={seed}: width {} accepted", r - 1))?;
            }
            widths.push(w);
        }
    }
    for r in 1..=2 {
        for seed in 0..5 {
            let (lg, _) = random_subdivision(&make_tree(2, 2 * r).graph, 3, seed).line_graph();
            let out = pathwidth_at_most(&lg, r - 1, &mut Budget::unlimited());
            ensure(out.is_absent(), || format!("line graph r={r} seed={seed}: {:?}", out.map(|d| d.width())))?;
        }
    }
    Ok(format!("widths {widths:?}; line graphs refuted at k=r-1"))
}

fn trees_in_walls() -> Check {
    let cases = [(obs_trees_a(2), 2usize, false), (obs_trees_a(3), 3, false), (obs_trees_a_line(2), 2, true)];
    for (t, r, line) in cases {
        let t = t.map_err(|e| e.to_string())?;
        let wall = make_wall(1 << r).graph;
        let host = if line { wall.line_graph().0 } else { wall };
        ensure(t.host == host, || format!("r={r}: host is not the expected wall"))?;
        ensure(t.lengths.iter().all(|&l| l >= 2), || format!("r={r}: subdivision is not proper"))?;
        check_embedding(&t.host, &t.pattern, &t.witness)?;
        // Independent check of the induced embedding.
        let map = &t.witness.map;
        let n = t.pattern.n();
        for a in 0..n {
            for b in a + 1..n {
                ensure(map[a] != map[b], || "not injective".into())?;
                ensure(t.pattern.has_edge(a, b) == t.host.has_edge(map[a], map[b]), || format!("pair {a},{b}"))?;
            }
        }
    }
    Ok("r=2, r=3 and the r=2 line graph".into())
}

fn tree_models() -> Check {
    for (d, r) in [(2usize, 2usize), (2, 3)] {
        let m = obs_trees_b(d, r).map_err(|e| e.to_string())?;
        ensure(m.pattern == make_tree(1 << d, r).graph, || "wrong pattern".into())?;
        ensure(m.host == make_tree(2, d * r).graph, || "wrong host".into())?;
        ensure(m.induced && verify_model(&m), || format!("d={d} r={r}: model rejected"))?;
        // Independent: disjoint connected branch sets, adjacency iff edge.
        let sets: Vec<Vec<usize>> = m.branch.iter().map(|b| b.iter().collect()).collect();
        let owner: BTreeMap<usize, usize> =
            sets.iter().enumerate().flat_map(|(i, s)| s.iter().map(move |&v| (v, i))).collect();
        ensure(owner.len() == sets.iter().map(Vec::len).sum::<usize>(), || "branch sets overlap".into())?;
        for s in &sets {
            ensure(!s.is_empty() && m.host.is_connected_set(&m.host.set(s.iter().copied())), || "branch set".into())?;
        }
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                let touch = sets[a].iter().any(|&u| sets[b].iter().any(|&v| m.host.has_edge(u, v)));
                ensure(touch == m.pattern.has_edge(a, b), || format!("branch sets {a},{b}"))?;
            }
        }
    }
    Ok("T_{4,2} in T_{2,4}, T_{4,3} in T_{2,6}".into())
}

fn ramsey() -> Check {
    let mut stable = 0;
    let mut clique = 0;
    for (s, t) in [(3usize, 2usize), (2, 3), (4, 2)] {
        let n = s.pow(t as u32);
        for seed in 0..10_000u64 {
            let p = (seed % 9 + 1) as f64 / 10.0;
            let g = random_graph(n, p, seed);
            match ramsey_stable_or_clique(&g, s, t) {
                Ramsey::Stable(v) => {
                    ensure(v.len() == s && pairs(&v).all(|(a, b)| !g.has_edge(a, b)), || format!("stable {v:?}"))?;
                    stable += 1;
                }
                Ramsey::Clique(v) => {
                    ensure(v.len() == t + 1 && pairs(&v).all(|(a, b)| g.has_edge(a, b)), || format!("clique {v:?}"))?;
                    clique += 1;
                }
                Ramsey::Fail => return Err(format!("failure at s={s} t={t} seed={seed}")),
            }
        }
    }
    Ok(format!("30000 graphs, {stable} stable sets, {clique} cliques"))
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| (v[i], v[j])))
}

/// `low` vertices of out-degree at most `r`, then `high` of larger out-degree.
fn low_out_digraph(rng: &mut Rng, low: usize, high: usize, r: usize) -> Digraph {
    let n = low + high;
    let mut arcs = Vec::new();
    for v in 0..n {
        let k = if v < low { rng.range(0, r) } else { rng.range(r + 1, n - 1) };
        let others: Vec<usize> = rng.sample(n - 1, k).into_iter().map(|u| if u >= v { u + 1 } else { u }).collect();
        arcs.extend(others.into_iter().map(|u| (v, u)));
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

fn max_stable_brute(d: &Digraph) -> usize {
    let n = d.n();
    (0u32..1 << n)
        .filter(|m| (0..n).all(|u| (0..n).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || !d.has_arc(u, v))))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

fn digraph() -> Check {
    let mut rng = Rng::new(2024);
    for (r, s) in [(1usize, 3usize), (2, 2)] {
        for i in 0..10_000 {
            let low = (2 * r + 1) * s + rng.below(3);
            let high = rng.below(5);
            let d = low_out_digraph(&mut rng, low, high, r);
            let qualifying = (0..d.n()).filter(|&v| d.out_degree(v) <= r).count();
            ensure(qualifying >= (2 * r + 1) * s, || "generator produced too few low vertices".into())?;
            let set: Vec<usize> = digraph_stable_set(&d, r, s).ok_or(format!("r={r} s={s} instance {i}"))?.iter().collect();
            ensure(set.len() == s, || "wrong size".into())?;
            ensure(set.iter().all(|&v| d.out_degree(v) <= r), || "high out-degree member".into())?;
            ensure(pairs(&set).all(|(a, b)| !d.has_arc(a, b) && !d.has_arc(b, a)), || format!("{set:?} not stable"))?;
        }
    }
    let triangles = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
    ensure((0..6).all(|v| triangles.out_degree(v) == 1), || "two triangles".into())?;
    let best = max_stable_brute(&triangles);
    ensure(best == 2, || format!("two triangles: max stable set {best}"))?;
    ensure(digraph_stable_set(&triangles, 1, 3).is_none(), || "stable 3-set in two triangles".into())?;

    for i in 0..1_000 {
        let (q, r, s) = (rng.range(1, 3), rng.range(1, 2), rng.range(1, 3));
        let need = q * r;
        let high = (2 * need + 1) * s;
        let n = high + need + rng.below(4);
        let mut arcs = Vec::new();
        for v in 0..n {
            let k = if v < high { rng.range(need, (need + 2).min(n - 1)) } else { rng.range(0, need.min(n - 1)) };
            let others = rng.sample(n - 1, k).into_iter().map(|u| if u >= v { u + 1 } else { u });
            arcs.extend(others.map(|u| (v, u)));
        }
        let d = Digraph::from_arcs(n, arcs).unwrap();
        let fan = digraph_fan_extraction(&d, q, r, s).ok_or(format!("fan instance {i}: q={q} r={r} s={s}"))?;
        ensure(fan.s.len() == s, || "fan size".into())?;
        let mut members = fan.s.clone();
        rng.shuffle(&mut members);
        members.truncate(q);
        let sets = fan.select(&members);
        ensure(verify_fan_selection(&d, &fan.s, &members, &sets, r), || format!("fan instance {i} rejected"))?;
        let flat: Vec<usize> = sets.iter().flatten().copied().collect();
        let mut dedup = flat.clone();
        dedup.sort_unstable();
        dedup.dedup();
        ensure(dedup.len() == flat.len(), || "selected sets overlap".into())?;
        for (&v, set) in members.iter().zip(&sets) {
            ensure(set.len() == r && set.iter().all(|&u| d.has_arc(v, u) && !fan.s.contains(&u)), || {
                format!("fan instance {i}: bad set {set:?} for {v}")
            })?;
        }
    }
    Ok("20000 stable sets, two-triangles max 2, 1000 fan selections".into())
}

/// Re-checks the magic output from the raw edge relation.
fn magic_by_hand(g: &Graph, paths: &[PathInGraph], delta: usize, lambda: usize, m: &Magic) -> Result<(), String> {
    let segs: Vec<&[usize]> = (0..delta).map(|i| m.segment(paths, i)).collect();
    for i in 0..delta {
        for j in i + 1..delta {
            ensure(segs[i].iter().all(|&u| segs[j].iter().all(|&v| u != v && !g.has_edge(u, v))), || {
                format!("segments {i},{j} touch")
            })?;
        }
    }
    let mut seen: Vec<usize> = m.chosen.iter().chain(m.families.iter().flatten()).copied().collect();
    seen.sort_unstable();
    seen.dedup();
    ensure(seen.len() == delta * (lambda + 1), || "paths reused".into())?;
    for i in 0..delta {
        for (&l, &w) in m.families[i].iter().zip(&m.w[i]) {
            let vs = paths[l].vertices();
            let pos = vs.iter().position(|&v| v == w).ok_or("marker off its path")?;
            let sees = |v: usize| segs[i].iter().any(|&u| g.has_edge(u, v));
            ensure(pos > 0 && sees(w) && vs[pos + 1..].iter().all(|&v| !sees(v)), || format!("marker {w}"))?;
        }
    }
    Ok(())
}

fn magic() -> Check {
    let f = crossing_paths_family(100, 0);
    let (t, delta, lambda) = (2usize, 1usize, 1usize);
    let bound = (10 * delta.pow(5) * lambda.pow(3)).pow(t as u32);
    ensure(f.paths.len() == bound && bound == 100, || format!("{} paths, bound {bound}", f.paths.len()))?;
    let m = match magic_extract(&f.graph, &f.paths, t, delta, lambda, &mut Budget::unlimited()) {
        Ok(Outcome::Found(m)) => m,
        other => return Err(format!("{other:?}")),
    };
    verify_magic(&f.graph, &f.paths, delta, lambda, &m)?;
    magic_by_hand(&f.graph, &f.paths, delta, lambda, &m)?;
    Ok(format!("|L|=100, branch {:?}", m.branch))
}

fn bigramsey() -> Check {
    let mut runs = 0;
    for (r, s, t) in [(1usize, 1usize, 2usize), (2, 1, 1)] {
        for seed in 0..10 {
            let (g, inst) = planted_bigramsey(r, s, t, seed);
            let out = bigramsey_extract(&g, &inst.a_sets, &inst.families, r, s, t, &mut Budget::unlimited());
            let grp = match out {
                Ok(Outcome::Found(Bigramsey::Groups(grp))) => grp,
                other => return Err(format!("({r},{s},{t}) seed {seed}: {other:?}")),
            };
            verify_bigramsey(&g, &inst.a_sets, &inst.families, r, s, &grp)?;
            let unions: Vec<Vec<usize>> = grp
                .chosen
                .iter()
                .zip(&grp.sub)
                .map(|(&i, sub)| {
                    let mut u: Vec<usize> = inst.a_sets[i].iter().collect();
                    u.extend(sub.iter().flat_map(|&b| inst.families[i][b].iter()));
                    u
                })
                .collect();
            for i in 0..r {
                ensure(grp.sub[i].len() == s, || "group size".into())?;
                for j in i + 1..r {
                    ensure(unions[i].iter().all(|&u| unions[j].iter().all(|&v| u != v && !g.has_edge(u, v))), || {
                        format!("({r},{s},{t}) seed {seed}: groups {i},{j} touch")
                    })?;
                }
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} planted instances"))
}

fn seedling_trees() -> Check {
    let base = TreeParams { d: 2, r: 1, t: 2, kappa: 2, branching: 2, child_lambda: 2, child_kappa: 2 };
    let params = RandomSeedlingParams { lambda: 4, max_path_len: 3, cross_p: 0.4, triangle_free_ends: true, extra_y: 1 };
    for seed in 0..100 {
        let (g, sd) = random_seedling(&params, seed);
        ensure(sd.lambda() == base.d.pow(base.t as u32), || "lambda".into())?;
        let m = match seedling_to_tree(&g, &sd, base, &mut Budget::unlimited()) {
            Ok(Outcome::Found(SeedlingTree::Tree(m))) => m,
            other => return Err(format!("seed {seed}: {other:?}")),
        };
        ensure(m.branch[0] == sd.a_set(g.n()), || format!("seed {seed}: root branch is not A"))?;
        verify_seedling_tree(&g, &sd, 2, 1, &m)?;
    }
    let f = planted_two_level();
    let m = match seedling_to_tree(&f.graph, &f.seedling, TreeParams { r: 2, ..base }, &mut Budget::unlimited()) {
        Ok(Outcome::Found(SeedlingTree::Tree(m))) => m,
        other => return Err(format!("two-level: {other:?}")),
    };
    ensure(m.branch[0] == f.seedling.a_set(f.graph.n()), || "two-level root".into())?;
    verify_seedling_tree(&f.graph, &f.seedling, 2, 2, &m)?;
    Ok("100 base cases with root A; two-level T_{2,2}".into())
}

fn oracle_suites() -> Check {
    oracles::induced_minor_search_matches_partition_enumeration();
    oracles::routes_match_induced_path_filter();
    oracles::rigidity_matches_exhaustive_packing();
    Ok("induced minors (1252 hosts x 18 patterns), routes, rigidity".into())
}

fn constant_values() -> Check {
    let value = |name: &str, args: &[u64]| -> Result<String, String> {
        let args: Vec<ConstExpr> = args.iter().map(|&a| ConstExpr::from(a)).collect();
        let e = named_formula(name, &args, Variant::AsStated).map_err(|e| e.to_string())?;
        eval(&e, &Bindings::none(), EvalLimits::default()).map(|v| v.to_string()).map_err(|e| e.to_string())
    };
    ensure(value("xi", &[1, 2, 2, 5])? == "4", || "xi_1(2,2,5)".into())?;
    for kappa in [1, 2, 5, 1000] {
        ensure(value("f_seedling_to_tree", &[2, 1, 2, kappa])? == "4", || format!("kappa {kappa}"))?;
    }
    let big = value("f_seedling_branches", &[1, 1, 1, 2])?;
    let e = named_formula("f_seedling_branches", &[1u64, 1, 1, 2].map(ConstExpr::from), Variant::AsStated)
        .map_err(|e| e.to_string())?;
    let v = eval(&e, &Bindings::none(), EvalLimits::default()).map_err(|e| e.to_string())?;
    ensure(big.len() == 7228 && digit_count(&v) == 7228, || format!("{} digits", big.len()))?;
    for (name, params) in [("g_obtain_a_seedling", &["d", "r", "t"][..]), ("g_seedling_branches", &["t", "kappa"])] {
        let args: Vec<ConstExpr> = params.iter().map(|p| ConstExpr::var(p)).collect();
        let e = named_formula(name, &args, Variant::AsStated).map_err(|e| e.to_string())?;
        ensure(!leaves(&e).iter().any(|l| l == "lambda"), || format!("{name} has a lambda leaf"))?;
        ensure(!e.variables().iter().any(|l| l == "lambda"), || format!("{name} mentions lambda"))?;
    }
    Ok("xi=4, f_seedling_to_tree=4, 7228 digits, no lambda leaf".into())
}

/// Variable names anywhere in the expression, found through its text form.
fn leaves(e: &ConstExpr) -> Vec<String> {
    let text = pwtree_core::constants::to_text(e);
    text.split(|c: char| !(c.is_alphanumeric() || c == '_')).filter(|w| !w.is_empty()).map(String::from).collect()
}

const RUNS: &[&[&str]] = &[
    &["generate", "crossing-paths", "100", "-o", "f.g"],
    &["extract", "magic", "f.g", "--t", "2", "--delta", "1", "--lambda", "1", "--cert", "magic.txt"],
    &["generate", "tree", "2", "4", "-o", "t24.g"],
    &["generate", "tree", "4", "2", "-o", "t42.g"],
    &["find", "induced-minor", "t42.g", "t24.g", "--cert", "minor.txt"],
    &["generate", "path", "4", "-o", "p4.g"],
    &["find", "induced-subgraph", "p4.g", "t24.g", "--cert", "sub.txt"],
    &["pw", "t24.g", "--tree", "--cert", "tree.bags"],
    &["generate", "subdivided-tree", "2", "4", "-o", "sd.g"],
    &["pw", "sd.g", "--atmost", "2", "--cert", "atmost.bags"],
    &["generate", "random", "9", "0.4", "-o", "rnd.g"],
    &["pw", "rnd.g", "--exact", "--cert", "exact.bags"],
    &["generate", "obs-trees-a", "3", "-o", "wa.g"],
    &["generate", "obs-trees-a", "2", "--line", "-o", "wl.g"],
    &["generate", "obs-trees-b", "2", "3", "-o", "tb.g"],
    &["generate", "constellation", "--max-vertices", "14", "-o", "c.spec"],
    &["check", "constellation", "c.spec", "--interrupted", "--cert", "order.txt"],
    &["generate", "seedling", "--lambda", "3", "-o", "s.g"],
    &["check", "rigidity", "s.g", "s.g.seedling", "--kappa", "1", "--cert", "rigid.txt"],
    &["generate", "broom", "30", "-o", "b.g"],
    &[
        "extract", "grow", "b.g", "--t", "2", "--delta", "2", "--lambda", "1", "--kappa", "5", "--child-kappa", "2",
        "--cert", "kids.txt",
    ],
    &["generate", "two-level", "-o", "two.g"],
    &[
        "extract", "tree", "two.g", "--d", "2", "--r", "2", "--t", "2", "--kappa", "2", "--child-lambda", "2",
        "--child-kappa", "2", "--cert", "t22.txt",
    ],
    &["extract", "driver", "two.g", "--t", "2", "--h", "p4.g", "--seedling", "two.g.seedling", "--cert", "h.txt"],
    &["generate", "bigramsey", "1", "1", "2", "-o", "bg.g"],
    &["extract", "bigramsey", "bg.g", "--r", "1", "--s", "1", "--t", "2", "--cert", "groups.txt"],
    &["generate", "block", "4", "3", "2", "-o", "blk.g"],
    &["extract", "block", "blk.g", "--s", "2", "--t", "3", "--g", "3", "--cert", "anti.txt"],
    &["constants", "eval", "xi", "1", "2", "2", "5"],
];

fn run_all(dir: &Path) -> Result<Vec<(String, Vec<u8>)>, String> {
    let mut transcript = Vec::new();
    for args in RUNS {
        let out = Command::new(env!("CARGO_BIN_EXE_pwtree"))
            .current_dir(dir)
            .args(*args)
            .args(["--seed", "11"])
            .output()
            .map_err(|e| e.to_string())?;
        let code = out.status.code().unwrap_or(-1);
        ensure((0..=2).contains(&code), || {
            format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&out.stderr))
        })?;
        transcript.push((args.join(" "), out.stdout));
    }
    let mut files: Vec<_> = std::fs::read_dir(dir).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in files {
        transcript.push((f.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&f).unwrap()));
    }
    Ok(transcript)
}

fn determinism() -> Check {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let one = run_all(a.path())?;
    let two = run_all(b.path())?;
    ensure(one.len() == two.len(), || "different file sets".into())?;
    for ((na, ba), (nb, bb)) in one.iter().zip(&two) {
        ensure(na == nb && ba == bb, || format!("{na} differs"))?;
    }
    Ok(format!("{} commands, {} reports and files identical", RUNS.len(), one.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 11] = [
        ("pathwidth lower bound for subdivided binary trees", 60, pathwidth_lower_bound),
        ("subdivided binary trees in walls", 5, trees_in_walls),
        ("induced T_{2^d,r}-models in T_{2,dr}", 5, tree_models),
        ("stable set or clique at n = s^t", 60, ramsey),
        ("digraph stable sets and fans", 60, digraph),
        ("magic paths on the crossing family", 120, magic),
        ("bigramsey on planted instances", 30, bigramsey),
        ("seedling to tree", 60, seedling_trees),
        ("oracle equivalence", 600, oracle_suites),
        ("constants", 5, constant_values),
        ("CLI determinism", 600, determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let result = match result {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("over the {limit} s limit")),
            r => r,
        };
        let (tag, note) = match &result {
            Ok(s) => ("PASS", s.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!("{tag} [{:>2}] {name} ({:.2} s, limit {limit} s): {note}", i + 1, took.as_secs_f64());
        failed += result.is_err() as usize;
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
