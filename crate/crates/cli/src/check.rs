use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::Subcommand;
use pwtree_core::constellations::{
    find_interrupted_ordering, find_zigzagged_ordering, is_d_ample, is_interrupted_with, is_zigzagged_with,
};
use pwtree_core::containment::{parse_branch_sets, ModelAssignment};
use pwtree_core::extraction::{
    is_rigid, parse_anticomplete_paths, parse_block, parse_groups, parse_magic, parse_paths, parse_seedlings,
    parse_set_families, serialize_paths, verify_anticomplete_paths, verify_bigramsey, verify_children, verify_magic,
    verify_not_rigid, verify_seedling_tree, Rigidity, Seedling,
};
use pwtree_core::generators::{build_constellation, parse_constellation_spec};
use pwtree_core::width::{check_path_decomposition, parse_decomposition};
use pwtree_core::Graph;

use crate::report::{Session, Status};

#[derive(Subcommand, Debug)]
pub enum CheckKind {
    /// Validity, plus any of d-ampleness and orderings that are asked for.
    Constellation {
        spec: PathBuf,
        #[arg(long)]
        ample: Option<usize>,
        #[arg(long)]
        interrupted: bool,
        #[arg(long)]
        zigzag: Option<usize>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Every seedling in the file is valid.
    Seedling { graph: PathBuf, seedling: PathBuf },
    /// The seedling is kappa-rigid; otherwise the witness paths go to --cert.
    Rigidity {
        graph: PathBuf,
        seedling: PathBuf,
        #[arg(long)]
        kappa: usize,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// A path decomposition, of width at most --width if given.
    PathDecomposition {
        graph: PathBuf,
        bags: PathBuf,
        #[arg(long)]
        width: Option<usize>,
    },
    /// A model of PATTERN in HOST in the branch-set format.
    Model {
        pattern: PathBuf,
        host: PathBuf,
        model: PathBuf,
        #[arg(long)]
        not_induced: bool,
    },
    /// Output of `extract magic`.
    Magic {
        graph: PathBuf,
        paths: PathBuf,
        cert: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        lambda: usize,
    },
    /// Output of `extract grow` against its parent seedling.
    Children {
        graph: PathBuf,
        parent: PathBuf,
        children: PathBuf,
        #[arg(long)]
        lambda: usize,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// A T_{d,r}-model rooted at the seedling's A.
    SeedlingTree {
        graph: PathBuf,
        seedling: PathBuf,
        model: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Output of `extract bigramsey`.
    Bigramsey {
        graph: PathBuf,
        sets: PathBuf,
        groups: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Output of `extract block`.
    AnticompletePaths {
        graph: PathBuf,
        block: PathBuf,
        paths: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        g: usize,
    },
}

pub fn read_seedling(s: &mut Session, g: &Graph, path: &Path, index: usize) -> Result<Seedling> {
    let text = s.read(path)?;
    let mut all = parse_seedlings(g, &text).with_context(|| format!("parsing {}", path.display()))?;
    ensure!(index < all.len(), "{} holds {} seedlings, no index {index}", path.display(), all.len());
    Ok(all.swap_remove(index))
}

fn verdict(s: &mut Session, r: std::result::Result<(), String>) -> Status {
    if let Err(e) = &r {
        s.detail("violation", e);
    }
    Status::holds(r.is_ok())
}

fn ordering_line(tag: &str, order: &[usize]) -> String {
    let items: Vec<String> = order.iter().map(|v| v.to_string()).collect();
    format!("{tag} {}\n", items.join(" "))
}

pub fn run(kind: CheckKind, s: &mut Session) -> Result<Status> {
    Ok(match kind {
        CheckKind::Constellation { spec, ample, interrupted, zigzag, cert } => {
            let text = s.read(&spec)?;
            let c = match parse_constellation_spec(&text).and_then(|sp| build_constellation(&sp)) {
                Ok(c) => c,
                Err(e) => {
                    s.detail("violation", e.to_string());
                    return Ok(Status::Fails);
                }
            };
            let mut ok = true;
            if let Some(d) = ample {
                let a = is_d_ample(&c, d);
                s.detail("ample", a);
                ok &= a;
            }
            let mut cert_text = String::new();
            if interrupted {
                let o = find_interrupted_ordering(&c)?;
                s.detail("interrupted", &o);
                match o {
                    Some(o) => cert_text += &ordering_line("interrupted", &o),
                    None => ok = false,
                }
            }
            if let Some(q) = zigzag {
                let o = find_zigzagged_ordering(&c, q)?;
                s.detail("zigzagged", &o);
                match o {
                    Some(o) => cert_text += &ordering_line(&format!("zigzag {q}"), &o),
                    None => ok = false,
                }
            }
            if ok && !cert_text.is_empty() {
                s.certify("orderings", cert_text, cert.as_deref(), |t| {
                    for l in t.lines() {
                        let words: Vec<&str> = l.split_whitespace().collect();
                        let nums = |w: &[&str]| w.iter().map(|x| x.parse::<usize>()).collect::<std::result::Result<Vec<_>, _>>();
                        let good = match words.as_slice() {
                            ["interrupted", rest @ ..] => {
                                is_interrupted_with(&c, &nums(rest).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
                            }
                            ["zigzag", q, rest @ ..] => {
                                let q = q.parse().map_err(|_| "bad q".to_string())?;
                                is_zigzagged_with(&c, q, &nums(rest).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
                            }
                            _ => return Err(format!("unknown line {l:?}")),
                        };
                        if !good {
                            return Err(format!("ordering fails: {l}"));
                        }
                    }
                    Ok(())
                })?;
            }
            Status::holds(ok)
        }
        CheckKind::Seedling { graph, seedling } => {
            let g = s.read_graph(&graph)?;
            let text = s.read(&seedling)?;
            match parse_seedlings(&g, &text) {
                Ok(all) => {
                    s.value(all.len());
                    Status::Holds
                }
                Err(e) => {
                    s.detail("violation", e.to_string());
                    Status::Fails
                }
            }
        }
        CheckKind::Rigidity { graph, seedling, kappa, index, cert } => {
            ensure!(kappa >= 1, "kappa must be positive");
            let g = s.read_graph(&graph)?;
            let sd = read_seedling(s, &g, &seedling, index)?;
            match is_rigid(&g, &sd, kappa, &mut s.budget)? {
                Rigidity::Rigid => Status::Holds,
                Rigidity::Exhausted => Status::Exhausted,
                Rigidity::NotRigid(ps) => {
                    s.certify("anticomplete-paths", serialize_paths(&ps), cert.as_deref(), |t| {
                        let back = parse_paths(&g, t).map_err(|e| e.to_string())?;
                        if verify_not_rigid(&g, &sd, kappa, &back) {
                            Ok(())
                        } else {
                            Err("paths are not a rigidity witness".into())
                        }
                    })?;
                    Status::Fails
                }
            }
        }
        CheckKind::PathDecomposition { graph, bags, width } => {
            let g = s.read_graph(&graph)?;
            let d = parse_decomposition(&s.read(&bags)?)?;
            match check_path_decomposition(&g, &d) {
                Ok(w) => {
                    s.value(w);
                    Status::holds(width.is_none_or(|k| w <= k))
                }
                Err(e) => verdict(s, Err(e)),
            }
        }
        CheckKind::Model { pattern, host, model, not_induced } => {
            let h = s.read_graph(&pattern)?;
            let g = s.read_graph(&host)?;
            let branch = parse_branch_sets(g.n(), &s.read(&model)?)?;
            let m = ModelAssignment { host: g, pattern: h, branch, induced: !not_induced };
            verdict(s, m.check())
        }
        CheckKind::Magic { graph, paths, cert, delta, lambda } => {
            let g = s.read_graph(&graph)?;
            let ps = parse_paths(&g, &s.read(&paths)?)?;
            let m = parse_magic(&s.read(&cert)?)?;
            verdict(s, verify_magic(&g, &ps, delta, lambda, &m))
        }
        CheckKind::Children { graph, parent, children, lambda, index } => {
            let g = s.read_graph(&graph)?;
            let sd = read_seedling(s, &g, &parent, index)?;
            let kids = parse_seedlings(&g, &s.read(&children)?)?;
            verdict(s, verify_children(&g, &sd, lambda, &kids))
        }
        CheckKind::SeedlingTree { graph, seedling, model, d, r, index } => {
            let g = s.read_graph(&graph)?;
            let sd = read_seedling(s, &g, &seedling, index)?;
            let branch = parse_branch_sets(g.n(), &s.read(&model)?)?;
            let pattern = pwtree_core::generators::make_tree(d, r).graph;
            if branch.len() != pattern.n() {
                bail!("model has {} branch sets, T_{{{d},{r}}} has {} vertices", branch.len(), pattern.n());
            }
            let m = ModelAssignment { host: g.clone(), pattern, branch, induced: true };
            verdict(s, verify_seedling_tree(&g, &sd, d, r, &m))
        }
        CheckKind::Bigramsey { graph, sets, groups, r, s: size } => {
            let g = s.read_graph(&graph)?;
            let inst = parse_set_families(g.n(), &s.read(&sets)?)?;
            let grp = parse_groups(&s.read(&groups)?)?;
            verdict(s, verify_bigramsey(&g, &inst.a_sets, &inst.families, r, size, &grp))
        }
        CheckKind::AnticompletePaths { graph, block, paths, s: size, g: gk } => {
            let g = s.read_graph(&graph)?;
            let blk = parse_block(&s.read(&block)?)?;
            let out = parse_anticomplete_paths(&s.read(&paths)?)?;
            if let Err(e) = blk.check(&g, 1) {
                bail!("malformed block: {e}");
            }
            verdict(s, verify_anticomplete_paths(&g, &blk, size, gk, &out))
        }
    })
}
