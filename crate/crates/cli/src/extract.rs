use std::path::{Path, PathBuf};

use anyhow::{ensure, Result};
use clap::Subcommand;
use pwtree_core::containment::{
    check_embedding, parse_branch_sets, parse_embedding, serialize_branch_sets, serialize_embedding, ModelAssignment,
};
use pwtree_core::extraction::{
    bigramsey_extract, block_to_anticomplete_paths, grow_seedling, magic_extract, main_driver, parse_anticomplete_paths,
    parse_block, parse_groups, parse_magic, parse_paths, parse_seedlings, parse_set_families,
    serialize_anticomplete_paths, serialize_groups, serialize_magic, serialize_paths, serialize_seedling,
    seedling_to_tree, verify_anticomplete_paths, verify_bigramsey, verify_children, verify_magic, verify_seedling_tree,
    Bigramsey, DriverBudgets, DriverCertificate, GrowParams, MagicBranch, SeedlingTree, TreeParams,
};
use pwtree_core::generators::make_complete;
use pwtree_core::graph::serialize_graph;
use pwtree_core::{Graph, Outcome};

use crate::check::read_seedling;
use crate::report::{sidecar, Session, Status};
use crate::search::certify_model;

#[derive(Subcommand, Debug)]
pub enum Procedure {
    /// delta paths with anticomplete segments, each seen by lambda private paths.
    Magic {
        graph: PathBuf,
        /// Defaults to GRAPH.paths.
        #[arg(long)]
        paths: Option<PathBuf>,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// delta rigid child seedlings.
    Grow {
        graph: PathBuf,
        /// Defaults to GRAPH.seedling.
        #[arg(long)]
        seedling: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        child_kappa: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// An induced T_{d,r}-model rooted at A, or an induced K_{t,t}-model.
    Tree {
        graph: PathBuf,
        #[arg(long)]
        seedling: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        kappa: usize,
        /// Root degree asked of child trees; defaults to d.
        #[arg(long)]
        branching: Option<usize>,
        #[arg(long)]
        child_lambda: usize,
        #[arg(long)]
        child_kappa: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// K_{t+1}, an induced H-model for a forest H, or an induced K_{t,t}-model.
    Driver {
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        /// The forest H.
        #[arg(long)]
        h: PathBuf,
        /// Try the seedling route first, with the tree flags below.
        #[arg(long)]
        seedling: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Root degree of the target tree; defaults to what H needs.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 2)]
        kappa: usize,
        #[arg(long)]
        branching: Option<usize>,
        #[arg(long, default_value_t = 2)]
        child_lambda: usize,
        #[arg(long, default_value_t = 2)]
        child_kappa: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// r groups of A-sets with s family members each, pairwise anticomplete.
    Bigramsey {
        graph: PathBuf,
        /// Defaults to GRAPH.sets.
        #[arg(long)]
        sets: Option<PathBuf>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// A stable s-subset of a strong block with g anticomplete paths per pair.
    Block {
        graph: PathBuf,
        /// Defaults to GRAPH.block.
        #[arg(long)]
        block: Option<PathBuf>,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

fn side(explicit: Option<PathBuf>, graph: &Path, ext: &str) -> PathBuf {
    explicit.unwrap_or_else(|| sidecar(graph, ext))
}

/// Writes the pattern next to a model certificate so `check model` can
/// read it.
fn model_out(s: &mut Session, kind: &str, m: &ModelAssignment, cert: Option<&Path>) -> Result<()> {
    certify_model(s, kind, m, cert)?;
    pattern_out(s, &m.pattern, cert)
}

fn pattern_out(s: &mut Session, pattern: &Graph, cert: Option<&Path>) -> Result<()> {
    s.detail("pattern_vertices", pattern.n());
    match cert {
        Some(c) => s.write(&sidecar(c, "pattern"), &serialize_graph(pattern)),
        None => Ok(()),
    }
}

fn outcome<T>(o: &Outcome<T>) -> Status {
    match o {
        Outcome::Found(_) => Status::Found,
        Outcome::Absent => Status::Absent,
        Outcome::Exhausted => Status::Exhausted,
    }
}

pub fn run(p: Procedure, s: &mut Session) -> Result<Status> {
    match p {
        Procedure::Magic { graph, paths, t, delta, lambda, cert } => {
            let g = s.read_graph(&graph)?;
            let ps = parse_paths(&g, &s.read(&side(paths, &graph, "paths"))?)?;
            s.detail("paths", ps.len());
            let out = magic_extract(&g, &ps, t, delta, lambda, &mut s.budget)?;
            if let Outcome::Found(m) = &out {
                s.detail("branch", if m.branch == MagicBranch::HighOutDegree { "high" } else { "split" });
                s.certify("magic", serialize_magic(m), cert.as_deref(), |t| {
                    verify_magic(&g, &ps, delta, lambda, &parse_magic(t).map_err(|e| e.to_string())?)
                })?;
            }
            Ok(outcome(&out))
        }
        Procedure::Grow { graph, seedling, index, t, delta, lambda, kappa, child_kappa, cert } => {
            let g = s.read_graph(&graph)?;
            let sd = read_seedling(s, &g, &side(seedling, &graph, "seedling"), index)?;
            let rep = grow_seedling(&g, &sd, GrowParams { t, delta, lambda, kappa, child_kappa }, &mut s.budget)?;
            if let Some(w) = &rep.not_rigid {
                s.detail("not_rigid", serialize_paths(w));
            }
            if let Outcome::Found(kids) = &rep.outcome {
                let text: String = kids.iter().map(serialize_seedling).collect();
                s.certify("children", text, cert.as_deref(), |t| {
                    verify_children(&g, &sd, lambda, &parse_seedlings(&g, t).map_err(|e| e.to_string())?)
                })?;
            }
            Ok(outcome(&rep.outcome))
        }
        Procedure::Tree { graph, seedling, index, d, r, t, kappa, branching, child_lambda, child_kappa, cert } => {
            let g = s.read_graph(&graph)?;
            let sd = read_seedling(s, &g, &side(seedling, &graph, "seedling"), index)?;
            let p = TreeParams { d, r, t, kappa, branching: branching.unwrap_or(d), child_lambda, child_kappa };
            let out = seedling_to_tree(&g, &sd, p, &mut s.budget)?;
            match &out {
                Outcome::Found(SeedlingTree::Tree(m)) => {
                    s.detail("kind", "tree");
                    s.certify("tree", serialize_branch_sets(&m.branch), cert.as_deref(), |txt| {
                        let branch = parse_branch_sets(g.n(), txt).map_err(|e| e.to_string())?;
                        verify_seedling_tree(&g, &sd, d, r, &ModelAssignment { branch, ..m.clone() })
                    })?;
                    pattern_out(s, &m.pattern, cert.as_deref())?;
                }
                Outcome::Found(SeedlingTree::Ktt(m)) => {
                    s.detail("kind", "ktt");
                    model_out(s, "ktt", m, cert.as_deref())?;
                }
                _ => {}
            }
            Ok(outcome(&out))
        }
        Procedure::Driver { graph, t, h, seedling, index, d, kappa, branching, child_lambda, child_kappa, cert } => {
            let g = s.read_graph(&graph)?;
            let hg = s.read_graph(&h)?;
            let apex = pwtree_core::extraction::embed_apex_tree(&hg)?;
            s.detail("tree", [apex.d, apex.r]);
            let sd = match &seedling {
                Some(path) => Some(read_seedling(s, &g, path, index)?),
                None => None,
            };
            let d = d.unwrap_or(apex.d);
            let p = TreeParams { d, r: apex.r, t, kappa, branching: branching.unwrap_or(d), child_lambda, child_kappa };
            let budgets = DriverBudgets::uniform(s.budget.limit());
            let rep = main_driver(&g, t, &hg, budgets, sd.as_ref().map(|x| (x, p)))?;
            Ok(match rep.certificate {
                DriverCertificate::Clique(e) => {
                    s.detail("kind", "clique");
                    let k = make_complete(t + 1);
                    s.certify("clique", serialize_embedding(&e), cert.as_deref(), |txt| {
                        check_embedding(&g, &k, &parse_embedding(g.n(), txt).map_err(|e| e.to_string())?)
                    })?;
                    pattern_out(s, &k, cert.as_deref())?;
                    Status::Found
                }
                DriverCertificate::Ktt(m) => {
                    s.detail("kind", "ktt");
                    model_out(s, "ktt", &m, cert.as_deref())?;
                    Status::Found
                }
                DriverCertificate::H(m) => {
                    s.detail("kind", "h");
                    model_out(s, "h", &m, cert.as_deref())?;
                    Status::Found
                }
                DriverCertificate::Absent => Status::Absent,
                DriverCertificate::Exhausted => Status::Exhausted,
            })
        }
        Procedure::Bigramsey { graph, sets, r, s: size, t, cert } => {
            let g = s.read_graph(&graph)?;
            let inst = parse_set_families(g.n(), &s.read(&side(sets, &graph, "sets"))?)?;
            let out = bigramsey_extract(&g, &inst.a_sets, &inst.families, r, size, t, &mut s.budget)?;
            match &out {
                Outcome::Found(Bigramsey::Groups(grp)) => {
                    s.detail("kind", "groups");
                    s.certify("groups", serialize_groups(grp), cert.as_deref(), |txt| {
                        let back = parse_groups(txt).map_err(|e| e.to_string())?;
                        verify_bigramsey(&g, &inst.a_sets, &inst.families, r, size, &back)
                    })?;
                }
                Outcome::Found(Bigramsey::Ktt(m)) => {
                    s.detail("kind", "ktt");
                    model_out(s, "ktt", m, cert.as_deref())?;
                }
                _ => {}
            }
            Ok(outcome(&out))
        }
        Procedure::Block { graph, block, s: size, t, g: gk, cert } => {
            let g = s.read_graph(&graph)?;
            let blk = parse_block(&s.read(&side(block, &graph, "block"))?)?;
            ensure!(size >= 2 && gk >= 1, "need s at least 2 and g positive");
            let out = block_to_anticomplete_paths(&g, &blk, size, t, gk, &mut s.budget)?;
            if let Outcome::Found(a) = &out {
                s.certify("anticomplete-paths", serialize_anticomplete_paths(a), cert.as_deref(), |txt| {
                    let back = parse_anticomplete_paths(txt).map_err(|e| e.to_string())?;
                    verify_anticomplete_paths(&g, &blk, size, gk, &back)
                })?;
            }
            Ok(outcome(&out))
        }
    }
}
