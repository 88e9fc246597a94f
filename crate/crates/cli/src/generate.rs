use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use clap::{Subcommand, ValueEnum};
use pwtree_core::containment::{obs_trees_a, obs_trees_a_line, obs_trees_b, serialize_branch_sets};
use pwtree_core::extraction::{serialize_block, serialize_paths, serialize_seedling, serialize_set_families};
use pwtree_core::generators::{
    crossing_paths_family, interrupted_fixture, make_complete, make_complete_bipartite, make_cycle, make_path,
    make_tree, make_wall, non_interrupted_fixture, planted_bigramsey, planted_block, planted_broom, planted_two_level,
    random_constellation_spec, random_digraph, random_graph, random_seedling, random_subdivision,
    serialize_constellation_spec, zigzag_fixture, RandomSeedlingParams,
};
use pwtree_core::graph::{serialize_digraph, serialize_graph};
use pwtree_core::Graph;

use crate::report::{sidecar, Session, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConstellationFixture {
    Interrupted,
    NonInterrupted,
    Zigzag,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// The rooted tree T_{d,r}; the root is vertex 0.
    Tree { d: usize, r: usize },
    /// The r-by-r wall.
    Wall { r: usize },
    Complete { n: usize },
    Bipartite { s: usize, t: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// G(n, p).
    Random { n: usize, p: f64 },
    RandomDigraph { n: usize, p: f64 },
    /// T_{d,r} with every edge replaced by a path of 1..=max-len edges.
    SubdividedTree {
        d: usize,
        r: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// n pairwise touching paths; writes OUT.paths.
    CrossingPaths { n: usize },
    /// A constellation spec, random unless a fixture is named.
    Constellation {
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
        #[arg(long, value_enum)]
        fixture: Option<ConstellationFixture>,
    },
    /// A random seedling; writes OUT.seedling.
    Seedling {
        #[arg(long)]
        lambda: usize,
        #[arg(long, default_value_t = 3)]
        max_path_len: usize,
        #[arg(long, default_value_t = 0.2)]
        cross_p: f64,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long, default_value_t = 1)]
        extra_y: usize,
    },
    /// One vertex joined to the ends of n crossing paths; writes OUT.seedling.
    Broom { n: usize },
    /// The two-level seedling fixture; writes OUT.seedling.
    TwoLevel,
    /// A strong (k, l)-block; writes OUT.block.
    Block {
        k: usize,
        l: usize,
        len: usize,
        #[arg(long)]
        joined: bool,
    },
    /// A planted bigramsey instance; writes OUT.sets.
    Bigramsey { r: usize, s: usize, t: usize },
    /// A subdivided T_{2,r} in a wall; writes OUT.pattern and OUT.model.
    ObsTreesA {
        r: usize,
        #[arg(long)]
        line: bool,
    },
    /// A T_{2^d,r}-model in T_{2,dr}; writes OUT.pattern and OUT.model.
    ObsTreesB { d: usize, r: usize },
}

fn graph_out(s: &mut Session, out: &Path, g: &Graph) -> Result<()> {
    s.detail("vertices", g.n());
    s.detail("edges", g.m());
    s.write(out, &serialize_graph(g))
}

pub fn run(family: Family, out: Option<PathBuf>, s: &mut Session) -> Result<Status> {
    let out = out.context("generate needs --out")?;
    let out = out.as_path();
    let seed = s.seed;
    let prob = |p: f64| -> Result<f64> {
        ensure!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
        Ok(p)
    };
    match family {
        Family::Tree { d, r } => {
            ensure!(d >= 1, "d must be positive");
            graph_out(s, out, &make_tree(d, r).graph)?;
        }
        Family::Wall { r } => {
            ensure!(r >= 2, "walls need r >= 2");
            graph_out(s, out, &make_wall(r).graph)?;
        }
        Family::Complete { n } => graph_out(s, out, &make_complete(n))?,
        Family::Bipartite { s: a, t } => graph_out(s, out, &make_complete_bipartite(a, t))?,
        Family::Path { n } => graph_out(s, out, &make_path(n))?,
        Family::Cycle { n } => {
            ensure!(n >= 3, "cycles need n >= 3");
            graph_out(s, out, &make_cycle(n))?;
        }
        Family::Random { n, p } => graph_out(s, out, &random_graph(n, prob(p)?, seed))?,
        Family::RandomDigraph { n, p } => {
            let d = random_digraph(n, prob(p)?, seed);
            s.detail("vertices", d.n());
            s.detail("arcs", d.num_arcs());
            s.write(out, &serialize_digraph(&d))?;
        }
        Family::SubdividedTree { d, r, max_len } => {
            ensure!(d >= 1 && max_len >= 1, "d and max-len must be positive");
            graph_out(s, out, &random_subdivision(&make_tree(d, r).graph, max_len, seed))?;
        }
        Family::CrossingPaths { n } => {
            ensure!(n >= 2, "need at least two paths");
            let f = crossing_paths_family(n, seed);
            graph_out(s, out, &f.graph)?;
            s.write(&sidecar(out, "paths"), &serialize_paths(&f.paths))?;
        }
        Family::Constellation { max_vertices, fixture } => {
            let spec = match fixture {
                None => random_constellation_spec(max_vertices, seed),
                Some(ConstellationFixture::Interrupted) => interrupted_fixture(),
                Some(ConstellationFixture::NonInterrupted) => non_interrupted_fixture(),
                Some(ConstellationFixture::Zigzag) => zigzag_fixture().0,
            };
            s.write(out, &serialize_constellation_spec(&spec))?;
        }
        Family::Seedling { lambda, max_path_len, cross_p, triangle_free, extra_y } => {
            ensure!(lambda >= 1, "lambda must be positive");
            let params = RandomSeedlingParams {
                lambda,
                max_path_len,
                cross_p: prob(cross_p)?,
                triangle_free_ends: triangle_free,
                extra_y,
            };
            let (g, sd) = random_seedling(&params, seed);
            graph_out(s, out, &g)?;
            s.write(&sidecar(out, "seedling"), &serialize_seedling(&sd))?;
        }
        Family::Broom { n } => {
            ensure!(n >= 2, "need at least two paths");
            let b = planted_broom(n, seed);
            graph_out(s, out, &b.graph)?;
            s.write(&sidecar(out, "seedling"), &serialize_seedling(&b.seedling))?;
        }
        Family::TwoLevel => {
            let b = planted_two_level();
            graph_out(s, out, &b.graph)?;
            s.write(&sidecar(out, "seedling"), &serialize_seedling(&b.seedling))?;
        }
        Family::Block { k, l, len, joined } => {
            ensure!(len >= 1, "paths need an interior");
            let (g, blk) = planted_block(k, l, len, joined);
            graph_out(s, out, &g)?;
            s.write(&sidecar(out, "block"), &serialize_block(&blk))?;
        }
        Family::Bigramsey { r, s: sz, t } => {
            ensure!(r >= 1 && sz >= 1 && t >= 1, "r, s and t must be positive");
            let (g, inst) = planted_bigramsey(r, sz, t, seed);
            graph_out(s, out, &g)?;
            s.write(&sidecar(out, "sets"), &serialize_set_families(&inst))?;
        }
        Family::ObsTreesA { r, line } => {
            let t = if line { obs_trees_a_line(r)? } else { obs_trees_a(r)? };
            graph_out(s, out, &t.host)?;
            s.write(&sidecar(out, "pattern"), &serialize_graph(&t.pattern))?;
            let branch = t.witness.to_model(&t.host, &t.pattern).branch;
            s.write(&sidecar(out, "model"), &serialize_branch_sets(&branch))?;
        }
        Family::ObsTreesB { d, r } => {
            let m = obs_trees_b(d, r)?;
            graph_out(s, out, &m.host)?;
            s.write(&sidecar(out, "pattern"), &serialize_graph(&m.pattern))?;
            s.write(&sidecar(out, "model"), &serialize_branch_sets(&m.branch))?;
        }
    }
    Ok(Status::Value)
}
