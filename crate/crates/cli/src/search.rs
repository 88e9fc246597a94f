use std::path::PathBuf;

use anyhow::Result;
use clap::{ArgGroup, Args, ValueEnum};
use pwtree_core::containment::{
    check_embedding, find_induced_minor, find_induced_subgraph, parse_branch_sets, parse_embedding,
    serialize_branch_sets, serialize_embedding, ModelAssignment,
};
use pwtree_core::width::{
    check_path_decomposition, parse_decomposition, pathwidth_at_most, pathwidth_exact, serialize_decomposition,
    tree_pathwidth, PathDecomposition,
};
use pwtree_core::{Graph, Outcome};

use crate::report::{Session, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FindKind {
    InducedMinor,
    InducedSubgraph,
}

#[derive(Args, Debug)]
pub struct FindArgs {
    #[arg(value_enum)]
    kind: FindKind,
    pattern: PathBuf,
    host: PathBuf,
    /// Where to write the witness.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["exact", "atmost", "tree"])))]
pub struct PwArgs {
    graph: PathBuf,
    #[arg(long)]
    exact: bool,
    /// Decide pathwidth at most K.
    #[arg(long, value_name = "K")]
    atmost: Option<usize>,
    /// Exact pathwidth of a forest.
    #[arg(long)]
    tree: bool,
    #[arg(long)]
    cert: Option<PathBuf>,
}

/// Writes a model in the branch-set format and re-checks what is read back.
pub fn certify_model(s: &mut Session, kind: &str, m: &ModelAssignment, cert: Option<&std::path::Path>) -> Result<()> {
    s.certify(kind, serialize_branch_sets(&m.branch), cert, |t| {
        let branch = parse_branch_sets(m.host.n(), t).map_err(|e| e.to_string())?;
        ModelAssignment { branch, ..m.clone() }.check()
    })
}

pub fn find(a: FindArgs, s: &mut Session) -> Result<Status> {
    let h = s.read_graph(&a.pattern)?;
    let g = s.read_graph(&a.host)?;
    let status = match a.kind {
        FindKind::InducedMinor => match find_induced_minor(&g, &h, &mut s.budget) {
            Outcome::Found(m) => {
                certify_model(s, "induced-minor", &m, a.cert.as_deref())?;
                Status::Found
            }
            Outcome::Absent => Status::Absent,
            Outcome::Exhausted => Status::Exhausted,
        },
        FindKind::InducedSubgraph => match find_induced_subgraph(&g, &h, &mut s.budget) {
            Outcome::Found(e) => {
                s.certify("induced-subgraph", serialize_embedding(&e), a.cert.as_deref(), |t| {
                    let back = parse_embedding(g.n(), t).map_err(|e| e.to_string())?;
                    check_embedding(&g, &h, &back)
                })?;
                Status::Found
            }
            Outcome::Absent => Status::Absent,
            Outcome::Exhausted => Status::Exhausted,
        },
    };
    Ok(status)
}

fn certify_bags(s: &mut Session, g: &Graph, d: &PathDecomposition, cert: Option<&std::path::Path>) -> Result<()> {
    let width = d.width();
    s.certify("path-decomposition", serialize_decomposition(d), cert, |t| {
        let back = parse_decomposition(t).map_err(|e| e.to_string())?;
        match check_path_decomposition(g, &back)? {
            w if w == width => Ok(()),
            w => Err(format!("width {w} after reload, expected {width}")),
        }
    })
}

pub fn pw(a: PwArgs, s: &mut Session) -> Result<Status> {
    let g = s.read_graph(&a.graph)?;
    let cert = a.cert.as_deref();
    if a.tree {
        let (w, d) = tree_pathwidth(&g)?;
        certify_bags(s, &g, &d, cert)?;
        s.value(w);
        return Ok(Status::Value);
    }
    if let Some(k) = a.atmost {
        return Ok(match pathwidth_at_most(&g, k, &mut s.budget) {
            Outcome::Found(d) => {
                s.value(d.width());
                certify_bags(s, &g, &d, cert)?;
                Status::Found
            }
            Outcome::Absent => Status::Absent,
            Outcome::Exhausted => Status::Exhausted,
        });
    }
    Ok(match pathwidth_exact(&g, &mut s.budget)? {
        Outcome::Found((w, d)) => {
            certify_bags(s, &g, &d, cert)?;
            s.value(w);
            Status::Value
        }
        Outcome::Absent => unreachable!("exact pathwidth always exists"),
        Outcome::Exhausted => Status::Exhausted,
    })
}
