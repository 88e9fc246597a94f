use super::Seedling;
use crate::containment::{anticomplete_path_packing, pairwise_anticomplete};
use crate::graph::is_xy_path;
use crate::{Budget, Graph, Outcome, PathInGraph, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rigidity {
    Rigid,
    /// `κ` pairwise anticomplete `(N(A), Y)`-paths inside `V(𝓛)`.
    NotRigid(Vec<PathInGraph>),
    Exhausted,
}

/// Whether no `κ` pairwise anticomplete `(N(A), Y)`-paths fit inside
/// `V(𝓛)`.
pub fn is_rigid(g: &Graph, sd: &Seedling, kappa: usize, budget: &mut Budget) -> Result<Rigidity> {
    sd.validate(g)?;
    let n = g.n();
    let x = g.neighborhood(&sd.a_set(n));
    let universe = sd.path_vertices(n);
    Ok(match anticomplete_path_packing(g, &x, sd.y(), kappa, &universe, budget) {
        Outcome::Found(ps) => {
            assert!(verify_not_rigid(g, sd, kappa, &ps), "rigidity witness does not verify");
            Rigidity::NotRigid(ps)
        }
        Outcome::Absent => Rigidity::Rigid,
        Outcome::Exhausted => Rigidity::Exhausted,
    })
}

/// Checks a witness against non-rigidity at `κ`.
pub fn verify_not_rigid(g: &Graph, sd: &Seedling, kappa: usize, paths: &[PathInGraph]) -> bool {
    let n = g.n();
    let x = g.neighborhood(&sd.a_set(n));
    let universe = sd.path_vertices(n);
    paths.len() == kappa
        && paths.iter().all(|p| is_xy_path(g, p.vertices(), &x, sd.y()) && p.set(n).is_subset(&universe))
        && pairwise_anticomplete(g, paths)
}
